"""cogsim-baselines: reference regression models scored on the simulator's
exported folds and targets."""

__version__ = "0.1.0"

from .data import load_corpus, load_folds, load_targets
from .features import (
    FEATURE_NAMES,
    FEATURE_SET_VERSION,
    WordNotInDictionary,
    extract_features,
    feature_matrix,
)
from .runner import MODEL_ORDER, run_baselines, w1_distance

__all__ = [
    "__version__",
    "load_corpus", "load_folds", "load_targets",
    "FEATURE_NAMES", "FEATURE_SET_VERSION", "WordNotInDictionary",
    "extract_features", "feature_matrix",
    "MODEL_ORDER", "run_baselines", "w1_distance",
]
