"""cogsim: Wordle player simulation, W1-distance fitting, and word
difficulty prediction."""

__version__ = "0.1.0"

from .data_ingest import (
    Dictionary,
    WordRecord,
    load_dictionary,
    load_ground_truth,
    save_dictionary,
    save_ground_truth,
)
from .evaluation import (
    EvalReport,
    assign_folds,
    baseline_distribution,
    difficulty_histogram,
    kfold_evaluate,
    mean_trial_count,
)
from .optimizer import FitConfig, FitResult, coordinate_search, objective
from .projection import Projection2D, ReplicateBand, fpca_project, replicate_band
from .rng import RngSeed, derive_stream_id, make_rng
from .simulator import Hyperparams, choose_word, simulate_trial, trial_distribution
from .wasserstein import SUPPORT, difficulty, validate_distribution, w1_distance, w1_samples
from .wordle import Feedback, filter_dictionary, score_guess

__all__ = [
    "__version__",
    "Dictionary", "WordRecord", "load_dictionary", "load_ground_truth",
    "save_dictionary", "save_ground_truth",
    "Feedback", "score_guess", "filter_dictionary",
    "Hyperparams", "RngSeed", "make_rng", "derive_stream_id",
    "choose_word", "simulate_trial", "trial_distribution",
    "SUPPORT", "w1_distance", "w1_samples", "difficulty", "validate_distribution",
    "FitConfig", "FitResult", "objective", "coordinate_search",
    "EvalReport", "assign_folds", "baseline_distribution", "kfold_evaluate",
    "difficulty_histogram", "mean_trial_count",
    "Projection2D", "ReplicateBand", "fpca_project", "replicate_band",
]
