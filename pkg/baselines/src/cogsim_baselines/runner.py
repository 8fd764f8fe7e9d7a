"""Fit the four reference regressors on shared folds and score them with the
same metric definitions as the simulator's evaluation report.

Models run under scikit-learn's documented defaults (only ``random_state``
is pinned, for reproducibility); the library version is recorded in the
report. Raw regression outputs can leave the simplex, so predictions are
clipped at zero and renormalized before scoring; the clip count is logged
and reported.
"""

from __future__ import annotations

import logging

import numpy as np
import sklearn
from sklearn.ensemble import RandomForestRegressor
from sklearn.linear_model import LinearRegression
from sklearn.neural_network import MLPRegressor
from sklearn.tree import DecisionTreeRegressor

from .features import FEATURE_NAMES, FEATURE_SET_VERSION

__all__ = ["MODEL_ORDER", "run_baselines", "w1_distance"]

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1

MODEL_ORDER = [
    "linear_regression",
    "mlp_regression",
    "regression_tree",
    "random_forest_regression",
]

METRIC_DEFINITIONS = {
    "mse_prob": "mean over words and categories of squared error, probability scale",
    "mse_percent": "same on the 0-100 percent scale (1e4 * mse_prob)",
    "accuracy": "argmax category agreement, ties toward lower category",
    "mean_w1": "mean Wasserstein-1 distance on the 1..7 category support",
    "means": "pooled over all held-out words",
}


def _make_models(seed: int) -> dict:
    return {
        "linear_regression": LinearRegression(),
        "mlp_regression": MLPRegressor(random_state=seed),
        "regression_tree": DecisionTreeRegressor(random_state=seed),
        "random_forest_regression": RandomForestRegressor(random_state=seed),
    }


def w1_distance(p: np.ndarray, q: np.ndarray) -> float:
    """W1 on the unit-spaced 7-category support: sum of |CDF differences|."""
    return float(np.abs(np.cumsum(p - q))[:6].sum())


def _normalize_predictions(raw: np.ndarray) -> tuple[np.ndarray, int]:
    clipped = int(np.count_nonzero(raw < 0))
    pred = np.clip(raw, 0.0, None)
    sums = pred.sum(axis=1, keepdims=True)
    pred = np.where(sums > 0, pred / np.where(sums == 0, 1.0, sums),
                    np.full_like(pred, 1.0 / pred.shape[1]))
    return pred, clipped


def _score(pred: np.ndarray, true: np.ndarray) -> dict:
    mse_prob = float(np.mean((pred - true) ** 2))
    acc = float(np.mean(np.argmax(pred, axis=1) == np.argmax(true, axis=1)))
    w1s = [w1_distance(t, p) for p, t in zip(pred, true)]
    return {
        "mse_prob": mse_prob,
        "mse_percent": 1e4 * mse_prob,
        "mean_w1": float(np.mean(w1s)),
        "accuracy": acc,
    }


def run_baselines(words: list[str], features: np.ndarray, targets: np.ndarray,
                  fold_of: dict[str, int], folds: int, seed: int = 0) -> dict:
    """Cross-validate every model on the exported fold assignment."""
    if len(words) != len(features) or len(words) != len(targets):
        raise ValueError("words, features and targets must align")
    missing = [w for w in words if w not in fold_of]
    if missing:
        raise ValueError(f"words missing from the fold file: {missing[:5]}")
    assignment = np.array([fold_of[w] for w in words])

    model_rows = []
    for name in MODEL_ORDER:
        per_fold = []
        pooled_pred = np.empty_like(targets)
        clipped_total = 0
        for f in range(folds):
            test = assignment == f
            train = ~test
            if not np.any(test) or not np.any(train):
                raise ValueError(f"fold {f} leaves an empty split")
            model = _make_models(seed)[name]
            model.fit(features[train], targets[train])
            raw = np.atleast_2d(model.predict(features[test]))
            pred, clipped = _normalize_predictions(raw)
            pooled_pred[test] = pred
            clipped_total += clipped
            fold_metrics = _score(pred, targets[test])
            per_fold.append({"fold": f, "n_test": int(test.sum()), **fold_metrics})
        if clipped_total:
            log.info("%s: clipped %d negative prediction components",
                     name, clipped_total)
        row = {"model": name, "clipped_predictions": clipped_total,
               "per_fold": per_fold}
        row.update({
            k if k != "accuracy" else "mean_accuracy": v
            for k, v in _score(pooled_pred, targets).items()
        })
        model_rows.append(row)

    return {
        "schema_version": SCHEMA_VERSION,
        "feature_set_version": FEATURE_SET_VERSION,
        "feature_names": list(FEATURE_NAMES),
        "sklearn_version": sklearn.__version__,
        "folds": folds,
        "fold_assignment": {w: int(fold_of[w]) for w in words},
        "metric_definitions": dict(METRIC_DEFINITIONS),
        "models": model_rows,
    }
