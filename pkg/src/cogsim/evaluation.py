"""Model scoring: k-fold cross-validation metrics and difficulty data.

Metric definitions (recorded in every report, since they admit variants):

* MSE is the mean over words and the 7 categories of squared component
  error, reported on both the probability scale (``mse_prob``) and the
  0-100 percentage scale (``mse_percent`` = 1e4 x ``mse_prob``).
* Accuracy of one word is 1 iff the argmax category of the predicted
  distribution matches the argmax of the observed one, ties broken toward
  the lower category.
* Overall means pool all held-out words; per-fold rows carry fold means.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .data_ingest import Dictionary, WordRecord
from .errors import BaselineUnavailable, TooFewRecords
from .optimizer import FitConfig, FitResult, coordinate_search
from .rng import make_rng
from .simulator import Hyperparams, trial_distribution
from .wasserstein import difficulty, w1_distance

__all__ = [
    "WordScore",
    "FoldScore",
    "EvalReport",
    "assign_folds",
    "baseline_distribution",
    "kfold_evaluate",
    "difficulty_histogram",
    "mean_trial_count",
]

DEFAULT_BASELINE_WORD = "train"


@dataclass
class WordScore:
    word: str
    fold: int
    w1: float
    sq_err_prob: float  # mean over the 7 categories, probability scale
    accuracy: int  # argmax agreement, 0 or 1
    difficulty: float  # W1 of the observed distribution from the baseline's
    predicted: np.ndarray = field(repr=False)
    observed: np.ndarray = field(repr=False)


@dataclass
class FoldScore:
    fold: int
    k: int
    t: float
    fit_objective: float
    n_test: int
    mean_w1: float
    mse_prob: float
    mse_percent: float
    accuracy: float


@dataclass
class EvalReport:
    folds: int
    baseline_word: str
    mean_w1: float
    mse_prob: float
    mse_percent: float
    mean_accuracy: float
    per_fold: list[FoldScore]
    per_word: list[WordScore]
    fold_assignment: dict[str, int]

    def as_dict(self) -> dict:
        return {
            "folds": self.folds,
            "baseline_word": self.baseline_word,
            "metric_definitions": {
                "mse_prob": "mean over words and categories of squared error, probability scale",
                "mse_percent": "same on the 0-100 percent scale (1e4 * mse_prob)",
                "accuracy": "argmax category agreement, ties toward lower category",
                "means": "pooled over all held-out words",
            },
            "mean_w1": self.mean_w1,
            "mse_prob": self.mse_prob,
            "mse_percent": self.mse_percent,
            "mean_accuracy": self.mean_accuracy,
            "per_fold": [vars(f).copy() for f in self.per_fold],
            "per_word": [
                {
                    "word": w.word,
                    "fold": w.fold,
                    "w1": w.w1,
                    "sq_err_prob": w.sq_err_prob,
                    "accuracy": w.accuracy,
                    "difficulty": w.difficulty,
                    "predicted": [float(x) for x in w.predicted],
                    "observed": [float(x) for x in w.observed],
                }
                for w in self.per_word
            ],
            "fold_assignment": dict(self.fold_assignment),
        }


def assign_folds(records: list[WordRecord], folds: int, seed) -> np.ndarray:
    """Deterministic fold id per record: seeded shuffle, then index mod folds.

    Records are ranked by (date, word) before shuffling, so a record's fold
    depends only on its identity and the seed, never on input order.
    """
    if folds < 2:
        raise TooFewRecords(f"need at least 2 folds, got {folds}")
    if len(records) < folds:
        raise TooFewRecords(f"{len(records)} records cannot fill {folds} folds")
    canonical = sorted(range(len(records)),
                       key=lambda i: (records[i].date, records[i].word))
    perm = make_rng(seed, "folds").permutation(len(records))
    fold_of = np.empty(len(records), dtype=np.int64)
    for pos, rank in enumerate(perm):
        fold_of[canonical[rank]] = pos % folds
    return fold_of


def baseline_distribution(records: list[WordRecord],
                          baseline_word: str = DEFAULT_BASELINE_WORD) -> np.ndarray:
    """Observed distribution of the baseline (easiest) word."""
    for rec in records:
        if rec.word == baseline_word:
            return rec.dist
    raise BaselineUnavailable(
        f"baseline word {baseline_word!r} has no ground-truth record"
    )


def _argmax_category(dist: np.ndarray) -> int:
    return int(np.argmax(dist))  # first maximum, i.e. lower category on ties


def kfold_evaluate(records: list[WordRecord], dictionary: Dictionary,
                   cfg: FitConfig, folds: int = 5,
                   baseline_word: str = DEFAULT_BASELINE_WORD) -> EvalReport:
    """Fit on each train split, predict held-out words, score everything."""
    fold_of = assign_folds(records, folds, cfg.seed)
    base_dist = baseline_distribution(records, baseline_word)

    per_word: list[WordScore] = []
    per_fold: list[FoldScore] = []
    for f in range(folds):
        train = [r for r, fo in zip(records, fold_of) if fo != f]
        test = [(r, fo) for r, fo in zip(records, fold_of) if fo == f]
        fit: FitResult = coordinate_search(cfg, train, dictionary)
        hp = Hyperparams(fit.k, fit.t)
        scores: list[WordScore] = []
        for rec, _ in test:
            pred = trial_distribution(rec.word, dictionary, hp, cfg.n_samples,
                                      cfg.seed, cfg.weighting)
            scores.append(WordScore(
                word=rec.word,
                fold=f,
                w1=w1_distance(rec.dist, pred),
                sq_err_prob=float(np.mean((pred - rec.dist) ** 2)),
                accuracy=int(_argmax_category(pred) == _argmax_category(rec.dist)),
                difficulty=difficulty(rec.dist, base_dist),
                predicted=pred,
                observed=rec.dist,
            ))
        mse_prob = float(np.mean([s.sq_err_prob for s in scores]))
        per_fold.append(FoldScore(
            fold=f, k=fit.k, t=fit.t, fit_objective=fit.objective,
            n_test=len(scores),
            mean_w1=float(np.mean([s.w1 for s in scores])),
            mse_prob=mse_prob,
            mse_percent=1e4 * mse_prob,
            accuracy=float(np.mean([s.accuracy for s in scores])),
        ))
        per_word.extend(scores)

    mse_prob = float(np.mean([s.sq_err_prob for s in per_word]))
    return EvalReport(
        folds=folds,
        baseline_word=baseline_word,
        mean_w1=float(np.mean([s.w1 for s in per_word])),
        mse_prob=mse_prob,
        mse_percent=1e4 * mse_prob,
        mean_accuracy=float(np.mean([s.accuracy for s in per_word])),
        per_fold=per_fold,
        per_word=per_word,
        fold_assignment={r.word: int(f) for r, f in zip(records, fold_of)},
    )


def difficulty_histogram(records: list[WordRecord],
                         baseline_word: str = DEFAULT_BASELINE_WORD,
                         ) -> list[tuple[str, float]]:
    """(word, difficulty) for every record, sorted ascending by difficulty."""
    base_dist = baseline_distribution(records, baseline_word)
    rows = [(rec.word, difficulty(rec.dist, base_dist)) for rec in records]
    rows.sort(key=lambda wd: (wd[1], wd[0]))
    return rows


def mean_trial_count(dist: np.ndarray) -> float:
    """Expected category value of a trial distribution, with X counted as 7."""
    return float(np.dot(dist, np.arange(1.0, 8.0)))
