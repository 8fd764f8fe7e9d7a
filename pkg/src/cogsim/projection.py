"""2-D principal-component projection of trial distributions and
empirical confidence bands over simulated replicates.

Each 7-vector is treated as a function discretized on the category grid, so
the functional PCA reduces to ordinary PCA on the vectors: at 7 grid points
a richer functional basis adds nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .data_ingest import Dictionary
from .rng import RngSeed, derive_stream_id
from .simulator import Hyperparams, trial_distribution
from .wasserstein import N_CATEGORIES, validate_distribution

__all__ = ["Projection2D", "ReplicateBand", "fpca_project", "replicate_band"]


@dataclass
class Projection2D:
    basis: np.ndarray  # (2, 7), rows orthonormal
    center: np.ndarray  # (7,)
    explained_variance: np.ndarray  # (2,), non-increasing
    points: list[tuple[object, float, float]] = field(repr=False)


@dataclass
class ReplicateBand:
    mean: np.ndarray  # (7,)
    lower: np.ndarray  # (7,)
    upper: np.ndarray  # (7,)
    level: float
    replicates: np.ndarray = field(repr=False)  # (n_replicates, 7)
    projection: Projection2D = field(repr=False)


def fpca_project(dists, ids=None) -> Projection2D:
    """Project distributions onto their top-2 principal directions.

    Sign convention: each component's largest-magnitude loading is positive.
    All-identical inputs are a legal degenerate case: zero variance, every
    point at the origin.
    """
    rows = [validate_distribution(d) for d in dists]
    if len(rows) < 3:
        raise ValueError(f"need at least 3 distributions, got {len(rows)}")
    if ids is None:
        ids = list(range(len(rows)))
    elif len(ids) != len(rows):
        raise ValueError("ids and distributions differ in length")

    x = np.stack(rows)
    center = x.mean(axis=0)
    centered = x - center
    cov = centered.T @ centered / (len(rows) - 1)
    evals, evecs = np.linalg.eigh(cov)  # ascending
    basis = evecs[:, [-1, -2]].T.copy()  # (2, 7)
    for row in basis:
        if row[np.argmax(np.abs(row))] < 0:
            row *= -1.0
    explained = np.maximum(evals[[-1, -2]], 0.0)
    coords = centered @ basis.T
    points = [(i, float(px), float(py)) for i, (px, py) in zip(ids, coords)]
    return Projection2D(basis=basis, center=center,
                        explained_variance=explained, points=points)


def _nearest_rank(q: float, n: int) -> int:
    """1-based nearest-rank index, guarding float noise in q*n."""
    m = q * n
    nearest = round(m)
    rank = nearest if abs(m - nearest) < 1e-9 else math.ceil(m)
    return min(max(rank, 1), n)


def replicate_band(word: str, dictionary: Dictionary, hp: Hyperparams,
                   n_replicates: int = 200, n_samples: int = 1000,
                   level: float = 0.95, seed: RngSeed = RngSeed(0),
                   weighting: str = "cap", n_threads: int = 1) -> ReplicateBand:
    """Simulate independent replicate distributions and band them.

    The band is the per-category empirical quantile interval at
    ``(1-level)/2`` and ``1-(1-level)/2`` under the nearest-rank rule.
    Replicate ``r`` re-seeds the simulation with a stream id derived from
    ``("replicate", seed.stream_id, r)``, so replicates are independent and
    the whole band is reproducible.
    """
    if not 0 < level < 1:
        raise ValueError(f"level must be in (0, 1), got {level}")
    if n_replicates < 3:
        raise ValueError("need at least 3 replicates")
    reps = np.empty((n_replicates, N_CATEGORIES))
    for r in range(n_replicates):
        rep_seed = RngSeed(seed.seed, derive_stream_id("replicate", seed.stream_id, r))
        reps[r] = trial_distribution(word, dictionary, hp, n_samples, rep_seed,
                                     weighting, n_threads)
    ordered = np.sort(reps, axis=0)
    q_lo = (1.0 - level) / 2.0
    lower = ordered[_nearest_rank(q_lo, n_replicates) - 1]
    upper = ordered[_nearest_rank(1.0 - q_lo, n_replicates) - 1]
    return ReplicateBand(
        mean=reps.mean(axis=0),
        lower=lower,
        upper=upper,
        level=level,
        replicates=reps,
        projection=fpca_project(reps),
    )
