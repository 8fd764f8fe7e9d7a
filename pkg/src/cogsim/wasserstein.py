"""Wasserstein-1 distance on trial distributions and the difficulty measure.

A trial distribution is a probability 7-vector over the outcome categories
1..6 and X (failed within six guesses). The categories sit on the real line
at positions 1..7 by default -- 7 is the minimal consistent extension of the
1..6 guess counts for X, and the coordinates are configurable for
sensitivity analysis.

On ordered 1-D support, W1 has a closed form: the sum of absolute CDF
differences weighted by the support spacing. That closed form equals the
optimum of the transport linear program, which the test suite solves
directly as an independent oracle.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidDistribution, LengthMismatch

__all__ = [
    "N_CATEGORIES",
    "SUPPORT",
    "validate_distribution",
    "w1_distance",
    "w1_samples",
    "difficulty",
]

N_CATEGORIES = 7

# Category coordinates: guess counts 1..6, with X at 7.
SUPPORT = np.arange(1.0, N_CATEGORIES + 1.0)
SUPPORT.flags.writeable = False

SUM_TOL = 1e-12


def validate_distribution(p, *, name: str = "distribution") -> np.ndarray:
    """Return ``p`` as a float 7-vector; raise InvalidDistribution otherwise."""
    arr = np.asarray(p, dtype=np.float64)
    if arr.shape != (N_CATEGORIES,):
        raise InvalidDistribution(f"{name} must have shape (7,), got {arr.shape}")
    if np.any(~np.isfinite(arr)):
        raise InvalidDistribution(f"{name} has non-finite components")
    if np.any(arr < 0):
        raise InvalidDistribution(f"{name} has negative components")
    if abs(float(arr.sum()) - 1.0) > SUM_TOL:
        raise InvalidDistribution(f"{name} sums to {arr.sum()!r}, not 1")
    return arr


def _check_support(support) -> np.ndarray:
    s = SUPPORT if support is None else np.asarray(support, dtype=np.float64)
    if s.shape != (N_CATEGORIES,) or np.any(np.diff(s) <= 0):
        raise ValueError("support must be 7 strictly increasing coordinates")
    return s


def w1_distance(p, q, support=None) -> float:
    """W1 between two trial distributions on the category support.

    Equals ``sum_k |F_p(k) - F_q(k)| * spacing_k`` over the first six
    category positions, the exact transport optimum for 1-D support.
    """
    p = validate_distribution(p, name="p")
    q = validate_distribution(q, name="q")
    s = _check_support(support)
    cdf_gap = np.cumsum(p - q)[:-1]
    return float(np.sum(np.abs(cdf_gap) * np.diff(s)))


def w1_samples(xs, ys) -> float:
    """W1 between two equal-size empirical samples: mean |sorted difference|.

    Equals ``w1_distance`` of the samples' empirical measures.
    """
    xs = np.sort(np.asarray(xs, dtype=np.float64))
    ys = np.sort(np.asarray(ys, dtype=np.float64))
    if xs.ndim != 1 or xs.shape != ys.shape:
        raise LengthMismatch(f"sample shapes differ: {xs.shape} vs {ys.shape}")
    if xs.size == 0:
        raise LengthMismatch("samples must be non-empty")
    return float(np.mean(np.abs(xs - ys)))


def difficulty(word_dist, baseline_dist, support=None) -> float:
    """Difficulty of a word: W1 from the baseline (easiest) word's distribution."""
    return w1_distance(baseline_dist, word_dist, support=support)
