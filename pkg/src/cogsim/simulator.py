"""Monte Carlo simulation of a frequency-biased Wordle player.

A simulated player repeatedly picks a guess from the most frequent words
still consistent with all clues so far, observes the clue, and filters the
remaining candidates, until the target is hit. Two hyperparameters shape the
guess choice:

* ``k`` -- recall limit: only the ``k`` most frequent remaining words are
  candidates at each step.
* ``t`` -- frequency scale factor. Under the default ``cap`` weighting a
  candidate's selection weight is ``min(p(w), t * p_max)`` with ``p_max``
  the frequency of the most common remaining word: small ``t`` flattens the
  high-frequency head, ``t >= 1`` reduces to plain frequency sampling. The
  alternative ``plain`` weighting multiplies every frequency by ``t``, which
  cancels under normalization -- it is implemented with the cancellation
  applied, so ``t`` is provably inert there (selectable to demonstrate the
  degeneracy).

Determinism contract: ``choose_word`` consumes exactly one uniform variate
per guess -- ``u = rng.random()``, then the smallest candidate index whose
cumulative weight exceeds ``u * total`` wins. Sample ``i`` for target ``w``
in ``trial_distribution`` uses ``make_rng(seed, "trial", w, i)``, so results
are bit-identical across runs and worker-thread counts.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .data_ingest import Dictionary
from .errors import EmptyDictionary, TargetNotInDictionary
from .rng import RngSeed, make_rng
from .wordle import PATTERN_MATRIX_MAX_WORDS, pattern_matrix, score_against_all

__all__ = [
    "Hyperparams",
    "WEIGHTINGS",
    "choose_word",
    "simulate_trial",
    "trial_distribution",
]

WEIGHTINGS = ("cap", "plain")

N_CATEGORIES = 7  # outcome bins 1..6 plus X


@dataclass(frozen=True)
class Hyperparams:
    """Cognitive pair: recall limit ``k`` and frequency scale factor ``t``."""

    k: int
    t: float

    def __post_init__(self):
        if not isinstance(self.k, (int, np.integer)) or self.k < 1:
            raise ValueError(f"k must be an integer >= 1, got {self.k!r}")
        if not self.t > 0:
            raise ValueError(f"t must be > 0, got {self.t!r}")


def _candidate_weights(freqs_desc: np.ndarray, hp: Hyperparams, weighting: str) -> np.ndarray:
    k = min(hp.k, len(freqs_desc))
    cand = freqs_desc[:k]
    if weighting == "cap":
        return np.minimum(cand, hp.t * freqs_desc[0])
    if weighting == "plain":
        # Literal rule max(0, p*t): t cancels under normalization, so apply
        # the cancellation; the t axis has no effect by construction.
        return cand
    raise ValueError(f"unknown weighting {weighting!r}, expected one of {WEIGHTINGS}")


def _choose_index(freqs_desc: np.ndarray, hp: Hyperparams, rng: np.random.Generator,
                  weighting: str) -> int:
    """Sample a candidate index; consumes exactly one uniform variate."""
    n = len(freqs_desc)
    if n == 0:
        raise EmptyDictionary("cannot choose a word from an empty dictionary")
    weights = _candidate_weights(freqs_desc, hp, weighting)
    u = rng.random()
    total = weights.sum()
    if total <= 0:
        # All remaining candidates have zero frequency: fall back to uniform.
        return min(int(u * len(weights)), len(weights) - 1)
    cum = np.cumsum(weights)
    return min(int(np.searchsorted(cum, u * total, side="right")), len(weights) - 1)


def choose_word(dictionary: Dictionary, hp: Hyperparams, rng: np.random.Generator,
                weighting: str = "cap") -> str:
    """Pick one guess from the ``min(k, n)`` most frequent words."""
    return dictionary.words[_choose_index(dictionary.freqs, hp, rng, weighting)]


def _simulate_indices(target_idx: int, dictionary: Dictionary, hp: Hyperparams,
                      rng: np.random.Generator, weighting: str,
                      pattern: np.ndarray | None) -> int:
    freqs = dictionary.freqs
    codes = dictionary.codes
    n = len(dictionary)
    remaining = np.arange(n)
    for cnt in range(1, n + 1):
        local = _choose_index(freqs[remaining], hp, rng, weighting)
        guess_idx = int(remaining[local])
        if guess_idx == target_idx:
            return cnt
        if pattern is not None:
            row = pattern[guess_idx]
            fb = row[target_idx]
            observed = row[remaining]
        else:
            observed = score_against_all(codes[guess_idx], codes[remaining])
            fb = observed[np.searchsorted(remaining, target_idx)]
        remaining = remaining[observed == fb]
    raise AssertionError(
        "trial failed to terminate within |dict| steps; "
        "the shrinkage invariant is broken (bug)"
    )


def _pattern_for(dictionary: Dictionary) -> np.ndarray | None:
    if len(dictionary) <= PATTERN_MATRIX_MAX_WORDS:
        return pattern_matrix(dictionary)
    return None


def simulate_trial(target: str, dictionary: Dictionary, hp: Hyperparams,
                   rng: np.random.Generator, weighting: str = "cap") -> int:
    """Number of guesses a simulated player takes to hit ``target``.

    Terminates within ``len(dictionary)`` steps: a wrong guess never survives
    its own clue, and the target always does, so the candidate set strictly
    shrinks while retaining the target.
    """
    if target not in dictionary:
        raise TargetNotInDictionary(target)
    return _simulate_indices(dictionary.index(target), dictionary, hp, rng,
                             weighting, _pattern_for(dictionary))


def trial_distribution(target: str, dictionary: Dictionary, hp: Hyperparams,
                       n_samples: int = 1000, seed: RngSeed = RngSeed(0),
                       weighting: str = "cap", n_threads: int = 1) -> np.ndarray:
    """Empirical outcome distribution over categories 1..6 and X.

    Runs ``n_samples`` independent games; guess counts 1..6 fill bins 1..6,
    counts of 7 or more land in X (the game's six-guess horizon is imposed
    only at binning -- each game runs until the target is found). Output is
    bit-identical for identical arguments, regardless of ``n_threads``.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    if target not in dictionary:
        raise TargetNotInDictionary(target)
    target_idx = dictionary.index(target)
    pattern = _pattern_for(dictionary)
    counts = np.empty(n_samples, dtype=np.int64)

    def run(i: int) -> None:
        rng = make_rng(seed, "trial", target, i)
        counts[i] = _simulate_indices(target_idx, dictionary, hp, rng,
                                      weighting, pattern)

    if n_threads <= 1:
        for i in range(n_samples):
            run(i)
    else:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            list(pool.map(run, range(n_samples)))

    binned = np.bincount(np.minimum(counts, N_CATEGORIES), minlength=N_CATEGORIES + 1)
    return binned[1:] / float(n_samples)
