"""Per-word numeric features for the regression baselines.

The feature set is deliberately minimal and versioned; every report records
``FEATURE_SET_VERSION`` and the feature names in order.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "FEATURE_NAMES",
    "FEATURE_SET_VERSION",
    "WordNotInDictionary",
    "corpus_statistics",
    "extract_features",
    "feature_matrix",
]

FEATURE_SET_VERSION = 1

FEATURE_NAMES = [
    "log_freq",            # log10 relative corpus frequency
    "distinct_letters",
    "repeated_letters",    # occurrences beyond the first, summed over letters
    "vowel_count",
    "mean_letter_freq",    # mean corpus frequency of the word's letters
    "pos1_rank",           # rank of the letter among letters seen at position 1
    "pos2_rank",
    "pos3_rank",
    "pos4_rank",
    "pos5_rank",
]

VOWELS = set("aeiou")


class WordNotInDictionary(KeyError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"word not in corpus: {word!r}")


def corpus_statistics(corpus: list[tuple[str, float]]) -> dict:
    """Frequency-weighted letter and positional-letter statistics.

    Positional ranks are 0 for the most common letter at that position; ties
    break alphabetically so the mapping is deterministic.
    """
    freq_of = dict(corpus)
    letter_freq = {c: 0.0 for c in "abcdefghijklmnopqrstuvwxyz"}
    positional = [dict() for _ in range(5)]
    for word, freq in corpus:
        for i, ch in enumerate(word):
            letter_freq[ch] += freq / 5.0
            positional[i][ch] = positional[i].get(ch, 0.0) + freq
    ranks = []
    for pos in positional:
        ordered = sorted(pos.items(), key=lambda cf: (-cf[1], cf[0]))
        ranks.append({ch: r for r, (ch, _) in enumerate(ordered)})
    return {"freq_of": freq_of, "letter_freq": letter_freq, "pos_ranks": ranks}


def extract_features(word: str, corpus: list[tuple[str, float]],
                     stats: dict | None = None) -> np.ndarray:
    """Deterministic feature vector for ``word``; order is FEATURE_NAMES."""
    stats = stats if stats is not None else corpus_statistics(corpus)
    if word not in stats["freq_of"]:
        raise WordNotInDictionary(word)
    counts: dict[str, int] = {}
    for ch in word:
        counts[ch] = counts.get(ch, 0) + 1
    # An unseen letter at a position ranks just past every seen one.
    pos_ranks = [
        float(stats["pos_ranks"][i].get(ch, len(stats["pos_ranks"][i])))
        for i, ch in enumerate(word)
    ]
    return np.array([
        math.log10(max(stats["freq_of"][word], 1e-12)),  # keep finite at freq 0
        float(len(counts)),
        float(sum(c - 1 for c in counts.values())),
        float(sum(1 for ch in word if ch in VOWELS)),
        float(np.mean([stats["letter_freq"][ch] for ch in word])),
        *pos_ranks,
    ])


def feature_matrix(words: list[str], corpus: list[tuple[str, float]]) -> np.ndarray:
    stats = corpus_statistics(corpus)
    return np.stack([extract_features(w, corpus, stats) for w in words])
