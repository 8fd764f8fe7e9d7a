"""Wordle clue scoring and consistency filtering.

Scoring uses the real game's two-pass duplicate rule: exact-position matches
go Green first and consume that target letter; remaining guess letters then
scan left to right, going Yellow while the letter is still available in the
unconsumed target multiset, else Grey.

``filter_dictionary`` is defined extensionally: a word survives iff scoring
the guess against it reproduces the observed feedback. The batch scorer and
the precomputed pattern matrix are optimizations of that definition and are
tested against it.
"""

from __future__ import annotations

import weakref

import numpy as np

from .data_ingest import WORD_LEN, Dictionary
from .errors import InvalidWord

__all__ = [
    "GREY", "YELLOW", "GREEN", "ALL_GREEN_CODE",
    "Feedback",
    "score_guess", "feedback_code", "code_to_feedback",
    "feedback_to_str", "str_to_feedback",
    "score_against_all", "pattern_matrix", "filter_dictionary",
]

GREY, YELLOW, GREEN = 0, 1, 2

# Feedback as 5 colors <-> base-3 integer code; position 0 is the least
# significant digit. All-Green is 242.
_POW3 = 3 ** np.arange(WORD_LEN)
ALL_GREEN_CODE = int(_POW3.sum()) * GREEN

Feedback = tuple[int, int, int, int, int]

_COLOR_CHARS = {GREY: "-", YELLOW: "y", GREEN: "g"}
_CHAR_COLORS = {"-": GREY, "b": GREY, "y": YELLOW, "g": GREEN}


def _check_word(word: str) -> str:
    if len(word) != WORD_LEN or not word.isascii() or not word.isalpha() or not word.islower():
        raise InvalidWord(word)
    return word


def score_guess(guess: str, target: str) -> Feedback:
    """Color ``guess`` against ``target``; all-Green iff guess == target."""
    _check_word(guess)
    _check_word(target)
    colors = [GREY] * WORD_LEN
    remaining: dict[str, int] = {}
    for i, (g, t) in enumerate(zip(guess, target)):
        if g == t:
            colors[i] = GREEN
        else:
            remaining[t] = remaining.get(t, 0) + 1
    for i, g in enumerate(guess):
        if colors[i] != GREEN and remaining.get(g, 0) > 0:
            colors[i] = YELLOW
            remaining[g] -= 1
    return tuple(colors)


def feedback_code(fb: Feedback) -> int:
    return int(np.dot(fb, _POW3))


def code_to_feedback(code: int) -> Feedback:
    colors = []
    for _ in range(WORD_LEN):
        code, c = divmod(code, 3)
        colors.append(c)
    return tuple(colors)


def feedback_to_str(fb: Feedback) -> str:
    return "".join(_COLOR_CHARS[c] for c in fb)


def str_to_feedback(s: str) -> Feedback:
    s = s.strip().lower()
    if len(s) != WORD_LEN or any(c not in _CHAR_COLORS for c in s):
        raise ValueError(f"feedback must be 5 chars from g/y/-: {s!r}")
    return tuple(_CHAR_COLORS[c] for c in s)


def score_against_all(guess_codes: np.ndarray, target_codes: np.ndarray) -> np.ndarray:
    """Feedback codes of one guess against every row of ``target_codes``.

    ``guess_codes`` is a (5,) letter-code vector, ``target_codes`` (n, 5).
    Returns (n,) uint8 feedback codes. Same two-pass rule as ``score_guess``.
    """
    greens = target_codes == guess_codes  # (n, 5)
    # Per-target count of each letter among its non-green positions.
    onehot = target_codes[:, :, None] == np.arange(26, dtype=np.uint8)
    counts = (onehot & ~greens[:, :, None]).sum(axis=1).astype(np.int8)  # (n, 26)
    colors = np.where(greens, GREEN, GREY).astype(np.uint8)
    for j in range(WORD_LEN):
        c = guess_codes[j]
        mark = ~greens[:, j] & (counts[:, c] > 0)
        colors[mark, j] = YELLOW
        counts[mark, c] -= 1
    return (colors * _POW3).sum(axis=1).astype(np.uint8)


# Pattern matrices are cached per Dictionary instance; they are pure functions
# of the (immutable) word list.
_PATTERN_CACHE: "weakref.WeakKeyDictionary[Dictionary, np.ndarray]" = (
    weakref.WeakKeyDictionary()
)

PATTERN_MATRIX_MAX_WORDS = 4096


def pattern_matrix(dictionary: Dictionary) -> np.ndarray:
    """(n, n) matrix M with M[g, t] = feedback code of word g vs target t."""
    cached = _PATTERN_CACHE.get(dictionary)
    if cached is not None:
        return cached
    codes = dictionary.codes
    n = len(dictionary)
    matrix = np.empty((n, n), dtype=np.uint8)
    for g in range(n):
        matrix[g] = score_against_all(codes[g], codes)
    matrix.flags.writeable = False
    _PATTERN_CACHE[dictionary] = matrix
    return matrix


def filter_dictionary(dictionary: Dictionary, guess: str, fb: Feedback) -> Dictionary:
    """Sub-dictionary of words consistent with (guess, fb).

    Preserves order and original frequencies; may be empty-checked by the
    caller (an empty result raises EmptyDictionary from Dictionary.subset).
    """
    _check_word(guess)
    codes = np.frombuffer(guess.encode("ascii"), dtype=np.uint8) - ord("a")
    observed = score_against_all(codes, dictionary.codes)
    keep = np.nonzero(observed == feedback_code(fb))[0]
    return dictionary.subset(keep)
