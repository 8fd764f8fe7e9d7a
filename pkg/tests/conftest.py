import numpy as np
import pytest

from cogsim import Dictionary

# Common 5-letter words for small fixtures; order here is arbitrary, the
# Dictionary sorts by frequency.
REAL_WORDS = [
    "about", "train", "eerie", "query", "slate", "crane", "house", "world",
    "month", "water", "light", "paper", "music", "stone", "plant", "sound",
    "heart", "table", "river", "nurse", "bread", "cloud", "dream", "glass",
    "grape", "horse", "knife", "lemon", "mouse", "night", "ocean", "piano",
    "queen", "radio", "sheep", "tiger", "uncle", "voice", "wheat", "youth",
    "zebra", "apple", "beach", "chair", "dance", "earth", "flame", "ghost",
    "happy", "image", "juice", "koala", "laugh", "magic", "novel", "olive",
    "peace", "quilt", "round", "smile", "tease", "urban", "vivid", "woman",
    "extra", "yield", "zonal", "amber", "blink", "crisp", "dwell", "elbow",
    "frost", "gleam", "hover", "ivory", "jolly", "kneel", "lunar", "mirth",
]

VOWELS = "aeiou"
CONSONANTS = "bcdfghjklmnpqrstvwxyz"


def synthetic_words(n: int, exclude=()) -> list[str]:
    """Deterministic CVCVC strings, skipping anything in ``exclude``."""
    out = []
    seen = set(exclude)
    for c1 in CONSONANTS:
        for v1 in VOWELS:
            for c2 in CONSONANTS:
                for v2 in VOWELS:
                    word = f"{c1}{v1}{c2}{v2}{c1}"
                    if word not in seen:
                        seen.add(word)
                        out.append(word)
                        if len(out) == n:
                            return out
    raise AssertionError("synthetic word space exhausted")


def zipf_dictionary(words: list[str], exponent: float = 1.1) -> Dictionary:
    """Dictionary with Zipf-like frequencies over ``words`` in given order."""
    ranks = np.arange(1, len(words) + 1, dtype=np.float64)
    return Dictionary(list(zip(words, 1.0 / ranks**exponent)))


@pytest.fixture(scope="session")
def small_dict() -> Dictionary:
    # Frequencies chosen so the k=1 guess chain is easy to trace by hand.
    return Dictionary([
        ("slate", 0.4), ("crane", 0.3), ("train", 0.15),
        ("query", 0.1), ("eerie", 0.05),
    ])


@pytest.fixture(scope="session")
def medium_dict() -> Dictionary:
    return zipf_dictionary(REAL_WORDS)


@pytest.fixture(scope="session")
def large_dict() -> Dictionary:
    words = REAL_WORDS + synthetic_words(1000 - len(REAL_WORDS), exclude=REAL_WORDS)
    return zipf_dictionary(words)


def random_distribution(rng: np.random.Generator) -> np.ndarray:
    p = rng.random(7)
    return p / p.sum()
