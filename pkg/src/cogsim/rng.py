"""Reproducible random stream derivation.

Every unit of Monte Carlo work (one simulated game, one replicate, one
shuffle) owns a private numpy Generator derived from a root ``RngSeed``
plus a tuple of string/int tokens naming the work unit. The derivation is
a stable hash, so results never depend on scheduling or evaluation order,
and the same root seed reproduces identical streams on any platform.

Derivation contract (relied on by external re-implementations): the
tokens are joined with ``"\\x1f"`` after ``str()`` conversion, hashed with
BLAKE2b to a 64-bit big-endian integer, and the Generator is
``default_rng(SeedSequence(entropy=(seed, stream_id, token_hash)))``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

__all__ = ["RngSeed", "derive_stream_id", "make_rng"]


@dataclass(frozen=True)
class RngSeed:
    """Root seed for a whole run; ``stream_id`` separates independent uses."""

    seed: int
    stream_id: int = 0

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not 0 <= self.stream_id < 2**64:
            raise ValueError("stream_id must be a 64-bit unsigned integer")


def derive_stream_id(*tokens: str | int) -> int:
    """Stable 64-bit hash of the token tuple (never Python's salted hash)."""
    msg = "\x1f".join(str(t) for t in tokens).encode("utf-8")
    return int.from_bytes(hashlib.blake2b(msg, digest_size=8).digest(), "big")


def make_rng(seed: RngSeed, *tokens: str | int) -> np.random.Generator:
    """Generator for the work unit named by ``tokens`` under ``seed``."""
    entropy = (seed.seed, seed.stream_id, derive_stream_id(*tokens))
    return np.random.default_rng(np.random.SeedSequence(entropy=entropy))
