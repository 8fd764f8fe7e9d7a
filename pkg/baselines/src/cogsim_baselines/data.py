"""Loaders for the file interfaces exported by the cogsim CLI.

This package talks to the simulator only through files:

* ``dictionary.csv``  -- ``word,frequency`` rows (the corpus).
* ``targets.csv``     -- ``word,p_1..p_6,p_x`` observed trial distributions,
  written by ``cogsim evaluate``.
* ``folds.json``      -- fold assignment per word, written by
  ``cogsim evaluate``; reused verbatim so both reports share exact splits.
"""

from __future__ import annotations

import csv
import json

import numpy as np

__all__ = ["load_corpus", "load_targets", "load_folds"]


def load_corpus(path) -> list[tuple[str, float]]:
    """(word, relative frequency) pairs, normalized, ordered as in the file."""
    with open(path, "r", encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != ["word", "frequency"]:
            raise ValueError(f"{path}: expected header 'word,frequency'")
        rows = [(w.strip().lower(), float(f)) for w, f in reader]
    total = sum(f for _, f in rows)
    if not rows or total <= 0:
        raise ValueError(f"{path}: no usable rows")
    return [(w, f / total) for w, f in rows]


def load_targets(path) -> tuple[list[str], np.ndarray]:
    """Words and their observed 7-category distributions."""
    with open(path, "r", encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        expected = ["word", "p_1", "p_2", "p_3", "p_4", "p_5", "p_6", "p_x"]
        if header is None or [h.strip().lower() for h in header] != expected:
            raise ValueError(f"{path}: expected header {','.join(expected)}")
        words, dists = [], []
        for row in reader:
            words.append(row[0].strip().lower())
            dists.append([float(x) for x in row[1:8]])
    targets = np.asarray(dists, dtype=np.float64)
    if np.any(targets < 0) or np.any(np.abs(targets.sum(axis=1) - 1.0) > 1e-9):
        raise ValueError(f"{path}: rows must be probability vectors")
    return words, targets


def load_folds(path) -> tuple[int, dict[str, int]]:
    """Fold count and the word -> fold assignment, exactly as exported."""
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    return int(payload["folds"]), {w: int(f) for w, f in payload["assignment"].items()}
