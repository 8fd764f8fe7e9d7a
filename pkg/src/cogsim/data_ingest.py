"""Loading and validation of the frequency dictionary and ground-truth results.

File formats:

* ``dictionary.csv`` — header ``word,frequency``; one 5-letter word per row
  with a raw count or relative frequency. Frequencies are normalized to sum
  to 1 at load time.
* ``ground_truth.csv`` — header
  ``date,word,num_reported,pct_1,pct_2,pct_3,pct_4,pct_5,pct_6,pct_x``;
  ISO dates, integer-ish percentages nominally summing to 100.
"""

from __future__ import annotations

import csv
import datetime
import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DuplicateWord,
    EmptyDictionary,
    MalformedRow,
    MissingFile,
    PercentSumOutOfTolerance,
)

__all__ = [
    "Dictionary",
    "WordRecord",
    "load_dictionary",
    "load_ground_truth",
    "save_dictionary",
    "save_ground_truth",
]

log = logging.getLogger(__name__)

WORD_LEN = 5

# Published Wordle stats round each category to whole percent, so a row's
# raw sum can legitimately drift from 100 by up to seven half-point
# roundings.
PERCENT_TOL = 3.5


def _check_word(word: str, line_no: int) -> str:
    word = word.strip().lower()
    if len(word) != WORD_LEN or not word.isascii() or not word.isalpha():
        raise MalformedRow(line_no, f"not a 5-letter a-z word: {word!r}")
    return word


class Dictionary:
    """Ordered 5-letter word list with relative frequencies.

    Entries are sorted by frequency descending, ties broken lexicographically,
    so top-K truncation is deterministic. ``load_dictionary`` normalizes
    frequencies to sum to 1; sub-dictionaries produced by clue filtering keep
    their original (un-renormalized) frequencies.

    Immutable after construction; safe to share across threads.
    """

    __slots__ = ("words", "freqs", "codes", "_index", "__weakref__")

    def __init__(self, entries: list[tuple[str, float]], *, normalize: bool = True):
        if not entries:
            raise EmptyDictionary("dictionary has no entries")
        entries = sorted(entries, key=lambda e: (-e[1], e[0]))
        self.words: tuple[str, ...] = tuple(w for w, _ in entries)
        freqs = np.array([f for _, f in entries], dtype=np.float64)
        if np.any(freqs < 0):
            raise ValueError("negative frequency")
        if normalize:
            total = freqs.sum()
            if total <= 0:
                raise EmptyDictionary("total frequency is zero")
            freqs = freqs / total
        self.freqs: np.ndarray = freqs
        self.freqs.flags.writeable = False
        # Letter codes (a=0..z=25) as an (n, 5) matrix for vectorized scoring.
        buf = np.frombuffer("".join(self.words).encode("ascii"), dtype=np.uint8)
        self.codes: np.ndarray = (buf - ord("a")).reshape(len(self.words), WORD_LEN)
        self.codes.flags.writeable = False
        self._index = {w: i for i, w in enumerate(self.words)}

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self._index

    def __iter__(self):
        return iter(zip(self.words, self.freqs))

    def index(self, word: str) -> int:
        return self._index[word]

    def subset(self, indices: np.ndarray) -> "Dictionary":
        """Sub-dictionary at ``indices`` (ascending), keeping raw frequencies.

        May be empty: clue filtering legitimately eliminates every word.
        """
        sub = Dictionary.__new__(Dictionary)
        sub.words = tuple(self.words[i] for i in indices)
        sub.freqs = self.freqs[indices]
        sub.codes = self.codes[indices]
        sub._index = {w: i for i, w in enumerate(sub.words)}
        return sub

    def __repr__(self) -> str:
        return f"Dictionary({len(self)} words)"


@dataclass(frozen=True)
class WordRecord:
    """One ground-truth observation: a day's target word and its outcome."""

    date: datetime.date
    word: str
    num_reported: int
    dist: np.ndarray = field(repr=False)  # 7-vector over categories 1..6, X


def load_dictionary(path) -> Dictionary:
    """Load ``word,frequency`` CSV, normalize, and sort.

    Raises MissingFile, MalformedRow, DuplicateWord, or EmptyDictionary.
    """
    try:
        fh = open(path, "r", encoding="utf-8-sig", newline="")
    except FileNotFoundError:
        raise MissingFile(f"no such file: {path}") from None
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != ["word", "frequency"]:
            raise MalformedRow(1, f"expected header 'word,frequency', got {header!r}")
        seen: dict[str, int] = {}
        entries: list[tuple[str, float]] = []
        for line_no, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise MalformedRow(line_no, f"expected 2 fields, got {len(row)}")
            word = _check_word(row[0], line_no)
            try:
                freq = float(row[1])
            except ValueError:
                raise MalformedRow(line_no, f"bad frequency: {row[1]!r}") from None
            if not np.isfinite(freq) or freq < 0:
                raise MalformedRow(line_no, f"frequency must be finite and >= 0: {freq!r}")
            if word in seen:
                raise DuplicateWord(word)
            seen[word] = line_no
            entries.append((word, freq))
    if not entries:
        raise EmptyDictionary(f"no valid rows in {path}")
    return Dictionary(entries)


GROUND_TRUTH_HEADER = [
    "date", "word", "num_reported",
    "pct_1", "pct_2", "pct_3", "pct_4", "pct_5", "pct_6", "pct_x",
]


def load_ground_truth(path, dictionary: Dictionary) -> list[WordRecord]:
    """Load observed trial distributions, in date order.

    Percentages are renormalized to a probability vector. Rows whose raw sum
    falls outside [96.5, 103.5] raise PercentSumOutOfTolerance. Words absent
    from ``dictionary`` are logged and excluded (they cannot be simulated).
    """
    try:
        fh = open(path, "r", encoding="utf-8-sig", newline="")
    except FileNotFoundError:
        raise MissingFile(f"no such file: {path}") from None
    records: list[WordRecord] = []
    skipped: list[str] = []
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip().lower() for h in header] != GROUND_TRUTH_HEADER:
            raise MalformedRow(1, f"expected header {','.join(GROUND_TRUTH_HEADER)!r}")
        for line_no, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 10:
                raise MalformedRow(line_no, f"expected 10 fields, got {len(row)}")
            try:
                date = datetime.date.fromisoformat(row[0].strip())
            except ValueError:
                raise MalformedRow(line_no, f"bad date: {row[0]!r}") from None
            word = _check_word(row[1], line_no)
            try:
                num_reported = int(row[2])
            except ValueError:
                raise MalformedRow(line_no, f"bad num_reported: {row[2]!r}") from None
            if num_reported < 0:
                raise MalformedRow(line_no, "num_reported must be >= 0")
            try:
                pcts = np.array([float(x) for x in row[3:10]], dtype=np.float64)
            except ValueError:
                raise MalformedRow(line_no, f"bad percentage in {row[3:10]!r}") from None
            if np.any(~np.isfinite(pcts)) or np.any(pcts < 0):
                raise MalformedRow(line_no, "percentages must be finite and >= 0")
            total = float(pcts.sum())
            if not (100 - PERCENT_TOL <= total <= 100 + PERCENT_TOL):
                raise PercentSumOutOfTolerance(line_no, total)
            dist = pcts / total
            dist.flags.writeable = False
            if word not in dictionary:
                skipped.append(word)
                continue
            records.append(WordRecord(date, word, num_reported, dist))
    if skipped:
        log.warning(
            "excluded %d ground-truth words absent from the dictionary: %s",
            len(skipped), ", ".join(sorted(skipped)),
        )
    records.sort(key=lambda r: r.date)
    log.info("loaded %d ground-truth records from %s", len(records), path)
    return records


def save_dictionary(path, dictionary: Dictionary) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["word", "frequency"])
        for word, freq in dictionary:
            writer.writerow([word, repr(float(freq))])


def save_ground_truth(path, records: list[WordRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(GROUND_TRUTH_HEADER)
        for rec in records:
            pcts = [repr(float(p * 100.0)) for p in rec.dist]
            writer.writerow([rec.date.isoformat(), rec.word, rec.num_reported, *pcts])
