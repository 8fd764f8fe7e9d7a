"""Command-line interface for the baseline comparison.

``features`` builds features.csv from the corpus and target words;
``run`` cross-validates the four regressors on the exported folds and
writes baselines_report.json.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from .data import load_corpus, load_folds, load_targets
from .features import FEATURE_NAMES, feature_matrix
from .runner import run_baselines


def cmd_features(args) -> int:
    corpus = load_corpus(args.dict)
    words, _ = load_targets(args.targets)
    matrix = feature_matrix(words, corpus)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["word", *FEATURE_NAMES])
        for word, row in zip(words, matrix):
            writer.writerow([word, *[repr(float(x)) for x in row]])
    print(f"wrote {len(words)} feature rows -> {args.out}")
    return 0


def _load_features_csv(path) -> tuple[list[str], np.ndarray]:
    with open(path, "r", encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or header[0] != "word" or header[1:] != FEATURE_NAMES:
            raise ValueError(f"{path}: unexpected feature columns {header!r}")
        words, rows = [], []
        for row in reader:
            words.append(row[0])
            rows.append([float(x) for x in row[1:]])
    return words, np.asarray(rows)


def cmd_run(args) -> int:
    words, features = _load_features_csv(args.features)
    target_words, targets = load_targets(args.targets)
    if words != target_words:
        raise ValueError("features.csv and targets.csv list different words")
    folds, fold_of = load_folds(args.folds)
    report = run_baselines(words, features, targets, fold_of, folds, args.seed)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"{'model':28s} {'mse%':>8s} {'mean_w1':>8s} {'acc':>6s}")
    for row in report["models"]:
        print(f"{row['model']:28s} {row['mse_percent']:8.3f} "
              f"{row['mean_w1']:8.4f} {row['mean_accuracy']:6.2f}")
    print(f"-> {args.out}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cogsim-baselines",
        description="Reference regression models scored on cogsim's folds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("features", help="extract features.csv for the target words")
    p.add_argument("--dict", required=True, help="dictionary.csv (word,frequency)")
    p.add_argument("--targets", required=True, help="targets.csv from `cogsim evaluate`")
    p.add_argument("--out", default="features.csv")
    p.set_defaults(func=cmd_features)

    p = sub.add_parser("run", help="cross-validate the baselines and write the report")
    p.add_argument("--features", required=True, help="features.csv")
    p.add_argument("--targets", required=True, help="targets.csv from `cogsim evaluate`")
    p.add_argument("--folds", required=True, help="folds.json from `cogsim evaluate`")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="baselines_report.json")
    p.set_defaults(func=cmd_run)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"cogsim-baselines: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
