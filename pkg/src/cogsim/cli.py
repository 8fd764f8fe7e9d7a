"""Command-line interface.

Subcommands: validate, fit, simulate, difficulty, evaluate, project.
Options may come from a TOML config file (``--config``); explicit flags win.
The merged effective configuration is echoed into every output's metadata,
outputs are written atomically, and ``--seed`` pins all randomness, so a
rerun with the same argv and input files is byte-identical.

Exit codes: 0 success, 2 usage error, 3 data error, 4 compute error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import __version__
from .data_ingest import load_dictionary, load_ground_truth
from .errors import BaselineUnavailable, CogsimError, DataError, InfeasibleRange
from .evaluation import difficulty_histogram, kfold_evaluate
from .optimizer import FitConfig, coordinate_search
from .projection import fpca_project, replicate_band
from .rng import RngSeed
from .simulator import WEIGHTINGS, Hyperparams, trial_distribution
from .wasserstein import w1_distance
from .output import SCHEMA_VERSION, atomic_write_text, build_metadata, dump_json, write_json

EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_COMPUTE = 4

CATEGORIES = ["1", "2", "3", "4", "5", "6", "X"]


class UsageError(CogsimError):
    pass


def _parse_k_range(text: str) -> tuple[int, int, int]:
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise UsageError(f"--k-range must be lo:hi[:step], got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
        step = int(parts[2]) if len(parts) == 3 else 1
    except ValueError:
        raise UsageError(f"--k-range must be integers, got {text!r}") from None
    return lo, hi, step


def _parse_t_range(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"--t-range must be lo:hi, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise UsageError(f"--t-range must be numbers, got {text!r}") from None


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except FileNotFoundError:
        raise UsageError(f"config file not found: {path}") from None
    except tomllib.TOMLDecodeError as exc:
        raise UsageError(f"bad config file {path}: {exc}") from None


def _merged(args: argparse.Namespace, config: dict) -> dict:
    """Effective settings: hard default < config file < explicit flag."""
    fit_cfg = config.get("fit", {})
    defaults = {
        "dict": config.get("dictionary"),
        "truth": config.get("truth"),
        "seed": config.get("seed", 0),
        "weighting": config.get("weighting", "cap"),
        "baseline": config.get("baseline", "train"),
        "threads": config.get("threads", 1),
        "samples": fit_cfg.get("samples", 1000),
        "k_range": fit_cfg.get("k_range", "10:2000:10"),
        "t_range": fit_cfg.get("t_range", "0.01:2.0"),
        "t_grid": fit_cfg.get("t_grid", 50),
        "max_iter": fit_cfg.get("max_iter", 10),
        "tol": fit_cfg.get("tol", 1e-9),
        "folds": config.get("folds", 5),
        "replicates": config.get("replicates", 200),
        "level": config.get("level", 0.95),
    }
    eff = dict(defaults)
    for key, value in vars(args).items():
        if value is not None and key in eff:
            eff[key] = value
    if eff["weighting"] not in WEIGHTINGS:
        raise UsageError(f"--weighting must be one of {WEIGHTINGS}")
    return eff


def _meta(eff: dict, extra: dict | None = None) -> dict:
    meta = build_metadata(__version__)
    meta["config"] = {k: v for k, v in sorted(eff.items()) if v is not None}
    if extra:
        meta.update(extra)
    return meta


def _fit_config(eff: dict) -> FitConfig:
    return FitConfig(
        k_range=_parse_k_range(str(eff["k_range"])),
        t_range=_parse_t_range(str(eff["t_range"])),
        t_grid=int(eff["t_grid"]),
        max_iter=int(eff["max_iter"]),
        tol=float(eff["tol"]),
        n_samples=int(eff["samples"]),
        seed=RngSeed(int(eff["seed"])),
        weighting=eff["weighting"],
        n_threads=int(eff["threads"]),
    )


def _require(eff: dict, key: str, flag: str):
    if eff.get(key) is None:
        raise UsageError(f"{flag} is required (flag or config file)")
    return eff[key]


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_validate(args, config) -> int:
    eff = _merged(args, config)
    dictionary = load_dictionary(_require(eff, "dict", "--dict"))
    report = {
        "meta": _meta(eff),
        "dictionary": {
            "path": eff["dict"],
            "words": len(dictionary),
            "frequency_sum": float(dictionary.freqs.sum()),
            "most_frequent": list(dictionary.words[:5]),
        },
    }
    if eff.get("truth"):
        records = load_ground_truth(eff["truth"], dictionary)
        report["ground_truth"] = {
            "path": eff["truth"],
            "records": len(records),
            "date_range": (
                [records[0].date.isoformat(), records[-1].date.isoformat()]
                if records else None
            ),
        }
    if args.out:
        write_json(args.out, report)
    print(dump_json(report), end="")
    return 0


def cmd_fit(args, config) -> int:
    eff = _merged(args, config)
    dictionary = load_dictionary(_require(eff, "dict", "--dict"))
    records = load_ground_truth(_require(eff, "truth", "--truth"), dictionary)
    cfg = _fit_config(eff)
    result = coordinate_search(cfg, records, dictionary)
    payload = result.as_dict()
    payload["n_samples"] = cfg.n_samples
    payload["seed"] = {"seed": cfg.seed.seed, "stream_id": cfg.seed.stream_id}
    payload["weighting"] = cfg.weighting
    payload["meta"] = _meta(eff)
    write_json(args.out, payload)
    print(f"fitted k={result.k} t={result.t:.6g} objective={result.objective:.6g} "
          f"-> {args.out}")
    return 0


def cmd_simulate(args, config) -> int:
    eff = _merged(args, config)
    dictionary = load_dictionary(_require(eff, "dict", "--dict"))
    hp = Hyperparams(args.k, args.t)
    dist = trial_distribution(args.word, dictionary, hp, int(eff["samples"]),
                              RngSeed(int(eff["seed"])), eff["weighting"],
                              int(eff["threads"]))
    payload = {
        "word": args.word,
        "k": hp.k,
        "t": hp.t,
        "n_samples": int(eff["samples"]),
        "categories": CATEGORIES,
        "distribution": [float(x) for x in dist],
        "meta": _meta(eff),
    }
    write_json(args.out, payload)
    print(f"simulated {args.word}: {[round(float(x), 4) for x in dist]} -> {args.out}")
    return 0


def _load_params(path: str) -> dict:
    import json

    try:
        with open(path, "r", encoding="utf-8") as fh:
            params = json.load(fh)
    except FileNotFoundError:
        raise DataError(f"params file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise DataError(f"bad params file {path}: {exc}") from None
    for key in ("k", "t"):
        if key not in params:
            raise DataError(f"params file {path} missing field {key!r}")
    return params


def cmd_difficulty(args, config) -> int:
    eff = _merged(args, config)
    dictionary = load_dictionary(_require(eff, "dict", "--dict"))
    params = _load_params(args.params)
    hp = Hyperparams(int(params["k"]), float(params["t"]))
    n_samples = int(params.get("n_samples", eff["samples"]))
    seed_info = params.get("seed", {})
    seed = RngSeed(int(seed_info.get("seed", eff["seed"])),
                   int(seed_info.get("stream_id", 0)))
    weighting = params.get("weighting", eff["weighting"])

    baseline_word = eff["baseline"]
    if args.baseline_source == "simulated":
        base_dist = trial_distribution(baseline_word, dictionary, hp, n_samples,
                                       seed, weighting, int(eff["threads"]))
    else:
        if not eff.get("truth"):
            raise BaselineUnavailable(
                "ground-truth baseline needs --truth (or use --baseline-source simulated)"
            )
        records = load_ground_truth(eff["truth"], dictionary)
        matches = [r.dist for r in records if r.word == baseline_word]
        if not matches:
            raise BaselineUnavailable(
                f"baseline word {baseline_word!r} not in ground truth"
            )
        base_dist = matches[0]

    predicted = trial_distribution(args.word, dictionary, hp, n_samples, seed,
                                   weighting, int(eff["threads"]))
    payload = {
        "word": args.word,
        "difficulty": w1_distance(base_dist, predicted),
        "predicted_distribution": [float(x) for x in predicted],
        "baseline": baseline_word,
        "baseline_source": args.baseline_source,
        "categories": CATEGORIES,
        "k": hp.k,
        "t": hp.t,
        "meta": _meta(eff),
    }
    if args.out:
        write_json(args.out, payload)
    print(dump_json(payload), end="")
    return 0


def cmd_evaluate(args, config) -> int:
    eff = _merged(args, config)
    dictionary = load_dictionary(_require(eff, "dict", "--dict"))
    records = load_ground_truth(_require(eff, "truth", "--truth"), dictionary)
    cfg = _fit_config(eff)
    folds = int(eff["folds"])
    report = kfold_evaluate(records, dictionary, cfg, folds, eff["baseline"])

    out_dir = args.out_dir
    payload = report.as_dict()
    payload["meta"] = _meta(eff)
    write_json(f"{out_dir}/eval_report.json", payload)

    hist = difficulty_histogram(records, eff["baseline"])
    atomic_write_text(
        f"{out_dir}/difficulty_histogram.csv",
        _csv_text(["word", "difficulty"], [[w, repr(d)] for w, d in hist]),
    )
    write_json(f"{out_dir}/folds.json", {
        "schema_version": SCHEMA_VERSION,
        "folds": folds,
        "seed": {"seed": cfg.seed.seed, "stream_id": cfg.seed.stream_id},
        "assignment": payload["fold_assignment"],
    })
    atomic_write_text(
        f"{out_dir}/targets.csv",
        _csv_text(
            ["word", "p_1", "p_2", "p_3", "p_4", "p_5", "p_6", "p_x"],
            [[r.word, *[repr(float(p)) for p in r.dist]] for r in records],
        ),
    )
    print(f"evaluated {len(records)} words over {folds} folds: "
          f"mean_w1={report.mean_w1:.6g} mse_percent={report.mse_percent:.6g} "
          f"mse_prob={report.mse_prob:.6g} mean_accuracy={report.mean_accuracy:.4f} "
          f"-> {out_dir}")
    return 0


def cmd_project(args, config) -> int:
    eff = _merged(args, config)
    dictionary = load_dictionary(_require(eff, "dict", "--dict"))
    records = load_ground_truth(_require(eff, "truth", "--truth"), dictionary)
    dists = [r.dist for r in records]
    ids = [f"gt:{r.word}" for r in records]
    basis_fit_on = "ground_truth"
    band = None

    if args.word:
        params = _load_params(args.params) if args.params else None
        if params:
            hp = Hyperparams(int(params["k"]), float(params["t"]))
        elif args.k is not None and args.t is not None:
            hp = Hyperparams(args.k, args.t)
        else:
            raise UsageError("--word needs --params or both --k and --t")
        band = replicate_band(
            args.word, dictionary, hp,
            n_replicates=int(eff["replicates"]), n_samples=int(eff["samples"]),
            level=float(eff["level"]), seed=RngSeed(int(eff["seed"])),
            weighting=eff["weighting"], n_threads=int(eff["threads"]),
        )
        dists = dists + [band.replicates[r] for r in range(len(band.replicates))]
        ids = ids + [f"sim:{args.word}:{r}" for r in range(len(band.replicates))]
        basis_fit_on = "pooled:ground_truth+replicates"

    projection = fpca_project(dists, ids=ids)
    out_dir = args.out_dir
    atomic_write_text(
        f"{out_dir}/fpca.csv",
        _csv_text(["id", "x", "y"],
                  [[i, repr(x), repr(y)] for i, x, y in projection.points]),
    )
    if band is not None:
        write_json(f"{out_dir}/band.json", {
            "word": args.word,
            "level": band.level,
            "categories": CATEGORIES,
            "mean": band.mean,
            "lower": band.lower,
            "upper": band.upper,
            "n_replicates": int(eff["replicates"]),
            "n_samples": int(eff["samples"]),
            "projection": {
                "basis": projection.basis,
                "center": projection.center,
                "explained_variance": projection.explained_variance,
                "basis_fit_on": basis_fit_on,
            },
            "meta": _meta(eff),
        })
    print(f"projected {len(ids)} distributions -> {out_dir}/fpca.csv"
          + (f" (+band.json for {args.word})" if band is not None else ""))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cogsim",
        description="Simulate Wordle players, fit cognitive hyperparameters, "
                    "and predict word difficulty.",
    )
    parser.add_argument("--version", action="version", version=f"cogsim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, truth: bool = False) -> None:
        p.add_argument("--config", help="TOML config file; explicit flags win")
        p.add_argument("--dict", help="dictionary CSV (word,frequency)")
        if truth:
            p.add_argument("--truth", help="ground-truth CSV of observed trial distributions")
        p.add_argument("--seed", type=int, help="root RNG seed (default 0)")
        p.add_argument("--weighting", choices=list(WEIGHTINGS),
                       help="guess-weighting strategy (default cap)")
        p.add_argument("--threads", type=int, help="worker thread cap (default 1)")

    p = sub.add_parser("validate", help="load inputs and report what was found")
    common(p, truth=True)
    p.add_argument("--out", help="optional JSON report path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("fit", help="fit (k, t) by coordinate search")
    common(p, truth=True)
    p.add_argument("--k-range", dest="k_range", help="k grid as lo:hi[:step] (default 10:2000:10)")
    p.add_argument("--t-range", dest="t_range", help="t interval as lo:hi (default 0.01:2.0)")
    p.add_argument("--t-grid", dest="t_grid", type=int, help="t grid size (default 50)")
    p.add_argument("--max-iter", dest="max_iter", type=int, help="iteration cap (default 10)")
    p.add_argument("--tol", type=float, help="convergence threshold (default 1e-9)")
    p.add_argument("--samples", type=int, help="samples per word per evaluation (default 1000)")
    p.add_argument("--out", default="params.json", help="output path (default params.json)")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("simulate", help="simulate one word's trial distribution")
    common(p)
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, required=True, help="recall limit")
    p.add_argument("--t", type=float, required=True, help="frequency scale factor")
    p.add_argument("--samples", type=int, help="number of simulated games (default 1000)")
    p.add_argument("--out", default="dist.json", help="output path (default dist.json)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("difficulty", help="predict a word's difficulty vs the baseline word")
    common(p, truth=True)
    p.add_argument("--word", required=True)
    p.add_argument("--params", required=True, help="params.json from `cogsim fit`")
    p.add_argument("--baseline", help='baseline word (default "train")')
    p.add_argument("--baseline-source", choices=["truth", "simulated"], default="truth",
                   help="baseline distribution from ground truth (default) or simulated")
    p.add_argument("--samples", type=int, help="samples for prediction if params.json omits it")
    p.add_argument("--out", help="optional JSON output path (also printed to stdout)")
    p.set_defaults(func=cmd_difficulty)

    p = sub.add_parser("evaluate", help="k-fold evaluation report and difficulty histogram")
    common(p, truth=True)
    p.add_argument("--k-range", dest="k_range")
    p.add_argument("--t-range", dest="t_range")
    p.add_argument("--t-grid", dest="t_grid", type=int)
    p.add_argument("--max-iter", dest="max_iter", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--samples", type=int, help="samples per word per evaluation (default 1000)")
    p.add_argument("--folds", type=int, help="cross-validation folds (default 5)")
    p.add_argument("--baseline", help='baseline word (default "train")')
    p.add_argument("--out-dir", dest="out_dir", default="eval_out",
                   help="output directory (default eval_out)")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("project", help="2-D projection of distributions; optional confidence band")
    common(p, truth=True)
    p.add_argument("--word", help="also simulate replicates of this word and band them")
    p.add_argument("--params", help="params.json giving (k, t) for replicates")
    p.add_argument("--k", type=int, help="recall limit (alternative to --params)")
    p.add_argument("--t", type=float, help="scale factor (alternative to --params)")
    p.add_argument("--replicates", type=int, help="replicate count (default 200)")
    p.add_argument("--samples", type=int, help="samples per replicate (default 1000)")
    p.add_argument("--level", type=float, help="confidence level (default 0.95)")
    p.add_argument("--out-dir", dest="out_dir", default="project_out",
                   help="output directory (default project_out)")
    p.set_defaults(func=cmd_project)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        return args.func(args, config)
    except (UsageError, InfeasibleRange) as exc:
        print(f"cogsim: error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"cogsim: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except CogsimError as exc:
        print(f"cogsim: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
