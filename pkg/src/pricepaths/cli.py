"""Command-line interface: fit, simulate, and evaluate subcommands.

Every output file embeds the seed, binning, and tool version needed to
reproduce it byte for byte. When no seed is given one is drawn from the
OS entropy source and recorded in the outputs.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from pathlib import Path

from ._version import __version__
from .birth_death import sample_daily, simulate_birth_death
from .errors import ParseError, PricePathsError
from .evaluation import BINNING_POLICIES, ENTROPY_SOURCES, evaluate
from .fitting import fit_birth_death, fit_normal, models_from_dict, models_to_dict
from .market_data import DEFAULT_PRICE_COLUMN, differences, load_price_csv
from .random_walk import simulate_normal_ensemble
from .streams import BD_SEED_OFFSET, NORMAL_SEED_OFFSET, SeededStream, derived_seed


def _fmt(value: float) -> str:
    return repr(float(value))


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    config_path = Path(path)
    if not config_path.exists():
        raise ParseError(f"config file not found: {config_path}")
    with config_path.open(encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"could not parse config {config_path}: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"config {config_path} must hold a JSON object")
    return doc


def _extract_config(argv: list[str]) -> dict:
    scanner = argparse.ArgumentParser(add_help=False)
    scanner.add_argument("--config")
    known, _ = scanner.parse_known_args(argv)
    return _load_config(known.config)


def _build_parser(config: dict) -> argparse.ArgumentParser:
    def d(key, fallback):
        return config.get(key, fallback)

    parser = argparse.ArgumentParser(
        prog="pricepaths",
        description="Fit, simulate, and score two stochastic models of daily prices.",
    )
    parser.add_argument("--version", action="version", version=f"pricepaths {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="JSON file of default option values; flags override it")
        p.add_argument(
            "--out-dir", default=d("out_dir", "."), help="directory for output files"
        )
        p.add_argument(
            "--column",
            default=d("column", DEFAULT_PRICE_COLUMN),
            help="name of the price column in the input CSV",
        )

    fit = sub.add_parser("fit", help="fit both models from a price CSV")
    add_common(fit)
    fit.add_argument("--input", default=d("input", None), required="input" not in config,
                     help="price CSV with a header row, in chronological order")

    sim = sub.add_parser("simulate", help="simulate seeded trajectory ensembles")
    add_common(sim)
    sim.add_argument("--input", default=d("input", None),
                     help="price CSV used to fit models and derive p0/horizon")
    sim.add_argument("--models", default=d("models", None),
                     help="models JSON written by `fit` (alternative to --input)")
    sim.add_argument("--model", choices=("normal", "bd", "both"),
                     default=d("model", "both"), help="which model to simulate")
    sim.add_argument("--p0", type=float, default=d("p0", None),
                     help="starting price (default: first price of --input)")
    sim.add_argument("--horizon", type=int, default=d("horizon", None),
                     help="trading days to simulate (default: rows of --input minus 1)")
    sim.add_argument("--replicates", type=int, default=d("replicates", 100))
    sim.add_argument("--seed", type=int, default=d("seed", None))
    sim.add_argument("--events", action="store_true", default=d("events", False),
                     help="also write the event-level CSV for the birth-death model")

    ev = sub.add_parser("evaluate", help="entropy/MI comparison of models vs actual data")
    add_common(ev)
    ev.add_argument("--input", default=d("input", None), required="input" not in config,
                    help="actual price CSV the models are scored against")
    ev.add_argument("--models", default=d("models", None),
                    help="models JSON (default: fit from --input)")
    ev.add_argument("--replicates", type=int, default=d("replicates", 100))
    ev.add_argument("--bins", type=int, default=d("bins", 10))
    ev.add_argument("--seed", type=int, default=d("seed", None))
    ev.add_argument("--entropy-on", choices=ENTROPY_SOURCES,
                    default=d("entropy_on", "prices"),
                    help="compute the entropy column over price levels or daily moves")
    ev.add_argument("--binning", choices=BINNING_POLICIES,
                    default=d("binning", "shared"),
                    help="score simulated rows on the actual-data bins (shared) or on "
                         "each trajectory's own range (per-series)")
    ev.add_argument("--shuffles", type=int, default=d("shuffles", 1000),
                    help="permutations for the MI bias floor (0 skips it)")
    return parser


def _resolve_seed(seed: int | None) -> int:
    if seed is None:
        seed = secrets.randbits(64)
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def _load_input_series(args):
    if args.input is None:
        return None
    path = Path(args.input)
    if not path.exists():
        raise ParseError(f"input file not found: {path}")
    return load_price_csv(path, column=args.column)


def _obtain_models(args, series):
    if args.models is not None:
        models_path = Path(args.models)
        if not models_path.exists():
            raise ParseError(f"models file not found: {models_path}")
        with models_path.open(encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"could not parse models JSON {models_path}: {exc}") from None
        return models_from_dict(doc)
    if series is None:
        raise ParseError("need --models or --input to obtain model parameters")
    moves = differences(series)
    return fit_normal(moves), fit_birth_death(moves)


def _out_dir(args) -> Path:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_trajectories(path: Path, trajectories, meta: str) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write(f"# {meta}\n")
        fh.write("replicate,day,price\n")
        for k, traj in enumerate(trajectories):
            for day, price in enumerate(traj.prices):
                fh.write(f"{k},{day},{_fmt(price)}\n")


def _write_events(path: Path, event_trajectories, meta: str) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write(f"# {meta}\n")
        fh.write("replicate,event_time,price\n")
        for k, traj in enumerate(event_trajectories):
            for t, price in zip(traj.event_times, traj.event_prices):
                fh.write(f"{k},{_fmt(t)},{_fmt(price)}\n")


def cmd_fit(args) -> int:
    series = _load_input_series(args)
    if series is None:
        raise ParseError("fit requires --input")
    moves = differences(series)
    normal = fit_normal(moves)
    birth_death = fit_birth_death(moves)
    doc = {
        "version": __version__,
        "input": str(args.input),
        "column": args.column,
        "n_prices": len(series),
        **models_to_dict(normal, birth_death),
    }
    out = _out_dir(args) / "models.json"
    out.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    print(f"fitted {len(series)} prices ({len(moves)} moves) from {args.input}")
    print(f"model 1 (normal moves):  mu={normal.mean:.4f}  sigma={normal.std:.4f}")
    print(
        f"model 2 (birth-death):   lambda={birth_death.birth_rate:.4f}"
        f"  mu={birth_death.death_rate:.4f}"
        f"  mean_increment={birth_death.mean_increment:.4f}"
        f"  mean_decrement={birth_death.mean_decrement:.4f}"
    )
    print(f"wrote {out}")
    return 0


def cmd_simulate(args) -> int:
    series = _load_input_series(args)
    normal, birth_death = _obtain_models(args, series)
    p0 = args.p0 if args.p0 is not None else (None if series is None else float(series.prices[0]))
    horizon = args.horizon if args.horizon is not None else (
        None if series is None else len(series) - 1
    )
    if p0 is None or horizon is None:
        raise ParseError("need --p0 and --horizon when no --input CSV is given")
    if args.replicates < 1:
        raise ValueError(f"need at least 1 replicate, got {args.replicates}")
    seed = _resolve_seed(args.seed)
    out = _out_dir(args)
    print(f"seed: {seed}")

    wanted = ("normal", "bd") if args.model == "both" else (args.model,)
    for tag in wanted:
        if tag == "normal":
            stream_seed = derived_seed(seed, NORMAL_SEED_OFFSET)
            trajectories = simulate_normal_ensemble(
                normal, p0, horizon, args.replicates, stream_seed
            )
            meta = (
                f"pricepaths v{__version__} model=normal seed={seed}"
                f" replicates={args.replicates} horizon={horizon} p0={_fmt(p0)}"
                f" mu={_fmt(normal.mean)} sigma={_fmt(normal.std)}"
            )
            path = out / "trajectories_normal.csv"
            _write_trajectories(path, trajectories, meta)
            print(f"wrote {path}")
        else:
            stream_seed = derived_seed(seed, BD_SEED_OFFSET)
            event_trajectories = [
                simulate_birth_death(birth_death, p0, horizon, SeededStream(stream_seed, k))
                for k in range(args.replicates)
            ]
            daily = [sample_daily(t) for t in event_trajectories]
            meta = (
                f"pricepaths v{__version__} model=bd seed={seed}"
                f" replicates={args.replicates} horizon={horizon} p0={_fmt(p0)}"
                f" lambda={_fmt(birth_death.birth_rate)} mu={_fmt(birth_death.death_rate)}"
                f" mean_increment={_fmt(birth_death.mean_increment)}"
                f" mean_decrement={_fmt(birth_death.mean_decrement)}"
            )
            path = out / "trajectories_bd.csv"
            _write_trajectories(path, daily, meta)
            print(f"wrote {path}")
            if args.events:
                events_path = out / "events_bd.csv"
                _write_events(events_path, event_trajectories, meta)
                print(f"wrote {events_path}")
    return 0


def cmd_evaluate(args) -> int:
    series = _load_input_series(args)
    if series is None:
        raise ParseError("evaluate requires --input")
    normal, birth_death = _obtain_models(args, series)
    seed = _resolve_seed(args.seed)
    print(f"seed: {seed}")
    report = evaluate(
        series,
        normal,
        birth_death,
        base_seed=seed,
        n_replicates=args.replicates,
        bin_count=args.bins,
        entropy_on=args.entropy_on,
        binning=args.binning,
        n_shuffles=args.shuffles,
    )
    out = _out_dir(args)

    report_path = out / "report.json"
    doc = {"version": __version__, "input": str(args.input), "column": args.column}
    doc.update(report.to_dict())
    report_path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")

    table_path = out / "table1.csv"
    meta = (
        f"pricepaths v{__version__} seed={seed} replicates={args.replicates}"
        f" bins={args.bins} entropy_on={args.entropy_on} binning={args.binning}"
        f" shuffles={args.shuffles}"
    )
    with table_path.open("w", encoding="utf-8", newline="") as fh:
        fh.write(f"# {meta}\n")
        fh.write("source,entropy_bits,mi_lag1_bits,n_replicates\n")
        for row in report.rows:
            fh.write(
                f"{row.source},{_fmt(row.entropy_bits)},{_fmt(row.mi_lag1_bits)},"
                f"{row.n_replicates}\n"
            )

    print(f"{'source':<10} {'entropy_bits':>13} {'mi_lag1_bits':>13} {'replicates':>11}")
    for row in report.rows:
        print(
            f"{row.source:<10} {row.entropy_bits:>13.4f} {row.mi_lag1_bits:>13.4f}"
            f" {row.n_replicates:>11}"
        )
    cross = report.cross_move_mi_bits
    floor = report.shuffle_floor_bits
    floor_text = "skipped" if floor is None else f"{floor:.4f}"
    print(
        f"cross-move MI: model1={cross['model1_vs_actual_moves']:.4f}"
        f"  model2={cross['model2_vs_actual_moves']:.4f}"
        f"  shuffle-floor(p99)={floor_text}"
    )
    print(f"wrote {report_path}")
    print(f"wrote {table_path}")
    return 0


_COMMANDS = {"fit": cmd_fit, "simulate": cmd_simulate, "evaluate": cmd_evaluate}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        config = _extract_config(argv)
        parser = _build_parser(config)
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (PricePathsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
