"""Command-line driver.

    probident run   --data FILE --target-col NAME [options]
    probident synth --kind KIND --n N --seed S --out FILE

`run` loads a CSV, evolves network specifications against it and prints a
JSON report whose verdict labels the dataset as a classification or a
regression problem. Exit codes: 0 conclusive verdict, 2 inconclusive,
3 data error, 4 argument error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import asdict

from probident import __version__
from probident.config import GaParams, NnParams
from probident.data import DataError, load_csv, split
from probident.evolution import run_ga
from probident.fitness import Verdict, decide
from probident.synth import gen_synth

EXIT_OK = 0
EXIT_INCONCLUSIVE = 2
EXIT_DATA_ERROR = 3
EXIT_USAGE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route argparse failures to exit code 4
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="probident", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"probident {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="identify the problem type of a CSV dataset")
    run.add_argument("--data", required=True, help="CSV file with a header row")
    run.add_argument("--target-col", required=True, help="name (or index) of the target column")
    run.add_argument("--image-shape", default=None, metavar="H,W,C",
                     help="treat the feature columns as images of this shape")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--jobs", type=int, default=1, help="parallel fitness evaluators")
    run.add_argument("--out", default=None, help="also write the JSON report here")
    run.add_argument("--population", type=int, default=GaParams.population_size)
    run.add_argument("--generations", type=int, default=GaParams.generations)
    run.add_argument("--tournament", type=int, default=GaParams.tournament_size)
    run.add_argument("--crossover-rate", type=float, default=GaParams.crossover_rate,
                     help="mutation rate is the complement")
    run.add_argument("--epochs", type=int, default=NnParams.epochs)
    run.add_argument("--lr", type=float, default=NnParams.learning_rate)
    run.add_argument("--batch-size", type=int, default=NnParams.batch_size)
    run.add_argument("-v", "--verbose", action="store_true",
                     help="print per-generation progress to stderr")

    synth = sub.add_parser("synth", help="write a synthetic CSV dataset")
    synth.add_argument("--kind", required=True,
                       help="blobs-K, linreg, or digits8x8")
    synth.add_argument("--n", type=int, required=True)
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("--out", required=True)
    return parser


def parse_image_shape(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"--image-shape must be H,W,C, got {text!r}")
    try:
        h, w, c = (int(p) for p in parts)
    except ValueError:
        raise UsageError(f"--image-shape must be three integers, got {text!r}") from None
    if min(h, w, c) < 1:
        raise UsageError("--image-shape dimensions must be positive")
    return h, w, c


def build_report(verdict: Verdict, best_fitness: float, history: list[dict],
                 dataset, ga: GaParams, nn: NnParams, args: argparse.Namespace,
                 image_shape: tuple[int, int, int] | None,
                 duration: float) -> dict:
    conclusive = verdict.label != "inconclusive"
    chromosome = verdict.chromosome if conclusive else None
    return {
        "verdict": {
            "label": verdict.label,
            "loss": chromosome.loss if chromosome else None,
            "units": chromosome.units if chromosome else None,
            "activation": chromosome.activation if chromosome else None,
            "configuration": list(chromosome.configuration) if chromosome else None,
            "text": verdict.text,
            "diagnostic": verdict.diagnostic,
        },
        "best_fitness": best_fitness if math.isfinite(best_fitness) else None,
        "generations": history,
        "dataset": {
            "samples": dataset.n_total,
            "features": dataset.n_features,
            "unique_targets": dataset.n_unique,
            "input_kind": dataset.input_kind,
        },
        "params": {"ga": asdict(ga), "nn": asdict(nn)},
        "seed": args.seed,
        "jobs": args.jobs,
        "data_file": args.data,
        "target_column": args.target_col,
        "image_shape": list(image_shape) if image_shape else None,
        "duration_seconds": duration,
    }


def _cmd_run(args: argparse.Namespace) -> int:
    image_shape = parse_image_shape(args.image_shape) if args.image_shape else None
    try:
        ga = GaParams(population_size=args.population, generations=args.generations,
                      tournament_size=args.tournament, crossover_rate=args.crossover_rate,
                      mutation_rate=1.0 - args.crossover_rate)
        nn = NnParams(epochs=args.epochs, learning_rate=args.lr, batch_size=args.batch_size)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")

    raw = load_csv(args.data, args.target_col, image_shape)
    dataset = split(raw, args.seed)

    def progress(record: dict) -> None:
        best = record["best_fitness"]
        print(f"generation {record['generation']:>3}: "
              f"finite {record['finite_count']}/{record['cce_count'] + record['mse_count']}, "
              f"best {'-' if best is None else f'{best:.6g}'}", file=sys.stderr)

    start = time.perf_counter()
    best, history = run_ga(dataset, ga, nn, args.seed, jobs=args.jobs,
                           on_generation=progress if args.verbose else None)
    duration = time.perf_counter() - start
    verdict = decide(best)

    report = build_report(verdict, best.fitness, history, dataset, ga, nn,
                          args, image_shape, duration)
    text = json.dumps(report, indent=2, sort_keys=True)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return EXIT_OK if verdict.label != "inconclusive" else EXIT_INCONCLUSIVE


def _cmd_synth(args: argparse.Namespace) -> int:
    try:
        gen_synth(args.kind, args.n, args.seed, args.out)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except OSError as exc:
        raise DataError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {args.kind} dataset with {args.n} samples to {args.out}", file=sys.stderr)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "run":
            return _cmd_run(args)
        return _cmd_synth(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
