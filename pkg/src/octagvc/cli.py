"""Command line interface: ``octagvc solve|verify|gen|bench``.

Exit codes: 0 = YES / valid OCT, 1 = NO / not an OCT, 2 = usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .compression import CompressionStats, default_workers, minimize_oct, solve_oct
from .graph import is_oct
from .io import Instance, ParseError, read_instance, render_instance
from .oracle import GenSpec, random_graph

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2

BENCH_COLUMNS = ["n", "m", "k", "answer", "time", "assignments_enumerated", "bound"]


@dataclass
class RunReport:
    answer: bool
    witness: list[str] | None
    k: int | None
    elapsed: float
    stats: dict[str, int] = field(default_factory=dict)

    def lines(self, with_stats: bool = False) -> list[str]:
        if self.answer:
            out = [f"YES size={len(self.witness)}", " ".join(self.witness)]
        else:
            out = ["NO"]
        if with_stats:
            out.append(f"c k={self.k}")
            out.extend(f"c {name}={value}" for name, value in self.stats.items())
            out.append(f"c elapsed={self.elapsed:.6f}")
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "answer": "YES" if self.answer else "NO",
                "witness": self.witness,
                "k": self.k,
                "elapsed": self.elapsed,
                "stats": self.stats,
            },
            sort_keys=True,
        )


class CliError(Exception):
    pass


def _load(path: str) -> Instance:
    try:
        return read_instance(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def _workers(args) -> int:
    if args.mode != "parallel":
        return 1
    return args.workers if args.workers else default_workers()


def run_solve(inst: Instance, k: int | None, *, minimize=False, workers=1, canonical=True) -> RunReport:
    stats = CompressionStats()
    start = time.perf_counter()
    if minimize:
        result = minimize_oct(inst.graph, stats=stats, workers=workers, canonical=canonical)
        k = len(result)
    else:
        result = solve_oct(inst.graph, k, stats=stats, workers=workers, canonical=canonical)
    elapsed = time.perf_counter() - start
    if result is not None and not is_oct(inst.graph, result):
        raise RuntimeError("solver witness failed verification")
    witness = inst.names(result) if result is not None else None
    report = RunReport(result is not None, witness, k, elapsed, stats.snapshot())
    report.stats["max_compress_assignments"] = stats.max_compress_assignments()
    return report


def cmd_solve(args) -> int:
    if not args.minimize and args.k is None:
        raise CliError("either -k or --minimize is required")
    if args.k is not None and args.k < 0:
        raise CliError(f"k must be non-negative, got {args.k}")
    inst = _load(args.instance)
    report = run_solve(
        inst,
        args.k,
        minimize=args.minimize,
        workers=_workers(args),
        canonical=not args.any_answer,
    )
    if args.json:
        print(report.to_json())
    else:
        print("\n".join(report.lines(args.stats)))
    return EXIT_YES if report.answer else EXIT_NO


def cmd_verify(args) -> int:
    inst = _load(args.instance)
    lookup = inst.lookup()
    chosen = []
    for name in args.vertices:
        if name not in lookup:
            raise CliError(f"unknown vertex {name!r}")
        chosen.append(lookup[name])
    if is_oct(inst.graph, chosen):
        print("OCT")
        return EXIT_YES
    print("NOT-OCT")
    return EXIT_NO


def _genspec(args, **overrides) -> GenSpec:
    params = dict(
        n=args.n,
        edge_probability=Fraction(args.p),
        planted_oct=args.planted,
        seed=args.seed,
        edge_count=args.edges,
    )
    params.update(overrides)
    try:
        return GenSpec(**params)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_gen(args) -> int:
    spec = _genspec(args)
    try:
        g = random_graph(spec)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    comment = (
        f"n={spec.n} p={spec.edge_probability} edges={spec.edge_count} "
        f"planted_oct={spec.planted_oct} seed={spec.seed}"
    )
    sys.stdout.write(render_instance(g, comment=comment))
    return EXIT_YES


def _bench_row(inst: Instance, k: int | None, workers: int) -> dict:
    report = run_solve(inst, k, minimize=k is None, workers=workers)
    k_used = report.k
    return {
        "n": inst.graph.n,
        "m": inst.graph.m,
        "k": k_used,
        "answer": "YES" if report.answer else "NO",
        "time": f"{report.elapsed:.6f}",
        "assignments_enumerated": report.stats["max_compress_assignments"],
        "bound": 3 ** (k_used + 1),
    }


def cmd_bench(args) -> int:
    writer = csv.DictWriter(sys.stdout, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    workers = _workers(args)
    if args.directory is not None:
        root = Path(args.directory)
        if not root.is_dir():
            raise CliError(f"{root} is not a directory")
        for path in sorted(p for p in root.iterdir() if p.is_file() and not p.name.startswith(".")):
            writer.writerow(_bench_row(_load(str(path)), args.k, workers))
        return EXIT_YES
    if args.sweep is None:
        raise CliError("bench needs a directory or --sweep LO:HI")
    try:
        lo, hi = (int(x) for x in args.sweep.split(":"))
    except ValueError:
        raise CliError(f"--sweep expects LO:HI, got {args.sweep!r}") from None
    for k in range(lo, hi + 1):
        spec = _genspec(args, planted_oct=k, seed=args.seed + k)
        g = random_graph(spec)
        inst = Instance(g, tuple(str(v + 1) for v in range(g.n)))
        writer.writerow(_bench_row(inst, k, workers))
    return EXIT_YES


def _add_mode(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--mode",
        choices=["deterministic", "parallel"],
        default="deterministic",
        help="parallel spreads side assignments over worker processes",
    )
    p.add_argument("--workers", type=int, default=None, help="worker count (default $OCTAGVC_WORKERS or CPU count)")
    p.add_argument(
        "--any-answer",
        action="store_true",
        help="in parallel mode, accept the first witness found instead of the sequential one",
    )


def _add_genspec(p: argparse.ArgumentParser, n_default=None) -> None:
    p.add_argument("--n", type=int, required=n_default is None, default=n_default)
    p.add_argument("--p", default="0.5", help="edge probability, decimal or fraction")
    p.add_argument("--edges", type=int, default=None, help="exact edge count instead of --p")
    p.add_argument("--planted", type=int, default=None, help="size of a planted OCT")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="octagvc", description="Exact odd cycle transversal solver")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide whether an OCT of size <= k exists")
    p.add_argument("instance")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--minimize", action="store_true", help="find a minimum OCT")
    p.add_argument("--stats", action="store_true", help="append counters and timing as 'c' lines")
    p.add_argument("--json", action="store_true", help="print the run report as JSON")
    _add_mode(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check whether the given vertices form an OCT")
    p.add_argument("instance")
    p.add_argument("vertices", nargs="*")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a random instance to stdout")
    _add_genspec(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="CSV timings over a directory or a planted sweep")
    p.add_argument("directory", nargs="?")
    p.add_argument("-k", type=int, default=None, help="fixed k (default: minimize)")
    p.add_argument("--sweep", default=None, help="planted sizes LO:HI, solved at k = planted size")
    _add_genspec(p, n_default=30)
    _add_mode(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"octagvc: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"octagvc: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
