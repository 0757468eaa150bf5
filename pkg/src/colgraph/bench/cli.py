"""Command line: ``colgraph bench|generate|estimate``.

Exit codes: 0 success, 2 bad parameters, 3 checksum mismatch.
"""

from __future__ import annotations

import argparse
import inspect
import sys

from .. import generators as gen
from ..core.memory import estimate_memory
from ..errors import GraphError
from ..io import GraphFormatError, load, save
from .experiments import EXPERIMENTS, compare_backends, run_experiment
from .harness import BenchParams, ChecksumMismatch, ParameterError

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_CHECKSUM = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARAMS)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="colgraph", description="Column-store graph library: benchmarks and tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bench", help="run one benchmark experiment")
    b.add_argument("experiment", choices=sorted(EXPERIMENTS))
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int)
    b.add_argument("--p", type=float)
    b.add_argument("--m", type=int)
    b.add_argument("--seed", type=int, required=True)
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--warmups", type=int, default=3, help="warm-up runs at 1/10 scale (default 3)")
    b.add_argument("--engine", choices=("iterator", "kernel"), default="iterator", help="dfs/bfs traversal engine")
    b.add_argument("--out", help="append the report to this CSV file")
    b.add_argument("--compare-naive", action="store_true", help="also run the object-per-vertex backend")
    b.add_argument("--rss", action="store_true", help="report observed peak RSS (informational)")

    g = sub.add_parser("generate", help="write a generated graph to a file")
    g.add_argument("family", choices=sorted(gen.FAMILIES))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--weights", nargs=2, type=float, metavar=("LO", "HI"), help="uniform edge weights")
    g.add_argument("--out", required=True)

    e = sub.add_parser("estimate", help="print the modeled memory breakdown of a graph file")
    e.add_argument("--in", dest="path", required=True)
    return p


def _generate(args):
    fn = gen.FAMILIES[args.family]
    accepted = inspect.signature(fn).parameters
    values = {"n": args.n, "m": args.m, "k": args.k, "p": args.p, "seed": args.seed}
    if args.weights is not None:
        values["weights"] = tuple(args.weights)
    kwargs = {}
    for name, value in values.items():
        if value is None:
            continue
        if name not in accepted:
            if name == "seed":
                continue
            raise ParameterError(f"family {args.family} does not take --{name}")
        kwargs[name] = value
    missing = [
        name
        for name, prm in accepted.items()
        if prm.default is inspect.Parameter.empty and name not in kwargs
    ]
    if missing:
        raise ParameterError(f"family {args.family} needs --{missing[0]}")
    g = fn(**kwargs)
    save(g, args.out)
    print(f"wrote {args.family} n={g.num_vertices} m={g.num_edges} to {args.out}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "bench":
            params = BenchParams(
                n=args.n, m=args.m, k=args.k, p=args.p, seed=args.seed, reps=args.reps, warmups=args.warmups,
                engine=args.engine,
            )
            if params.warmups < 0:
                raise ParameterError("warmups must be non-negative")
            if args.compare_naive:
                ours, ref, ratio = compare_backends(args.experiment, params, args.out, rss=args.rss)
                print(ours.format())
                print(ref.format())
                print(f"checksums equal; naive/column-store time ratio {ratio:.2f}")
            else:
                print(run_experiment(args.experiment, params, args.out, rss=args.rss).format())
        elif args.command == "generate":
            _generate(args)
        else:
            g = load(args.path)
            print(estimate_memory(g).format())
    except ChecksumMismatch as exc:
        print(f"checksum mismatch: {exc}", file=sys.stderr)
        return EXIT_CHECKSUM
    except GraphFormatError as exc:
        for d in exc.diagnostics:
            print(f"{getattr(args, 'path', '')}:{d}", file=sys.stderr)
        return EXIT_PARAMS
    except (ParameterError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
