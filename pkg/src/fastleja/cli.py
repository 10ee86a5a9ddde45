"""Command line front end: convergence sweeps, node libraries, plot scripts.

    fastleja sweep [--functions ...] [--families ...] [--degrees ...]
                   [--interval LO HI] [--out CSV] [--library PATH]
    fastleja nodes precompute --n N [--interval LO HI] --out PATH
    fastleja nodes show --n N [--family FAMILY] [--interval LO HI] [--library PATH]
    fastleja plot CSV [--out SCRIPT]

Exit codes: 0 success, 1 usage error, 2 I/O or file-format error,
3 numerical invariant violation (duplicate nodes, prefix longer than a
stored library, and similar).
"""

from __future__ import annotations

import argparse
import os
import sys

from .library import LibraryFormatError, load_library, precompute_library
from .nodes import Interval, STANDARD_INTERVAL, from_standard
from .sweep import (DEFAULT_DEGREES, DEFAULT_FAMILIES, SWEEP_FAMILIES,
                    SweepConfig, build_nodes, emit_csv, emit_plot_script,
                    plot_script_text, records_to_csv, run_sweep)
from .testbed import FUNCTION_IDS

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    """Bad command line input detected after argument parsing."""


class _Parser(argparse.ArgumentParser):
    # Usage problems exit 1; argparse's default of 2 is reserved for I/O.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _interval(args) -> Interval:
    lo, hi = args.interval
    try:
        return Interval(lo, hi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_sweep(args) -> None:
    try:
        config = SweepConfig(functions=tuple(args.functions),
                             families=tuple(args.families),
                             degrees=tuple(args.degrees),
                             interval=_interval(args),
                             output_path=args.out)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = run_sweep(config, fl_library_path=args.library)
    if args.out is None:
        sys.stdout.write(records_to_csv(records))
    else:
        emit_csv(records, args.out)


def _cmd_precompute(args) -> None:
    if args.n < 2:
        raise UsageError(f"--n must be at least 2, got {args.n}")
    precompute_library(_interval(args), args.n, args.out)


def _cmd_show(args) -> None:
    if args.n < 2:
        raise UsageError(f"--n must be at least 2, got {args.n}")
    target = _interval(args)
    if args.library is not None:
        seq = load_library(args.library, args.n, target)
        values = seq.values
    else:
        # Same convention as the sweep and the library tooling: nodes are
        # built on the standard interval and mapped affinely.
        std_values = build_nodes(args.family, args.n).values
        values = std_values if target == STANDARD_INTERVAL else from_standard(target, std_values)
    for v in values:
        print(_fmt(v))


def _cmd_plot(args) -> None:
    if args.out is None:
        stem = os.path.splitext(args.csv)[0]
        sys.stdout.write(plot_script_text(args.csv, stem))
    else:
        emit_plot_script(args.csv, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fastleja",
                     description="High-degree Newton interpolation benchmarks "
                                 "on Fast Leja and Chebyshev nodes.")
    sub = parser.add_subparsers(metavar="command", required=True)

    def add_interval(p):
        p.add_argument("--interval", nargs=2, type=float, default=(-2.0, 2.0),
                       metavar=("LO", "HI"), help="interpolation interval (default: -2 2)")

    p_sweep = sub.add_parser("sweep", help="run a convergence study and emit CSV")
    p_sweep.add_argument("--functions", nargs="+", choices=FUNCTION_IDS,
                         default=list(FUNCTION_IDS), metavar="FN",
                         help=f"test functions (default: all of {', '.join(FUNCTION_IDS)})")
    p_sweep.add_argument("--families", nargs="+", choices=SWEEP_FAMILIES,
                         default=list(DEFAULT_FAMILIES), metavar="FAMILY",
                         help=f"node families (default: {' '.join(DEFAULT_FAMILIES)})")
    p_sweep.add_argument("--degrees", nargs="+", type=int,
                         default=list(DEFAULT_DEGREES), metavar="N",
                         help="strictly increasing node counts (default: 8 16 ... 16384)")
    add_interval(p_sweep)
    p_sweep.add_argument("--out", metavar="PATH",
                         help="CSV output path (default: standard output)")
    p_sweep.add_argument("--library", metavar="PATH",
                         help="read fast-leja nodes from this precomputed library")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_nodes = sub.add_parser("nodes", help="precompute or display node sequences")
    nsub = p_nodes.add_subparsers(metavar="subcommand", required=True)

    p_pre = nsub.add_parser("precompute", help="build a fast-leja node library file")
    p_pre.add_argument("--n", type=int, required=True, metavar="N",
                       help="number of nodes to precompute")
    add_interval(p_pre)
    p_pre.add_argument("--out", required=True, metavar="PATH", help="library file to write")
    p_pre.set_defaults(func=_cmd_precompute)

    p_show = nsub.add_parser("show", help="print a node sequence, one node per line")
    p_show.add_argument("--n", type=int, required=True, metavar="N", help="number of nodes")
    p_show.add_argument("--family", choices=SWEEP_FAMILIES, default="fast-leja",
                        help="node family (default: fast-leja)")
    add_interval(p_show)
    p_show.add_argument("--library", metavar="PATH",
                        help="load the prefix from this library instead of computing")
    p_show.set_defaults(func=_cmd_show)

    p_plot = sub.add_parser("plot", help="emit a gnuplot script for a sweep CSV")
    p_plot.add_argument("csv", help="CSV file produced by the sweep command")
    p_plot.add_argument("--out", metavar="PATH",
                        help="script output path (default: standard output)")
    p_plot.set_defaults(func=_cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"fastleja: error: {exc}", file=sys.stderr)
        return 1
    except LibraryFormatError as exc:
        print(f"fastleja: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"fastleja: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"fastleja: error: {exc}", file=sys.stderr)
        return 3
    return 0
