"""Convergence sweeps over node families and degrees, with CSV and plots.

A sweep interpolates each selected test function on each node family at a
rising schedule of degrees and records the normalized L1/L2/Linf errors,
the interpolation residual, and the wall time per record.  Nodes are always
constructed on the standard interval [-2, 2]; a different target interval
is handled by composing the test function with the affine map, which is
equivalent and keeps the Newton arithmetic well scaled.

The CSV layout is fixed: header

    function,family,n,l1,l2,linf,residual,wall_time_s

then one row per record, sorted by (function, family, n), floats printed
with 17 significant digits (non-finite values as inf/-inf/nan), trailing
newline, UTF-8.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field

import numpy as np

from .library import load_library
from .nodes import (CandidatePool, Interval, NodeSequence, STANDARD_INTERVAL,
                    chebyshev_roots, from_standard, leja_order)
from .testbed import FUNCTION_IDS, TEST_FUNCTIONS, ErrorRecord, TestFunction, measure

__all__ = [
    "SWEEP_FAMILIES",
    "DEFAULT_DEGREES",
    "DEFAULT_FAMILIES",
    "SweepConfig",
    "build_nodes",
    "run_sweep",
    "records_to_csv",
    "emit_csv",
    "emit_plot_script",
]

SWEEP_FAMILIES = ("chebyshev-ascending", "chebyshev-leja", "fast-leja")
DEFAULT_FAMILIES = ("chebyshev-leja", "fast-leja")
#: Degrees 2^3 .. 2^14: far beyond textbook examples, still desk scale.
DEFAULT_DEGREES = tuple(2 ** k for k in range(3, 15))

CSV_HEADER = "function,family,n,l1,l2,linf,residual,wall_time_s"


@dataclass(frozen=True)
class SweepConfig:
    """What to run: functions x families x degrees on one interval."""

    functions: tuple = FUNCTION_IDS
    families: tuple = DEFAULT_FAMILIES
    degrees: tuple = DEFAULT_DEGREES
    interval: Interval = STANDARD_INTERVAL
    output_path: str | None = None

    def __post_init__(self):
        functions = tuple(self.functions)
        families = tuple(self.families)
        degrees = tuple(int(n) for n in self.degrees)
        for fid in functions:
            if fid not in TEST_FUNCTIONS:
                raise ValueError(f"unknown test function {fid!r}; choose from {FUNCTION_IDS}")
        for fam in families:
            if fam not in SWEEP_FAMILIES:
                raise ValueError(f"unknown node family {fam!r}; choose from {SWEEP_FAMILIES}")
        if not functions or not families or not degrees:
            raise ValueError("functions, families and degrees must be nonempty")
        if any(n < 2 for n in degrees):
            raise ValueError("every degree must be at least 2")
        if any(b <= a for a, b in zip(degrees, degrees[1:])):
            raise ValueError("degrees must be strictly increasing")
        object.__setattr__(self, "functions", functions)
        object.__setattr__(self, "families", families)
        object.__setattr__(self, "degrees", degrees)


def build_nodes(family: str, n: int, pool: CandidatePool | None = None) -> NodeSequence:
    """Construct n nodes of the given family on the standard interval.

    chebyshev-leja runs the Leja ordering on the Chebyshev roots;
    chebyshev-ascending sorts them increasingly (the known-unstable
    baseline); fast-leja takes a prefix of ``pool``, extending it on
    demand, or builds a fresh pool when none is supplied.
    """
    std = STANDARD_INTERVAL
    if family == "fast-leja":
        if pool is None:
            pool = CandidatePool(std)
        if len(pool) < n:
            pool.extend(n - len(pool))
        return pool.prefix(n)
    roots = chebyshev_roots(n, std.hi)
    if family == "chebyshev-leja":
        return leja_order(roots.values, interval=std)
    if family == "chebyshev-ascending":
        return NodeSequence(std, "chebyshev-ascending", np.sort(roots.values))
    raise ValueError(f"unknown node family {family!r}; choose from {SWEEP_FAMILIES}")


def run_sweep(config: SweepConfig, fl_library_path: str | None = None) -> list[ErrorRecord]:
    """Run the configured study and return one ErrorRecord per combination.

    Records are produced in the deterministic order functions > families >
    degrees as given in the config.  One Fast Leja pool is extended to the
    largest degree and shared across all degrees via the prefix property
    (or, when ``fl_library_path`` is given, FL prefixes are read from that
    precomputed library instead).
    """
    n_max = max(config.degrees)
    node_cache: dict[tuple[str, int], NodeSequence] = {}
    pool = None
    for family in config.families:
        if family == "fast-leja" and fl_library_path is not None:
            for n in config.degrees:
                node_cache[(family, n)] = load_library(fl_library_path, n, STANDARD_INTERVAL)
            continue
        if family == "fast-leja" and pool is None:
            pool = CandidatePool(STANDARD_INTERVAL)
            pool.extend(n_max - 2)
        for n in config.degrees:
            node_cache[(family, n)] = build_nodes(family, n, pool=pool)

    records = []
    for fid in config.functions:
        fn = TEST_FUNCTIONS[fid]
        if (config.interval.lo, config.interval.hi) == (STANDARD_INTERVAL.lo,
                                                        STANDARD_INTERVAL.hi):
            gn = fn
        else:
            # Interpolate f on the target interval by pulling it back to
            # standard coordinates; normalized norms are unchanged.
            gn = TestFunction(
                fn.id,
                lambda u, _f=fn.evaluator, _iv=config.interval: _f(from_standard(_iv, u)),
                fn.smoothness)
        for family in config.families:
            for n in config.degrees:
                records.append(measure(gn, node_cache[(family, n)]))
    return records


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def records_to_csv(records) -> str:
    """Render records as the canonical CSV text (sorted, 17 digits)."""
    rows = sorted(records, key=lambda r: (r.function, r.family, r.n))
    out = io.StringIO()
    out.write(CSV_HEADER + "\n")
    for r in rows:
        out.write(f"{r.function},{r.family},{r.n},{_fmt(r.l1)},{_fmt(r.l2)},"
                  f"{_fmt(r.linf)},{_fmt(r.residual)},{_fmt(r.wall_time_s)}\n")
    return out.getvalue()


def emit_csv(records, path) -> None:
    """Write the canonical CSV to ``path``; OSErrors carry the path."""
    text = records_to_csv(records)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# Figure layout: one figure per norm, four panels in reading order.
_PANEL_ORDER = ("runge", "sqrtabs", "heaviside", "sawtooth")
_PANEL_LABELS = {
    "runge": "Runge 1/(1+6.25x^2)",
    "sqrtabs": "sqrt(|x|)",
    "heaviside": "Heaviside",
    "sawtooth": "sawtooth",
}
# CSV columns, 1-based as gnuplot counts them.
_NORM_COLUMNS = (("linf", 6), ("l2", 5), ("l1", 4))


def plot_script_text(csv_path, stem: str) -> str:
    """Gnuplot script text for error-vs-degree figures from a sweep CSV.

    One log-log figure per norm (<stem>_linf.png, <stem>_l2.png,
    <stem>_l1.png), each a 2x2 grid of panels per test function with one
    curve per node family present in the CSV.
    """
    with open(csv_path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        present: dict[str, list[str]] = {}
        for row in reader:
            fams = present.setdefault(row["function"], [])
            if row["family"] not in fams:
                fams.append(row["family"])

    lines = [
        "# Error-vs-degree figures for a fastleja sweep; run with: gnuplot <script>",
        f"csv = '{csv_path}'",
        "set datafile separator ','",
        "set terminal pngcairo size 1200,900",
        "set logscale xy",
        "set xlabel 'number of nodes n'",
        "set key bottom left",
        "set style data linespoints",
    ]
    for norm, col in _NORM_COLUMNS:
        lines.append("")
        lines.append(f"set output '{stem}_{norm}.png'")
        lines.append(f"set multiplot layout 2,2 title 'normalized {norm} error'")
        for fid in _PANEL_ORDER:
            fams = present.get(fid, [])
            if not fams:
                lines.append(f"set multiplot next  # no {fid} rows in the csv")
                continue
            lines.append(f"set title '{_PANEL_LABELS[fid]}'")
            plots = ", ".join(
                f"csv using (strcol(1) eq '{fid}' && strcol(2) eq '{fam}' ? $3 : NaN):{col} "
                f"title '{fam}'"
                for fam in fams)
            lines.append("plot " + plots)
        lines.append("unset multiplot")
    lines.append("")
    return "\n".join(lines)


def emit_plot_script(csv_path, out_path) -> None:
    """Write the gnuplot script for ``csv_path`` to ``out_path``."""
    stem = os.path.splitext(os.fspath(out_path))[0]
    text = plot_script_text(csv_path, stem)
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(text)
