"""Plain-text node libraries: precompute Fast Leja points once, reuse forever.

Thanks to the prefix property a single long FL sequence serves every degree
up to its length, and mapping it to another interval is one affine pass.
The file format is line oriented:

    fastleja v1 lo=<decimal> hi=<decimal> n=<count>
    <node 1>
    <node 2>
    ...

Nodes are written with 17 significant digits, which round-trips 64-bit
floats exactly.  Loading a prefix of length k reads only the first k node
lines.
"""

from __future__ import annotations

import re

import numpy as np

from .nodes import (Interval, NodeSequence, STANDARD_INTERVAL, fast_leja,
                    from_standard, to_standard)

__all__ = [
    "LibraryFormatError",
    "write_library",
    "read_library",
    "precompute_library",
    "load_library",
]

_HEADER_RE = re.compile(
    r"^fastleja v1 lo=(?P<lo>\S+) hi=(?P<hi>\S+) n=(?P<n>\d+)\s*$")


class LibraryFormatError(Exception):
    """A node-library file could not be parsed; carries path and line number."""

    def __init__(self, path, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_library(path, interval: Interval, values) -> None:
    """Write node values on ``interval`` in the library format."""
    values = np.asarray(values, dtype=float)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"fastleja v1 lo={_fmt(interval.lo)} hi={_fmt(interval.hi)} "
                 f"n={values.size}\n")
        for v in values:
            fh.write(_fmt(v) + "\n")


def read_library(path, n: int | None = None):
    """Read the header and the first n node lines (all of them if n is None).

    Returns (interval, values, stored_count).  Raises LibraryFormatError on a
    malformed header or node line, OSError if the file cannot be read.
    """
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline()
        m = _HEADER_RE.match(header)
        if not m:
            raise LibraryFormatError(path, 1, f"malformed header: {header.rstrip()!r}")
        try:
            interval = Interval(float(m["lo"]), float(m["hi"]))
        except ValueError as exc:
            raise LibraryFormatError(path, 1, str(exc)) from None
        stored = int(m["n"])
        want = stored if n is None else int(n)
        if want > stored:
            raise ValueError(f"requested {want} nodes but the library stores only {stored}")
        values = np.empty(want)
        for i in range(want):
            line = fh.readline()
            if not line:
                raise LibraryFormatError(path, i + 2, f"file ends after {i} of {stored} node lines")
            try:
                values[i] = float(line)
            except ValueError:
                raise LibraryFormatError(path, i + 2, f"not a decimal literal: {line.rstrip()!r}") from None
    return interval, values, stored


def precompute_library(interval: Interval, count: int, path) -> None:
    """Build fast_leja(interval, count) and store it at ``path``."""
    seq = fast_leja(interval, count)
    write_library(path, interval, seq.values)


def load_library(path, n: int, target: Interval) -> NodeSequence:
    """Load the first n library nodes, mapped affinely onto ``target``.

    When the stored interval equals the target the values pass through
    untouched, and a library on the standard interval is mapped with a
    single affine evaluation, so the round-trip is value exact.
    """
    source, values, _ = read_library(path, n)
    if (source.lo, source.hi) == (target.lo, target.hi):
        mapped = values
    elif (source.lo, source.hi) == (STANDARD_INTERVAL.lo, STANDARD_INTERVAL.hi):
        mapped = from_standard(target, values)
    elif (target.lo, target.hi) == (STANDARD_INTERVAL.lo, STANDARD_INTERVAL.hi):
        mapped = to_standard(source, values)
    else:
        mapped = from_standard(target, to_standard(source, values))
    return NodeSequence(target, "fast-leja", mapped)
