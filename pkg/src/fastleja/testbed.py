"""Benchmark test functions, evaluation grids, and discrete error norms.

Four functions on [-2, 2] cover the interesting smoothness classes:

    runge      1/(1 + 6.25 x^2)        analytic, the classic interpolation testcase
    heaviside  1 for x > 0, else 0     one jump, Gibbs oscillations
    sawtooth   x - floor(x)            jumps at every integer
    sqrtabs    sqrt(|x|)               continuous, derivative blows up at 0

Errors are measured on a grid of 2n+1 equidistant points (2n strips for n
interpolation nodes, fine enough to see Gibbs oscillations), with L1 and L2
approximated by the trapezoidal rule and Linf by the grid maximum.  Norms
are normalized so the constant function 1 has norm exactly 1.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .nodes import Interval, NodeSequence
from . import newton

__all__ = [
    "TestFunction",
    "TEST_FUNCTIONS",
    "FUNCTION_IDS",
    "ErrorRecord",
    "test_function",
    "evaluation_grid",
    "norms",
    "measure",
]


@dataclass(frozen=True)
class TestFunction:
    """A named scalar function with its smoothness class."""

    id: str
    evaluator: Callable
    smoothness: str  # analytic | discontinuous | holder

    def __call__(self, x):
        return self.evaluator(x)


def _runge(x):
    x = np.asarray(x, dtype=float)
    return 1.0 / (1.0 + 6.25 * x * x)


def _heaviside(x):
    # The jump value itself belongs to the lower branch: f(0) = 0.
    x = np.asarray(x, dtype=float)
    return np.where(x > 0.0, 1.0, 0.0)


def _sawtooth(x):
    x = np.asarray(x, dtype=float)
    return x - np.floor(x)


def _sqrtabs(x):
    x = np.asarray(x, dtype=float)
    return np.sqrt(np.abs(x))


TEST_FUNCTIONS = {
    "runge": TestFunction("runge", _runge, "analytic"),
    "heaviside": TestFunction("heaviside", _heaviside, "discontinuous"),
    "sawtooth": TestFunction("sawtooth", _sawtooth, "discontinuous"),
    "sqrtabs": TestFunction("sqrtabs", _sqrtabs, "holder"),
}

FUNCTION_IDS = tuple(TEST_FUNCTIONS)


def test_function(fid: str, x):
    """Evaluate the named test function at x (scalar or array)."""
    try:
        fn = TEST_FUNCTIONS[fid]
    except KeyError:
        raise ValueError(f"unknown test function {fid!r}; choose from {FUNCTION_IDS}") from None
    y = fn(x)
    return float(y) if np.ndim(y) == 0 else y


def evaluation_grid(interval: Interval, n: int) -> np.ndarray:
    """2n+1 equidistant points from lo to hi inclusive (2n strips)."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"node count must be a positive integer, got {n!r}")
    return np.linspace(interval.lo, interval.hi, 2 * int(n) + 1)


def norms(errors, interval: Interval) -> tuple[float, float, float]:
    """Normalized discrete (L1, L2, Linf) of a sample vector.

    With M samples there are M-1 strips; trapezoid weights are h at interior
    points and h/2 at the ends, divided by the interval length.  Since the
    normalized weights form a probability measure, ||1|| = 1 exactly and
    l1 <= l2 <= linf.  The Linf norm is the plain maximum over the samples.
    """
    e = np.abs(np.asarray(errors, dtype=float))
    if e.ndim != 1 or e.size < 2:
        raise ValueError("norms requires at least 2 samples")
    strips = e.size - 1
    l1 = (e[1:-1].sum() + 0.5 * (e[0] + e[-1])) / strips
    l2 = math.sqrt((np.square(e[1:-1]).sum() + 0.5 * (e[0] ** 2 + e[-1] ** 2)) / strips)
    return float(l1), float(l2), float(e.max())


@dataclass
class ErrorRecord:
    """One row of a convergence study.

    ``residual`` is the largest defect of the interpolation condition at the
    nodes themselves; ``wall_time_s`` covers fitting and evaluation and is
    informational only.  For the deliberately unstable ascending baseline the
    error fields may be inf or nan.
    """

    function: str
    family: str
    n: int
    l1: float
    l2: float
    linf: float
    residual: float
    wall_time_s: float


def measure(fn: TestFunction | str, nodes: NodeSequence) -> ErrorRecord:
    """Fit ``fn`` on ``nodes``, evaluate on the matching grid, return norms.

    The grid is evaluation_grid(nodes.interval, len(nodes)).  Overflow in
    the fit (possible for the naive ascending ordering at high degree) is
    not fatal: the record then carries inf/nan error values.
    """
    if isinstance(fn, str):
        fn = TEST_FUNCTIONS[fn] if fn in TEST_FUNCTIONS else None
        if fn is None:
            raise ValueError(f"unknown test function; choose from {FUNCTION_IDS}")
    n = len(nodes)
    xs = nodes.values
    fvals = np.asarray(fn(xs), dtype=float)
    grid = evaluation_grid(nodes.interval, n)
    fgrid = np.asarray(fn(grid), dtype=float)

    t0 = time.perf_counter()
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        interp = newton.fit(xs, fvals)
        residual = float(np.abs(newton.evaluate_grid(interp, xs) - fvals).max())
        err = newton.evaluate_grid(interp, grid) - fgrid
        l1, l2, linf = norms(err, nodes.interval)
    wall = time.perf_counter() - t0

    return ErrorRecord(fn.id, nodes.family, n, l1, l2, linf, residual, wall)
