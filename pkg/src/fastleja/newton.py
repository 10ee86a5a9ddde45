"""Newton-form interpolation: triangular-solve fitting and Horner evaluation.

The interpolant through (x_1, y_1), ..., (x_n, y_n) is represented as

    N(x) = a_1 + a_2 (x - x_1) + ... + a_n (x - x_1) ... (x - x_{n-1}),

so the interpolation conditions form a lower-triangular system that forward
substitution solves in O(n^2) with O(n) memory.  Appending a node costs one
O(n) pass and leaves all earlier coefficients untouched, which is what makes
node sequences with the prefix property attractive at high degree.

All arithmetic is 64-bit floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["NewtonInterpolant", "fit", "append_node", "evaluate", "evaluate_grid"]


@dataclass(frozen=True)
class NewtonInterpolant:
    """Nodes x_1..x_n (in interpolation order) and coefficients a_1..a_n."""

    nodes: np.ndarray = field(repr=False)
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        coeffs = np.asarray(self.coeffs, dtype=float)
        if nodes.ndim != 1 or coeffs.ndim != 1 or nodes.size != coeffs.size:
            raise ValueError("nodes and coeffs must be 1-d and of equal length")
        if nodes.size == 0:
            raise ValueError("an interpolant needs at least one node")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "coeffs", coeffs)
        nodes.flags.writeable = False
        coeffs.flags.writeable = False

    def __len__(self) -> int:
        return self.nodes.size

    def __call__(self, x):
        xs = np.asarray(x, dtype=float)
        if xs.ndim == 0:
            return evaluate(self, float(xs))
        return evaluate_grid(self, xs)


def _check_distinct(nodes: np.ndarray) -> None:
    if np.unique(nodes).size != nodes.size:
        raise ValueError("interpolation nodes must be pairwise distinct")


def fit(nodes, values) -> NewtonInterpolant:
    """Solve the lower-triangular Newton system by forward substitution.

    Sweeping j = 1..n, a_j = (y_j - sum_{i<j} a_i n_i(x_j)) / n_j(x_j) with
    the basis values n_i(x_j) accumulated as running products.  Vectorized
    over rows: after processing column k, r_j holds the residual
    y_j - sum_{i<=k} a_i n_i(x_j) and p_j holds n_{k+1}(x_j).

    The update order (subtract, then advance the product) is chosen so that
    repeated append_node reproduces these coefficients bit for bit; keep the
    two in lockstep when changing either.
    """
    x = np.array(nodes, dtype=float)
    y = np.array(values, dtype=float)
    if x.ndim != 1 or y.ndim != 1:
        raise ValueError("nodes and values must be 1-d sequences")
    if x.size != y.size:
        raise ValueError(f"length mismatch: {x.size} nodes vs {y.size} values")
    if x.size == 0:
        raise ValueError("fit requires at least one data point")
    _check_distinct(x)

    n = x.size
    a = np.empty(n)
    r = y.copy()
    p = np.ones(n)
    for k in range(n):
        a[k] = r[k] / p[k]
        if k + 1 < n:
            r[k + 1:] -= a[k] * p[k + 1:]
            p[k + 1:] *= x[k + 1:] - x[k]
    return NewtonInterpolant(x, a)


def append_node(p: NewtonInterpolant, x_new: float, y_new: float) -> NewtonInterpolant:
    """Extend an interpolant by one node without touching existing coefficients.

    The new coefficient is (y_new - N(x_new)) / prod_i (x_new - x_i), with
    the partial sums and the node product accumulated together in a single
    O(n) pass (the same operation order as :func:`fit`).
    """
    x_new = float(x_new)
    if np.any(p.nodes == x_new):
        raise ValueError(f"node {x_new!r} is already an interpolation node")
    r = float(y_new)
    prod = 1.0
    for k in range(len(p)):
        r -= p.coeffs[k] * prod
        prod *= x_new - p.nodes[k]
    return NewtonInterpolant(np.append(p.nodes, x_new),
                             np.append(p.coeffs, r / prod))


def evaluate(p: NewtonInterpolant, x: float) -> float:
    """Horner evaluation of the Newton form at a scalar point: start from
    a_n and fold in one node per step, n-1 multiply-adds in total."""
    nodes = p.nodes
    coeffs = p.coeffs
    r = coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        r = r * (x - nodes[k]) + coeffs[k]
    return float(r)


def evaluate_grid(p: NewtonInterpolant, xs) -> np.ndarray:
    """Horner evaluation over a vector of points.

    Element-for-element identical to calling :func:`evaluate` per point
    (the vector ops run the same IEEE operation sequence).
    """
    xs = np.asarray(xs, dtype=float)
    nodes = p.nodes
    coeffs = p.coeffs
    r = np.full(xs.shape, coeffs[-1])
    for k in range(len(coeffs) - 2, -1, -1):
        r = r * (xs - nodes[k]) + coeffs[k]
    return r
