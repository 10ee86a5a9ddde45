"""Interpolation node construction: Chebyshev roots, Leja ordering, Fast Leja points.

The ordering of interpolation nodes matters as much as their location once
polynomial degrees get large.  This module provides

* roots of the Chebyshev polynomial on a symmetric interval [-b, b],
* the Leja ordering of an arbitrary finite point set (each point maximizes
  the product of distances to the points already placed),
* Fast Leja (FL) points, a greedy sequence built from midpoint candidates
  that is Leja ordered by construction and has the prefix property: the
  first n points of a longer FL sequence are exactly the n-point sequence,
* affine maps between an arbitrary interval and the standard interval
  [-2, 2] (length four keeps Newton basis products of order one).

All distance products are accumulated as sums of natural logs, which never
overflow and preserve the argmax because log is strictly increasing.  Ties
are broken toward the larger coordinate, on exact float comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Interval",
    "STANDARD_INTERVAL",
    "NodeSequence",
    "CandidatePool",
    "FAMILIES",
    "chebyshev_roots",
    "log_multiplicative_distance",
    "leja_order",
    "fast_leja",
    "fast_leja_extend",
    "to_standard",
    "from_standard",
]

#: Recognized node-family tags.  "chebyshev-raw" marks Chebyshev roots in
#: their natural root order (descending); sorting or Leja ordering retags.
FAMILIES = ("chebyshev-raw", "chebyshev-ascending", "chebyshev-leja", "fast-leja")

_LEJA_FAMILIES = ("chebyshev-leja", "fast-leja")


@dataclass(frozen=True)
class Interval:
    """A nondegenerate real interval [lo, hi] with lo < hi."""

    lo: float
    hi: float

    def __post_init__(self):
        lo = float(self.lo)
        hi = float(self.hi)
        if not (np.isfinite(lo) and np.isfinite(hi)):
            raise ValueError(f"interval endpoints must be finite, got [{lo}, {hi}]")
        if not lo < hi:
            raise ValueError(f"interval requires lo < hi, got [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> float:
        return self.hi - self.lo


#: Interpolation happens on [-2, 2]: with logarithmic capacity one, Newton
#: basis products neither explode nor vanish at high degree.
STANDARD_INTERVAL = Interval(-2.0, 2.0)


@dataclass(frozen=True)
class NodeSequence:
    """An ordered set of interpolation nodes on an interval.

    ``family`` records how the sequence was constructed (see FAMILIES).
    Values are stored as a read-only float64 array in interpolation order.
    """

    interval: Interval
    family: str
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown node family {self.family!r}")
        vals = np.array(self.values, dtype=float)
        if vals.ndim != 1 or vals.size == 0:
            raise ValueError("node values must be a nonempty 1-d sequence")
        if np.unique(vals).size != vals.size:
            raise ValueError("node values must be pairwise distinct")
        lo, hi = self.interval.lo, self.interval.hi
        if vals.min() < lo or vals.max() > hi:
            raise ValueError(f"node values fall outside [{lo}, {hi}]")
        if self.family == "chebyshev-leja":
            if abs(vals[0]) != np.abs(vals).max():
                raise ValueError("leja-ordered sequence must start at the point of largest magnitude")
        elif self.family == "fast-leja":
            # FL sequences are seeded with [hi, lo]; on intervals with
            # |lo| > |hi| that seed, not the magnitude rule, is normative.
            if vals[0] != hi or (vals.size > 1 and vals[1] != lo):
                raise ValueError("fast-leja sequence must start with [hi, lo]")
        object.__setattr__(self, "values", vals)
        vals.flags.writeable = False

    def __len__(self) -> int:
        return self.values.size


def to_standard(interval: Interval, x):
    """Map x in [lo, hi] onto the standard interval, u = -2 + 4(x-lo)/(hi-lo).

    Accepts scalars or arrays.  Both endpoints map exactly to -2 and 2.
    """
    x = np.asarray(x, dtype=float)
    u = -2.0 + 4.0 * (x - interval.lo) / (interval.hi - interval.lo)
    return float(u) if u.ndim == 0 else u


def from_standard(interval: Interval, u):
    """Inverse of :func:`to_standard`, evaluated in the convex-combination
    form ((2-u)*lo + (2+u)*hi)/4 so that u = -2 and u = 2 reproduce the
    endpoints exactly."""
    u = np.asarray(u, dtype=float)
    x = ((2.0 - u) * interval.lo + (2.0 + u) * interval.hi) / 4.0
    return float(x) if x.ndim == 0 else x


def chebyshev_roots(m: int, b: float) -> NodeSequence:
    """Roots of the degree-m Chebyshev polynomial on [-b, b].

    t_k = b cos((2k-1) pi / (2m)) for k = 1..m, returned in natural k-order
    (descending coordinate) with family tag "chebyshev-raw".  The negative
    half is mirrored from the positive half so the set is exactly
    antisymmetric; for odd m the middle root is exactly zero.
    """
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise ValueError(f"number of roots must be a positive integer, got {m!r}")
    b = float(b)
    if not np.isfinite(b) or b <= 0.0:
        raise ValueError(f"half-width must be positive, got {b!r}")
    half = m // 2
    k = np.arange(1, half + 1, dtype=float)
    pos = b * np.cos((2.0 * k - 1.0) * np.pi / (2.0 * m))
    vals = np.empty(m)
    vals[:half] = pos
    if m % 2:
        vals[half] = 0.0
    vals[half + m % 2:] = -pos[::-1]
    return NodeSequence(Interval(-b, b), "chebyshev-raw", vals)


def log_multiplicative_distance(point: float, placed) -> float:
    """Natural log of the product of distances from ``point`` to ``placed``.

    Returns sum_k ln|point - x_k|.  If the point coincides with a placed
    node the product is zero and the sentinel -inf is returned, which every
    comparison treats as smaller than any finite value.
    """
    placed = np.asarray(placed, dtype=float)
    if placed.size == 0:
        return 0.0
    d = np.abs(point - placed)
    if np.any(d == 0.0):
        return float("-inf")
    return float(np.log(d).sum())


def _argmax_tiebreak_high(scores: np.ndarray, coords: np.ndarray) -> int:
    """Index of the maximal score; exact ties go to the larger coordinate."""
    mx = scores.max()
    ties = np.flatnonzero(scores == mx)
    if ties.size == 1:
        return int(ties[0])
    return int(ties[np.argmax(coords[ties])])


def leja_order(points, interval: Interval | None = None,
               family: str = "chebyshev-leja") -> NodeSequence:
    """Order a finite point set so each point maximizes the distance product
    to its predecessors.

    The first point maximizes |x|; point j then maximizes
    prod_{k<j} |x - x_k| over the points not yet placed, compared via
    :func:`log_multiplicative_distance`.  Exact ties select the larger
    coordinate.  ``interval`` defaults to the hull of the points (widened
    by one on each side for a single point).
    """
    pts = np.array(list(points), dtype=float)
    if pts.ndim != 1 or pts.size == 0:
        raise ValueError("leja_order requires a nonempty 1-d collection of points")
    if np.unique(pts).size != pts.size:
        raise ValueError("leja_order requires pairwise distinct points")
    if interval is None:
        lo, hi = pts.min(), pts.max()
        interval = Interval(lo, hi) if lo < hi else Interval(lo - 1.0, hi + 1.0)

    m = pts.size
    out = np.empty(m)
    work = pts.copy()
    i = _argmax_tiebreak_high(np.abs(work), work)
    out[0] = work[i]
    work[i] = work[-1]
    work = work[:m - 1]
    # Running log-products to the placed prefix, one added term per step.
    logmd = np.log(np.abs(work - out[0])) if work.size else np.empty(0)
    for j in range(1, m):
        i = _argmax_tiebreak_high(logmd, work)
        out[j] = work[i]
        last = work.size - 1
        work[i] = work[last]
        logmd[i] = logmd[last]
        work = work[:last]
        logmd = logmd[:last]
        if work.size:
            logmd += np.log(np.abs(work - out[j]))
    return NodeSequence(interval, family, out)


class CandidatePool:
    """Working state of the Fast Leja recursion on an interval.

    Holds the selected nodes (in selection order) and the candidate set:
    one midpoint per pair of coordinate-adjacent selected nodes, each with
    its cached log multiplicative distance to all selected nodes.  The
    cache is maintained incrementally, adding ln|c - x_new| to every
    surviving candidate when a node is selected; the two midpoints created
    by a selection are summed from scratch over the selection order.
    """

    def __init__(self, interval: Interval):
        self.interval = interval
        cap = 64
        self._nodes = np.empty(cap)
        self._cpos = np.empty(cap)
        self._clog = np.empty(cap)
        self._cleft = np.empty(cap, dtype=np.intp)
        self._cright = np.empty(cap, dtype=np.intp)
        # Seed S_2 = [hi, lo]; the sole candidate is the interval midpoint.
        self._nodes[0] = interval.hi
        self._nodes[1] = interval.lo
        self._n = 2
        mid = (interval.lo + interval.hi) / 2.0
        self._cpos[0] = mid
        self._clog[0] = float(np.log(np.abs(mid - self._nodes[:2])).sum())
        self._cleft[0] = 1
        self._cright[0] = 0
        self._m = 1

    def __len__(self) -> int:
        return self._n

    @property
    def node_values(self) -> np.ndarray:
        """Selected nodes in selection order (copy)."""
        return self._nodes[:self._n].copy()

    @property
    def candidate_positions(self) -> np.ndarray:
        return self._cpos[:self._m].copy()

    @property
    def candidate_log_mdists(self) -> np.ndarray:
        return self._clog[:self._m].copy()

    @property
    def selected(self) -> NodeSequence:
        return self.prefix(self._n)

    def prefix(self, n: int) -> NodeSequence:
        """The first n selected nodes as a fast-leja NodeSequence."""
        if not isinstance(n, (int, np.integer)) or n < 2:
            raise ValueError(f"a fast-leja sequence has at least 2 nodes, got {n!r}")
        if n > self._n:
            raise ValueError(f"only {self._n} nodes selected, cannot take prefix of {n}")
        return NodeSequence(self.interval, "fast-leja", self._nodes[:n])

    def _grow(self):
        cap = 2 * self._nodes.size
        for name in ("_nodes", "_cpos", "_clog", "_cleft", "_cright"):
            old = getattr(self, name)
            new = np.empty(cap, dtype=old.dtype)
            new[:old.size] = old
            setattr(self, name, new)

    def extend(self, extra: int) -> None:
        """Select ``extra`` further nodes, mutating the pool in place."""
        if not isinstance(extra, (int, np.integer)) or extra < 0:
            raise ValueError(f"extra must be a nonnegative integer, got {extra!r}")
        for _ in range(int(extra)):
            if self._n + 1 > self._nodes.size or self._m + 1 > self._cpos.size:
                self._grow()
            m = self._m
            i = _argmax_tiebreak_high(self._clog[:m], self._cpos[:m])
            x_new = self._cpos[i]
            t = self._n
            self._nodes[t] = x_new
            self._n = t + 1
            left, right = self._cleft[i], self._cright[i]
            # The selected slot picks up a -inf here and is overwritten below.
            with np.errstate(divide="ignore"):
                self._clog[:m] += np.log(np.abs(self._cpos[:m] - x_new))
            lo_mid = (self._nodes[left] + x_new) / 2.0
            hi_mid = (x_new + self._nodes[right]) / 2.0
            if lo_mid == self._nodes[left] or lo_mid == x_new \
                    or hi_mid == x_new or hi_mid == self._nodes[right]:
                raise ValueError(
                    "fast-leja bisection collapsed onto an existing node; "
                    "the node count exceeds what float64 spacing supports")
            prefix = self._nodes[:t + 1]
            self._cpos[i] = lo_mid
            self._clog[i] = float(np.log(np.abs(lo_mid - prefix)).sum())
            self._cleft[i] = left
            self._cright[i] = t
            self._cpos[m] = hi_mid
            self._clog[m] = float(np.log(np.abs(hi_mid - prefix)).sum())
            self._cleft[m] = t
            self._cright[m] = right
            self._m = m + 1


def fast_leja(interval: Interval, n: int) -> NodeSequence:
    """The first n Fast Leja points on ``interval``.

    Starts from S_2 = [hi, lo], then repeatedly selects the candidate
    midpoint with the largest multiplicative distance to the nodes chosen
    so far and refills the candidate set with the two midpoints next to
    the selection.  The result is Leja ordered by construction and is a
    bitwise prefix of every longer sequence on the same interval.
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ValueError(f"fast_leja requires n >= 2, got {n!r}")
    pool = CandidatePool(interval)
    pool.extend(int(n) - 2)
    return pool.selected


def fast_leja_extend(pool: CandidatePool, extra: int) -> CandidatePool:
    """Continue the Fast Leja recursion of ``pool`` by ``extra`` nodes.

    Mutates and returns the pool; the previously selected prefix is
    unchanged in values and order.
    """
    pool.extend(extra)
    return pool
