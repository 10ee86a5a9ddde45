"""Test functions, evaluation grids, discrete norms, and measure()."""

import math

import numpy as np
import pytest

from fastleja import (Interval, STANDARD_INTERVAL, TEST_FUNCTIONS, chebyshev_roots,
                      evaluation_grid, fast_leja, leja_order, measure, norms)
# aliased so pytest does not collect it as a test
from fastleja import test_function as eval_fn

STD = STANDARD_INTERVAL


# --------------------------------------------------------------------------
# test functions

def test_runge_values():
    assert eval_fn("runge", 0.0) == 1.0
    assert eval_fn("runge", 2.0) == 0.038461538461538464
    assert eval_fn("runge", -2.0) == 1 / 26


def test_heaviside_jump_value_belongs_to_lower_branch():
    assert eval_fn("heaviside", 0.0) == 0.0
    assert eval_fn("heaviside", -1e-12) == 0.0
    assert eval_fn("heaviside", 1e-12) == 1.0


def test_sawtooth_uses_floor():
    assert eval_fn("sawtooth", -0.5) == 0.5
    assert eval_fn("sawtooth", 0.25) == 0.25
    assert eval_fn("sawtooth", -2.0) == 0.0
    assert eval_fn("sawtooth", 1.75) == 0.75


def test_sqrtabs_values():
    assert eval_fn("sqrtabs", 4.0) == 2.0
    assert eval_fn("sqrtabs", -0.25) == 0.5
    assert eval_fn("sqrtabs", 0.0) == 0.0


def test_unknown_function_id():
    with pytest.raises(ValueError):
        eval_fn("gaussian", 0.0)


def test_function_vector_evaluation_and_metadata():
    xs = np.array([-2.0, -0.5, 0.0, 0.5, 2.0])
    np.testing.assert_array_equal(eval_fn("heaviside", xs),
                                  [0.0, 0.0, 0.0, 1.0, 1.0])
    assert TEST_FUNCTIONS["runge"].smoothness == "analytic"
    assert TEST_FUNCTIONS["heaviside"].smoothness == "discontinuous"
    assert TEST_FUNCTIONS["sawtooth"].smoothness == "discontinuous"
    assert TEST_FUNCTIONS["sqrtabs"].smoothness == "holder"


# --------------------------------------------------------------------------
# evaluation grid

def test_grid_examples():
    assert evaluation_grid(STD, 1).tolist() == [-2.0, 0.0, 2.0]
    assert evaluation_grid(STD, 2).tolist() == [-2.0, -1.0, 0.0, 1.0, 2.0]
    assert evaluation_grid(Interval(0.0, 1.0), 2).tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]


def test_grid_has_2n_strips_and_contains_endpoints():
    g = evaluation_grid(STD, 100)
    assert g.size == 201
    assert g[0] == -2.0 and g[-1] == 2.0


def test_grid_invalid_n():
    with pytest.raises(ValueError):
        evaluation_grid(STD, 0)


# --------------------------------------------------------------------------
# norms

def test_norm_of_ones_is_exactly_one():
    for m in (2, 3, 100, 8193):
        assert norms(np.ones(m), STD) == (1.0, 1.0, 1.0)


def test_norms_of_identity_function():
    # (1/4) int |x| = 1, sqrt((1/4) int x^2) = sqrt(4/3), max = 2
    g = evaluation_grid(STD, 512)
    l1, l2, linf = norms(g, STD)
    assert abs(l1 - 1.0) < 1e-3
    assert abs(l2 - math.sqrt(4.0 / 3.0)) < 1e-3
    assert linf == 2.0


def test_norms_of_heaviside_samples():
    g = evaluation_grid(STD, 1024)
    l1, l2, linf = norms(eval_fn("heaviside", g), STD)
    assert abs(l1 - 0.5) < 1e-3
    assert abs(l2 - math.sqrt(0.5)) < 1e-3
    assert linf == 1.0


def test_norms_need_two_samples():
    with pytest.raises(ValueError):
        norms([1.0], STD)


def test_norm_ordering_on_random_vectors():
    rng = np.random.default_rng(41)
    for _ in range(300):
        e = rng.normal(size=int(rng.integers(2, 200)))
        l1, l2, linf = norms(e, STD)
        assert l1 <= l2 <= linf


def test_norm_homogeneity():
    rng = np.random.default_rng(42)
    e = rng.normal(size=401)
    base = norms(e, STD)
    for c in (-3.0, 0.5, 17.25):
        scaled = norms(c * e, STD)
        np.testing.assert_allclose(scaled, [abs(c) * v for v in base], rtol=1e-15)


def test_norm_grid_refinement_is_second_order():
    # probe with e(x) = x^2 - 4/3, which has zero mean on [-2, 2] so the
    # l1 integrand changes sign; exact values: l1 = 16 sqrt(3)/27,
    # l2 = sqrt(64/45)
    def defect(norm_index, n):
        g = evaluation_grid(STD, n)
        e = g * g - 4.0 / 3.0
        exact = (16.0 * math.sqrt(3.0) / 27.0, math.sqrt(64.0 / 45.0))[norm_index]
        return abs(norms(e, STD)[norm_index] - exact)

    # smooth l2 integrand: successive defects shrink by a clean factor 4
    for n in (64, 128, 256):
        assert 3.5 < defect(1, n) / defect(1, 2 * n) < 4.5
    # the |e| kinks make the l1 constant wobble, but it stays O(n^-2)
    for n in (64, 128, 256, 512):
        assert defect(0, n) <= 4.0 / n ** 2


# --------------------------------------------------------------------------
# measure

def test_measure_two_point_runge_is_constant_interpolant():
    # f1(2) = f1(-2) so the fit is the constant 1/26; the grid contains 0
    # where the defect is 1 - 1/26
    rec = measure("runge", fast_leja(STD, 2))
    assert rec.linf == 1.0 - 1.0 / 26.0
    assert rec.function == "runge"
    assert rec.family == "fast-leja"
    assert rec.n == 2
    assert rec.l1 <= rec.l2 <= rec.linf
    assert rec.wall_time_s >= 0.0


def test_measure_unknown_function():
    with pytest.raises(ValueError):
        measure("nope", fast_leja(STD, 4))


@pytest.mark.parametrize("family", ["fast-leja", "chebyshev-leja"])
def test_measure_heaviside_never_converges_uniformly(family):
    for n in (32, 256):
        if family == "fast-leja":
            nodes = fast_leja(STD, n)
        else:
            nodes = leja_order(chebyshev_roots(n, 2.0).values, interval=STD)
        rec = measure("heaviside", nodes)
        assert rec.linf >= 0.5


def test_measure_residual_contract_midsize():
    nodes = fast_leja(STD, 1000)
    fn = TEST_FUNCTIONS["sqrtabs"]
    rec = measure(fn, nodes)
    assert rec.residual <= 1e-10 * np.abs(fn(nodes.values)).max()
    assert np.isfinite(rec.l1) and np.isfinite(rec.l2) and np.isfinite(rec.linf)


def test_measure_runge_convergence_along_doublings():
    # linf shrinks monotonically up to factor-2 noise and is at machine
    # accuracy from n = 512 on
    degrees = [8, 16, 32, 64, 128, 256, 512, 1024]
    errs = []
    for n in degrees:
        errs.append(measure("runge", fast_leja(STD, n)).linf)
    for prev, nxt in zip(errs, errs[1:]):
        assert nxt <= 2.0 * prev or (prev <= 1e-12 and nxt <= 1e-12)
    assert errs[degrees.index(512)] <= 1e-12


def test_measure_gibbs_localizes_for_heaviside():
    # oscillations keep their size (linf) but concentrate (l1 drops)
    rec64 = measure("heaviside", fast_leja(STD, 64))
    rec1024 = measure("heaviside", fast_leja(STD, 1024))
    assert rec64.linf >= 0.4 and rec1024.linf >= 0.4
    assert rec1024.l1 <= rec64.l1 / 4.0
