"""Randomized monotonicity/convexity checks and the transform zoo."""

import math

import numpy as np
import pytest

from loewnerlab.divdiff import loewner_matrix
from loewnerlab.errors import UsageError
from loewnerlab.functions import ScalarFunction, get_function
from loewnerlab.hermitian import POSITIVE_AXIS, Interval
from loewnerlab.monotonicity import (
    check_convex_order_n,
    check_midpoint_concavity,
    check_monotone_direct,
    check_monotone_order_n,
    derivative_bound_at_one,
    extreme_decomposition,
    sample_nodes,
    sample_nodes_near_coincident,
    transform_involution,
    transform_neg_reciprocal,
    transform_quotient,
)

IV = Interval(0.1, 10.0)


def test_sample_nodes_separated_and_contained():
    rng = np.random.default_rng(0)
    for _ in range(20):
        ns = sample_nodes(rng, 5, IV)
        ts = np.array(ns.nodes)
        assert np.all((ts > IV.lo) & (ts < IV.hi))
        d = np.abs(ts[:, None] - ts[None, :]) + np.eye(5)
        assert d.min() > 1e-7


def test_sample_nodes_near_coincident_cluster():
    rng = np.random.default_rng(1)
    ns = sample_nodes_near_coincident(rng, 4, IV)
    ts = np.array(sorted(ns.nodes))
    assert np.all((ts > IV.lo) & (ts < IV.hi))
    assert ts[-1] - ts[0] < 1e-4  # genuinely clustered


def test_sqrt_is_monotone_order_2():
    v = check_monotone_order_n(get_function("sqrt"), 2, IV, trials=50, seed=0)
    assert v.passed
    assert v.witness is None
    assert v.min_eig_seen > -1e-9


def test_square_fails_order_2_with_recheckable_witness():
    v = check_monotone_order_n(get_function("square"), 2, IV, trials=50, seed=0)
    assert not v.passed
    ns = v.witness
    assert ns is not None
    # the witness must reproduce the violation on its own
    m = loewner_matrix(get_function("square"), ns)
    assert m.min_eigenvalue() < 0.0


def test_verdict_is_deterministic_in_the_seed():
    a = check_monotone_order_n(get_function("sqrt"), 3, IV, trials=25, seed=77)
    b = check_monotone_order_n(get_function("sqrt"), 3, IV, trials=25, seed=77)
    assert a.min_eig_seen == b.min_eig_seen
    c = check_monotone_order_n(get_function("sqrt"), 3, IV, trials=25, seed=78)
    assert c.min_eig_seen != a.min_eig_seen


def test_exp_fails_monotonicity_order_2():
    v = check_monotone_order_n(get_function("exp"), 2, IV, trials=50, seed=3)
    assert not v.passed


def test_near_coincident_sampler_exercises_limit_formulas():
    v = check_monotone_order_n(
        get_function("sqrt"), 4, IV, trials=20, seed=5,
        sampler=sample_nodes_near_coincident,
    )
    assert v.passed


def test_convexity_square_passes_sqrt_fails():
    assert check_convex_order_n(get_function("square"), 2, IV, 30, 0).passed
    assert not check_convex_order_n(get_function("sqrt"), 2, IV, 30, 0).passed
    # negated sqrt is operator convex
    assert check_convex_order_n(get_function("sqrt").negated(), 2, IV, 30, 0).passed


def test_direct_matrix_check_sqrt_vs_square():
    iv = Interval(0.5, 4.0)
    assert check_monotone_direct(get_function("sqrt"), 3, iv, 30, 11).passed
    v = check_monotone_direct(get_function("square"), 2, iv, 200, 11)
    assert not v.passed
    a, b = v.witness
    d = np.linalg.eigvalsh(b.entries @ b.entries - a.entries @ a.entries)
    assert d[0] < 0.0


def test_midpoint_concavity():
    assert check_midpoint_concavity(get_function("sqrt"), 3, IV, 30, 2).passed
    assert not check_midpoint_concavity(get_function("square"), 2, IV, 60, 2).passed


def test_checkers_validate_interval_against_domain():
    with pytest.raises(UsageError):
        check_monotone_order_n(get_function("sqrt"), 2, Interval(-1.0, 2.0), 5, 0)


def test_involution_swaps_kernel_parameter():
    # t * k_lam(1/t) = k_{1-lam}(t)
    g = transform_involution(get_function("kernel:0.25"))
    target = get_function("kernel:0.75")
    for t in np.geomspace(0.05, 50.0, 40):
        np.testing.assert_allclose(g(t), target(t), rtol=1e-13)
        np.testing.assert_allclose(g.deriv(t), target.deriv(t), rtol=1e-10)


def test_quotient_of_sqrt_is_sqrt():
    g = transform_quotient(get_function("sqrt"))
    for t in (0.3, 1.0, 7.7):
        np.testing.assert_allclose(g(t), math.sqrt(t), rtol=1e-14)
        np.testing.assert_allclose(g.deriv(t), 0.5 / math.sqrt(t), rtol=1e-12)


def test_neg_reciprocal_values():
    g = transform_neg_reciprocal(get_function("id"))
    for t in (0.2, 1.0, 9.0):
        assert g(t) == -1.0
    h = transform_neg_reciprocal(get_function("sqrt"))
    np.testing.assert_allclose(h(4.0), -0.5, rtol=1e-15)


def test_transforms_require_positive_functions():
    shifted = ScalarFunction("shifted", POSITIVE_AXIS, lambda t: t - 5.0)
    for tf in (transform_neg_reciprocal, transform_quotient, transform_involution):
        with pytest.raises(UsageError):
            tf(shifted)


def test_derivative_bound_at_one():
    assert derivative_bound_at_one(get_function("sqrt")) == 0.5
    np.testing.assert_allclose(
        derivative_bound_at_one(get_function("kernel:0.3")), 0.3, rtol=1e-15
    )
    with pytest.raises(UsageError):
        derivative_bound_at_one(get_function("exp"))  # exp(1) != 1


def test_extreme_decomposition_reconstructs_kernel():
    f = get_function("kernel:0.5")
    dec = extreme_decomposition(f)
    assert not dec.degenerate
    np.testing.assert_allclose(dec.weight, 0.5, rtol=1e-12)
    for t in np.geomspace(0.01, 100.0, 60):
        mix = dec.weight * dec.f1(t) + (1.0 - dec.weight) * dec.f2(t)
        np.testing.assert_allclose(mix, f(t), atol=1e-10 * max(1.0, abs(f(t))))
    # both pieces are normalized
    np.testing.assert_allclose(dec.f1(1.0), 1.0, atol=1e-12)
    np.testing.assert_allclose(dec.f2(1.0), 1.0, atol=1e-12)


def test_extreme_decomposition_degenerate_cases():
    assert extreme_decomposition(get_function("id")).degenerate
    assert extreme_decomposition(get_function("const1")).degenerate
    assert extreme_decomposition(get_function("id")).weight == 1.0
    assert extreme_decomposition(get_function("const1")).weight == 0.0


def test_extreme_decomposition_rejects_bad_weight():
    # square is normalized at 1 but has f'(1) = 2
    with pytest.raises(UsageError):
        extreme_decomposition(get_function("square"))
    with pytest.raises(UsageError):
        extreme_decomposition(get_function("exp"))
