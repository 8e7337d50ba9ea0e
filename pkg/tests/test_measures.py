import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from loewnerlab.errors import UsageError
from loewnerlab.measures import (
    MeasureInf,
    RadonMeasure01,
    convert_measure,
    default_lambda_grid,
    endpoint_masses,
    fit_measure,
    kernel01,
    kernel_inf,
    lambda_from_s,
    s_from_lambda,
    synthesize,
)


def test_measure_validation():
    with pytest.raises(UsageError):
        RadonMeasure01(atoms=())
    with pytest.raises(UsageError):
        RadonMeasure01(atoms=((1.5, 1.0),))
    with pytest.raises(UsageError):
        RadonMeasure01(atoms=((0.5, -1.0),))
    with pytest.raises(UsageError):
        RadonMeasure01(atoms=((0.5, 1.0), (0.5, 2.0)))  # duplicate position
    with pytest.raises(UsageError):
        RadonMeasure01(quad=((0.0, 1.0),))  # quad nodes must be interior
    with pytest.raises(UsageError):
        MeasureInf()  # no mass at all
    with pytest.raises(UsageError):
        MeasureInf(mass0=-0.1)
    with pytest.raises(UsageError):
        MeasureInf(interior=((0.0, 1.0),))


def test_total_mass():
    mu = RadonMeasure01(atoms=((0.0, 0.25), (1.0, 0.5)), quad=((0.5, 0.25),))
    assert mu.total_mass() == 1.0
    m = MeasureInf(mass0=0.1, massInf=0.2, interior=((1.0, 0.7),))
    np.testing.assert_allclose(m.total_mass(), 1.0, rtol=1e-15)


@settings(max_examples=80, deadline=None)
@given(st.floats(min_value=0.0, max_value=1.0))
def test_kernel01_is_exactly_one_at_t_one(lam):
    assert kernel01(lam, 1.0) == 1.0


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=1e-6, max_value=1e6))
def test_kernel_inf_is_exactly_one_at_x_one(s):
    assert kernel_inf(s, 1.0) == 1.0


def test_kernel_endpoint_degenerations():
    # lam = 1 gives the identity, lam = 0 the constant 1
    for t in (0.2, 1.0, 17.0):
        assert kernel01(1.0, t) == t
        assert kernel01(0.0, t) == 1.0
    # s = inf gives the identity, s -> 0 the constant 1
    assert kernel_inf(math.inf, 3.0) == 3.0
    np.testing.assert_allclose(kernel_inf(1e-14, 3.0), 1.0, rtol=1e-13)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=1e-4, max_value=1e4),
       st.floats(min_value=1e-2, max_value=1e2))
def test_kernel_change_of_variables(s, x):
    lhs = kernel_inf(s, x)
    rhs = kernel01(lambda_from_s(s), x)
    assert abs(lhs - rhs) <= 1e-13 * max(1.0, abs(lhs))


def test_substitution_roundtrip():
    for s in (0.0, 0.5, 1.0, 123.0):
        np.testing.assert_allclose(s_from_lambda(lambda_from_s(s)), s, rtol=1e-12)
    assert lambda_from_s(math.inf) == 1.0
    assert s_from_lambda(1.0) == math.inf


def test_synthesize_value_at_one_is_total_mass_bitwise():
    mu = RadonMeasure01(
        atoms=((0.0, 0.125), (0.3, 0.4), (1.0, 0.17)), quad=((0.6, 0.05),)
    )
    f = synthesize(mu)
    assert f(1.0) == mu.total_mass()


def test_synthesize_values_and_derivative():
    mu = RadonMeasure01(atoms=((0.5, 1.0),))
    f = synthesize(mu)
    np.testing.assert_allclose(f(2.0), 4.0 / 3.0, rtol=1e-15)
    h = 1e-6
    fd = (f(2.0 + h) - f(2.0 - h)) / (2.0 * h)
    np.testing.assert_allclose(f.deriv(2.0), fd, atol=1e-9)
    fd2 = (f(2.0 + 1e-4) - 2.0 * f(2.0) + f(2.0 - 1e-4)) / 1e-8
    np.testing.assert_allclose(f.deriv2(2.0), fd2, atol=1e-6)


def test_convert_measure_preserves_positions_and_weights():
    m = MeasureInf(mass0=0.2, massInf=0.3, interior=((1.0, 0.4), (3.0, 0.1)))
    mu = convert_measure(m)
    got = dict(mu.atoms)
    assert got[0.0] == 0.2
    assert got[1.0] == 0.3
    assert got[0.5] == 0.4  # s = 1 -> lam = 1/2
    assert got[0.75] == 0.1  # s = 3 -> lam = 3/4
    assert mu.total_mass() == pytest.approx(m.total_mass(), rel=1e-15)


def test_converted_synthesis_agrees_with_inf_kernels():
    m = MeasureInf(mass0=0.25, massInf=0.25, interior=((2.0, 0.5),))
    f = synthesize(convert_measure(m))
    for x in np.geomspace(0.01, 100.0, 30):
        direct = (0.25 * 1.0 + 0.25 * x + 0.5 * kernel_inf(2.0, x))
        np.testing.assert_allclose(f(x), direct, rtol=1e-13)


def test_endpoint_masses_reads_back_the_atoms():
    m = MeasureInf(mass0=0.3, massInf=0.2, interior=((1.0, 0.5),))
    f = synthesize(convert_measure(m))
    m0, mi = endpoint_masses(f)
    np.testing.assert_allclose(m0, 0.3, atol=1e-4)
    np.testing.assert_allclose(mi, 0.2, atol=1e-4)


def test_endpoint_masses_clamps_tiny_negatives():
    # 2t/(1+t) has zero mass at both ends; extrapolation noise may go negative
    import warnings

    mu = RadonMeasure01(atoms=((0.5, 1.0),))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # the clamp warning is expected noise here
        m0, mi = endpoint_masses(synthesize(mu))
    assert m0 >= 0.0 and mi >= 0.0
    assert m0 < 1e-4 and mi < 1e-4


def test_endpoint_masses_needs_wide_domain():
    from loewnerlab.functions import ScalarFunction
    from loewnerlab.hermitian import Interval

    f = ScalarFunction("narrow", Interval(0.5, 2.0), lambda t: t)
    with pytest.raises(UsageError):
        endpoint_masses(f)


def test_default_grid_shape():
    g = default_lambda_grid(50)
    assert g[0] == 0.0 and g[-1] == 1.0
    assert np.all(np.diff(g) > 0.0)
    # quadratic clustering at the ends: first gap way below uniform spacing
    assert g[1] < 1.0 / 49.0 / 10.0
    with pytest.raises(UsageError):
        default_lambda_grid(1)


def test_fit_exact_sparse_recovery():
    grid = default_lambda_grid(60)
    true_atoms = ((grid[0], 0.5), (grid[30], 0.3), (grid[59], 0.2))
    f = synthesize(RadonMeasure01(atoms=true_atoms))
    ts = np.geomspace(0.05, 50.0, 40)
    mu, res = fit_measure([(t, f(t)) for t in ts], grid)
    assert res < 1e-10
    got = dict(mu.atoms)
    for lam, w in true_atoms:
        assert lam in got
        np.testing.assert_allclose(got[lam], w, atol=1e-8)
    assert abs(mu.total_mass() - 1.0) < 1e-8


def test_fit_arithmetic_mean_splits_even():
    # (1 + t)/2 = 0.5 * kernel(0) + 0.5 * kernel(1)
    ts = np.geomspace(0.1, 10.0, 25)
    mu, res = fit_measure([(t, (1.0 + t) / 2.0) for t in ts],
                          default_lambda_grid(40))
    assert res < 1e-9
    got = dict(mu.atoms)
    np.testing.assert_allclose(got[0.0], 0.5, atol=1e-7)
    np.testing.assert_allclose(got[1.0], 0.5, atol=1e-7)


def test_fit_mass_constraint_is_exact():
    f = synthesize(RadonMeasure01(atoms=((0.25, 0.6), (0.75, 0.4))))
    ts = np.geomspace(0.1, 10.0, 30)
    mu, _ = fit_measure([(t, f(t)) for t in ts], default_lambda_grid(80),
                        mass_constraint=1.0)
    assert mu.total_mass() == 1.0


def test_fit_sqrt_small_residual():
    ts = np.geomspace(0.01, 100.0, 80)
    mu, res = fit_measure([(t, math.sqrt(t)) for t in ts],
                          default_lambda_grid(200))
    assert res < 1e-6
    g = synthesize(mu)
    for t in (0.5, 2.0, 42.0):
        np.testing.assert_allclose(g(t), math.sqrt(t), rtol=1e-5)


def test_fit_input_validation():
    grid = default_lambda_grid(10)
    with pytest.raises(UsageError):
        fit_measure([], grid)
    with pytest.raises(UsageError):
        fit_measure([(1.0, 1.0)], np.array([]))
    with pytest.raises(UsageError):
        fit_measure([(-1.0, 1.0)], grid)
    with pytest.raises(UsageError):
        fit_measure([(1.0, -1.0)], grid)
    with pytest.raises(UsageError):
        fit_measure([(1.0, 1.0)], np.array([0.5, 0.5]))
