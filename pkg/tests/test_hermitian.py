import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from loewnerlab.errors import UsageError
from loewnerlab.hermitian import (
    HermitianMatrix,
    Interval,
    POSITIVE_AXIS,
    eigendecompose,
    hermitian_part,
    identity,
    is_psd,
    loewner_leq,
    random_hermitian,
    random_ordered_pair,
    random_unitary,
    spectrum_in,
)


def test_interval_basic():
    iv = Interval(0.1, 10.0)
    assert iv.bounded
    assert iv.width == 9.9
    assert iv.contains_strictly(5.0)
    assert not iv.contains_strictly(0.1)
    assert not iv.contains_strictly(10.0)
    assert not POSITIVE_AXIS.bounded
    assert POSITIVE_AXIS.contains_strictly(1e300)


def test_interval_rejects_degenerate():
    with pytest.raises(UsageError):
        Interval(2.0, 2.0)
    with pytest.raises(UsageError):
        Interval(3.0, 1.0)


def test_hermitian_part_is_bitwise_hermitian():
    rng = np.random.default_rng(7)
    z = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    h = hermitian_part(z)
    assert np.array_equal(h, h.conj().T)


def test_constructor_rejects_non_hermitian():
    with pytest.raises(UsageError):
        HermitianMatrix(np.array([[1.0, 2.0], [3.0, 4.0]], dtype=complex))
    with pytest.raises(UsageError):
        HermitianMatrix(np.array([[1.0, 2.0, 3.0]], dtype=complex))
    with pytest.raises(UsageError):
        HermitianMatrix(np.array([[np.inf]], dtype=complex))


def test_from_array_symmetrizes_near_hermitian():
    a = np.array([[1.0, 0.5 + 1e-12], [0.5, 2.0]], dtype=complex)
    m = HermitianMatrix.from_array(a)
    assert np.array_equal(m.entries, m.entries.conj().T)
    # far from Hermitian is refused
    with pytest.raises(UsageError):
        HermitianMatrix.from_array(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))


def test_arithmetic_preserves_exact_hermitianity():
    rng = np.random.default_rng(3)
    a = random_hermitian(4, Interval(0.5, 3.0), rng)
    b = random_hermitian(4, Interval(0.5, 3.0), rng)
    for m in (a + b, a - b, a.scaled(2.5), a.scaled(-1.0 / 3.0)):
        assert np.array_equal(m.entries, m.entries.conj().T)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_sums_stay_bitwise_hermitian(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 6))
    ms = [random_hermitian(n, Interval(-2.0, 5.0), rng) for _ in range(3)]
    acc = ms[0]
    for m in ms[1:]:
        acc = acc + m
    assert np.array_equal(acc.entries, acc.entries.conj().T)


def test_add_dimension_mismatch():
    a = identity(2)
    b = identity(3)
    with pytest.raises(UsageError):
        a + b


def test_eigendecompose_frozen_example():
    # [[2,4],[4,6]] has eigenvalues 4 -+ sqrt(20)
    m = HermitianMatrix(np.array([[2.0, 4.0], [4.0, 6.0]], dtype=complex))
    dec = eigendecompose(m)
    np.testing.assert_allclose(
        dec.eigenvalues, [4.0 - math.sqrt(20.0), 4.0 + math.sqrt(20.0)], atol=1e-12
    )
    np.testing.assert_allclose(dec.reconstruct().entries, m.entries, atol=1e-12)


def test_eigendecompose_sorted_ascending():
    rng = np.random.default_rng(11)
    m = random_hermitian(6, Interval(-5.0, 5.0), rng)
    lam = eigendecompose(m).eigenvalues
    assert np.all(np.diff(lam) >= 0.0)


def test_is_psd_relative_tolerance_across_scales():
    # a tiny negative eigenvalue only counts relative to the norm
    big = HermitianMatrix(np.diag([1e8, -1e-3]).astype(complex))
    assert is_psd(big)  # -1e-3 / 1e8 = 1e-11 < 1e-9
    small = HermitianMatrix(np.diag([1.0, -1e-3]).astype(complex))
    assert not is_psd(small)


def test_loewner_leq_and_spectrum():
    a = HermitianMatrix(np.diag([1.0, 2.0]).astype(complex))
    b = HermitianMatrix(np.diag([1.5, 2.0]).astype(complex))
    assert loewner_leq(a, b)
    assert not loewner_leq(b, a) or np.array_equal(a.entries, b.entries)
    assert spectrum_in(a, Interval(0.5, 2.5))
    assert not spectrum_in(a, Interval(1.5, 2.5))


def test_random_unitary_is_unitary_and_seeded():
    u1 = random_unitary(5, np.random.default_rng(42))
    u2 = random_unitary(5, np.random.default_rng(42))
    assert np.array_equal(u1, u2)
    np.testing.assert_allclose(u1 @ u1.conj().T, np.eye(5), atol=1e-12)


def test_random_hermitian_spectrum_containment():
    iv = Interval(0.2, 7.0)
    for seed in range(20):
        m = random_hermitian(5, iv, seed)
        assert spectrum_in(m, iv)
        assert np.array_equal(m.entries, m.entries.conj().T)


def test_random_ordered_pair_orders_and_contains():
    iv = Interval(0.1, 10.0)
    for seed in range(25):
        a, b = random_ordered_pair(4, iv, seed)
        assert spectrum_in(a, iv)
        assert spectrum_in(b, iv)
        diff = np.linalg.eigvalsh(b.entries - a.entries)
        assert diff[0] >= -1e-12


def test_random_ordered_pair_deterministic():
    a1, b1 = random_ordered_pair(3, Interval(0.5, 4.0), 99)
    a2, b2 = random_ordered_pair(3, Interval(0.5, 4.0), 99)
    assert np.array_equal(a1.entries, a2.entries)
    assert np.array_equal(b1.entries, b2.entries)


def test_random_generation_needs_bounded_interval():
    with pytest.raises(UsageError):
        random_hermitian(3, POSITIVE_AXIS, 1)
    with pytest.raises(UsageError):
        random_ordered_pair(3, POSITIVE_AXIS, 1)
