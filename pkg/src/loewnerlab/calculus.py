"""Functions of Hermitian matrices and derivatives along matrix paths.

apply_function lifts a scalar function to Hermitian arguments through the
spectral decomposition.  Derivatives of t -> f(gamma(t)) are computed by the
divided-difference chain rule: rotate gamma'(t) into the eigenbasis, multiply
entrywise by the first-divided-difference matrix, rotate back.  The second
derivative adds one rank-one Schur term per eigenvector column using the
anchored second divided differences, plus the first-order action on
gamma''(t).  Coincident eigenvalues need no special casing -- the divided
differences already degrade gracefully to derivative limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .divdiff import dd1, dd2
from .errors import UsageError
from .functions import ScalarFunction
from .hermitian import (
    EigenDecomposition,
    HermitianMatrix,
    hermitian_part,
    eigendecompose,
)


@dataclass(frozen=True)
class MatrixPath:
    """A Hermitian-valued curve t -> gamma(t) with two derivatives."""

    value: Callable[[float], HermitianMatrix]
    deriv: Callable[[float], HermitianMatrix]
    deriv2: Callable[[float], HermitianMatrix]


def affine_path(a: HermitianMatrix, h: HermitianMatrix) -> MatrixPath:
    """gamma(t) = A + tH."""
    a._check_same_dim(h)
    zero = HermitianMatrix(np.zeros_like(a.entries))
    return MatrixPath(
        value=lambda t: HermitianMatrix(a.entries + float(t) * h.entries),
        deriv=lambda t: h,
        deriv2=lambda t: zero,
    )


@dataclass(frozen=True, eq=False)
class ChainRuleContext:
    """Shared data for chain-rule evaluations at a fixed path time.

    decomposition diagonalizes gamma(t); rotated_velocity is U* gamma'(t) U,
    whose k-th column drives the k-th rank-one term of the second derivative.
    """

    decomposition: EigenDecomposition
    rotated_velocity: np.ndarray

    def column(self, k: int) -> np.ndarray:
        return self.rotated_velocity[:, k]


def _check_spectrum(f: ScalarFunction, dec: EigenDecomposition):
    lam = dec.eigenvalues
    if not (f.domain.lo < lam[0] and lam[-1] < f.domain.hi):
        raise UsageError(
            f"spectrum [{lam[0]:.6g}, {lam[-1]:.6g}] not strictly inside the "
            f"domain ({f.domain.lo:g}, {f.domain.hi:g}) of {f.name}"
        )


def apply_function(f: ScalarFunction, a: HermitianMatrix) -> HermitianMatrix:
    """f(A) by applying f to the eigenvalues."""
    dec = eigendecompose(a)
    _check_spectrum(f, dec)
    u = dec.unitary
    vals = np.array([f(x) for x in dec.eigenvalues])
    return HermitianMatrix(hermitian_part(u @ np.diag(vals) @ u.conj().T))


def chain_rule_context(path: MatrixPath, t: float) -> ChainRuleContext:
    g = path.value(t)
    dec = eigendecompose(g)
    u = dec.unitary
    m = u.conj().T @ path.deriv(t).entries @ u
    return ChainRuleContext(decomposition=dec, rotated_velocity=hermitian_part(m))


def _dd1_matrix(f: ScalarFunction, lam: np.ndarray) -> np.ndarray:
    n = len(lam)
    d = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            v = dd1(f, lam[i], lam[j])
            d[i, j] = v
            d[j, i] = v
    return d


def path_derivative(f: ScalarFunction, path: MatrixPath, t: float) -> HermitianMatrix:
    """d/dt f(gamma(t)) = U ( [dd1(f, l_i, l_j)] o (U* gamma' U) ) U*."""
    ctx = chain_rule_context(path, t)
    dec = ctx.decomposition
    _check_spectrum(f, dec)
    d1 = _dd1_matrix(f, dec.eigenvalues)
    u = dec.unitary
    out = u @ (d1 * ctx.rotated_velocity) @ u.conj().T
    return HermitianMatrix(hermitian_part(out))


def path_second_derivative(
    f: ScalarFunction, path: MatrixPath, t: float
) -> HermitianMatrix:
    """Second derivative of t -> f(gamma(t)).

    In the eigenbasis of gamma(t) with columns c_k of U* gamma' U:

        2 * sum_k [dd2(f, l_i, l_j, l_k)] o (c_k c_k*)
          + [dd1(f, l_i, l_j)] o (U* gamma'' U)
    """
    ctx = chain_rule_context(path, t)
    dec = ctx.decomposition
    _check_spectrum(f, dec)
    lam = dec.eigenvalues
    u = dec.unitary
    n = len(lam)
    s = np.zeros((n, n), dtype=np.complex128)
    for k in range(n):
        ck = ctx.column(k)
        d2k = np.empty((n, n))
        for i in range(n):
            for j in range(i, n):
                v = dd2(f, lam[i], lam[j], lam[k])
                d2k[i, j] = v
                d2k[j, i] = v
        s += 2.0 * d2k * np.outer(ck, ck.conj())
    s += _dd1_matrix(f, lam) * (u.conj().T @ path.deriv2(t).entries @ u)
    out = u @ s @ u.conj().T
    return HermitianMatrix(hermitian_part(out))


def frechet_derivative(
    f: ScalarFunction, a: HermitianMatrix, h: HermitianMatrix
) -> HermitianMatrix:
    """Directional derivative of f at A in direction H."""
    return path_derivative(f, affine_path(a, h), 0.0)
