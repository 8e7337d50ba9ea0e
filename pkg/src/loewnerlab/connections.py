"""Operator connections and means built from parallel sums.

A connection acts on positive definite pairs as

    A # B  =  alpha*A + beta*B + sum_k w_k * ((1+s_k)/s_k) * (s_k A : B)

where A : B = (A^-1 + B^-1)^-1 is the parallel sum.  The scalar shadow
alpha + beta*x + sum w x(1+s)/(x+s) is the representing function: evaluating
the connection on (I, x I) and reading off the diagonal.  Classic instances:
arithmetic (alpha = beta = 1/2), harmonic (single atom s = 1, w = 1), and the
geometric mean, whose representing measure for sqrt is discretized here by a
midpoint rule in the angle substitution s = tan^2(theta) -- the substitution
under which that measure is exactly uniform, so the midpoint rule converges
at fourth order.

All inversions go through eigendecompositions with reciprocal eigenvalues
and a condition-number guard.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailure, UsageError
from .functions import OPERATOR_MONOTONE, ScalarFunction
from .hermitian import (
    HermitianMatrix,
    POSITIVE_AXIS,
    eigendecompose,
    hermitian_part,
)
from .measures import (
    MeasureInf,
    RadonMeasure01,
    convert_measure,
    default_lambda_grid,
    fit_measure,
    s_from_lambda,
    synthesize,
)

#: Refuse reciprocal-eigenvalue inversion beyond this condition number.
CONDITION_CAP = 1e12


@dataclass(frozen=True)
class ConnectionSpec:
    """Endpoint coefficients and interior atoms of a connection's measure."""

    alpha: float = 0.0
    beta: float = 0.0
    interior: tuple = ()

    def __post_init__(self):
        for label, v in (("alpha", self.alpha), ("beta", self.beta)):
            if not (math.isfinite(v) and v >= 0.0):
                raise UsageError(f"{label} must be finite and >= 0, got {v}")
        interior = []
        for s, w in self.interior:
            s, w = float(s), float(w)
            if not (math.isfinite(s) and s > 0.0):
                raise UsageError(f"interior position {s} must be in (0, inf)")
            if not (math.isfinite(w) and w > 0.0):
                raise UsageError(f"interior weight {w} must be positive")
            interior.append((s, w))
        object.__setattr__(self, "interior", tuple(interior))
        if self.alpha == 0.0 and self.beta == 0.0 and not self.interior:
            raise UsageError("connection must carry some mass")

    def as_measure(self) -> MeasureInf:
        return MeasureInf(mass0=self.alpha, massInf=self.beta, interior=self.interior)


def arithmetic_spec() -> ConnectionSpec:
    return ConnectionSpec(alpha=0.5, beta=0.5)


def harmonic_spec() -> ConnectionSpec:
    """2(A:B): one interior atom at s = 1 with weight 1."""
    return ConnectionSpec(interior=((1.0, 1.0),))


def geometric_spec(n_nodes: int = 200) -> ConnectionSpec:
    """Midpoint discretization of the geometric mean's representing measure.

    In s = tan^2(theta) the measure ds/(pi sqrt(s) (1+s)) becomes uniform on
    theta in (0, pi/2), so n midpoint nodes with equal weights 1/n inherit
    fourth-order accuracy (the integrand is even at both ends).
    """
    if n_nodes < 1:
        raise UsageError(f"need at least one node, got {n_nodes}")
    theta = (np.arange(n_nodes) + 0.5) * (math.pi / 2.0) / n_nodes
    s = np.tan(theta) ** 2
    w = 1.0 / n_nodes
    return ConnectionSpec(interior=tuple((float(sk), w) for sk in s))


def _pd_eigendecompose(a: HermitianMatrix, label: str):
    dec = eigendecompose(a)
    lam = dec.eigenvalues
    if not lam[0] > 0.0:
        raise UsageError(f"{label} must be positive definite (min eig {lam[0]:.3e})")
    if lam[-1] / lam[0] > CONDITION_CAP:
        raise NumericalFailure(
            f"{label} too ill-conditioned to invert: cond = {lam[-1] / lam[0]:.3e}"
        )
    return dec


def invert_pd(a: HermitianMatrix, label: str = "matrix") -> HermitianMatrix:
    """Inverse of a positive definite matrix via reciprocal eigenvalues."""
    dec = _pd_eigendecompose(a, label)
    u = dec.unitary
    inv = (u / dec.eigenvalues) @ u.conj().T
    return HermitianMatrix(hermitian_part(inv))


def parallel_sum(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    """(A^-1 + B^-1)^-1 for positive definite A, B."""
    a._check_same_dim(b)
    return invert_pd(
        invert_pd(a, "left operand") + invert_pd(b, "right operand"),
        "sum of inverses",
    )


def _batched_parallel_terms(
    spec: ConnectionSpec, a: HermitianMatrix, b: HermitianMatrix
) -> np.ndarray:
    """sum_k w_k ((1+s_k)/s_k) (s_k A : B), all atoms in one batched solve."""
    ainv = invert_pd(a, "left operand").entries
    binv = invert_pd(b, "right operand").entries
    s = np.array([sk for sk, _ in spec.interior])
    w = np.array([wk for _, wk in spec.interior])
    stack = ainv[None, :, :] / s[:, None, None] + binv[None, :, :]
    try:
        lam, u = np.linalg.eigh(stack)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"batched eigendecomposition failed: {exc}") from exc
    if not lam.min() > 0.0:
        raise NumericalFailure("parallel-sum stack lost positive definiteness")
    if (lam.max(axis=1) / lam.min(axis=1)).max() > CONDITION_CAP:
        raise NumericalFailure("parallel-sum stack too ill-conditioned to invert")
    inv = (u / lam[:, None, :]) @ np.conjugate(np.swapaxes(u, 1, 2))
    coeff = w * (1.0 + s) / s
    return np.tensordot(coeff, inv, axes=(0, 0))


def evaluate_connection(
    spec: ConnectionSpec, a: HermitianMatrix, b: HermitianMatrix
) -> HermitianMatrix:
    """Apply the connection to a positive definite pair."""
    a._check_same_dim(b)
    _pd_eigendecompose(a, "left operand")
    _pd_eigendecompose(b, "right operand")
    acc = spec.alpha * a.entries + spec.beta * b.entries
    if spec.interior:
        acc = acc + _batched_parallel_terms(spec, a, b)
    return HermitianMatrix(hermitian_part(acc))


def representing_function(spec: ConnectionSpec) -> ScalarFunction:
    """The scalar shadow alpha + beta*x + sum w x(1+s)/(x+s) on (0, inf)."""
    alpha, beta, interior = spec.alpha, spec.beta, spec.interior

    def fn(x):
        if not x > 0.0:
            raise UsageError(f"representing function needs x > 0, got {x}")
        acc = alpha + beta * x
        for s, w in interior:
            acc += w * x * (1.0 + s) / (x + s)
        return acc

    def d1(x):
        acc = beta
        for s, w in interior:
            acc += w * (1.0 + s) * s / (x + s) ** 2
        return acc

    def d2(x):
        acc = 0.0
        for s, w in interior:
            acc += -2.0 * w * (1.0 + s) * s / (x + s) ** 3
        return acc

    return ScalarFunction(
        name="connection_fn",
        domain=POSITIVE_AXIS,
        fn=fn,
        d1=d1,
        d2=d2,
        claimed_class=OPERATOR_MONOTONE,
    )


def connection_from_spec_measure(m: MeasureInf) -> ConnectionSpec:
    return ConnectionSpec(alpha=m.mass0, beta=m.massInf, interior=m.interior)


def connection_from_function(
    f: ScalarFunction, grid=None, samples=None
) -> tuple[ConnectionSpec, float]:
    """Recover a connection whose representing function matches f.

    Fits an atom measure on the [0, 1] grid to samples of f, then maps atoms
    at 0 and 1 to the endpoint coefficients and interior atoms to
    s = lam/(1-lam).  Returns the spec together with the fit residual.
    """
    if grid is None:
        grid = default_lambda_grid(200)
    if samples is None:
        samples = np.geomspace(1e-3, 1e3, 60)
    pairs = [(float(t), f(float(t))) for t in samples]
    mu, residual = fit_measure(pairs, grid)
    alpha = beta = 0.0
    interior = []
    for lam, w in mu.atoms + mu.quad:
        if lam == 0.0:
            alpha += w
        elif lam == 1.0:
            beta += w
        else:
            interior.append((s_from_lambda(lam), w))
    return ConnectionSpec(alpha=alpha, beta=beta, interior=tuple(interior)), residual


def connection_measure_on_01(spec: ConnectionSpec) -> RadonMeasure01:
    """The spec's measure pushed onto [0, 1] (for synthesis/comparison)."""
    return convert_measure(spec.as_measure())


def synthesized_representing_function(spec: ConnectionSpec) -> ScalarFunction:
    """Same function as representing_function, via the [0, 1] kernel route."""
    return synthesize(connection_measure_on_01(spec))


def matrix_sqrt(a: HermitianMatrix) -> HermitianMatrix:
    """Principal square root of a positive definite matrix."""
    dec = _pd_eigendecompose(a, "matrix")
    u = dec.unitary
    out = (u * np.sqrt(dec.eigenvalues)) @ u.conj().T
    return HermitianMatrix(hermitian_part(out))


def geometric_mean_closed_form(
    a: HermitianMatrix, b: HermitianMatrix
) -> HermitianMatrix:
    """A^(1/2) (A^(-1/2) B A^(-1/2))^(1/2) A^(1/2), the exact geometric mean.

    Serves as the independent cross-check for the quadrature connection.
    """
    a._check_same_dim(b)
    _pd_eigendecompose(b, "right operand")
    root = matrix_sqrt(a)
    root_inv = invert_pd(root, "square root")
    inner = HermitianMatrix(hermitian_part(root_inv.entries @ b.entries @ root_inv.entries))
    mid = matrix_sqrt(inner)
    out = root.entries @ mid.entries @ root.entries
    return HermitianMatrix(hermitian_part(out))
