"""Scalar function catalog and smooth regularization.

A ScalarFunction bundles an evaluator with optional closed-form first and
second derivatives (central finite differences fill in when they are absent)
and a claimed classification that verification code never trusts.  The
catalog collects the standard positive operator monotone functions on
(0, inf) -- powers, Moebius kernels t/(lam + (1-lam)t), the arithmetic and
harmonic representers -- together with deliberate non-examples (square, cube,
exp) used to exercise refutation paths.

The second half implements mollification: convolution against the compactly
supported bump exp(-1/(1-x^2)), normalized to unit mass, evaluated by
adaptive Gauss-Legendre quadrature.  Differentiating the kernel instead of
the function gives derivatives of the smoothed function without ever
differencing the input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .errors import UsageError
from .hermitian import Interval, POSITIVE_AXIS

# Classification tags (metadata only; every claim is re-checked numerically).
OPERATOR_MONOTONE = "operator_monotone"
OPERATOR_CONVEX = "operator_convex"
NEITHER = "neither"
UNKNOWN = "unknown"

_EPS = float(np.finfo(np.float64).eps)
_FD1_H = _EPS ** (1.0 / 3.0)
_FD2_H = _EPS**0.25


@dataclass(frozen=True)
class ScalarFunction:
    """A real function on an open interval, with derivative access.

    deriv/deriv2 use the closed forms when provided and otherwise fall back
    to central differences with steps h ~ eps^(1/3) resp. eps^(1/4), scaled
    by max(1, |x|).
    """

    name: str
    domain: Interval
    fn: Callable[[float], float]
    d1: Optional[Callable[[float], float]] = None
    d2: Optional[Callable[[float], float]] = None
    claimed_class: str = UNKNOWN

    def __call__(self, x: float) -> float:
        return float(self.fn(x))

    def deriv(self, x: float) -> float:
        if self.d1 is not None:
            return float(self.d1(x))
        h = _FD1_H * max(1.0, abs(x))
        return (self(x + h) - self(x - h)) / (2.0 * h)

    def deriv2(self, x: float) -> float:
        if self.d2 is not None:
            return float(self.d2(x))
        h = _FD2_H * max(1.0, abs(x))
        return (self(x + h) - 2.0 * self(x) + self(x - h)) / (h * h)

    def negated(self) -> "ScalarFunction":
        fn, d1, d2 = self.fn, self.d1, self.d2
        return ScalarFunction(
            name=f"neg({self.name})",
            domain=self.domain,
            fn=lambda x: -fn(x),
            d1=None if d1 is None else (lambda x: -d1(x)),
            d2=None if d2 is None else (lambda x: -d2(x)),
            claimed_class=UNKNOWN,
        )


def _moebius_kernel(lam: float) -> ScalarFunction:
    l = float(lam)

    def fn(t):
        return t / (l + (1.0 - l) * t)

    def d1(t):
        den = l + (1.0 - l) * t
        return l / (den * den)

    def d2(t):
        den = l + (1.0 - l) * t
        return -2.0 * l * (1.0 - l) / (den * den * den)

    return ScalarFunction(
        name=f"kernel:{l:g}",
        domain=POSITIVE_AXIS,
        fn=fn,
        d1=d1,
        d2=d2,
        claimed_class=OPERATOR_MONOTONE,
    )


def _power(p: float) -> ScalarFunction:
    p = float(p)
    return ScalarFunction(
        name=f"power:{p:g}",
        domain=POSITIVE_AXIS,
        fn=lambda t: t**p,
        d1=lambda t: p * t ** (p - 1.0),
        d2=lambda t: p * (p - 1.0) * t ** (p - 2.0),
        claimed_class=OPERATOR_MONOTONE,
    )


def _fixed_members() -> dict[str, ScalarFunction]:
    pos = POSITIVE_AXIS
    members = [
        ScalarFunction("id", pos, lambda t: t, lambda t: 1.0, lambda t: 0.0,
                       OPERATOR_MONOTONE),
        ScalarFunction("const1", pos, lambda t: 1.0, lambda t: 0.0, lambda t: 0.0,
                       OPERATOR_MONOTONE),
        ScalarFunction("sqrt", pos, math.sqrt,
                       lambda t: 0.5 / math.sqrt(t),
                       lambda t: -0.25 * t ** (-1.5),
                       OPERATOR_MONOTONE),
        ScalarFunction("arithmetic", pos, lambda t: (1.0 + t) / 2.0,
                       lambda t: 0.5, lambda t: 0.0, OPERATOR_MONOTONE),
        ScalarFunction("harmonic_rep", pos, lambda t: 2.0 * t / (1.0 + t),
                       lambda t: 2.0 / (1.0 + t) ** 2,
                       lambda t: -4.0 / (1.0 + t) ** 3,
                       OPERATOR_MONOTONE),
        ScalarFunction("square", pos, lambda t: t * t, lambda t: 2.0 * t,
                       lambda t: 2.0, NEITHER),
        ScalarFunction("cube", pos, lambda t: t**3, lambda t: 3.0 * t * t,
                       lambda t: 6.0 * t, NEITHER),
        ScalarFunction("exp", pos, math.exp, math.exp, math.exp, NEITHER),
    ]
    out = {m.name: m for m in members}
    for p in (0.25, 0.5, 0.75):
        f = _power(p)
        out[f.name] = f
    for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
        f = _moebius_kernel(lam)
        out[f.name] = f
    return out


_CATALOG = _fixed_members()


def catalog() -> list[ScalarFunction]:
    """All named catalog members, in a stable order."""
    return list(_CATALOG.values())


def catalog_names() -> list[str]:
    return list(_CATALOG)


def get_function(name: str) -> ScalarFunction:
    """Look up a catalog member, or build a family member like 'power:0.3'.

    Unknown names raise UsageError listing what is available.
    """
    if name in _CATALOG:
        return _CATALOG[name]
    if ":" in name:
        family, _, arg = name.partition(":")
        try:
            val = float(arg)
        except ValueError:
            raise UsageError(f"bad parameter {arg!r} in function name {name!r}") from None
        if family == "power":
            if not 0.0 < val <= 1.0:
                raise UsageError(f"power exponent must be in (0, 1], got {val}")
            return _power(val)
        if family == "kernel":
            if not 0.0 <= val <= 1.0:
                raise UsageError(f"kernel parameter must be in [0, 1], got {val}")
            return _moebius_kernel(val)
    raise UsageError(
        f"unknown function {name!r}; available: {', '.join(catalog_names())} "
        f"(families: power:p, kernel:lam)"
    )


# ---------------------------------------------------------------------------
# Mollification

def _bump(x: float) -> float:
    if abs(x) >= 1.0:
        return 0.0
    return math.exp(-1.0 / (1.0 - x * x))


def _bump_deriv(x: float) -> float:
    if abs(x) >= 1.0:
        return 0.0
    q = 1.0 - x * x
    return math.exp(-1.0 / q) * (-2.0 * x / (q * q))


@lru_cache(maxsize=None)
def _leggauss(n: int):
    return np.polynomial.legendre.leggauss(n)


def _adaptive_gl(g, start: int = 64, stop_tol: float = 1e-10, cap: int = 1024) -> float:
    """Gauss-Legendre on [-1, 1], doubling nodes until the value settles."""
    n = start
    x, w = _leggauss(n)
    prev = float(np.sum(w * np.array([g(xi) for xi in x])))
    while n < cap:
        n *= 2
        x, w = _leggauss(n)
        cur = float(np.sum(w * np.array([g(xi) for xi in x])))
        if abs(cur - prev) < stop_tol:
            return cur
        prev = cur
    return prev


@dataclass(frozen=True)
class Mollifier:
    """Smooth even kernel of unit mass supported on (-1, 1)."""

    profile: Callable[[float], float]
    profile_deriv: Callable[[float], float]
    normalizer: float

    def density(self, x: float) -> float:
        return self.normalizer * self.profile(x)

    def density_deriv(self, x: float) -> float:
        return self.normalizer * self.profile_deriv(x)


@lru_cache(maxsize=1)
def standard_mollifier() -> Mollifier:
    """The bump exp(-1/(1-x^2)), normalized to integrate to 1."""
    raw_mass = _adaptive_gl(_bump, start=64, stop_tol=1e-12, cap=2048)
    return Mollifier(profile=_bump, profile_deriv=_bump_deriv,
                     normalizer=1.0 / raw_mass)


def _check_mollify_window(f: ScalarFunction, eps: float, x: float):
    if not eps > 0.0:
        raise UsageError(f"mollification width must be positive, got {eps}")
    if not (f.domain.lo < x - eps and x + eps < f.domain.hi):
        raise UsageError(
            f"[{x - eps}, {x + eps}] is not strictly inside the domain "
            f"({f.domain.lo}, {f.domain.hi}) of {f.name}"
        )


def mollify(f: ScalarFunction, eps: float, x: float,
            mollifier: Mollifier | None = None) -> float:
    """Value at x of f convolved with the eps-width mollifier."""
    _check_mollify_window(f, eps, x)
    m = mollifier or standard_mollifier()
    return _adaptive_gl(lambda y: f(x - eps * y) * m.density(y))


def mollify_derivative(f: ScalarFunction, eps: float, x: float,
                       mollifier: Mollifier | None = None) -> float:
    """Derivative of the mollified function, via the differentiated kernel.

    (f * phi_eps)'(x) = (1/eps) * int f(x - eps u) phi'(u) du; no difference
    quotient of f is ever taken.
    """
    _check_mollify_window(f, eps, x)
    m = mollifier or standard_mollifier()
    val = _adaptive_gl(lambda u: f(x - eps * u) * m.density_deriv(u))
    return val / eps


class RegularizedSequence:
    """Members f_(1/n) of the mollified sequence of f on a base interval.

    member(n) is f smoothed at width 1/n, defined on the interval shrunk by
    1/n on both sides.  Requires (hi - lo)/2 > 1/n_start so the first member
    has a nonempty domain.
    """

    def __init__(self, f: ScalarFunction, interval: Interval, n_start: int):
        if n_start < 1:
            raise UsageError(f"n_start must be >= 1, got {n_start}")
        if interval.bounded and not interval.width / 2.0 > 1.0 / n_start:
            raise UsageError(
                f"interval {interval} too narrow for starting width 1/{n_start}"
            )
        if not (interval.lo >= f.domain.lo and interval.hi <= f.domain.hi):
            raise UsageError(f"{interval} is not inside the domain of {f.name}")
        self.f = f
        self.interval = interval
        self.n_start = n_start

    def member(self, n: int) -> ScalarFunction:
        if n < self.n_start:
            raise UsageError(f"member index {n} below start {self.n_start}")
        f, eps = self.f, 1.0 / n
        hi = self.interval.hi - eps if math.isfinite(self.interval.hi) else math.inf
        dom = Interval(self.interval.lo + eps, hi)
        return ScalarFunction(
            name=f"mollified:{f.name}:{n}",
            domain=dom,
            fn=lambda x: mollify(f, eps, x),
            d1=lambda x: mollify_derivative(f, eps, x),
            d2=None,
            claimed_class=f.claimed_class,
        )

    def __getitem__(self, n: int) -> ScalarFunction:
        return self.member(n)


def regularize_sequence(f: ScalarFunction, interval: Interval,
                        n_start: int) -> RegularizedSequence:
    return RegularizedSequence(f, interval, n_start)
