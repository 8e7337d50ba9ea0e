"""Randomized verification and refutation of operator monotonicity/convexity.

Four checkers, each a seeded trial loop that either certifies a property on
every sampled instance or returns the earliest counterexample as a witness:

* check_monotone_order_n      -- positivity of first-divided-difference matrices
* check_convex_order_n        -- positivity of anchored second-difference matrices
* check_monotone_direct       -- f(A) <= f(B) on random ordered pairs
* check_midpoint_concavity    -- (f(A)+f(B))/2 <= f((A+B)/2) on random pairs

All trials use per-trial RNG substreams derived from (seed, tag, index), so
verdicts do not depend on execution order and are reproducible bit for bit.
min_eig_seen records the smallest scale-normalized eigenvalue encountered,
i.e. min over trials of min_eig / max(1, ||M||).

The module also hosts the function transformations that preserve operator
monotonicity (-f(t)/t, t/f(t), t*f(1/t)), the normalized-derivative reading
f'(1) for functions with f(1) = 1, and the two-extreme-point decomposition
f = w*f1 + (1-w)*f2 with w = f'(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .calculus import apply_function
from .divdiff import (
    TAU_NODE,
    NodeSet,
    dd1,
    dd2,
    difference_quotient_transform,
    loewner_matrix,
    second_dd_matrix,
)
from .errors import UsageError
from .functions import OPERATOR_MONOTONE, UNKNOWN, ScalarFunction, get_function
from .hermitian import (
    PSD_TOL,
    HermitianMatrix,
    Interval,
    random_hermitian,
    random_ordered_pair,
)

_TAG_MONOTONE = 11
_TAG_CONVEX = 12
_TAG_DIRECT = 13
_TAG_MIDPOINT = 14

#: Deviation-from-one allowed when requiring the normalization f(1) = 1.
NORMALIZATION_TOL = 1e-10

#: f'(1) within this distance of 0 or 1 counts as a degenerate extreme case.
DEGENERACY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Verdict:
    """Outcome of a seeded property check.

    witness is None on pass; on failure it is the offending NodeSet or the
    offending matrix pair, always re-checkable independently.
    """

    property: str
    order: int
    trials: int
    min_eig_seen: float
    outcome: str  # "pass" | "fail"
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"


def _seed_tuple(seed) -> tuple:
    if isinstance(seed, (tuple, list)):
        return tuple(int(s) for s in seed)
    return (int(seed),)


def _trial_rng(seed, tag: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(_seed_tuple(seed) + (tag, trial))


def sample_nodes(rng: np.random.Generator, n: int, iv: Interval) -> NodeSet:
    """n i.i.d. uniform nodes, redrawn until no pair is tau-coincident."""
    if not iv.bounded:
        raise UsageError("node sampling needs a bounded interval")
    for _ in range(100):
        ts = rng.uniform(iv.lo, iv.hi, n)
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                if abs(ts[i] - ts[j]) <= TAU_NODE * max(1.0, abs(ts[i]), abs(ts[j])):
                    ok = False
        if ok:
            return NodeSet(tuple(ts), iv)
    raise UsageError(f"could not draw {n} separated nodes in {iv}")


def sample_nodes_near_coincident(
    rng: np.random.Generator, n: int, iv: Interval
) -> NodeSet:
    """A cluster of nodes spaced ~10*TAU_NODE apart, to probe limit formulas."""
    if not iv.bounded:
        raise UsageError("node sampling needs a bounded interval")
    gap = 10.0 * TAU_NODE * max(1.0, abs(iv.lo), abs(iv.hi))
    lo = iv.lo + 0.25 * iv.width
    hi = iv.hi - 0.25 * iv.width - n * gap
    base = rng.uniform(lo, max(hi, lo + gap))
    jitter = rng.uniform(0.0, 1.0, n)
    ts = base + gap * (np.arange(n) + 0.1 * jitter)
    return NodeSet(tuple(ts), iv)


Sampler = Callable[[np.random.Generator, int, Interval], NodeSet]


def _check_iv_in_domain(f: ScalarFunction, iv: Interval):
    if not (iv.lo >= f.domain.lo and iv.hi <= f.domain.hi):
        raise UsageError(f"{iv} is not inside the domain of {f.name}")


def _psd_min_eig(entries: np.ndarray) -> tuple[float, bool, float]:
    lam = np.linalg.eigvalsh(entries)
    nrm = float(np.abs(lam).max())
    scaled = float(lam[0]) / max(1.0, nrm)
    return scaled, scaled >= -PSD_TOL, nrm


def check_monotone_order_n(
    f: ScalarFunction,
    n: int,
    iv: Interval,
    trials: int,
    seed,
    sampler: Optional[Sampler] = None,
) -> Verdict:
    """PSD test of [dd1(f, t_i, t_j)] over `trials` random order-n node sets."""
    _check_iv_in_domain(f, iv)
    draw = sampler or sample_nodes
    min_seen, witness = np.inf, None
    for t in range(trials):
        ns = draw(_trial_rng(seed, _TAG_MONOTONE, t), n, iv)
        scaled, ok, _ = _psd_min_eig(loewner_matrix(f, ns).entries)
        min_seen = min(min_seen, scaled)
        if not ok and witness is None:
            witness = ns
    return Verdict(
        property="monotone_order_n",
        order=n,
        trials=trials,
        min_eig_seen=float(min_seen),
        outcome="pass" if witness is None else "fail",
        witness=witness,
    )


def check_convex_order_n(
    f: ScalarFunction,
    n: int,
    iv: Interval,
    trials: int,
    seed,
    sampler: Optional[Sampler] = None,
) -> Verdict:
    """PSD test of [dd2(f, t_i, t_j, t_1)] with the first node as anchor."""
    _check_iv_in_domain(f, iv)
    draw = sampler or sample_nodes
    min_seen, witness = np.inf, None
    for t in range(trials):
        ns = draw(_trial_rng(seed, _TAG_CONVEX, t), n, iv)
        m = second_dd_matrix(f, ns, anchor=ns.nodes[0])
        scaled, ok, _ = _psd_min_eig(m.entries)
        min_seen = min(min_seen, scaled)
        if not ok and witness is None:
            witness = ns
    return Verdict(
        property="convex_order_n",
        order=n,
        trials=trials,
        min_eig_seen=float(min_seen),
        outcome="pass" if witness is None else "fail",
        witness=witness,
    )


def check_monotone_direct(
    f: ScalarFunction, n: int, iv: Interval, trials: int, seed
) -> Verdict:
    """f(A) <= f(B) on random ordered pairs A <= B with spectra in iv."""
    _check_iv_in_domain(f, iv)
    min_seen, witness = np.inf, None
    for t in range(trials):
        a, b = random_ordered_pair(n, iv, _trial_rng(seed, _TAG_DIRECT, t))
        diff = apply_function(f, b) - apply_function(f, a)
        scaled, ok, _ = _psd_min_eig(diff.entries)
        min_seen = min(min_seen, scaled)
        if not ok and witness is None:
            witness = (a, b)
    return Verdict(
        property="monotone_direct",
        order=n,
        trials=trials,
        min_eig_seen=float(min_seen),
        outcome="pass" if witness is None else "fail",
        witness=witness,
    )


def check_midpoint_concavity(
    f: ScalarFunction, n: int, iv: Interval, trials: int, seed
) -> Verdict:
    """(f(A) + f(B))/2 <= f((A+B)/2) on independent random pairs."""
    _check_iv_in_domain(f, iv)
    min_seen, witness = np.inf, None
    for t in range(trials):
        rng = _trial_rng(seed, _TAG_MIDPOINT, t)
        a = random_hermitian(n, iv, rng)
        b = random_hermitian(n, iv, rng)
        mid = HermitianMatrix((a.entries + b.entries) / 2.0)
        gap = apply_function(f, mid) - (apply_function(f, a) + apply_function(f, b)).scaled(0.5)
        scaled, ok, _ = _psd_min_eig(gap.entries)
        min_seen = min(min_seen, scaled)
        if not ok and witness is None:
            witness = (a, b)
    return Verdict(
        property="midpoint_concavity",
        order=n,
        trials=trials,
        min_eig_seen=float(min_seen),
        outcome="pass" if witness is None else "fail",
        witness=witness,
    )


# ---------------------------------------------------------------------------
# Monotonicity-preserving transformations

def _require_positive_on_domain(f: ScalarFunction):
    """Sampled positivity guard on a probe window inside the domain."""
    lo, hi = f.domain.lo, f.domain.hi
    lo = max(lo, 1e-3) if lo <= 0.0 else lo
    hi = min(hi, max(1e3, 10.0 * lo))
    lo, hi = lo * (1 + 1e-9) + 1e-12, hi * (1 - 1e-9)
    xs = np.geomspace(lo, hi, 25) if lo > 0 else np.linspace(lo, hi, 25)
    for x in xs:
        if not f(x) > 0.0:
            raise UsageError(
                f"{f.name} is not positive on its domain (f({x:.6g}) = {f(x):.6g})"
            )


def transform_neg_reciprocal(f: ScalarFunction) -> ScalarFunction:
    """t -> -f(t)/t; preserves operator monotonicity for positive f."""
    _require_positive_on_domain(f)
    fn, d1, d2 = f.fn, f.d1, f.d2
    closed = d1 is not None and d2 is not None

    def g(t):
        return -fn(t) / t

    def g1(t):
        return (fn(t) - t * d1(t)) / (t * t)

    def g2(t):
        return -d2(t) / t + 2.0 * d1(t) / (t * t) - 2.0 * fn(t) / (t**3)

    return ScalarFunction(
        name=f"negrecip({f.name})",
        domain=f.domain,
        fn=g,
        d1=g1 if closed else None,
        d2=g2 if closed else None,
        claimed_class=f.claimed_class,
    )


def transform_quotient(f: ScalarFunction) -> ScalarFunction:
    """t -> t/f(t); preserves operator monotonicity for positive monotone f."""
    _require_positive_on_domain(f)
    fn, d1, d2 = f.fn, f.d1, f.d2
    closed = d1 is not None and d2 is not None

    def g(t):
        return t / fn(t)

    def g1(t):
        v = fn(t)
        return (v - t * d1(t)) / (v * v)

    def g2(t):
        v = fn(t)
        return (-t * d2(t) * v - 2.0 * d1(t) * (v - t * d1(t))) / (v**3)

    return ScalarFunction(
        name=f"quotient({f.name})",
        domain=f.domain,
        fn=g,
        d1=g1 if closed else None,
        d2=g2 if closed else None,
        claimed_class=f.claimed_class,
    )


def transform_involution(f: ScalarFunction) -> ScalarFunction:
    """t -> t * f(1/t); an involution on positive monotone functions."""
    _require_positive_on_domain(f)
    fn, d1, d2 = f.fn, f.d1, f.d2
    closed = d1 is not None and d2 is not None

    def g(t):
        return t * fn(1.0 / t)

    def g1(t):
        r = 1.0 / t
        return fn(r) - d1(r) * r

    def g2(t):
        return d2(1.0 / t) / (t**3)

    return ScalarFunction(
        name=f"involution({f.name})",
        domain=f.domain,
        fn=g,
        d1=g1 if closed else None,
        d2=g2 if closed else None,
        claimed_class=f.claimed_class,
    )


# ---------------------------------------------------------------------------
# Normalized functions: f(1) = 1

def _require_normalized(f: ScalarFunction):
    dev = abs(f(1.0) - 1.0)
    if dev > NORMALIZATION_TOL:
        raise UsageError(
            f"{f.name} is not normalized: |f(1) - 1| = {dev:.3e} "
            f"(allowed {NORMALIZATION_TOL:.0e})"
        )


def derivative_bound_at_one(f: ScalarFunction) -> float:
    """f'(1) for a normalized function; lands in [0, 1] for monotone members."""
    _require_normalized(f)
    return f.deriv(1.0)


@dataclass(frozen=True)
class ExtremeDecomposition:
    """f = weight * f1 + (1 - weight) * f2 with f1(1) = f2(1) = 1."""

    f1: ScalarFunction
    f2: ScalarFunction
    weight: float
    degenerate: bool = False


def extreme_decomposition(f: ScalarFunction) -> ExtremeDecomposition:
    """Split a normalized monotone function across the derivative weight.

    With w = f'(1):  f1(t) = (t/w) * dd1(f, t, 1)  and
    f2(t) = dd1(g, 1/t, 1) / (1 - w)  where g(t) = t f(1/t).  At w = 0 or 1
    the split degenerates to the constant-one and identity pieces.
    """
    _require_normalized(f)
    w = f.deriv(1.0)
    if w < -DEGENERACY_TOL or w > 1.0 + DEGENERACY_TOL:
        raise UsageError(f"derivative weight f'(1) = {w:.6g} outside [0, 1]")

    if w <= DEGENERACY_TOL or w >= 1.0 - DEGENERACY_TOL:
        return ExtremeDecomposition(
            f1=get_function("id"),
            f2=get_function("const1"),
            weight=float(round(w)),
            degenerate=True,
        )

    quot = difference_quotient_transform(f, 1.0)
    invol = transform_involution(f)
    quot_inv = difference_quotient_transform(invol, 1.0)

    f1 = ScalarFunction(
        name=f"extreme1({f.name})",
        domain=f.domain,
        fn=lambda t: (t / w) * quot(t),
        claimed_class=OPERATOR_MONOTONE if f.claimed_class == OPERATOR_MONOTONE else UNKNOWN,
    )
    f2 = ScalarFunction(
        name=f"extreme2({f.name})",
        domain=f.domain,
        fn=lambda t: quot_inv(1.0 / t) / (1.0 - w),
        claimed_class=OPERATOR_MONOTONE if f.claimed_class == OPERATOR_MONOTONE else UNKNOWN,
    )
    return ExtremeDecomposition(f1=f1, f2=f2, weight=float(w), degenerate=False)
