"""Divided differences and the matrices built from them.

First divided difference with a derivative limit at coincident nodes, the
fully symmetric three-node second difference with its own coincidence limits,
the matrix [dd1(f, t_i, t_j)] whose positivity certifies monotonicity at a
given order, the anchored matrix [dd2(f, t_i, t_j, anchor)], and the
difference-quotient transformation f -> dd1(f, ., t1).

Coincidence handling uses a relative node threshold: nodes s, t merge when
|s - t| <= TAU_NODE * max(1, |s|, |t|).  Sorting the nodes before the
symmetric second-difference form makes dd2 exactly permutation invariant,
including in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UsageError
from .functions import ScalarFunction, UNKNOWN
from .hermitian import HermitianMatrix, Interval

#: Relative node-coincidence threshold.
TAU_NODE = 1e-7


def _near(x: float, y: float) -> bool:
    return abs(x - y) <= TAU_NODE * max(1.0, abs(x), abs(y))


@dataclass(frozen=True)
class NodeSet:
    """Finite, ordered tuple of evaluation nodes strictly inside a domain."""

    nodes: tuple[float, ...]
    domain: Interval

    def __post_init__(self):
        nodes = tuple(float(t) for t in self.nodes)
        if not nodes:
            raise UsageError("node set must be nonempty")
        for t in nodes:
            if not self.domain.contains_strictly(t):
                raise UsageError(f"node {t} outside open interval {self.domain}")
        object.__setattr__(self, "nodes", nodes)

    def __len__(self):
        return len(self.nodes)


def dd1(f: ScalarFunction, s: float, t: float) -> float:
    """First divided difference; f'((s+t)/2) when the nodes coincide."""
    if _near(s, t):
        return f.deriv(0.5 * (s + t))
    return (f(t) - f(s)) / (t - s)


def dd2(f: ScalarFunction, a: float, b: float, c: float) -> float:
    """Symmetric second divided difference of f at three nodes.

    Distinct nodes use the three-term partial-fraction form
    sum_i f(t_i) / prod_{j != i} (t_i - t_j); one coincident pair {x, x} with
    a distinct third node y degenerates to (f'(x) - dd1(f, y, x)) / (x - y),
    and a triple coincidence to f''/2 at the mean.  Nodes are sorted first,
    which makes the value bitwise invariant under node permutations.
    """
    t1, t2, t3 = sorted((float(a), float(b), float(c)))
    low, high = _near(t1, t2), _near(t2, t3)
    if low and high:
        return 0.5 * f.deriv2((t1 + t2 + t3) / 3.0)
    if low or high:
        if low:
            x, y = 0.5 * (t1 + t2), t3
        else:
            x, y = 0.5 * (t2 + t3), t1
        return (f.deriv(x) - dd1(f, y, x)) / (x - y)
    return (
        f(t1) / ((t1 - t2) * (t1 - t3))
        + f(t2) / ((t2 - t1) * (t2 - t3))
        + f(t3) / ((t3 - t1) * (t3 - t2))
    )


@dataclass(frozen=True, eq=False)
class LoewnerMatrix:
    """Real symmetric matrix of first divided differences over a node set."""

    nodeset: NodeSet
    entries: np.ndarray

    def as_hermitian(self) -> HermitianMatrix:
        return HermitianMatrix(self.entries.astype(np.complex128))

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.entries)[0])


def loewner_matrix(f: ScalarFunction, ns: NodeSet) -> LoewnerMatrix:
    """[dd1(f, t_i, t_j)]_{i,j}; diagonal entries are exactly f'(t_i)."""
    ts = ns.nodes
    n = len(ts)
    m = np.empty((n, n), dtype=np.float64)
    for i in range(n):
        m[i, i] = dd1(f, ts[i], ts[i])
        for j in range(i + 1, n):
            v = dd1(f, ts[i], ts[j])
            m[i, j] = v
            m[j, i] = v
    m.setflags(write=False)
    return LoewnerMatrix(nodeset=ns, entries=m)


def second_dd_matrix(f: ScalarFunction, ns: NodeSet, anchor: float) -> LoewnerMatrix:
    """[dd2(f, t_i, t_j, anchor)]_{i,j} over the node set.

    The anchor is an explicit parameter; callers decide whether it also
    appears among the nodes.
    """
    if not ns.domain.contains_strictly(anchor):
        raise UsageError(f"anchor {anchor} outside {ns.domain}")
    ts = ns.nodes
    n = len(ts)
    m = np.empty((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i, n):
            v = dd2(f, ts[i], ts[j], anchor)
            m[i, j] = v
            m[j, i] = v
    m.setflags(write=False)
    return LoewnerMatrix(nodeset=ns, entries=m)


def difference_quotient_transform(f: ScalarFunction, t1: float) -> ScalarFunction:
    """The map t -> dd1(f, t, t1), with derivative t -> dd2(f, t, t, t1).

    Its value at t1 itself is f'(t1) via the coincidence limit, and its
    Loewner matrix over nodes t_i equals [dd2(f, t_i, t_j, t1)].
    """
    if not f.domain.contains_strictly(t1):
        raise UsageError(f"base point {t1} outside the domain of {f.name}")
    return ScalarFunction(
        name=f"diffquot:{f.name}@{t1:g}",
        domain=f.domain,
        fn=lambda t: dd1(f, t, t1),
        d1=lambda t: dd2(f, t, t, t1),
        d2=None,
        claimed_class=UNKNOWN,
    )
