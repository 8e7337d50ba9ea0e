"""Convergence of the quadrature geometric mean to the closed form.

The geometric mean is the connection of the measure ds/(pi sqrt(s)(1+s)).
Substituting s = tan^2(theta) turns that density into the uniform one on
(0, pi/2), so equal-weight midpoint nodes converge geometrically.  The table
below pits the n-node connection against A^(1/2)(A^(-1/2)BA^(-1/2))^(1/2)A^(1/2).

Run:  python3 scripts/geometric_mean_quadrature.py [seed]
"""

import sys

import numpy as np

from loewnerlab.connections import (
    evaluate_connection,
    geometric_mean_closed_form,
    geometric_spec,
)
from loewnerlab.hermitian import Interval, random_hermitian

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 12
rng = np.random.default_rng(seed)
a = random_hermitian(4, Interval(0.05, 20.0), rng)
b = random_hermitian(4, Interval(0.05, 20.0), rng)

exact = geometric_mean_closed_form(a, b)
scale = exact.norm()
print(f"spectra span [0.05, 20]; ||G|| = {scale:.4f}")
print("\n  nodes    max entry error    relative")
prev = None
for n in (2, 4, 8, 16, 32, 64, 128):
    err = np.abs(evaluate_connection(geometric_spec(n), a, b).entries
                 - exact.entries).max()
    ratio = "" if prev is None or err == 0.0 else f"  ({prev / err:8.1f}x)"
    print(f"  {n:5d}    {err:.6e}    {err / scale:.2e}{ratio}")
    prev = err
print("\neach doubling multiplies accuracy until roundoff, not a fixed power")
