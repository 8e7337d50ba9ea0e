"""Hunt for order-2 counterexamples: t^2 is monotone but not operator monotone.

The scalar square is increasing on (0, inf), yet its 2x2 divided-difference
matrices go indefinite almost immediately.  This script prints the first
witness node pair and verifies it by hand, then confirms the same failure on
an actual matrix pair A <= B with f(A) <= f(B) violated.

Run:  python3 scripts/refute_square.py [seed]
"""

import sys

import numpy as np

from loewnerlab.divdiff import loewner_matrix
from loewnerlab.functions import get_function
from loewnerlab.hermitian import Interval
from loewnerlab.monotonicity import check_monotone_direct, check_monotone_order_n

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
square = get_function("square")
iv = Interval(0.1, 10.0)

v = check_monotone_order_n(square, 2, iv, trials=100, seed=seed)
print(f"order-2 Loewner check: {v.outcome}  (min scaled eigenvalue {v.min_eig_seen:.4f})")
ns = v.witness
lm = loewner_matrix(square, ns)
t1, t2 = ns.nodes
print(f"witness nodes: ({t1:.4f}, {t2:.4f})")
print("matrix of divided differences (entry = s + t):")
print(np.array_str(lm.entries, precision=4))
print(f"det = {np.linalg.det(lm.entries):.4f}  "
      f"(equals -(t1 - t2)^2 = {-(t1 - t2) ** 2:.4f})")

v2 = check_monotone_direct(square, 2, Interval(0.5, 4.0), trials=200, seed=seed)
print(f"\ndirect matrix check A <= B but A^2 </= B^2: {v2.outcome}")
a, b = v2.witness
gap = b.entries @ b.entries - a.entries @ a.entries
print(f"min eigenvalue of B^2 - A^2: {np.linalg.eigvalsh(gap)[0]:.4f}")
