"""Fit the representing measure of sqrt and read its structure back.

Run:  python3 scripts/fit_sqrt_measure.py [n_atoms]
"""

import sys

import numpy as np

from loewnerlab.measures import default_lambda_grid, endpoint_masses, fit_measure, synthesize

n_atoms = int(sys.argv[1]) if len(sys.argv) > 1 else 200

ts = np.geomspace(0.01, 100.0, 100)
samples = [(float(t), float(np.sqrt(t))) for t in ts]
mu, residual = fit_measure(samples, default_lambda_grid(n_atoms))

print(f"atoms used: {len(mu.atoms)} of {n_atoms}   residual: {residual:.3e}")
print(f"total mass: {mu.total_mass():.6f}   (sqrt(1) = 1, so mass should be ~1)")

f = synthesize(mu)
print("\n   t        sqrt(t)      mixture      rel err")
for t in (0.02, 0.5, 1.0, 7.0, 80.0):
    exact = np.sqrt(t)
    got = f(t)
    print(f"{t:7.2f}  {exact:11.8f}  {got:11.8f}  {abs(got - exact) / exact:.2e}")

m0, mi = endpoint_masses(f)
print(f"\nendpoint masses: at 0 -> {m0:.3e}, at infinity -> {mi:.3e}")
print("(sqrt's true measure is a pure density; the small endpoint atoms are")
print(" what the finite grid spends to mimic its tails)")
