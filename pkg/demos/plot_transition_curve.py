"""
Probability of full synchrony for Gaussian frequencies
======================================================

Frequencies are drawn from a standard normal law and projected onto the
mean-zero plane. Conditioning on the direction of omega, the probability of
synchrony is a chi distribution evaluated at gamma times the boundary
distance. The curve is plotted against delta = gamma / phi(N), with the
analytic lower and upper bounds alongside.
"""

import numpy as np

from kurasync import phi, transition_curve

n = 200
deltas = np.arange(0.25, 3.01, 0.25)
rows = transition_curve(n, deltas, samples=300, seed=1)

print(f"N = {n}, phi(N) = {phi(n):.5f}")
print(" delta   p_hat     std_err   lower     upper")
for r in rows:
    print(f"{r.delta:6.2f}  {r.p_hat:.3e}  {r.std_err:.1e}  {r.psync_lower:.3e}  {r.psync_upper:.3e}")

# the classical 1/N coupling scale sits far below the transition
print("delta for gamma = 1/N:", 1 / (n * phi(n)))
