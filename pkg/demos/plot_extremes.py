"""
Extremal couplings and lattice vertices
=======================================

The vertices of the projected cube are the frequency vectors of the form
(j, ..., j, -i, ..., -i). The shortest and longest of them set the largest and
smallest critical couplings over unit-norm frequency vectors.
"""

import numpy as np

from kurasync import coupling_bounds, omega_max, omega_min
from kurasync.bounds import odd_extremal_frequency

print("  N   gamma_min   kind        gamma_max in          |w_min|^2  |w_max|^2")
for n in range(2, 13):
    cb = coupling_bounds(n)
    kind = "exact" if cb.gamma_min_exact else "conjecture"
    print(f"{n:3d}   {cb.gamma_min:.6f}  {kind:10s}  [{cb.gamma_max_lo:.4f}, {cb.gamma_max_hi:.4f}]"
          f"   {omega_min(n) @ omega_min(n):8.0f}  {omega_max(n) @ omega_max(n):8.0f}")

# for odd N the extremal vector has three groups; the closed form matches a direct maximisation
for n in (3, 9, 41):
    print(n, odd_extremal_frequency(n), odd_extremal_frequency(n, numeric=True))

# approach to the even-N law 2 N^-3/2
for n in (5, 21, 101, 1001):
    print(n, coupling_bounds(n).gamma_min * n ** 1.5 / 2)
