"""
Counting unstable directions without an eigensolver
===================================================

The Jacobian of the Kuramoto vector field is a diagonal matrix plus a rank
two correction. Its number of positive eigenvalues is therefore fixed by the
signs of the cosine sums kappa_i and by whether tau = sum 1/kappa_i exceeds
two. We compare that count with a dense eigen-decomposition.
"""

import numpy as np

from kurasync import index_oracle, kappa_of, unstable_dim
from kurasync.errors import Degenerate
from kurasync.lattice import vertex_generating_theta

rng = np.random.default_rng(0)

agree = total = 0
for _ in range(2000):
    theta = rng.uniform(0, 2 * np.pi, rng.integers(3, 9))
    try:
        formula = unstable_dim(theta)
    except Degenerate:
        continue
    total += 1
    agree += formula.as_tuple() == index_oracle(theta).as_tuple()
print(f"formula agrees with eigvalsh on {agree} / {total} configurations")

# a single configuration in detail
theta = np.array([0.1, 0.5, 2.9, 4.0])
kv = kappa_of(theta)
print("kappa:", np.round(kv.kappa, 4), " tau:", np.sum(1 / kv.kappa))
print("formula:", unstable_dim(theta).as_tuple(), " oracle:", index_oracle(theta).as_tuple())

# at a cube corner tau is exactly 2 and the kernel is two dimensional
theta = vertex_generating_theta(5, 2)
print("corner kappa:", kappa_of(theta).kappa, " oracle:", index_oracle(theta).as_tuple())
