"""
The synchronizable region for three oscillators
===============================================

For N = 3 the mean-zero frequency plane is two dimensional, so the set of
frequency vectors that admit a stable phase-locked state is a planar convex
region. We trace its boundary, compare it with the hexagon spanned by the
lattice vertices, and check one locked state by integrating the ODE.
"""

import math

import numpy as np

from kurasync import boundary_distance, is_synchronizable, vertex_classes
from kurasync.dynamics import detect_locking, integrate

# an orthonormal basis of the plane sum(omega) = 0
e1 = np.array([1.0, 0.0, -1.0]) / math.sqrt(2)
e2 = np.array([1.0, -2.0, 1.0]) / math.sqrt(6)

# distance to the boundary along 360 evenly spaced directions
angles = 2 * np.pi * np.arange(360) / 360
radii = np.array([boundary_distance(math.cos(a) * e1 + math.sin(a) * e2).s_star
                  for a in angles])
print(f"closest boundary point: {radii.min():.6f} (sqrt 6 = {math.sqrt(6):.6f})")
print(f"farthest boundary point: {radii.max():.6f}")
print(f"relative shift: {100 * (radii.max() / radii.min() - 1):.2f} %")

# the closest points are the six hexagon vertices; they sit exactly on the boundary
for vc in vertex_classes(3):
    print(vc.canonical_omega, is_synchronizable(vc.canonical_omega).status)

# pick a point well inside, reconstruct its locked state and integrate from a kick
omega = 2.0 * e1
decision = is_synchronizable(omega)
print("tau at 2 e1:", decision.tau)
traj = integrate(decision.theta + 0.05, omega, t_end=20.0, record_every=100)
print("locked after integration:", detect_locking(traj))

# just beyond the boundary along e1 the oscillators drift apart
traj = integrate(np.zeros(3), 2.6 * e1, t_end=60.0, record_every=100)
print("locked beyond the boundary:", detect_locking(traj))
