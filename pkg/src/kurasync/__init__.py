"""Full synchrony of the finite-N Kuramoto model on the complete graph.

Stability indices of phase-locked states, the region of synchronizable
frequency vectors, critical couplings, and the probability of synchrony for
Gaussian frequencies.
"""
__version__ = "0.1.0"

from .core import (
    coupling_map,
    energy,
    jacobian,
    order_parameter,
    project_mean_zero,
    rank2_parts,
    velocity_field,
)
from .index import index_oracle, kappa_of, kirchhoff_identity_check, tau, unstable_dim
from .region import (
    boundary_distance,
    convexity_probe,
    is_synchronizable,
    necessary_filters,
    reconstruct_theta,
    solve_kappa,
)
from .lattice import (
    dual_polytope_vertex,
    inscribed_radius,
    omega_max,
    omega_min,
    vertex_class,
    vertex_classes,
    voronoi_contains,
)
from .bounds import (
    chi_cdf,
    coupling_bounds,
    erf,
    gamma_max_bounds,
    gamma_min,
    phi,
    psync_lower,
    psync_upper,
)
from .montecarlo import estimate_conditional, estimate_direct, transition_curve
from .dynamics import detect_locking, integrate
