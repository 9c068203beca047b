"""Polytope geometry of the guaranteed-stable region.

Cube vertices with i angles at 0 and j = N - i at pi/2 map under f to
permutations of (j,...,j, -i,...,-i). These 2**N - 2 points are the vertices
of the Voronoi cell of the root lattice A_N, scaled by N. Equivalently, the
cell is the projection of the cube [-N/2, N/2]**N onto the mean-zero plane.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.optimize import minimize_scalar

from .core import as_frequencies

__all__ = [
    "VertexClass",
    "vertex_class",
    "vertex_classes",
    "vertex_generating_theta",
    "all_vertices",
    "omega_min",
    "omega_max",
    "voronoi_contains",
    "inscribed_radius",
    "dual_polytope_vertex",
    "dual_polytope_coefficient",
]


@dataclass(frozen=True)
class VertexClass:
    i: int
    j: int
    canonical_omega: np.ndarray
    norm_sq: int

    @property
    def n(self) -> int:
        return self.i + self.j

    @property
    def multiplicity(self) -> int:
        """Number of distinct vertices (permutations) in this class."""
        return math.comb(self.n, self.i)


def vertex_class(n: int, i: int) -> VertexClass:
    """Frequency class of the cube vertex with ``i`` right angles followed by ``n - i`` zeros."""
    if n < 2:
        raise ValueError("need n >= 2")
    if not 1 <= i <= n - 1:
        raise ValueError(f"i must lie in [1, {n - 1}], got {i}")
    j = n - i
    omega = np.concatenate([np.full(i, float(j)), np.full(j, -float(i))])
    return VertexClass(i=i, j=j, canonical_omega=omega, norm_sq=i * j * n)


def vertex_classes(n: int):
    return [vertex_class(n, i) for i in range(1, n)]


def vertex_generating_theta(n: int, i: int) -> np.ndarray:
    """Phases whose fixed-point frequency ``-f(theta)`` is the canonical vertex of class ``i``."""
    return np.concatenate([np.full(i, np.pi / 2), np.zeros(n - i)])


def all_vertices(n: int, max_n: int = 12) -> np.ndarray:
    """All 2**n - 2 vertex frequency vectors, one row each."""
    if n > max_n:
        raise ValueError(f"full expansion has 2**{n} - 2 rows; limited to n <= {max_n}")
    rows = []
    for i in range(1, n):
        j = n - i
        for zeros in combinations(range(n), i):
            w = np.full(n, -float(i))
            w[list(zeros)] = j
            rows.append(w)
    return np.array(rows)


def omega_min(n: int) -> np.ndarray:
    """(1, ..., 1, -(N-1)): the shortest vertex, squared norm N(N-1)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return vertex_class(n, n - 1).canonical_omega


def omega_max(n: int) -> np.ndarray:
    """Longest vertex: two cliques as equal as parity allows.

    Squared norm N**3/4 for even N and N(N**2 - 1)/4 for odd N.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return vertex_class(n, n // 2).canonical_omega


def voronoi_contains(omega, side: float) -> bool:
    """Whether omega lies in the projection of [-side/2, side/2]**N onto sum = 0.

    omega is the projection of omega + t*1 for every t, so membership asks for
    a t with every |omega_i + t| <= side/2. Such a t exists iff the spread
    max - min is at most ``side``.
    """
    omega = as_frequencies(omega)
    return bool(omega.max() - omega.min() <= side)


def inscribed_radius(n: int) -> float:
    """Inradius of the Voronoi polytope for cube side N: N / sqrt(2)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return n / math.sqrt(2.0)


def dual_polytope_coefficient(n: int) -> float:
    """Closed-form maximum over x of (N-1) sin x + sin 2x."""
    m = n - 1
    r = math.sqrt(32 + m * m)
    return (r + 3 * m) * math.sqrt(16 + m * r - m * m) / (16 * math.sqrt(2))


def dual_polytope_vertex(n: int):
    """Vertex omega_N (1, 0, ..., 0, -1) of the scaled dual polytope.

    Returns ``(omega, omega_N)``. The closed form is checked against a direct
    numerical maximization of (N-1) sin x + sin 2x over x in [0, pi].
    """
    if n < 3:
        raise ValueError("need n >= 3")
    coef = dual_polytope_coefficient(n)
    res = minimize_scalar(
        lambda x: -((n - 1) * math.sin(x) + math.sin(2 * x)),
        bounds=(0.0, math.pi / 2), method="bounded", options={"xatol": 1e-12},
    )
    if abs(-res.fun - coef) > 1e-9 * max(1.0, coef):
        raise ArithmeticError(f"closed form {coef!r} disagrees with maximization {-res.fun!r}")
    omega = np.zeros(n)
    omega[0], omega[-1] = coef, -coef
    return omega, coef
