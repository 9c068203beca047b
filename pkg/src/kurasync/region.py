"""Membership in the set of fully synchronizable frequency vectors.

A mean-zero ``omega`` admits a stable phase-locked state at unit coupling iff
the system

    kappa_i**2 + omega_i**2 = sum_j kappa_j,   kappa_i > 0,   sum_i 1/kappa_i < 2

has a solution. On the stable branch kappa_i = sqrt(S - omega_i**2), which
reduces everything to the scalar equation

    g(S) = sum_i sqrt(S - omega_i**2) - S = 0.

``g`` is concave with ``g'(S) = tau(S)/2 - 1``, so the stable solution is the
largest root, and it exists iff the maximum of ``g`` (reached where tau = 2)
is non-negative. Both the peak and the root are found by safeguarded Newton
in the shifted variable ``x = S - max_i omega_i**2``, which keeps the
smallest kappa accurate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from ._rootfind import bisect_predicate, newton_bisect
from .core import as_frequencies, coupling_map
from .errors import InconsistentInput, Marginal
from .index import KappaVector, kappa_of

__all__ = [
    "KappaVector",
    "SyncDecision",
    "BoundaryDistance",
    "solve_kappa",
    "sync_margin",
    "is_synchronizable",
    "reconstruct_theta",
    "boundary_distance",
    "necessary_filters",
    "convexity_probe",
    "outer_radius",
    "TOL_MARGIN",
]

TOL_MARGIN = 1e-9
# |g(peak)| below this fraction of S is treated as a tangency (tau == 2)
_PEAK_RTOL = 1e-12


@dataclass(frozen=True)
class SyncDecision:
    synchronizable: bool
    marginal: bool = False
    kappa: Optional[KappaVector] = None
    tau: Optional[float] = None
    theta: Optional[np.ndarray] = None

    @property
    def status(self) -> str:
        if self.marginal:
            return "marginal"
        return "synchronizable" if self.synchronizable else "not_synchronizable"

    def __bool__(self):
        return self.synchronizable


@dataclass(frozen=True)
class BoundaryDistance:
    """Distance ``s_star`` from the origin to the region boundary along ``direction``.

    The boundary lies in ``[lo, hi]``; ``tolerance = hi - lo``.
    """

    direction: np.ndarray
    s_star: float
    tolerance: float
    lo: float
    hi: float


def outer_radius(n: int) -> float:
    """Radius N**1.5 / 2 of a ball containing every synchronizable omega (gamma = 1)."""
    return 0.5 * n ** 1.5


class _Reduced:
    """The scalar problem for one frequency vector, in the shifted variable x."""

    def __init__(self, omega):
        a = omega * omega
        self.n = a.size
        self.m = float(a.max())
        self.b = self.m - a  # >= 0, zero at the largest |omega_i|

    def kappa(self, x):
        return np.sqrt(x + self.b)

    def tau(self, x):
        if x <= 0:
            return math.inf
        return float(np.sum(1.0 / self.kappa(x)))

    def dtau(self, x):
        return float(-0.5 * np.sum((x + self.b) ** -1.5))

    def g(self, x):
        return float(np.sum(self.kappa(x)) - x - self.m)

    def dg(self, x):
        return 0.5 * self.tau(x) - 1.0

    def peak(self):
        """Location and height of the maximum of g (where tau = 2)."""
        # tau(x) <= N / sqrt(x), so tau < 2 strictly (despite rounding) just past N**2 / 4
        hi = 0.25 * self.n * self.n * (1.0 + 1e-9)
        x = newton_bisect(lambda t: self.tau(t) - 2.0, self.dtau, 0.0, hi)
        return x, self.g(x)

    def largest_root(self, x_peak):
        hi = max(float(self.n * self.n) - self.m, x_peak)
        return newton_bisect(self.g, self.dg, x_peak, hi)


def sync_margin(omega, gamma: float = 1.0) -> float:
    """Relative height ``g(peak) / S(peak)`` of the reduced equation for omega / gamma.

    Positive inside the synchronizable region, zero on its boundary, negative
    outside. Useful as a continuous membership score.
    """
    omega = as_frequencies(omega, check_mean_zero=False) / gamma
    red = _Reduced(omega)
    x, gx = red.peak()
    return gx / (x + red.m)


def solve_kappa(omega) -> Optional[KappaVector]:
    """Stable-branch solution of the kappa system, or None if there is none.

    Returns kappa_i = sqrt(S* - omega_i**2) at the largest root S* of g. At a
    tangency (boundary point) the root is the peak itself and tau = 2.
    """
    omega = as_frequencies(omega)
    n = omega.size
    red = _Reduced(omega)
    if red.m >= n * n:
        return None
    x_peak, g_peak = red.peak()
    scale = x_peak + red.m
    if g_peak < -_PEAK_RTOL * scale:
        return None
    if g_peak <= _PEAK_RTOL * scale:
        x_star = x_peak
    else:
        x_star = red.largest_root(x_peak)
    return KappaVector.from_array(red.kappa(x_star))


def reconstruct_theta(kappa, omega, tol=1e-9) -> np.ndarray:
    """Phase-locked configuration for a solved kappa vector, gauge psi = 0.

    Uses kappa_i = N R cos(theta_i), omega_i = N R sin(theta_i).
    """
    kv = kappa if isinstance(kappa, KappaVector) else KappaVector.from_array(kappa)
    k = kv.kappa
    omega = as_frequencies(omega)
    if k.shape != omega.shape:
        raise InconsistentInput("kappa and omega have different lengths")
    if kv.s <= 0:
        raise InconsistentInput("sum of kappa must be positive")
    residual = np.max(np.abs(k * k + omega * omega - kv.s))
    if residual > tol * kv.s:
        raise InconsistentInput(
            f"kappa_i**2 + omega_i**2 != sum(kappa): residual {residual:.3e}"
        )
    theta = np.arctan2(omega, k)
    n = omega.size
    if np.max(np.abs(coupling_map(theta) + omega)) > 1e-8 * n * max(1.0, np.max(np.abs(omega))):
        raise InconsistentInput("reconstructed phases do not reproduce -omega")
    if np.max(np.abs(kappa_of(theta).kappa - k)) > 1e-8 * n * max(1.0, np.max(k)):
        raise InconsistentInput("reconstructed phases do not reproduce kappa")
    return theta


def is_synchronizable(omega, gamma: float = 1.0, *, tol_margin=TOL_MARGIN,
                      raise_on_marginal=False, with_theta=True) -> SyncDecision:
    """Decide whether ``omega`` has a stable phase-locked state at coupling gamma.

    Scales to unit coupling and solves the kappa system for omega / gamma. A
    solution with ``|tau - 2| <= tol_margin`` is reported as marginal
    (``synchronizable=False, marginal=True``), or raises ``Marginal`` when
    ``raise_on_marginal`` is set.
    """
    if not gamma > 0:
        raise ValueError("gamma must be positive")
    omega = as_frequencies(omega)
    u = omega / gamma
    kv = solve_kappa(u)
    if kv is None:
        return SyncDecision(synchronizable=False)
    t = float(np.sum(1.0 / kv.kappa))
    theta = None
    if with_theta:
        theta = reconstruct_theta(kv, u)
    if abs(t - 2.0) <= tol_margin:
        decision = SyncDecision(False, marginal=True, kappa=kv, tau=t, theta=theta)
        if raise_on_marginal:
            raise Marginal(f"tau = {t!r} is within {tol_margin:.1e} of 2", decision)
        return decision
    return SyncDecision(synchronizable=t < 2.0, kappa=kv, tau=t, theta=theta)


def boundary_distance(direction, tol: float = 1e-9) -> BoundaryDistance:
    """Distance from the origin to the region boundary along a unit direction.

    The region is convex and contains the origin, so the reduced peak height
    changes sign exactly once along every ray. Brent's method locates that
    sign change; the returned bracket ``[lo, hi]`` (width <= tol) is verified
    so that ``lo`` is a member and ``hi`` is not, with plain bisection as the
    fallback. Boundary points (marginal) count as members.
    """
    u = as_frequencies(direction)
    norm = np.linalg.norm(u)
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"direction must have unit norm, got {norm!r}")
    if not tol > 0:
        raise ValueError("tol must be positive")

    def margin(s):
        red = _Reduced(s * u)
        x, gx = red.peak()
        return gx / (x + red.m) + _PEAK_RTOL

    def inside(s):
        return margin(s) >= 0

    outer = outer_radius(u.size)
    if inside(outer):
        lo, hi = outer, outer
    else:
        root = brentq(margin, 0.0, outer, xtol=0.25 * tol)
        lo, hi = max(0.0, root - 0.45 * tol), min(outer, root + 0.45 * tol)
        if not (inside(lo) and not inside(hi)):
            lo, hi = bisect_predicate(inside, 0.0, outer, tol)
    return BoundaryDistance(direction=u, s_star=0.5 * (lo + hi), tolerance=hi - lo, lo=lo, hi=hi)


def necessary_filters(omega, gamma: float = 1.0) -> bool:
    """Cheap prescreen: False means omega is certainly not synchronizable.

    Rejects when max|omega_i| > gamma N or max - min > 2 gamma N.
    """
    omega = as_frequencies(omega)
    n = omega.size
    if np.max(np.abs(omega)) > gamma * n:
        return False
    if omega.max() - omega.min() > 2.0 * gamma * n:
        return False
    return True


def convexity_probe(omega_a, omega_b, gamma: float = 1.0) -> bool:
    """Whether the midpoint of two synchronizable vectors is synchronizable."""
    a = as_frequencies(omega_a)
    b = as_frequencies(omega_b)
    mid = 0.5 * (a + b)
    return is_synchronizable(mid, gamma, raise_on_marginal=True, with_theta=False).synchronizable
