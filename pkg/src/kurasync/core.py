"""Kuramoto vector field on the complete graph with uniform coupling.

All functions take plain array-likes of angles (radians, on the covering
space R^N, never wrapped) and frequencies, and return numpy arrays or small
frozen dataclasses.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch

__all__ = [
    "as_phases",
    "as_frequencies",
    "coupling_map",
    "velocity_field",
    "jacobian",
    "rank2_parts",
    "Rank2Parts",
    "order_parameter",
    "OrderParameter",
    "energy",
    "project_mean_zero",
]


def as_phases(theta) -> np.ndarray:
    """Validate a phase configuration and return it as a float array."""
    theta = np.asarray(theta, dtype=float)
    if theta.ndim != 1:
        raise DimensionMismatch(f"phase configuration must be 1-D, got shape {theta.shape}")
    if theta.size < 2:
        raise ValueError("need at least two oscillators")
    if not np.all(np.isfinite(theta)):
        raise ValueError("phase configuration contains non-finite angles")
    return theta


def as_frequencies(omega, *, check_mean_zero=True) -> np.ndarray:
    """Validate a frequency vector, optionally checking it is mean-zero."""
    omega = np.asarray(omega, dtype=float)
    if omega.ndim != 1:
        raise DimensionMismatch(f"frequency vector must be 1-D, got shape {omega.shape}")
    if omega.size < 2:
        raise ValueError("need at least two oscillators")
    if not np.all(np.isfinite(omega)):
        raise ValueError("frequency vector contains non-finite entries")
    if check_mean_zero:
        scale = np.max(np.abs(omega), initial=0.0)
        if abs(omega.sum()) > 1e-12 * omega.size * max(scale, 1.0):
            raise ValueError(
                f"frequency vector is not mean-zero (sum = {omega.sum():.3e}); "
                "use project_mean_zero first"
            )
    return omega


def coupling_map(theta) -> np.ndarray:
    """f_i(theta) = sum_j sin(theta_j - theta_i).

    Evaluated in O(N) through the sums of sines and cosines, using
    sin(a - b) = sin a cos b - cos a sin b.
    """
    theta = as_phases(theta)
    s, c = np.sin(theta), np.cos(theta)
    return c * s.sum() - s * c.sum()


def velocity_field(theta, omega, gamma: float = 1.0) -> np.ndarray:
    """Right-hand side omega + gamma * f(theta) of the Kuramoto ODE."""
    theta = as_phases(theta)
    omega = np.asarray(omega, dtype=float)
    if omega.shape != theta.shape:
        raise DimensionMismatch(
            f"theta has {theta.size} entries but omega has shape {omega.shape}"
        )
    return omega + gamma * coupling_map(theta)


def jacobian(theta) -> np.ndarray:
    """Dense Jacobian of f: cos(theta_i - theta_j) off the diagonal, zero row sums."""
    theta = as_phases(theta)
    J = np.cos(theta[:, None] - theta[None, :])
    np.fill_diagonal(J, 0.0)
    np.fill_diagonal(J, -J.sum(axis=1))
    return J


@dataclass(frozen=True)
class Rank2Parts:
    """Diagonal-plus-rank-two splitting J = -diag(d) + v v^T + w w^T."""

    d: np.ndarray
    v: np.ndarray
    w: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return -np.diag(self.d) + np.outer(self.v, self.v) + np.outer(self.w, self.w)


def rank2_parts(theta) -> Rank2Parts:
    """Split the Jacobian into a diagonal part and two outer products.

    ``d_i = sum_k cos(theta_k - theta_i)`` includes the k = i term. That extra
    +1 on the diagonal is exactly cancelled by the diagonal of
    ``v v^T + w w^T`` (sin^2 + cos^2 = 1).
    """
    theta = as_phases(theta)
    v, w = np.sin(theta), np.cos(theta)
    d = w * w.sum() + v * v.sum()
    return Rank2Parts(d=d, v=v, w=w)


@dataclass(frozen=True)
class OrderParameter:
    r: float
    psi: float

    @property
    def complex(self) -> complex:
        return self.r * np.exp(1j * self.psi)


def order_parameter(theta) -> OrderParameter:
    """Magnitude and phase of the mean phasor (1/N) sum exp(i theta_n)."""
    theta = as_phases(theta)
    z = np.exp(1j * theta).mean()
    r = float(abs(z))
    psi = float(np.angle(z)) if r >= 1e-14 else 0.0
    if psi == -np.pi:
        psi = np.pi
    return OrderParameter(r=r, psi=psi)


def energy(theta, omega, gamma: float = 1.0) -> float:
    """Potential whose gradient is the Kuramoto vector field.

    L = <omega, theta> + (gamma / 2) * sum_{i,j} cos(theta_i - theta_j).
    The double cosine sum equals |sum_n exp(i theta_n)|^2, which is how it is
    evaluated here.
    """
    theta = as_phases(theta)
    omega = np.asarray(omega, dtype=float)
    if omega.shape != theta.shape:
        raise DimensionMismatch(
            f"theta has {theta.size} entries but omega has shape {omega.shape}"
        )
    coherence = np.sin(theta).sum() ** 2 + np.cos(theta).sum() ** 2
    return float(omega @ theta + 0.5 * gamma * coherence)


def project_mean_zero(chi) -> np.ndarray:
    """Move a frequency vector into the co-rotating frame (subtract its mean)."""
    chi = np.asarray(chi, dtype=float)
    if not np.all(np.isfinite(chi)):
        raise ValueError("input contains non-finite entries")
    return chi - chi.mean(axis=-1, keepdims=True)
