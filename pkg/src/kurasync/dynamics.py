"""Fixed-step RK4 integration of the Kuramoto ODE on the covering space.

Used as an empirical check on the algebraic stability decisions: a locked
state relaxes back after a small kick, and an omega with no locked state keeps
drifting.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_phases, energy
from .errors import DimensionMismatch, NonFinite, WindowTooLong

__all__ = [
    "Trajectory",
    "default_dt",
    "integrate",
    "integrate_batch",
    "detect_locking",
    "mean_frequencies",
]


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray  # shape (len(times), N)
    omega: np.ndarray
    gamma: float

    def __len__(self):
        return self.times.size

    def energies(self) -> np.ndarray:
        return np.array([energy(th, self.omega, self.gamma) for th in self.states])

    def final_velocity(self) -> np.ndarray:
        return _rhs(self.states[-1], self.omega, self.gamma)


def default_dt(gamma: float, n: int) -> float:
    return 0.01 / (gamma * n)


def _rhs(theta, omega, gamma):
    # works on (..., N) batches: f_i = cos(t_i) sum sin - sin(t_i) sum cos
    s, c = np.sin(theta), np.cos(theta)
    f = c * s.sum(axis=-1, keepdims=True) - s * c.sum(axis=-1, keepdims=True)
    return omega + gamma * f


def _rk4_step(theta, omega, gamma, dt):
    k1 = _rhs(theta, omega, gamma)
    k2 = _rhs(theta + 0.5 * dt * k1, omega, gamma)
    k3 = _rhs(theta + 0.5 * dt * k2, omega, gamma)
    k4 = _rhs(theta + dt * k3, omega, gamma)
    return theta + (dt / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)


def integrate_batch(theta0, omega, gamma, dt, t_end, record_every=1):
    """Integrate many independent systems at once.

    ``theta0`` and ``omega`` have shape (B, N) (or broadcast to it). Returns
    ``(times, states)`` with ``states`` of shape (T, B, N), recording every
    ``record_every`` steps plus the final state.
    """
    if not dt > 0:
        raise ValueError("dt must be positive")
    if t_end < dt:
        raise ValueError("t_end must be at least dt")
    theta = np.array(theta0, dtype=float)
    omega = np.broadcast_to(np.asarray(omega, dtype=float), theta.shape)
    steps = int(round(t_end / dt))
    times, states = [0.0], [theta.copy()]
    for k in range(1, steps + 1):
        theta = _rk4_step(theta, omega, gamma, dt)
        if k % record_every == 0 or k == steps:
            if not np.all(np.isfinite(theta)):
                raise NonFinite(f"state became non-finite at t = {k * dt}")
            times.append(k * dt)
            states.append(theta.copy())
    return np.array(times), np.array(states)


def integrate(theta0, omega, gamma: float = 1.0, dt=None, t_end: float = 10.0,
              record_every: int = 1) -> Trajectory:
    """Classical RK4 with fixed step ``dt`` (default 0.01 / (gamma N))."""
    theta0 = as_phases(theta0)
    omega = np.asarray(omega, dtype=float)
    if omega.shape != theta0.shape:
        raise DimensionMismatch("theta0 and omega must have the same length")
    if not gamma > 0:
        raise ValueError("gamma must be positive")
    dt = default_dt(gamma, theta0.size) if dt is None else dt
    times, states = integrate_batch(theta0, omega, gamma, dt, t_end, record_every)
    return Trajectory(times=times, states=states, omega=omega, gamma=gamma)


def mean_frequencies(traj: Trajectory, window: float) -> np.ndarray:
    """Average angular velocity of each oscillator over the trailing window."""
    t = traj.times
    if window <= 0:
        raise ValueError("window must be positive")
    if window >= t[-1] - t[0]:
        raise WindowTooLong(f"window {window} is not shorter than the trajectory ({t[-1] - t[0]})")
    k = int(np.searchsorted(t, t[-1] - window, side="right")) - 1
    span = t[-1] - t[k]
    return (traj.states[-1] - traj.states[k]) / span


def detect_locking(traj: Trajectory, window: float = 10.0, tol=None) -> bool:
    """True when all time-averaged frequencies over the window agree within tol.

    Default tol is 1e-6 * gamma * N.
    """
    n = traj.states.shape[-1]
    tol = 1e-6 * traj.gamma * n if tol is None else tol
    nu = mean_frequencies(traj, window)
    return bool(nu.max() - nu.min() < tol)
