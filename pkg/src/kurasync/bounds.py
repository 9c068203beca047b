"""Critical couplings, probability bounds and the log-corrected scaling phi(N)."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import gammainc

__all__ = [
    "CouplingBounds",
    "coupling_bounds",
    "gamma_min",
    "odd_extremal_frequency",
    "gamma_max_bounds",
    "gamma_max_conjectured",
    "phi",
    "psync_upper",
    "psync_lower",
    "erf",
    "chi_cdf",
]


def erf(x):
    """Error function, elementwise for arrays."""
    if np.ndim(x) == 0:
        return math.erf(float(x))
    return np.vectorize(math.erf, otypes=[float])(x)


def chi_cdf(k: int, x):
    """P(|Z| <= x) for a standard Gaussian Z in R^k.

    Equal to the regularized lower incomplete gamma function P(k/2, x**2/2).
    """
    if k < 1 or int(k) != k:
        raise ValueError(f"degrees of freedom must be a positive integer, got {k!r}")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("x must be non-negative")
    out = gammainc(0.5 * k, 0.5 * x * x)
    return float(out) if out.ndim == 0 else out


def phi(n: int) -> float:
    """sqrt(2 ln N) / (N + 1): coupling scale of the synchronization transition."""
    if n < 2:
        raise ValueError("need n >= 2")
    return math.sqrt(2.0 * math.log(n)) / (n + 1)


def odd_extremal_frequency(n: int, numeric: bool = False) -> float:
    """Frequency norm of one oscillator at 0 flanked by two groups of (N-1)/2 at +-x.

    The closed form is the maximum over x of sqrt(N-1) (sin x + (N-1)/2 sin 2x);
    ``numeric=True`` evaluates that maximum directly instead.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("defined for odd n >= 3")
    if numeric:
        half = 0.5 * (n - 1)
        res = minimize_scalar(
            lambda x: -(math.sin(x) + half * math.sin(2 * x)),
            bounds=(0.0, math.pi / 2), method="bounded", options={"xatol": 1e-12},
        )
        return math.sqrt(n - 1) * -res.fun
    r = math.sqrt(8 * n * n - 16 * n + 9)
    return (r + 3) * math.sqrt(4 * n * n - 8 * n + 3 + r) / (8 * math.sqrt(2 * (n - 1)))


def gamma_min(n: int) -> float:
    """Smallest coupling at which some unit-norm frequency vector locks.

    Exactly 2 N**-1.5 for even N. For odd N this is the reciprocal of
    ``odd_extremal_frequency``, which is conjectured (not proven) exact.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if n % 2 == 0:
        return 2.0 * n ** -1.5
    return 1.0 / odd_extremal_frequency(n)


def gamma_max_bounds(n: int):
    """(1/sqrt(N(N-1)), sqrt(2)/sqrt(N(N-1))), bracketing the coupling that locks every direction."""
    if n < 2:
        raise ValueError("need n >= 2")
    lo = 1.0 / math.sqrt(n * (n - 1))
    return lo, math.sqrt(2.0) * lo


def gamma_max_conjectured(n: int) -> float:
    """Conjectured exact value 1/sqrt(N(N-1)), attained at omega_min."""
    return gamma_max_bounds(n)[0]


@dataclass(frozen=True)
class CouplingBounds:
    n: int
    gamma_min: float
    gamma_max_lo: float
    gamma_max_hi: float
    gamma_max_conjectured: float
    # even N: proven; odd N: conjectured closed form
    gamma_min_exact: bool


def coupling_bounds(n: int) -> CouplingBounds:
    lo, hi = gamma_max_bounds(n)
    return CouplingBounds(
        n=n,
        gamma_min=gamma_min(n),
        gamma_max_lo=lo,
        gamma_max_hi=hi,
        gamma_max_conjectured=lo,
        gamma_min_exact=(n % 2 == 0),
    )


def _log_erf(x: float) -> float:
    if x <= 0:
        return -math.inf
    if x < 1.0:
        return math.log(math.erf(x))
    return math.log1p(-math.erfc(x))


def psync_upper(gamma: float, n: int) -> float:
    """min(1, sqrt(N) erf(gamma N / sqrt 2)**(N-1))."""
    if not gamma > 0:
        raise ValueError("gamma must be positive")
    if n < 2:
        raise ValueError("need n >= 2")
    log_b = 0.5 * math.log(n) + (n - 1) * _log_erf(gamma * n / math.sqrt(2.0))
    return 1.0 if log_b >= 0 else math.exp(log_b)


def psync_lower(gamma: float, n: int) -> float:
    """erf(gamma N / (2 sqrt 2))**N: Gaussian mass of the inscribed cube."""
    if not gamma > 0:
        raise ValueError("gamma must be positive")
    if n < 2:
        raise ValueError("need n >= 2")
    return math.exp(n * _log_erf(gamma * n / (2.0 * math.sqrt(2.0))))
