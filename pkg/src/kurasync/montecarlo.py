"""Monte Carlo estimates of the probability of full synchrony.

Frequencies are i.i.d. standard normal, projected onto the mean-zero plane,
so omega is a standard Gaussian in N - 1 dimensions. Two estimators:

* direct: fraction of sampled omega that are synchronizable;
* conditional: for a uniform direction u with boundary distance s*(u) at unit
  coupling, P(|omega| <= gamma s*(u)) is a chi CDF with N - 1 degrees of
  freedom. Averaging over directions gives the same probability with much
  lower variance.

Samples are split into fixed-size chunks. Chunk ``c`` draws from a Philox
stream keyed by ``(seed, c)``, so results do not depend on the thread count.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bounds import chi_cdf, phi, psync_lower, psync_upper
from .core import project_mean_zero
from .region import boundary_distance, is_synchronizable, necessary_filters

__all__ = [
    "SyncEstimate",
    "TransitionRow",
    "chunk_rng",
    "sample_frequency",
    "sample_direction",
    "boundary_samples",
    "estimate_direct",
    "estimate_conditional",
    "conditional_from_distances",
    "transition_curve",
    "CHUNK_SIZE",
    "THREADS_ENV",
]

CHUNK_SIZE = 64
THREADS_ENV = "KURASYNC_THREADS"
RNG_METADATA = {"bit_generator": "Philox", "normal_method": "ziggurat",
                "chunk_size": CHUNK_SIZE}


@dataclass(frozen=True)
class SyncEstimate:
    p_hat: float
    std_err: float
    samples: int
    method: str
    gamma: float
    n: int
    seed: int
    metadata: dict = field(default_factory=lambda: dict(RNG_METADATA))


def chunk_rng(seed: int, chunk: int) -> np.random.Generator:
    """Independent generator for one chunk of a campaign."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(chunk,))
    return np.random.Generator(np.random.Philox(ss))


def sample_frequency(n: int, rng: np.random.Generator) -> np.ndarray:
    if n < 2:
        raise ValueError("need n >= 2")
    return project_mean_zero(rng.standard_normal(n))


def sample_direction(n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform unit vector in the mean-zero plane."""
    while True:
        w = sample_frequency(n, rng)
        norm = np.linalg.norm(w)
        if norm >= 1e-8:
            return w / norm


def _threads(threads):
    if threads is None:
        threads = int(os.environ.get(THREADS_ENV, "1"))
    return max(1, threads)


def _chunks(samples):
    return [(c, min(CHUNK_SIZE, samples - c * CHUNK_SIZE))
            for c in range(math.ceil(samples / CHUNK_SIZE))]


def _run_chunks(work, samples, threads):
    chunks = _chunks(samples)
    threads = _threads(threads)
    if threads == 1 or len(chunks) == 1:
        return [work(c, size) for c, size in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        # map keeps chunk order, so the reduction below is order-independent
        return list(pool.map(lambda cs: work(*cs), chunks))


def _check(gamma, n, samples):
    if not gamma > 0:
        raise ValueError("gamma must be positive")
    if n < 2:
        raise ValueError("need n >= 2")
    if samples < 1:
        raise ValueError("need at least one sample")


def _binomial_std_err(hits, samples):
    """Agresti-Coull standard error; stays positive when hits is 0 or samples."""
    n_adj = samples + 4
    p_adj = (hits + 2) / n_adj
    return math.sqrt(p_adj * (1 - p_adj) / n_adj)


def estimate_direct(gamma: float, n: int, samples: int, seed: int = 0,
                    threads=None) -> SyncEstimate:
    """Fraction of Gaussian frequency draws that are synchronizable at gamma."""
    _check(gamma, n, samples)

    def work(c, size):
        rng = chunk_rng(seed, c)
        hits = 0
        for _ in range(size):
            omega = sample_frequency(n, rng)
            if necessary_filters(omega, gamma) and \
                    is_synchronizable(omega, gamma, with_theta=False).synchronizable:
                hits += 1
        return hits

    hits = sum(_run_chunks(work, samples, threads))
    return SyncEstimate(p_hat=hits / samples, std_err=_binomial_std_err(hits, samples),
                        samples=samples, method="direct", gamma=gamma, n=n, seed=seed)


def boundary_samples(n: int, samples: int, seed: int = 0, tol: float = 1e-7,
                     threads=None) -> np.ndarray:
    """Boundary distances s*(u) at unit coupling for ``samples`` uniform directions."""
    if n < 2:
        raise ValueError("need n >= 2")
    if samples < 1:
        raise ValueError("need at least one sample")

    def work(c, size):
        rng = chunk_rng(seed, c)
        return [boundary_distance(sample_direction(n, rng), tol).s_star for _ in range(size)]

    return np.array([s for part in _run_chunks(work, samples, threads) for s in part])


def conditional_from_distances(distances, gamma: float, n: int, seed: int = 0) -> SyncEstimate:
    """Conditional estimate from precomputed boundary distances."""
    distances = np.asarray(distances, dtype=float)
    _check(gamma, n, distances.size)
    terms = np.atleast_1d(chi_cdf(n - 1, gamma * distances))
    m = terms.size
    p = float(terms.mean())
    se = float(terms.std(ddof=1) / math.sqrt(m)) if m > 1 else 0.0
    return SyncEstimate(p_hat=p, std_err=se, samples=m, method="conditional",
                        gamma=gamma, n=n, seed=seed)


def estimate_conditional(gamma: float, n: int, samples: int, seed: int = 0,
                         tol: float = 1e-7, threads=None) -> SyncEstimate:
    _check(gamma, n, samples)
    s = boundary_samples(n, samples, seed, tol, threads)
    return conditional_from_distances(s, gamma, n, seed)


@dataclass(frozen=True)
class TransitionRow:
    n: int
    delta: float
    gamma: float
    p_hat: float
    std_err: float
    psync_lower: float
    psync_upper: float


def transition_curve(n: int, delta_grid, samples: int, seed: int = 0, tol: float = 1e-7,
                     threads=None):
    """Conditional estimates at gamma = delta * phi(N), sorted by delta.

    One set of directions is shared by every delta, so the curve is exactly
    nondecreasing in delta.
    """
    deltas = sorted(float(d) for d in delta_grid)
    if not deltas or deltas[0] <= 0:
        raise ValueError("deltas must be positive")
    s = boundary_samples(n, samples, seed, tol, threads)
    rows = []
    for d in deltas:
        g = d * phi(n)
        est = conditional_from_distances(s, g, n, seed)
        rows.append(TransitionRow(n=n, delta=d, gamma=g, p_hat=est.p_hat, std_err=est.std_err,
                                  psync_lower=psync_lower(g, n), psync_upper=psync_upper(g, n)))
    return rows
