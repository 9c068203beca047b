"""Counting unstable directions of a stationary configuration.

The Jacobian is a weighted graph Laplacian of the complete graph that splits
as ``-D + v v^T + w w^T`` with ``D = diag(kappa)``. The number of positive
eigenvalues then follows from the signs of the kappa_i and from the single
scalar ``tau = sum 1/kappa_i``, with no eigensolver involved.
``index_oracle`` counts the same thing with a dense eigensolver.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .core import as_phases, jacobian, rank2_parts
from .errors import Degenerate, DegenerateDenominator, SingularD

__all__ = [
    "KappaVector",
    "IndexCount",
    "TauValue",
    "kappa_of",
    "n_plus_negD",
    "tau",
    "unstable_dim",
    "index_oracle",
    "prufer_decode",
    "spanning_trees",
    "kirchhoff_identity_check",
    "KAPPA_TOL",
    "TAU_TOL",
]

# relative to N for kappa, absolute for tau
KAPPA_TOL = 1e-8
TAU_TOL = 1e-8


@dataclass(frozen=True)
class KappaVector:
    """Per-oscillator cosine sums and their total ``s``."""

    kappa: np.ndarray
    s: float

    @classmethod
    def from_array(cls, kappa) -> "KappaVector":
        kappa = np.asarray(kappa, dtype=float)
        return cls(kappa=kappa, s=float(kappa.sum()))

    def __len__(self):
        return self.kappa.size


@dataclass(frozen=True)
class IndexCount:
    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def n(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    def as_tuple(self):
        return (self.n_plus, self.n_zero, self.n_minus)


@dataclass(frozen=True)
class TauValue:
    tau: float
    kappa: KappaVector
    # same quantity evaluated as <v, D^-1 v> + <w, D^-1 w>
    tau_rank2: float


def kappa_of(theta) -> KappaVector:
    """kappa_i = sum_j cos(theta_j - theta_i), i.e. the diagonal of D."""
    return KappaVector.from_array(rank2_parts(theta).d)


def _kappa_tol(n, tol):
    return KAPPA_TOL * n if tol is None else tol


def n_plus_negD(theta, tol=None) -> int:
    """Number of positive eigenvalues of -D, i.e. #{i : kappa_i < 0}.

    Raises Degenerate if some |kappa_i| <= tol (default 1e-8 * N), where the
    sign count is not robust.
    """
    kappa = kappa_of(theta).kappa
    tol = _kappa_tol(kappa.size, tol)
    if np.any(np.abs(kappa) <= tol):
        raise Degenerate(f"min |kappa_i| = {np.min(np.abs(kappa)):.3e} is within {tol:.1e} of 0")
    return int(np.count_nonzero(kappa < 0))


def tau(theta, tol=None) -> TauValue:
    theta = as_phases(theta)
    parts = rank2_parts(theta)
    kappa = parts.d
    tol = _kappa_tol(kappa.size, tol)
    if np.any(np.abs(kappa) <= tol):
        raise SingularD(f"min |kappa_i| = {np.min(np.abs(kappa)):.3e}; D is singular")
    inv = 1.0 / kappa
    return TauValue(
        tau=float(inv.sum()),
        kappa=KappaVector.from_array(kappa),
        tau_rank2=float(parts.v @ (inv * parts.v) + parts.w @ (inv * parts.w)),
    )


def unstable_dim(theta, kappa_tol=None, tau_tol=TAU_TOL) -> IndexCount:
    """Index of a stationary configuration from the rank-two formula.

    n_plus = #{kappa_i < 0} + [tau > 2]. Raises Degenerate when some kappa_i
    is near zero or tau is near 2; use ``index_oracle`` there.
    """
    theta = as_phases(theta)
    n = theta.size
    try:
        t = tau(theta, kappa_tol)
    except SingularD as exc:
        raise Degenerate(str(exc)) from exc
    if abs(t.tau - 2.0) <= tau_tol:
        raise Degenerate(f"tau = {t.tau!r} is within {tau_tol:.1e} of 2")
    n_plus = int(np.count_nonzero(t.kappa.kappa < 0)) + (1 if t.tau > 2.0 else 0)
    return IndexCount(n_plus=n_plus, n_zero=1, n_minus=n - n_plus - 1)


def index_oracle(theta, zero_tol=None) -> IndexCount:
    """Eigenvalue sign counts of the Jacobian from a dense symmetric eigensolver.

    Eigenvalues with |lambda| < 1e-9 * N are counted as zero.
    """
    theta = as_phases(theta)
    n = theta.size
    zero_tol = 1e-9 * n if zero_tol is None else zero_tol
    lam = np.linalg.eigvalsh(jacobian(theta))
    n_plus = int(np.count_nonzero(lam >= zero_tol))
    n_minus = int(np.count_nonzero(lam <= -zero_tol))
    return IndexCount(n_plus=n_plus, n_zero=n - n_plus - n_minus, n_minus=n_minus)


def prufer_decode(seq, n):
    """Edges of the labelled tree on ``range(n)`` encoded by a Prufer sequence."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (i for i in range(n) if degree[i] == 1)
    edges.append((u, w))
    return edges


@lru_cache(maxsize=None)
def spanning_trees(n: int) -> np.ndarray:
    """All n**(n-2) spanning trees of K_n as an int array of shape (T, n-1, 2)."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n == 2:
        return np.array([[[0, 1]]])
    trees = [prufer_decode(seq, n) for seq in product(range(n), repeat=n - 2)]
    out = np.array(trees, dtype=np.intp)
    out.setflags(write=False)
    return out


def kirchhoff_identity_check(theta, max_n: int = 7):
    """Both sides of the spanning-tree identity for the Kuramoto Laplacian.

    lhs sums prod_e cos(theta_e) over every spanning tree of K_N; rhs is

        (2 prod_i kappa_i - sum_k prod_{i != k} kappa_i) / sum_{i,j} cos(theta_i - theta_j).

    Returns ``(lhs, rhs)``.
    """
    theta = as_phases(theta)
    n = theta.size
    if n > max_n:
        raise ValueError(f"tree enumeration needs {n}**{n - 2} terms; N must be <= {max_n}")
    trees = spanning_trees(n)
    weights = np.cos(theta[trees[..., 0]] - theta[trees[..., 1]])
    lhs = float(np.prod(weights, axis=1).sum())

    kappa = kappa_of(theta).kappa
    denom = float(kappa.sum())
    if abs(denom) <= 1e-12 * n * n:
        raise DegenerateDenominator(f"sum of cosines {denom:.3e} vanishes")
    leave_one_out = np.array([np.prod(np.delete(kappa, k)) for k in range(n)])
    rhs = float((2.0 * np.prod(kappa) - leave_one_out.sum()) / denom)
    return lhs, rhs
