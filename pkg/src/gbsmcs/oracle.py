"""Explicit-matrix verification layer.

Everything here works on dense d x d complex matrices and is meant as an
independent check of the coordinate-level logic, not as a production path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DegeneracyError, OracleDimensionError, WrongBranchError
from .gpm import GbsSet, commutator_exponent, difference_set
from .mcs import Mcs
from .zmod import RingContext

MAX_ORACLE_DIM = 64
EXACT_TOL = 1e-12
EIGEN_TOL = 1e-9
MAX_RETRIES = 8


@dataclass(frozen=True)
class EigenBasis:
    dim: int
    vectors: np.ndarray  # columns are the basis vectors
    residuals: np.ndarray

    @property
    def max_residual(self) -> float:
        return float(self.residuals.max()) if self.residuals.size else 0.0


def _check_dim(d: int, max_dim: int) -> None:
    if d > max_dim:
        raise OracleDimensionError(f"oracle is limited to d <= {max_dim}, got d={d}")


@lru_cache(maxsize=128)
def roots_of_unity(d: int) -> np.ndarray:
    """``w**k`` for k in 0..d-1, each evaluated directly (no repeated products)."""
    k = np.arange(d)
    out = np.exp(2j * np.pi * k / d)
    out.setflags(write=False)
    return out


def shift_matrix(d: int) -> np.ndarray:
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def clock_matrix(d: int) -> np.ndarray:
    return np.diag(roots_of_unity(d))


def gpm_matrix(c, ring: RingContext, max_dim: int = MAX_ORACLE_DIM) -> np.ndarray:
    """X^m Z^n with entries placed directly: ``(X^m Z^n)[k+m, k] = w^(n*k)``."""
    d = ring.d
    _check_dim(d, max_dim)
    m, n = c[0] % d, c[1] % d
    w = roots_of_unity(d)
    k = np.arange(d)
    out = np.zeros((d, d), dtype=complex)
    out[(k + m) % d, k] = w[(n * k) % d]
    return out


def verify_weyl(a, b, ring: RingContext, max_dim: int = MAX_ORACLE_DIM) -> float:
    """Max entrywise deviation of ``U_a U_b - w^e U_b U_a`` with e the coordinate exponent."""
    ua = gpm_matrix(a, ring, max_dim)
    ub = gpm_matrix(b, ring, max_dim)
    phase = roots_of_unity(ring.d)[commutator_exponent(a, b, ring)]
    return float(np.abs(ua @ ub - phase * (ub @ ua)).max())


def phase_identity_error(a, b, ring: RingContext, max_dim: int = MAX_ORACLE_DIM) -> float:
    """Deviation of ``U_a^dag U_b`` from ``w^{-(b.m-a.m) a.n} U_{b-a}``."""
    d = ring.d
    ua = gpm_matrix(a, ring, max_dim)
    ub = gpm_matrix(b, ring, max_dim)
    diff = ((b[0] - a[0]) % d, (b[1] - a[1]) % d)
    phase = roots_of_unity(d)[(-(b[0] - a[0]) * a[1]) % d]
    return float(np.abs(ua.conj().T @ ub - phase * gpm_matrix(diff, ring, max_dim)).max())


def extract_commutation_phase(ua: np.ndarray, ub: np.ndarray) -> complex:
    """Scalar z with ``ua ub = z ub ua``, read from ``ua ub (ub ua)^-1``."""
    ratio = ua @ ub @ (ub @ ua).conj().T
    return complex(np.trace(ratio) / ua.shape[0])


def joint_eigenvectors(
    mats: Sequence[np.ndarray],
    rng: np.random.Generator | None = None,
    retries: int = MAX_RETRIES,
    tol: float = EIGEN_TOL,
) -> EigenBasis:
    """Orthonormal common eigenvectors of commuting unitaries.

    Diagonalizes a random real combination of the Hermitian parts
    ``U + U^dag`` and ``i (U - U^dag)`` and accepts the result only if every
    vector is an eigenvector of every input within ``tol``.
    """
    if rng is None:
        rng = np.random.default_rng(0)
    dim = mats[0].shape[0]
    worst = np.inf
    for _ in range(retries):
        coef = rng.standard_normal((len(mats), 2))
        h = np.zeros((dim, dim), dtype=complex)
        for (ca, cb), u in zip(coef, mats):
            udag = u.conj().T
            h += ca * (u + udag) + cb * 1j * (u - udag)
        _, vecs = np.linalg.eigh(h)
        res = np.zeros(dim)
        for u in mats:
            uv = u @ vecs
            lam = np.einsum("ij,ij->j", vecs.conj(), uv)
            res = np.maximum(res, np.linalg.norm(uv - vecs * lam, axis=0))
        if res.max() <= tol:
            return EigenBasis(dim, vecs, res)
        worst = min(worst, float(res.max()))
    raise DegeneracyError(
        f"no common eigenbasis within {tol:g} after {retries} draws (best residual {worst:.3g})"
    )


def common_eigenbasis(
    m: Mcs,
    ring: RingContext | None = None,
    seed: int = 0,
    max_dim: int = MAX_ORACLE_DIM,
) -> EigenBasis:
    ring = ring or m.ring
    _check_dim(ring.d, max_dim)
    mats = [gpm_matrix(c, ring, max_dim) for c in m.elements]
    return joint_eigenvectors(mats, rng=np.random.default_rng(seed))


def max_overlap(basis: EigenBasis, coords: Iterable, ring: RingContext) -> float:
    """``max |<v| X^a Z^b |v>|`` over basis vectors v and the given coordinates."""
    vecs = basis.vectors
    worst = 0.0
    for c in coords:
        u = gpm_matrix(c, ring)
        ov = np.abs(np.einsum("ij,ij->j", vecs.conj(), u @ vecs))
        worst = max(worst, float(ov.max()))
    return worst


def verify_one_way_criterion(s: GbsSet, m: Mcs, seed: int = 0) -> float:
    """Numerically check the one-way criterion on the eigenbasis of a disjoint MCS."""
    diff = difference_set(s)
    if any(c in m for c in diff):
        raise WrongBranchError(f"{m.label} meets the difference set; only the disjoint branch is checkable")
    basis = common_eigenbasis(m, s.ring, seed=seed)
    return max_overlap(basis, diff, s.ring)
