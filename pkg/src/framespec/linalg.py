"""Dense complex linear algebra used by every other module.

Vectors and matrices are plain numpy ``complex128`` arrays. The Hermitian
eigensolver is a cyclic Jacobi iteration: slow compared to LAPACK but fully
deterministic and accurate to roundoff for the small matrices we handle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NumericalFailure

TAU_EIG = 1e-10
TAU_ORTH = 1e-10
RANK_TOL = 1e-9

_MAX_SWEEPS = 100
_PHASE_TOL = 1e-10


def as_vector(x) -> np.ndarray:
    v = np.asarray(x, dtype=complex)
    if v.ndim != 1:
        raise DimensionMismatch(f"expected a vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return v


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.setflags(write=False)
    return a


def inner(x, y) -> complex:
    """<x, y>, conjugate-linear in the first argument."""
    return complex(np.vdot(x, y))


def max_abs(m) -> float:
    m = np.asarray(m)
    return float(np.max(np.abs(m))) if m.size else 0.0


def spectral_norm(m) -> float:
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def hermiticity_defect(m) -> float:
    m = np.asarray(m)
    return max_abs(m - m.conj().T)


def is_hermitian(m, tol: float = TAU_EIG) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return hermiticity_defect(m) <= tol * max(1.0, max_abs(m))


def is_projector(p, tol: float = 1e-8) -> bool:
    """Orthogonal projector test: P = P* and P^2 = P."""
    p = np.asarray(p, dtype=complex)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        return False
    return hermiticity_defect(p) <= tol and max_abs(p @ p - p) <= tol


def is_orthonormal(vectors, tol: float = TAU_ORTH) -> bool:
    """Rows of ``vectors`` are orthonormal."""
    v = np.asarray(vectors, dtype=complex)
    if v.shape[0] == 0:
        return True
    g = v.conj() @ v.T
    return max_abs(g - np.eye(v.shape[0])) <= tol


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending real eigenvalues and matching orthonormal eigenvectors.

    ``vectors[k]`` is the eigenvector for ``values[k]`` (stored as rows).
    """

    values: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(np.asarray(self.values, dtype=float)))
        object.__setattr__(self, "vectors", _frozen(np.asarray(self.vectors, dtype=complex)))
        if self.vectors.shape[0] != self.values.shape[0]:
            raise DimensionMismatch("values and vectors differ in count")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def columns(self) -> np.ndarray:
        """Eigenvectors as columns of a unitary matrix."""
        return self.vectors.T

    def reconstruct(self) -> np.ndarray:
        v = self.columns
        return (v * self.values) @ v.conj().T


def _check_square(m: np.ndarray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"matrix must be square, got shape {m.shape}")


def _jacobi(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic complex Jacobi. Returns (diagonal, accumulated unitary)."""
    n = a.shape[0]
    a = a.copy()
    u = np.eye(n, dtype=complex)
    if n <= 1:
        return a.diagonal().real.copy(), u
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), u
    target = (np.finfo(float).eps * scale) ** 2
    offmask = ~np.eye(n, dtype=bool)
    for _ in range(_MAX_SWEEPS):
        off = np.sum(np.abs(a[offmask]) ** 2)
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= 1e-300 or r * r <= 1e-3 * target / n**2:
                    continue
                phase = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * r)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                rot = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                u[:, idx] = u[:, idx] @ rot
    return a.diagonal().real.copy(), u


def _normalize_phase(v: np.ndarray) -> np.ndarray:
    big = np.flatnonzero(np.abs(v) > _PHASE_TOL * max(np.max(np.abs(v)), 1e-300))
    if big.size:
        z = v[big[0]]
        v = v * (abs(z) / z)
    return v


def _canonical_cluster(block: np.ndarray) -> np.ndarray:
    """Canonical ONB of the span of ``block`` (columns).

    Gram-Schmidt over the projections of e_1, e_2, ... onto the span, so the
    result depends only on the eigenspace, not on the Jacobi path.
    """
    k = block.shape[1]
    proj = block @ block.conj().T
    basis: list[np.ndarray] = []
    for i in range(proj.shape[0]):
        w = proj[:, i].copy()
        for _ in range(2):
            for b in basis:
                w -= np.vdot(b, w) * b
        nw = np.linalg.norm(w)
        if nw > 1e-6:
            basis.append(w / nw)
        if len(basis) == k:
            break
    return np.array(basis).T


def hermitian_eig(m, tol: float = TAU_EIG) -> EigenDecomposition:
    """Full eigendecomposition of a Hermitian matrix.

    ``tol`` bounds the allowed Hermiticity defect (relative to the largest
    entry, floored at 1) and sets the residual budget 10*tol*||m||.
    Degenerate clusters get a canonical basis and every eigenvector has its
    first non-negligible component made positive real.
    """
    a = as_matrix(m)
    _check_square(a)
    if not is_hermitian(a, tol):
        raise NotHermitian(f"Hermiticity defect {hermiticity_defect(a):.3e} exceeds tolerance")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    vals, u = _jacobi(a)
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    u = u[:, order]

    norm = spectral_norm(a)
    gap = 1e-11 * max(norm, 1e-300)
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and vals[stop] - vals[stop - 1] <= gap:
            stop += 1
        if stop - start > 1:
            u[:, start:stop] = _canonical_cluster(u[:, start:stop])
        start = stop
    for k in range(n):
        u[:, k] = _normalize_phase(u[:, k])

    residual = max_abs(a @ u - u * vals) if n else 0.0
    if residual > 10 * tol * max(norm, 1.0):
        raise NumericalFailure(f"eigen residual {residual:.3e} too large")
    return EigenDecomposition(vals, u.T)


def singular_values(m) -> np.ndarray:
    a = as_matrix(m)
    if a.size == 0:
        return np.zeros(0)
    return np.linalg.svd(a, compute_uv=False)


def rank(m, tol: float = RANK_TOL) -> int:
    """Number of singular values above ``tol`` times the largest one."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    s = singular_values(m)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def null_space(m, tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal basis (rows) of the numerical null space of ``m``.

    A direction c is null when ||m c|| <= tol * ||m|| * ||c||. Returns an
    array of shape (k, cols); k = 0 for a trivial null space.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = as_matrix(m)
    cols = a.shape[1]
    if a.size == 0 or max_abs(a) == 0.0:
        return np.eye(cols, dtype=complex)
    _, s, vh = np.linalg.svd(a)
    keep = np.zeros(cols, dtype=bool)
    keep[: s.size] = s <= tol * s[0]
    keep[s.size:] = True
    return vh[keep].conj()


def unitary_exp(h, t: float, tol: float = TAU_EIG) -> np.ndarray:
    """exp(-i h t) for Hermitian ``h``."""
    eig = hermitian_eig(h, tol)
    v = eig.columns
    return (v * np.exp(-1j * eig.values * t)) @ v.conj().T


matrix_exp_unitary = unitary_exp
