"""Finite frames: Parseval diagnostics, Gram projectors and Naimark dilation.

A frame is stored as a 2-D array whose rows are the vectors phi_j. Inner
products are conjugate-linear in the first slot, so the analysis operator is
``x -> conj(Phi) @ x`` and the frame operator is ``Phi.T @ conj(Phi)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (
    DimensionMismatch,
    InternalInconsistency,
    NotAFrame,
    NotOrthonormal,
    NotParseval,
    NotProjector,
    NumericalFailure,
)

PARSEVAL_TOL = 1e-8


@dataclass(frozen=True)
class Frame:
    """Indexed family of vectors in C^dim. Zero vectors are allowed."""

    dim: int
    vectors: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        v = np.array(self.vectors, dtype=complex)
        if v.ndim == 1 and v.size == 0:
            v = v.reshape(0, self.dim)
        if v.ndim != 2 or v.shape[1] != self.dim:
            raise DimensionMismatch(f"frame vectors must have length {self.dim}, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("frame vectors contain non-finite entries")
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != v.shape[0]:
                raise DimensionMismatch("labels and vectors differ in count")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_vectors(cls, vectors, labels=None) -> "Frame":
        v = np.array(vectors, dtype=complex)
        if v.ndim != 2:
            raise DimensionMismatch("expected a list of equal-length vectors")
        return cls(v.shape[1], v, labels)

    def __len__(self) -> int:
        return self.vectors.shape[0]

    @property
    def norms_squared(self) -> np.ndarray:
        return np.sum(np.abs(self.vectors) ** 2, axis=1)

    def gram(self) -> np.ndarray:
        """G[i, j] = <phi_i, phi_j>."""
        return self.vectors.conj() @ self.vectors.T


@dataclass(frozen=True)
class FrameReport:
    lower_bound: float
    upper_bound: float
    potential: float
    excess: int
    is_parseval: bool
    tolerance_used: float

    def to_dict(self) -> dict:
        return {
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "potential": self.potential,
            "excess": self.excess,
            "is_parseval": self.is_parseval,
            "tolerance_used": self.tolerance_used,
        }


@dataclass(frozen=True)
class GramPair:
    g_phi: np.ndarray
    g_psi: np.ndarray


@dataclass(frozen=True)
class NaimarkDilation:
    """Complement frame psi and the lifted ONB e_j = phi_j (+) psi_j.

    ``onb`` rows are the e_j in C^(dim + excess); ``projector`` maps that
    space onto its first ``dim`` coordinates.
    """

    psi: Frame
    onb: np.ndarray
    projector: np.ndarray
    residual: float = field(default=0.0)


def frame_operator(f: Frame) -> np.ndarray:
    if len(f) == 0:
        raise ValueError("empty frame")
    v = f.vectors
    return v.T @ v.conj()


def frame_report(f: Frame, tol: float = PARSEVAL_TOL) -> FrameReport:
    """Frame bounds, potential and excess.

    Raises NotAFrame when the vectors do not span C^dim.
    """
    s = frame_operator(f)
    eig = linalg.hermitian_eig(s)
    lo, hi = float(eig.values[0]), float(eig.values[-1])
    if lo <= tol:
        raise NotAFrame(f"vectors do not span C^{f.dim} (lower bound {lo:.3e})")
    g = f.gram()
    potential = float(np.real(np.trace(g @ g)))
    excess = len(f) - linalg.rank(g)
    parseval = abs(lo - 1.0) <= tol and abs(hi - 1.0) <= tol
    return FrameReport(lo, hi, potential, excess, parseval, tol)


def is_parseval(f: Frame, tol: float = PARSEVAL_TOL) -> bool:
    if len(f) == 0:
        return f.dim == 0
    return linalg.max_abs(frame_operator(f) - np.eye(f.dim)) <= tol


def require_parseval(f: Frame, tol: float = PARSEVAL_TOL) -> None:
    try:
        ok = frame_report(f, tol).is_parseval
    except NotAFrame as exc:
        raise NotParseval(str(exc)) from exc
    if not ok:
        raise NotParseval("frame operator differs from the identity")


def gram_pair(f: Frame, tol: float = PARSEVAL_TOL) -> GramPair:
    require_parseval(f, tol)
    g = f.gram()
    g.setflags(write=False)
    q = np.eye(len(f)) - g
    q.setflags(write=False)
    return GramPair(g, q)


def analysis(f: Frame, x) -> np.ndarray:
    """Coefficients <phi_j, x>."""
    x = linalg.as_vector(x)
    if x.shape[0] != f.dim:
        raise DimensionMismatch(f"vector length {x.shape[0]} != frame dim {f.dim}")
    return f.vectors.conj() @ x


def synthesis(f: Frame, c) -> np.ndarray:
    """sum_j c_j phi_j."""
    c = linalg.as_vector(c)
    if c.shape[0] != len(f):
        raise DimensionMismatch(f"coefficient length {c.shape[0]} != frame size {len(f)}")
    return f.vectors.T @ c


def naimark_dilate(f: Frame, tol: float = PARSEVAL_TOL) -> NaimarkDilation:
    """Complete a Parseval frame to an ONB of a larger space.

    The complement is read off the range of Q = I - G_phi: with U an
    orthonormal basis of range(Q) (columns), psi_j = conj(U[j, :]) gives
    <psi_i, psi_j> = Q_ij. It is unique only up to a unitary on the added space.
    """
    pair = gram_pair(f, tol)
    n = len(f)
    q = pair.g_psi
    eig = linalg.hermitian_eig(q)
    r = n - linalg.rank(pair.g_phi)
    u = eig.columns[:, n - r:]
    psi_vecs = u.conj()
    psi = Frame(r, psi_vecs)
    onb = np.hstack([f.vectors, psi_vecs])
    big = f.dim + r
    resid = linalg.max_abs(onb.conj() @ onb.T - np.eye(n)) if n else 0.0
    if resid > 100 * tol:
        raise NumericalFailure(f"dilated family is not orthonormal (residual {resid:.3e})")
    if big != n:
        raise NumericalFailure(f"dilation dimension {big} != number of vectors {n}")
    proj = np.zeros((big, big), dtype=complex)
    proj[: f.dim, : f.dim] = np.eye(f.dim)
    onb.setflags(write=False)
    proj.setflags(write=False)
    return NaimarkDilation(psi, onb, proj, resid)


def range_basis(p, tol: float = PARSEVAL_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of range(P) for an orthogonal projector.

    Coordinate projectors give the matching standard basis vectors, anything
    else the eigenvectors of P for eigenvalue 1.
    """
    p = linalg.as_matrix(p)
    if not linalg.is_projector(p, tol):
        raise NotProjector("matrix is not an orthogonal projector")
    n = p.shape[0]
    d = np.diag(p).real
    if linalg.max_abs(p - np.diag(np.diag(p))) <= tol and np.all(
        (np.abs(d) <= tol) | (np.abs(d - 1) <= tol)
    ):
        keep = np.flatnonzero(np.abs(d - 1) <= tol)
        return np.eye(n, dtype=complex)[:, keep]
    eig = linalg.hermitian_eig(p)
    keep = np.flatnonzero(eig.values > 0.5)
    return eig.columns[:, keep]


def project_onb(onb, projector, tol: float = PARSEVAL_TOL) -> Frame:
    """Frame {P e_j} written in the canonical coordinates of range(P)."""
    e = linalg.as_matrix(onb)
    if not linalg.is_orthonormal(e, tol):
        raise NotOrthonormal("input vectors are not orthonormal")
    basis = range_basis(projector, tol)
    if basis.shape[0] != e.shape[1]:
        raise DimensionMismatch("projector and vectors live in different spaces")
    coords = e @ basis.conj()
    out = Frame(basis.shape[1], coords)
    if e.shape[0] == e.shape[1] and not is_parseval(out, 10 * tol):
        raise NumericalFailure("projected family is not Parseval")
    return out


def null_coefficients(f: Frame, c, tol: float = PARSEVAL_TOL) -> bool:
    """Does sum_j c_j phi_j vanish?

    Checked twice: directly, and through the Gram projector (G c = 0). The two
    must agree for a Parseval frame.
    """
    require_parseval(f, tol)
    c = linalg.as_vector(c)
    if c.shape[0] != len(f):
        raise DimensionMismatch(f"coefficient length {c.shape[0]} != frame size {len(f)}")
    scale = float(np.linalg.norm(c))
    if scale == 0.0:
        return True
    direct = float(np.linalg.norm(synthesis(f, c)))
    via_gram = float(np.linalg.norm(f.gram() @ c))
    bound = tol * scale
    a, b = direct <= bound, via_gram <= bound
    if a != b and abs(direct - via_gram) > bound:
        raise InternalInconsistency(
            f"|sum c_j phi_j| = {direct:.3e} but |G c| = {via_gram:.3e}"
        )
    return a
