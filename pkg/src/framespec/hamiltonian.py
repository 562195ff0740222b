"""Hamiltonians generated by Parseval frames.

H = sum_j E_j |phi_j><phi_j| for a Parseval frame {phi_j} and real E_j.
Eigenvalue candidates always come from diagonalizing H; the Gram-matrix
criteria below are an independent way to confirm them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import frames, linalg
from .errors import (
    InternalInconsistency,
    LengthMismatch,
    NotHermitian,
    NumericalFailure,
    PreconditionViolated,
)
from .frames import Frame

CERT_REL_TOL = 1e-7
# ||G c|| for unit c: ~1 on a genuine eigen-direction, roundoff otherwise.
GRAM_TOL = 1e-6


@dataclass(frozen=True)
class CoefficientSequence:
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float).reshape(-1)
        if not np.all(np.isfinite(v)):
            raise ValueError("coefficients must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.values.shape[0]

    @property
    def e_min(self) -> float:
        return float(self.values.min())

    @property
    def e_max(self) -> float:
        return float(self.values.max())


def _coeffs(e) -> CoefficientSequence:
    return e if isinstance(e, CoefficientSequence) else CoefficientSequence(e)


@dataclass(frozen=True)
class FrameHamiltonian:
    frame: Frame
    coeffs: CoefficientSequence
    matrix: np.ndarray

    @property
    def norm(self) -> float:
        return linalg.spectral_norm(self.matrix)

    def gram(self) -> np.ndarray:
        return self.frame.gram()


@dataclass(frozen=True)
class EigenCertificate:
    mu: float
    accepted: bool
    coefficient_vector: np.ndarray | None
    eigenvector: np.ndarray | None
    gram_norm: float
    b_norm: float
    tolerance: float
    method: str = "B"
    dual_witness: np.ndarray | None = None

    @property
    def residuals(self) -> tuple[float, float]:
        return self.gram_norm, self.b_norm

    def to_dict(self) -> dict:
        out = {
            "mu": self.mu,
            "accepted": self.accepted,
            "method": self.method,
            "gram_norm": self.gram_norm,
            "b_norm": self.b_norm,
            "tolerance": self.tolerance,
            "coefficient_vector": None,
            "eigenvector": None,
        }
        if self.coefficient_vector is not None:
            out["coefficient_vector"] = self.coefficient_vector
        if self.eigenvector is not None:
            out["eigenvector"] = self.eigenvector
        return out


@dataclass(frozen=True)
class EConnection:
    tilde_e: np.ndarray
    tilde_E: np.ndarray
    reconstruction_residual: float
    certificates: tuple[EigenCertificate, ...] = field(default=(), repr=False)

    def __len__(self) -> int:
        return self.tilde_E.shape[0]

    def to_dict(self) -> dict:
        return {
            "tilde_E": self.tilde_E,
            "tilde_e": self.tilde_e,
            "reconstruction_residual": self.reconstruction_residual,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def assemble(f: Frame, e) -> np.ndarray:
    """sum_j E_j |phi_j><phi_j| as a dim x dim matrix."""
    e = _coeffs(e)
    if len(e) != len(f):
        raise LengthMismatch(f"{len(e)} coefficients for {len(f)} frame vectors")
    v = f.vectors
    return (v.T * e.values) @ v.conj()


def build(f: Frame, e, tol: float = frames.PARSEVAL_TOL) -> FrameHamiltonian:
    e = _coeffs(e)
    if len(e) != len(f):
        raise LengthMismatch(f"{len(e)} coefficients for {len(f)} frame vectors")
    frames.require_parseval(f, tol)
    m = assemble(f, e)
    m = 0.5 * (m + m.conj().T)
    m.setflags(write=False)
    spec = linalg.hermitian_eig(m).values
    slack = tol * max(1.0, abs(e.e_min), abs(e.e_max))
    if spec.size and (spec[0] < e.e_min - slack or spec[-1] > e.e_max + slack):
        raise NumericalFailure("spectrum escapes [E_min, E_max]")
    return FrameHamiltonian(f, e, m)


def physical_part(h, p, tol: float = frames.PARSEVAL_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Compression PHP written in coordinates of range(P).

    Returns ``(h_ph, iso)`` with ``iso`` the n x rank(P) isometry whose
    columns span range(P), so that ``h_ph = iso^* h iso``.
    """
    h = linalg.as_matrix(h)
    if not linalg.is_hermitian(h, tol):
        raise NotHermitian("Hamiltonian is not Hermitian")
    iso = frames.range_basis(p, tol)
    h_ph = iso.conj().T @ h @ iso
    return 0.5 * (h_ph + h_ph.conj().T), iso


def _tau(fh: FrameHamiltonian, tol: float | None) -> float:
    if tol is not None:
        return tol
    # B(mu) is quadratic in the entries; below ~1e-150 its products underflow
    return CERT_REL_TOL * max(fh.norm, np.max(np.abs(fh.coeffs.values), initial=0.0), 1e-150)


def _best_witness(null: np.ndarray, g: np.ndarray) -> tuple[np.ndarray | None, float]:
    """Unit vector in span(null rows) maximizing ||G c||."""
    if null.shape[0] == 0:
        return None, 0.0
    basis = null.T
    _, s, vh = np.linalg.svd(g @ basis)
    c = basis @ vh[0].conj()
    return c, float(s[0])


def certify_eigenvalue(fh: FrameHamiltonian, mu: float, tol: float | None = None) -> EigenCertificate:
    """Gram criterion: mu is an eigenvalue iff some c has G c != 0 and B(mu) c = 0.

    B(mu)_ij = sum_k (E_k - mu) <phi_i, phi_k><phi_k, phi_j>.
    """
    mu = float(mu)
    tau = _tau(fh, tol)
    g = fh.gram()
    shift = fh.coeffs.values - mu
    b = (g * shift) @ g
    smax = linalg.spectral_norm(b)
    null = linalg.null_space(b, tau / smax) if smax > tau else np.eye(len(fh.frame), dtype=complex)
    c, gnorm = _best_witness(null, g)
    if c is None or gnorm <= GRAM_TOL:
        bn = float(np.linalg.norm(b @ c)) if c is not None else 0.0
        return EigenCertificate(mu, False, None, None, gnorm, bn, tau)
    bn = float(np.linalg.norm(b @ c))
    vec = frames.synthesis(fh.frame, c)
    vec = vec / np.linalg.norm(vec)
    return EigenCertificate(mu, True, c, vec, gnorm, bn, tau)


def certify_eigenvalue_dual(
    fh: FrameHamiltonian, mu: float, tol: float | None = None
) -> EigenCertificate:
    """Complement criterion: D(mu) c lies in range(G_psi) for some c with G c != 0.

    D(mu)_ij = (E_i - mu) <phi_i, phi_j>. G_psi comes from an explicit Naimark
    complement rather than from I - G, and the verdict is cross-checked
    against :func:`certify_eigenvalue`.
    """
    mu = float(mu)
    tau = _tau(fh, tol)
    g = fh.gram()
    dil = frames.naimark_dilate(fh.frame)
    g_psi = dil.psi.gram()
    d = (fh.coeffs.values - mu)[:, None] * g
    m = d - g_psi @ d
    smax = linalg.spectral_norm(m)
    null = linalg.null_space(m, tau / smax) if smax > tau else np.eye(len(fh.frame), dtype=complex)
    c, gnorm = _best_witness(null, g)
    accepted = c is not None and gnorm > GRAM_TOL
    if c is not None:
        resid = float(np.linalg.norm(m @ c))
    else:
        resid = 0.0
    primary = certify_eigenvalue(fh, mu, tol)
    if primary.accepted != accepted:
        raise InternalInconsistency(
            f"criteria disagree at mu={mu!r}: B-criterion {primary.accepted}, D-criterion {accepted}"
        )
    if not accepted:
        return EigenCertificate(mu, False, None, None, gnorm, resid, tau, "D")
    vec = frames.synthesis(fh.frame, c)
    vec = vec / np.linalg.norm(vec)
    return EigenCertificate(mu, True, c, vec, gnorm, resid, tau, "D", g_psi @ (d @ c))


def e_connect(fh: FrameHamiltonian, certify: bool = True) -> EConnection:
    """Rewrite H over an orthonormal eigenbasis: H = sum_k E~_k |e~_k><e~_k|."""
    eig = linalg.hermitian_eig(fh.matrix)
    resid = linalg.max_abs(fh.matrix - eig.reconstruct())
    if resid > 1e-9 * max(fh.norm, 1e-300) and resid > 1e-14:
        raise NumericalFailure(f"reconstruction residual {resid:.3e}")
    certs: list[EigenCertificate] = []
    if certify:
        for mu in np.unique(eig.values):
            cert = certify_eigenvalue(fh, mu)
            if not cert.accepted:
                raise InternalInconsistency(f"eigenvalue {mu!r} fails the Gram criterion")
            certs.append(cert)
    return EConnection(eig.vectors, eig.values, resid, tuple(certs))


@dataclass(frozen=True)
class Check:
    name: str
    lhs: float
    rhs: float
    residual: float
    passed: bool

    def to_dict(self) -> dict:
        return dict(name=self.name, lhs=self.lhs, rhs=self.rhs, residual=self.residual, passed=self.passed)


@dataclass(frozen=True)
class TraceReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def trace_relations_check(fh: FrameHamiltonian, tol: float = 1e-9) -> TraceReport:
    """Trace identities and majorization-type bounds for positive coefficients.

    (a) sum E~_k = sum E_j |phi_j|^2
    (b) sum E~_k^2 = sum_ij E_i E_j |<phi_i, phi_j>|^2
    (c) sum E~_k^2 >= (sum E_j |phi_j|^2)^2 / M, M = dim
    (d) partial sums of ascending E~ dominate partial sums of the ascending
        weights E_j |phi_j|^2.
    Equalities are tested relative to their scale; inequalities with slack tol.
    """
    e = fh.coeffs.values
    norms = fh.frame.norms_squared
    bad_e = [int(j) for j in np.flatnonzero(e <= 0)]
    bad_v = [int(j) for j in np.flatnonzero(norms <= 1e-24)]
    if bad_e or bad_v:
        raise PreconditionViolated(
            f"non-positive coefficients at {bad_e}; zero vectors at {bad_v}"
        )
    lam = linalg.hermitian_eig(fh.matrix).values
    m = lam.shape[0]
    weights = e * norms
    g = fh.gram()

    checks = []
    a_l, a_r = float(lam.sum()), float(weights.sum())
    checks.append(_eq("trace", a_l, a_r, tol))
    b_l = float(np.sum(lam**2))
    b_r = float(np.real(np.sum(np.outer(e, e) * np.abs(g) ** 2)))
    checks.append(_eq("trace_of_square", b_l, b_r, tol))
    c_r = a_r**2 / m
    checks.append(Check("cauchy_schwarz", b_l, c_r, c_r - b_l, b_l >= c_r - tol * max(1.0, c_r)))
    left = np.cumsum(lam)
    right = np.cumsum(np.sort(weights))[:m]
    worst = float(np.max(right - left))
    scale = max(1.0, float(np.max(np.abs(right))))
    checks.append(Check("partial_sums", float(left[-1]), float(right[-1]), worst, worst <= tol * scale))
    return TraceReport(tuple(checks))


def _eq(name: str, lhs: float, rhs: float, tol: float) -> Check:
    r = abs(lhs - rhs)
    return Check(name, lhs, rhs, r, r <= tol * max(1.0, abs(lhs), abs(rhs)))


def propagate(h, f0, t: float) -> np.ndarray:
    """exp(-i h t) f0."""
    f0 = linalg.as_vector(f0)
    u = linalg.unitary_exp(h, t)
    if u.shape[0] != f0.shape[0]:
        raise LengthMismatch("state and Hamiltonian dimensions differ")
    return u @ f0
