"""One-shot reproduction of the five worked examples."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import frames, hamiltonian, linalg, models, secular

SOURCE_PRINTED = "printed"
SOURCE_DERIVED = "derived"


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: object
    source: str
    got: object
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "source": self.source,
            "got": self.got,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


@dataclass
class ReproductionReport:
    example_id: int
    title: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, expected, got, tol, source=SOURCE_DERIVED, err=None):
        """Record a check. ``err`` overrides the default max-abs distance."""
        if err is None:
            err = _distance(expected, got)
        self.checks.append(CheckResult(name, expected, source, got, tol, bool(err <= tol)))

    def flag(self, name, expected, got, source=SOURCE_DERIVED):
        self.checks.append(CheckResult(name, expected, source, got, 0.0, expected == got))

    def to_dict(self) -> dict:
        return {
            "example_id": self.example_id,
            "title": self.title,
            "pass": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _distance(a, b) -> float:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return math.inf
    return linalg.max_abs(a - b)


def multiset_distance(expected, got) -> float:
    e = np.sort(np.asarray(expected, dtype=float))
    g = np.sort(np.asarray(got, dtype=float))
    if e.shape != g.shape:
        return math.inf
    return float(np.max(np.abs(e - g))) if e.size else 0.0


def mercedes_matrix(e1, e2, e3) -> np.ndarray:
    r3 = math.sqrt(3.0)
    return np.array(
        [[4 * e1 + e2 + e3, r3 * (e3 - e2)], [r3 * (e3 - e2), 3 * (e2 + e3)]]
    ) / 6.0


def mercedes_closed_form(e1, e2, e3) -> tuple[float, float]:
    s = e1 + e2 + e3
    r = math.sqrt(e1 * e1 + e2 * e2 + e3 * e3 - e1 * e2 - e2 * e3 - e1 * e3)
    return (s - r) / 3.0, (s + r) / 3.0


def mercedes_closed_vector(e1, e2, e3, sign: int) -> np.ndarray:
    """Closed-form eigenvector for E~_{+} (sign=+1) or E~_{-} (sign=-1); needs E2 != E3."""
    r = math.sqrt(e1 * e1 + e2 * e2 + e3 * e3 - e1 * e2 - e2 * e3 - e1 * e3)
    v = np.array([-2 * e1 + e2 + e3 - sign * 2 * r, math.sqrt(3.0) * (e2 - e3)])
    return v / np.linalg.norm(v)


def phase_distance(u, v) -> float:
    """1 - |<u, v>| for unit vectors: zero iff equal up to a phase."""
    return float(1.0 - abs(np.vdot(u, v)))


def example1(coeffs=(1.0, 2.0, 3.0)) -> ReproductionReport:
    rep = ReproductionReport(1, "Mercedes frame")
    f = models.mercedes()
    fr = frames.frame_report(f)
    rep.flag("parseval", True, fr.is_parseval, SOURCE_PRINTED)
    rep.add("potential", 2.0, fr.potential, 1e-10)
    rep.flag("excess", 1, fr.excess)
    dil = frames.naimark_dilate(f)
    rep.add("psi_gram_all_one_third", np.full((3, 3), 1 / 3), dil.psi.gram(), 1e-10, SOURCE_PRINTED)
    p = np.diag([1.0, 1.0, 0.0])
    rep.add("projected_onb_is_mercedes", f.vectors, frames.project_onb(models.mercedes_onb(), p).vectors, 1e-12, SOURCE_PRINTED)
    fh = hamiltonian.build(f, coeffs)
    rep.add("matrix_form", mercedes_matrix(*coeffs), fh.matrix, 1e-12, SOURCE_PRINTED)
    ec = hamiltonian.e_connect(fh)
    closed = mercedes_closed_form(*coeffs)
    rep.add("eigenvalues_closed_form", list(closed), ec.tilde_E, 1e-10, SOURCE_PRINTED)
    rep.add("eigenvalues_secular", list(secular.mercedes_roots(*coeffs).roots), ec.tilde_E, 1e-10)
    if coeffs == (1.0, 2.0, 3.0):
        rep.add("eigenvalues_6_pm_sqrt3_over_3", [(6 - math.sqrt(3)) / 3, (6 + math.sqrt(3)) / 3], ec.tilde_E, 1e-10)
    if coeffs[1] != coeffs[2]:
        for k, sign in ((0, -1), (1, 1)):
            v = mercedes_closed_vector(*coeffs, sign)
            rep.add(f"eigenvector_{'+-'[k == 0]}", 0.0, phase_distance(v, ec.tilde_e[k]), 1e-10, SOURCE_PRINTED)
    rep.flag("E1_not_an_eigenvalue", False, hamiltonian.certify_eigenvalue(fh, coeffs[0]).accepted, SOURCE_PRINTED)
    rep.add("reconstruction", 0.0, ec.reconstruction_residual, 1e-9 * fh.norm)
    return rep


def example2(k_values=range(2, 9)) -> ReproductionReport:
    rep = ReproductionReport(2, "Casazza K+1 frame")
    for K in k_values:
        e = [j + 0.25 * j * j / K for j in range(1, K + 2)]
        f = models.casazza_frame(K)
        rep.flag(f"K={K}:parseval", True, frames.frame_report(f).is_parseval, SOURCE_PRINTED)
        fh = hamiltonian.build(f, e)
        spec = hamiltonian.e_connect(fh).tilde_E
        roots = secular.casazza_roots(e[:K]).roots
        rep.add(f"K={K}:spectrum", list(roots) + [e[K]], spec, 1e-9, SOURCE_PRINTED,
                err=multiset_distance(list(roots) + [e[K]], spec))
        rep.add(f"K={K}:largest_is_E_K+1", e[K], spec[-1], 1e-9, SOURCE_PRINTED)
        worst = 0.0
        for mu in roots:
            v = secular.casazza_eigenvector(e[:K], mu)
            worst = max(worst, float(np.linalg.norm(fh.matrix @ v - mu * v)))
        rep.add(f"K={K}:eigenvector_formula", 0.0, worst, 1e-8, SOURCE_PRINTED)
    return rep


def block_coefficients(k_max: int, limit: float = 1.0, include_k1: bool = False) -> list[list[float]]:
    """Strictly increasing coefficients accumulating at ``limit``, grouped per block."""
    out, m = [], 1
    for K in models.block_sizes(k_max, include_k1):
        block = []
        for _ in range(K + 1):
            block.append(limit - 1.0 / (m + 1))
            m += 1
        out.append(block)
    return out


def example3(k_max: int = 6) -> ReproductionReport:
    rep = ReproductionReport(3, "block frame, finite truncation")
    f = models.casazza_block_frame(k_max)
    fr = frames.frame_report(f)
    rep.flag("parseval", True, fr.is_parseval, SOURCE_PRINTED)
    rep.flag("excess_equals_blocks", k_max - 1, fr.excess)
    blocks = block_coefficients(k_max)
    fh = hamiltonian.build(f, [x for b in blocks for x in b])
    spec = hamiltonian.e_connect(fh).tilde_E
    expected = []
    for K, b in zip(models.block_sizes(k_max), blocks):
        expected.extend(secular.casazza_roots(b[:K]).roots)
        expected.append(b[K])
    rep.add("spectrum_equals_block_roots", expected, spec, 1e-9, SOURCE_PRINTED,
            err=multiset_distance(expected, spec))
    return rep


def example4(omega1=0.5, omega2=3.5, lam=2.0) -> ReproductionReport:
    rep = ReproductionReport(4, "two-mode fermionic cell")
    car = models.car_algebra(2)
    rep.add("a1_printed", models.PRINTED_A1, car.lowering[0], 0.0, SOURCE_PRINTED)
    rep.add("a2_printed", models.PRINTED_A2, car.lowering[1], 0.0, SOURCE_PRINTED)
    rep.add("car_relations", 0.0, car.anticommutator_residual(), 1e-14)
    bundle = models.fermion_cell(omega1, omega2, lam)
    h = bundle.hamiltonian
    reference = (omega1, omega2, lam) == (0.5, 3.5, 2.0)
    if reference:
        printed = np.array([[0, 0, 0, 0], [0, 0.5, 2, 0], [0, 2, 3.5, 0], [0, 0, 0, 4]])
        rep.add("H_printed", printed, h, 0.0, SOURCE_PRINTED)
        rep.add("spectrum", [0.0, 4.0, -0.5, 4.5], linalg.hermitian_eig(h).values, 1e-12, SOURCE_PRINTED,
                err=multiset_distance([0.0, 4.0, -0.5, 4.5], linalg.hermitian_eig(h).values))
    energies, onb = models.fermion_cell_eigensystem(omega1, omega2, lam)
    rep.add("closed_form_spectrum", energies, linalg.hermitian_eig(h).values, 1e-12,
            err=multiset_distance(energies, linalg.hermitian_eig(h).values))
    h_ph, _ = hamiltonian.physical_part(h, bundle.projector)
    beta = models.fermion_cell_beta(omega1, omega2, lam)
    mu = secular.projected_pair_root(energies[2], energies[3], beta)
    ph_spec = linalg.hermitian_eig(h_ph).values
    expected = [0.0, omega1 + omega2, mu]
    rep.add("H_ph_spectrum", expected, ph_spec, 1e-9, SOURCE_PRINTED, err=multiset_distance(expected, ph_spec))
    phi = frames.project_onb(onb, bundle.projector)
    rep.add("compressed_frame", models.fermion_cell_frame(omega1, omega2, lam).vectors, phi.vectors, 1e-12, SOURCE_PRINTED)
    fh = hamiltonian.build(phi, energies)
    rep.add("H_phi_equals_PHP", h_ph, fh.matrix, 1e-9, SOURCE_PRINTED)
    cert = hamiltonian.certify_eigenvalue(fh, mu)
    rep.flag("pair_root_certified", True, cert.accepted)
    return rep


def example5() -> ReproductionReport:
    rep = ReproductionReport(5, "four-mode ecosystem")
    bundle = models.ecosystem()
    h = bundle.hamiltonian
    rep.add("H_printed", models.PRINTED_ECOSYSTEM_H, h, 0.0, SOURCE_PRINTED)
    eig = linalg.hermitian_eig(h)
    rep.add("spectrum", list(models.PRINTED_ECOSYSTEM_SPECTRUM), eig.values, 1e-3, SOURCE_PRINTED,
            err=multiset_distance(models.PRINTED_ECOSYSTEM_SPECTRUM, eig.values))
    h_ph, iso = hamiltonian.physical_part(h, bundle.projector)
    kept = [i - 1 for i in models.ECOSYSTEM_KEPT_STATES]
    rep.add("H_ph_block", h[np.ix_(kept, kept)], h_ph, 0.0, SOURCE_PRINTED)
    ph_eig = linalg.hermitian_eig(h_ph).values
    rep.add("H_ph_spectrum", list(models.PRINTED_ECOSYSTEM_PH_SPECTRUM), ph_eig, 1e-3, SOURCE_PRINTED,
            err=multiset_distance(models.PRINTED_ECOSYSTEM_PH_SPECTRUM, ph_eig))
    lo, hi = eig.values[0], eig.values[-1]
    rep.flag("H_ph_spectrum_in_range", True, bool(lo - 1e-9 <= ph_eig[0] and ph_eig[-1] <= hi + 1e-9), SOURCE_PRINTED)
    phi = frames.project_onb(eig.vectors, bundle.projector)
    rep.flag("projected_frame_parseval", True, frames.frame_report(phi).is_parseval, SOURCE_PRINTED)
    fh = hamiltonian.build(phi, eig.values)
    rep.add("H_phi_equals_PHP", h_ph, fh.matrix, 1e-9, SOURCE_PRINTED)
    ec = hamiltonian.e_connect(fh)
    rep.add("e_connection_spectrum", ph_eig, ec.tilde_E, 1e-9, err=multiset_distance(ph_eig, ec.tilde_E))
    return rep


EXAMPLES = {1: example1, 2: example2, 3: example3, 4: example4, 5: example5}


def reproduce(which) -> list[ReproductionReport]:
    if which == "all":
        return [EXAMPLES[k]() for k in sorted(EXAMPLES)]
    return [EXAMPLES[int(which)]()]
