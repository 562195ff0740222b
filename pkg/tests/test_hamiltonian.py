import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from framespec import frames, hamiltonian, linalg, models, secular
from framespec.errors import LengthMismatch, NotHermitian, NotParseval, NotProjector, PreconditionViolated
from framespec.frames import Frame
from framespec.hamiltonian import build, certify_eigenvalue, certify_eigenvalue_dual, e_connect

from conftest import random_parseval, random_unitary

R3 = np.sqrt(3)


def mercedes_matrix(e1, e2, e3):
    return np.array([[4 * e1 + e2 + e3, R3 * (e3 - e2)], [R3 * (e3 - e2), 3 * (e2 + e3)]]) / 6


def closed_pm(e1, e2, e3):
    r = np.sqrt(e1**2 + e2**2 + e3**2 - e1 * e2 - e2 * e3 - e1 * e3)
    return (e1 + e2 + e3 - r) / 3, (e1 + e2 + e3 + r) / 3


@pytest.mark.parametrize("e", [(1.0, 2.0, 3.0), (-0.3, 4.1, 0.7), (2.0, 2.0, 5.0)])
def test_build_mercedes_matrix(e):
    fh = build(models.mercedes(), e)
    assert linalg.max_abs(fh.matrix - mercedes_matrix(*e)) <= 1e-12


def test_build_constant_and_onb():
    fh = build(models.casazza_frame(4), [2.5] * 5)
    assert np.allclose(fh.matrix, 2.5 * np.eye(4), atol=1e-14)
    fh = build(Frame(3, np.eye(3)), [3.0, -1.0, 0.5])
    assert linalg.hermitian_eig(fh.matrix).values == pytest.approx([-1.0, 0.5, 3.0])


def test_build_errors():
    with pytest.raises(LengthMismatch):
        build(models.mercedes(), [1.0, 2.0])
    with pytest.raises(NotParseval):
        build(Frame.from_vectors([[1, 0], [1, 0], [0, 1]]), [1.0, 2.0, 3.0])


def test_physical_part_identity(rng):
    h = rng.normal(size=(4, 4))
    h = h + h.T
    h_ph, iso = hamiltonian.physical_part(h, np.eye(4))
    assert np.allclose(h_ph, h) and np.allclose(iso, np.eye(4))


def test_physical_part_example4():
    b = models.fermion_cell(0.5, 3.5, 2.0)
    h_ph, iso = hamiltonian.physical_part(b.hamiltonian, b.projector)
    assert h_ph.shape == (3, 3)
    beta = models.fermion_cell_beta(0.5, 3.5, 2.0)
    mu = secular.projected_pair_root(-0.5, 4.5, beta)
    assert sorted(linalg.hermitian_eig(h_ph).values) == pytest.approx(sorted([0.0, 4.0, mu]), abs=1e-12)


def test_physical_part_example5_block():
    b = models.ecosystem()
    h_ph, _ = hamiltonian.physical_part(b.hamiltonian, b.projector)
    kept = [i - 1 for i in models.ECOSYSTEM_KEPT_STATES]
    assert np.array_equal(h_ph.real, b.hamiltonian[np.ix_(kept, kept)])


def test_physical_part_errors():
    with pytest.raises(NotHermitian):
        hamiltonian.physical_part([[0, 1], [0, 0]], np.eye(2))
    with pytest.raises(NotProjector):
        hamiltonian.physical_part(np.eye(2), 2 * np.eye(2))


def test_certify_mercedes():
    fh = build(models.mercedes(), [1.0, 2.0, 3.0])
    lo, hi = closed_pm(1.0, 2.0, 3.0)
    cert = certify_eigenvalue(fh, hi)
    assert cert.accepted
    vec = np.array([-2 + 2 + 3 - 2 * R3, R3 * (2 - 3)])
    vec /= np.linalg.norm(vec)
    assert abs(np.vdot(vec, cert.eigenvector)) == pytest.approx(1.0, abs=1e-10)
    assert cert.b_norm <= cert.tolerance
    assert not certify_eigenvalue(fh, 1.0).accepted
    assert not certify_eigenvalue_dual(fh, 1.0).accepted
    assert certify_eigenvalue_dual(fh, lo).accepted


def test_certify_constant():
    fh = build(models.mercedes(), [0.7] * 3)
    cert = certify_eigenvalue(fh, 0.7)
    assert cert.accepted and np.linalg.norm(fh.gram() @ cert.coefficient_vector) > 0.5
    assert certify_eigenvalue_dual(fh, 0.7).accepted
    assert not certify_eigenvalue(fh, 0.8).accepted


def test_certify_random_frame_dual(rng):
    f = random_parseval(rng, 3, 5)
    e = rng.uniform(-2, 2, size=5)
    fh = build(f, e)
    for mu in linalg.hermitian_eig(fh.matrix).values:
        assert certify_eigenvalue_dual(fh, mu).accepted
    assert not certify_eigenvalue_dual(fh, e.max() + 1).accepted


def test_e_connect_examples():
    ec = e_connect(build(models.mercedes(), [1.0, 2.0, 3.0]))
    assert ec.tilde_E == pytest.approx(closed_pm(1.0, 2.0, 3.0), abs=1e-12)
    h = 1 / np.sqrt(2)
    dup = Frame.from_vectors([[h, 0, 0], [h, 0, 0], [0, h, 0], [0, h, 0], [0, 0, h], [0, 0, h]])
    e = [1.0, 2.0, 5.0, 9.0, -1.0, -3.0]
    ec = e_connect(build(dup, e))
    assert sorted(ec.tilde_E) == pytest.approx(sorted([1.5, 7.0, -2.0]))
    ec = e_connect(build(models.casazza_frame(2), [0.0, 1.0, 2.0]))
    assert ec.tilde_E == pytest.approx([0.5, 2.0], abs=1e-12)
    assert len(ec) == 2


def test_trace_relations_examples():
    rep = hamiltonian.trace_relations_check(build(models.mercedes(), [1.0, 2.0, 3.0]))
    assert rep.passed
    assert rep.checks[0].lhs == pytest.approx(4.0, abs=1e-12)
    rep = hamiltonian.trace_relations_check(build(Frame(3, np.eye(3)), [3.0, 1.0, 2.0]))
    assert rep.passed
    assert rep.checks[3].residual == pytest.approx(0.0, abs=1e-12)


def test_trace_relations_preconditions():
    with pytest.raises(PreconditionViolated, match=r"\[1\]"):
        hamiltonian.trace_relations_check(build(models.mercedes(), [1.0, -2.0, 3.0]))
    f = Frame.from_vectors([[1, 0], [0, 0], [0, 1]])
    with pytest.raises(PreconditionViolated, match="zero vectors at \\[1\\]"):
        hamiltonian.trace_relations_check(build(f, [1.0, 1.0, 2.0]))


def test_propagate_examples():
    h = mercedes_matrix(1.0, 2.0, 3.0)
    f0 = np.array([0.6, 0.8j])
    assert np.allclose(hamiltonian.propagate(h, f0, 0.0), f0)
    eig = linalg.hermitian_eig(h)
    v = eig.vectors[1]
    got = hamiltonian.propagate(h, v, 2.3)
    assert np.allclose(got, np.exp(-1j * eig.values[1] * 2.3) * v)
    assert np.linalg.norm(hamiltonian.propagate(h, f0, 7.1)) == pytest.approx(1.0, abs=1e-10)


shapes = st.integers(1, 5).flatmap(lambda d: st.tuples(st.just(d), st.integers(d, 9)))
seeds = st.integers(0, 2**32 - 1)


@given(shapes, seeds)
def test_spectrum_containment(shape, seed):
    rng = np.random.default_rng(seed)
    f = random_parseval(rng, *shape)
    e = rng.uniform(-5, 5, size=len(f))
    spec = linalg.hermitian_eig(build(f, e).matrix).values
    assert spec[0] >= e.min() - 1e-9 and spec[-1] <= e.max() + 1e-9


@given(shapes, seeds)
def test_certifier_matches_spectrum(shape, seed):
    rng = np.random.default_rng(seed)
    f = random_parseval(rng, *shape)
    e = rng.uniform(-1, 1, size=len(f))
    fh = build(f, e)
    spec = linalg.hermitian_eig(fh.matrix).values
    for mu in spec:
        assert certify_eigenvalue(fh, mu).accepted
    width = e.max() - e.min()
    for mu in np.linspace(e.min() - 1, e.max() + 1, 41):
        if np.min(np.abs(spec - mu)) >= 0.37 * width and width > 0:
            assert not certify_eigenvalue(fh, mu).accepted


@given(shapes, seeds)
def test_e_connect_reconstruction(shape, seed):
    rng = np.random.default_rng(seed)
    f = random_parseval(rng, *shape)
    fh = build(f, rng.uniform(-3, 3, size=len(f)))
    ec = e_connect(fh)
    assert ec.reconstruction_residual <= 1e-9 * max(fh.norm, 1e-12)
    assert len(ec) == round(frames.frame_report(f).potential)


@given(shapes, seeds, st.floats(0.01, 10) | st.floats(-10, -0.01) | st.just(0.0))
def test_constant_coefficients_connect_to_any_onb(shape, seed, lam):
    rng = np.random.default_rng(seed)
    f = random_parseval(rng, *shape)
    fh = build(f, [lam] * len(f))
    ec = e_connect(fh)
    assert np.all(np.abs(ec.tilde_E - lam) <= 1e-12 * max(1, abs(lam)))
    other = random_unitary(rng, f.dim)
    assert linalg.max_abs(fh.matrix - lam * other @ other.conj().T) <= 1e-12 * max(1, abs(lam))


@given(shapes, seeds)
def test_trace_relations_random(shape, seed):
    rng = np.random.default_rng(seed)
    f = random_parseval(rng, *shape)
    rep = hamiltonian.trace_relations_check(build(f, rng.uniform(0.1, 4, size=len(f))))
    assert rep.passed, rep


def _truncation_spectrum(k_max):
    from framespec.reproduce import block_coefficients

    blocks = block_coefficients(k_max)
    fh = build(models.casazza_block_frame(k_max), [x for b in blocks for x in b])
    return blocks, e_connect(fh, certify=False).tilde_E


def test_truncation_contains_block_roots_and_clusters():
    counts = []
    for k_max in (4, 8, 16):
        blocks, spec = _truncation_spectrum(k_max)
        for K, b in zip(models.block_sizes(k_max), blocks):
            block_spec = e_connect(build(models.casazza_frame(K), b)).tilde_E
            for mu in block_spec:
                assert np.min(np.abs(spec - mu)) <= 1e-9
        counts.append(int(np.sum(np.abs(spec - 1.0) < 0.05)))
    assert counts[0] < counts[1] < counts[2]
