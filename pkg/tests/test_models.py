import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from framespec import frames, hamiltonian, linalg, models, secular
from framespec.errors import KTooSmall, NOutOfRange


def test_mercedes_is_equal_norm_parseval():
    f = models.mercedes()
    rep = frames.frame_report(f)
    assert rep.is_parseval and rep.excess == 1
    assert f.norms_squared == pytest.approx([2 / 3] * 3)
    g = f.gram()
    assert abs(g[0, 1]) == pytest.approx(1 / 3)


def test_mercedes_onb_projects_to_mercedes():
    onb = models.mercedes_onb()
    assert linalg.is_orthonormal(onb)
    assert np.allclose(onb[:, :2], models.mercedes().vectors)


@pytest.mark.parametrize("k", [2, 3, 5, 8])
def test_casazza_frame_norms(k):
    f = models.casazza_frame(k)
    assert frames.is_parseval(f)
    n2 = f.norms_squared
    assert n2[:k] == pytest.approx([1 - 1 / k] * k)
    assert n2[k] == pytest.approx(1.0)
    assert frames.frame_report(f).excess == 1


def test_casazza_k_too_small():
    with pytest.raises(KTooSmall):
        models.casazza_frame(1)
    with pytest.raises(KTooSmall):
        models.casazza_block_frame(1)


def test_block_frame_structure():
    f = models.casazza_block_frame(3)
    assert f.dim == 5 and len(f) == 7
    rep = frames.frame_report(f)
    assert rep.is_parseval and rep.excess == len(models.block_sizes(3))
    g = f.gram()
    # vectors from different blocks are orthogonal
    assert np.allclose(g[:3, 3:], 0) and np.allclose(g[3:, :3], 0)


def test_block_frame_with_k1():
    f = models.casazza_block_frame(3, include_k1=True)
    assert f.dim == 6 and len(f) == 9
    assert frames.is_parseval(f)
    assert f.norms_squared[0] == 0.0
    assert models.block_sizes(3, include_k1=True) == [1, 2, 3]


def test_car_printed_matrices():
    car = models.car_algebra(2)
    assert np.array_equal(car.lowering[0], models.PRINTED_A1)
    assert np.array_equal(car.lowering[1], models.PRINTED_A2)
    assert car.state_index([1, 0]) == 1 and car.state_index([0, 1]) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_car_relations(n):
    car = models.car_algebra(n)
    assert car.dim == 2**n
    assert car.anticommutator_residual() <= 1e-14
    total = sum(car.number(j) for j in range(n))
    assert np.allclose(np.diag(total), [bin(i).count("1") for i in range(2**n)])


@pytest.mark.parametrize("n", [0, 7, -1])
def test_car_out_of_range(n):
    with pytest.raises(NOutOfRange):
        models.car_algebra(n)


def test_fermion_cell_reference():
    b = models.fermion_cell(0.5, 3.5, 2.0)
    assert sorted(linalg.hermitian_eig(b.hamiltonian).values) == pytest.approx([-0.5, 0.0, 4.0, 4.5])
    assert frames.range_basis(b.projector).shape == (4, 3)


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.05, 3) | st.floats(-3, -0.05))
def test_fermion_cell_closed_form(w1, w2, lam):
    b = models.fermion_cell(w1, w2, lam)
    energies, onb = models.fermion_cell_eigensystem(w1, w2, lam)
    assert energies[1] == pytest.approx(w1 + w2)
    assert energies[2] * energies[3] == pytest.approx(w1 * w2 - lam**2, abs=1e-9)
    assert linalg.is_orthonormal(onb)
    h = b.hamiltonian
    for e, v in zip(energies, onb):
        assert np.linalg.norm(h @ v - e * v) <= 1e-10 * max(1, abs(e))


def test_fermion_cell_uncoupled():
    b = models.fermion_cell(1.0, 2.0, 0.0)
    assert np.allclose(b.hamiltonian, np.diag([0.0, 1.0, 2.0, 3.0]))
    with pytest.raises(ValueError):
        models.fermion_cell_eigensystem(1.0, 2.0, 0.0)


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.05, 3))
def test_fermion_cell_projection(w1, w2, lam):
    b = models.fermion_cell(w1, w2, lam)
    energies, onb = models.fermion_cell_eigensystem(w1, w2, lam)
    phi = frames.project_onb(onb, b.projector)
    assert frames.is_parseval(phi)
    assert linalg.max_abs(phi.vectors - models.fermion_cell_frame(w1, w2, lam).vectors) <= 1e-10
    h_ph, _ = hamiltonian.physical_part(b.hamiltonian, b.projector)
    fh = hamiltonian.build(phi, energies)
    assert linalg.max_abs(fh.matrix - h_ph) <= 1e-9 * max(1, fh.norm)
    beta = models.fermion_cell_beta(w1, w2, lam)
    assert math.cos(beta) ** 2 + math.sin(beta) ** 2 == pytest.approx(1.0)
    mu = secular.projected_pair_root(energies[2], energies[3], beta)
    spec = linalg.hermitian_eig(h_ph).values
    assert np.min(np.abs(spec - mu)) <= 1e-9 * max(1, abs(mu))


def test_ecosystem_reference():
    b = models.ecosystem()
    assert np.array_equal(b.hamiltonian, models.PRINTED_ECOSYSTEM_H)
    spec = linalg.hermitian_eig(b.hamiltonian).values
    assert spec == pytest.approx(sorted(models.PRINTED_ECOSYSTEM_SPECTRUM), abs=1e-3)
    h_ph, _ = hamiltonian.physical_part(b.hamiltonian, b.projector)
    ph = linalg.hermitian_eig(h_ph).values
    assert ph == pytest.approx(sorted(models.PRINTED_ECOSYSTEM_PH_SPECTRUM), abs=1e-3)
    assert np.trace(b.projector) == 8


def test_ecosystem_projector_keeps_mode2_empty():
    b = models.ecosystem()
    car = models.car_algebra(4)
    assert np.allclose(b.projector, np.eye(16) - car.number(2))


@given(st.lists(st.floats(-2, 2), min_size=4, max_size=4))
def test_ecosystem_projected_frame_parseval(omegas):
    b = models.ecosystem(omegas=omegas)
    eig = linalg.hermitian_eig(b.hamiltonian)
    phi = frames.project_onb(eig.vectors, b.projector)
    assert frames.is_parseval(phi)
    h_ph, _ = hamiltonian.physical_part(b.hamiltonian, b.projector)
    assert linalg.max_abs(hamiltonian.build(phi, eig.values).matrix - h_ph) <= 1e-9 * max(1, linalg.spectral_norm(h_ph))
