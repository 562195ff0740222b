"""Constructors for the worked examples.

Fermionic models use a Jordan-Wigner realization on 2^n states. A basis
state index is ``sum_k n_k 2^k`` (mode 0 is the fastest-varying bit), and
a_j carries the string (-1)^(n_0 + ... + n_{j-1}). With that convention the
two-mode matrices and the 16 x 16 ecosystem Hamiltonian come out exactly as
tabulated in the original model description; ``ecosystem`` re-checks this on
every call with the reference parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import ConventionMismatch, KTooSmall, NOutOfRange
from .frames import Frame

SQRT = math.sqrt

# Two-mode lowering operators as tabulated (basis eta_00, eta_10, eta_01, eta_11).
PRINTED_A1 = np.array(
    [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]], dtype=float
)
PRINTED_A2 = np.array(
    [[0, 0, 1, 0], [0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0]], dtype=float
)

ECOSYSTEM_REFERENCE = {
    "omegas": (2.0, 3.0, 4.0, 2.0),
    "lambdas": (1.0, 2.0, 3.0),
    "nus": (1.0, 3.0),
}

# Reference 16 x 16 ecosystem Hamiltonian for ECOSYSTEM_REFERENCE.
PRINTED_ECOSYSTEM_H = np.array(
    [
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 2, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
        [0, -1, 3, 0, -3, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 5, 0, -3, 0, 0, 0, -2, 1, 0, 0, 0, 0, 0],
        [0, 0, -3, 0, 4, 0, 0, 0, -3, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, -3, 0, 6, -1, 0, 0, -3, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, -1, 7, 0, 0, 0, -3, 0, 2, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 9, 0, 0, 0, -3, 0, 2, -1, 0],
        [0, -1, -2, 0, -3, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, -2, 0, -3, 0, 0, 0, 4, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, -3, 0, 0, -1, 5, 0, -3, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, -3, 0, 0, 0, 7, 0, -3, 0, 0],
        [0, 0, 0, 0, 0, 1, 2, 0, 0, 0, -3, 0, 6, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, -3, 0, 8, -1, 0],
        [0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 9, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 11],
    ],
    dtype=float,
)

# Tabulated spectra (six significant digits).
PRINTED_ECOSYSTEM_SPECTRUM = (
    13.6645, 11.4925, 11, 9.17202, 8.82798, 7, 6.66453, 6.50749,
    4.49251, 4.33547, 4, -2.66453, 2.17202, 1.82798, -0.492505, 0,
)
PRINTED_ECOSYSTEM_PH_SPECTRUM = (
    7.38849, 7, 4.57577, 4.18728, 2.81272, 2.42423, -0.38849, 0,
)
# 1-based basis labels kept by the L2 projector.
ECOSYSTEM_KEPT_STATES = (1, 2, 3, 4, 9, 10, 11, 12)


@dataclass(frozen=True)
class CarAlgebra:
    n_modes: int
    lowering: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return 2**self.n_modes

    def raising(self, j: int) -> np.ndarray:
        return self.lowering[j].conj().T

    def number(self, j: int) -> np.ndarray:
        return self.raising(j) @ self.lowering[j]

    def state_index(self, occupations) -> int:
        return sum(int(n) << k for k, n in enumerate(occupations))

    def anticommutator_residual(self) -> float:
        eye = np.eye(self.dim)
        worst = 0.0
        for j, aj in enumerate(self.lowering):
            for k, ak in enumerate(self.lowering):
                akd = ak.conj().T
                worst = max(worst, linalg.max_abs(aj @ akd + akd @ aj - (j == k) * eye))
                worst = max(worst, linalg.max_abs(aj @ ak + ak @ aj))
        return worst


@dataclass(frozen=True)
class ModelBundle:
    hamiltonian: np.ndarray
    projector: np.ndarray
    description: str
    parameters: dict = field(default_factory=dict)


def mercedes() -> Frame:
    """Three equiangular vectors in C^2, each of squared norm 2/3."""
    s = SQRT(2.0 / 3.0)
    r3 = SQRT(3.0) / 2.0
    return Frame.from_vectors(
        [[s, 0.0], [-0.5 * s, r3 * s], [-0.5 * s, -r3 * s]], labels=("1", "2", "3")
    )


def mercedes_onb() -> np.ndarray:
    """ONB of C^3 whose projection onto the first two coordinates is ``mercedes()``."""
    s = SQRT(2.0 / 3.0)
    r3 = SQRT(3.0) / 2.0
    t = 1.0 / SQRT(2.0)
    return s * np.array([[1.0, 0.0, t], [-0.5, r3, t], [-0.5, -r3, t]], dtype=complex)


def casazza_frame(K: int) -> Frame:
    """K+1 vectors in C^K: e_j - mean(e) for j <= K, then the normalized sum."""
    if K < 2:
        raise KTooSmall(f"K must be at least 2, got {K}")
    return _casazza_block(K)


def _casazza_block(K: int) -> Frame:
    vecs = np.eye(K) - np.full((K, K), 1.0 / K)
    last = np.full((1, K), 1.0 / SQRT(K))
    return Frame.from_vectors(np.vstack([vecs, last]))


def casazza_block_frame(k_max: int, include_k1: bool = False) -> Frame:
    """Direct sum of the K-blocks for K = 2..k_max.

    ``include_k1`` prepends the degenerate K = 1 block {0, e}, which is still
    Parseval but has a zero vector.
    """
    if k_max < 2:
        raise KTooSmall(f"k_max must be at least 2, got {k_max}")
    ks = list(range(1 if include_k1 else 2, k_max + 1))
    dim = sum(ks)
    rows, labels = [], []
    offset = 0
    for K in ks:
        block = _casazza_block(K).vectors
        for j, v in enumerate(block, start=1):
            row = np.zeros(dim, dtype=complex)
            row[offset : offset + K] = v
            rows.append(row)
            labels.append(f"{K}:{j}")
        offset += K
    return Frame(dim, np.array(rows), labels)


def block_sizes(k_max: int, include_k1: bool = False) -> list[int]:
    return list(range(1 if include_k1 else 2, k_max + 1))


def car_algebra(n: int) -> CarAlgebra:
    if not 1 <= n <= 6:
        raise NOutOfRange(f"n must be in 1..6, got {n}")
    dim = 2**n
    ops = []
    for j in range(n):
        a = np.zeros((dim, dim))
        below = (1 << j) - 1
        for i in range(dim):
            if i >> j & 1:
                a[i - (1 << j), i] = -1.0 if bin(i & below).count("1") % 2 else 1.0
        a.setflags(write=False)
        ops.append(a)
    return CarAlgebra(n, tuple(ops))


def _basis_projector(dim: int, keep) -> np.ndarray:
    p = np.zeros((dim, dim))
    for i in keep:
        p[i, i] = 1.0
    return p


def fermion_cell(omega1: float, omega2: float, lam: float) -> ModelBundle:
    """Two-mode cell H = w1 n1 + w2 n2 + lam (a1^+ a2 + a2^+ a1), P = 1 - |eta_10><eta_10|."""
    car = car_algebra(2)
    a1, a2 = car.lowering
    h = omega1 * a1.T @ a1 + omega2 * a2.T @ a2 + lam * (a1.T @ a2 + a2.T @ a1)
    p = _basis_projector(4, [0, 2, 3])
    return ModelBundle(
        h,
        p,
        "two-mode fermionic cell, eta_10 state removed",
        {"omega1": omega1, "omega2": omega2, "lambda": lam},
    )


def fermion_cell_eigensystem(omega1: float, omega2: float, lam: float):
    """Closed-form eigenpairs of the two-mode cell.

    Returns (E, onb) with E = (0, w1+w2, E3, E4) and onb rows (e1, e2, e3, e4)
    in that order. Needs lam != 0.
    """
    if lam == 0:
        raise ValueError("closed form needs a nonzero coupling")
    d = omega1 - omega2
    r = SQRT(d * d + 4 * lam * lam)
    e3 = 0.5 * (omega1 + omega2 - r)
    e4 = 0.5 * (omega1 + omega2 + r)
    f3 = np.array([0.0, (d - r) / (2 * lam), 1.0, 0.0])
    f4 = np.array([0.0, (d + r) / (2 * lam), 1.0, 0.0])
    onb = np.array(
        [[1.0, 0, 0, 0], [0, 0, 0, 1.0], f3 / np.linalg.norm(f3), f4 / np.linalg.norm(f4)],
        dtype=complex,
    )
    return np.array([0.0, omega1 + omega2, e3, e4]), onb


def fermion_cell_beta(omega1: float, omega2: float, lam: float) -> float:
    """Angle with cos b = 1/||f3||, sin b = 1/||f4||."""
    d = omega1 - omega2
    r = SQRT(d * d + 4 * lam * lam)
    cos_b = 2 * abs(lam) / SQRT((d - r) ** 2 + 4 * lam * lam)
    sin_b = 2 * abs(lam) / SQRT((d + r) ** 2 + 4 * lam * lam)
    return math.atan2(sin_b, cos_b)


def fermion_cell_frame(omega1: float, omega2: float, lam: float) -> Frame:
    """The compressed frame {phi_j} in C^3: e1, e4-state, cos b * u, sin b * u."""
    beta = fermion_cell_beta(omega1, omega2, lam)
    u = np.array([0.0, 1.0, 0.0])
    return Frame.from_vectors(
        [[1.0, 0, 0], [0, 0, 1.0], math.cos(beta) * u, math.sin(beta) * u]
    )


def _ecosystem_matrix(omegas, lambdas, nus) -> np.ndarray:
    car = car_algebra(4)
    a = car.lowering
    ad = [x.T for x in a]
    h = sum(omegas[j] * ad[j] @ a[j] for j in range(4))
    h = h + sum(lambdas[j] * (a[j] @ ad[3] + a[3] @ ad[j]) for j in range(3))
    h = h + sum(nus[j] * (a[j] @ ad[j + 1] + a[j + 1] @ ad[j]) for j in range(2))
    return h


def _calibrate() -> None:
    ref = _ecosystem_matrix(**ECOSYSTEM_REFERENCE)
    if linalg.max_abs(ref - PRINTED_ECOSYSTEM_H) > 1e-12:
        raise ConventionMismatch("Jordan-Wigner convention does not reproduce the reference matrix")


def ecosystem(omegas=None, lambdas=None, nus=None) -> ModelBundle:
    """Four-mode closed ecosystem with the L2-level projector.

    Modes: 0 nutrients, 1 and 2 the trophic levels, 3 garbage. The projector
    keeps the eight states with mode 2 empty.
    """
    _calibrate()
    omegas = tuple(ECOSYSTEM_REFERENCE["omegas"] if omegas is None else omegas)
    lambdas = tuple(ECOSYSTEM_REFERENCE["lambdas"] if lambdas is None else lambdas)
    nus = tuple(ECOSYSTEM_REFERENCE["nus"] if nus is None else nus)
    if len(omegas) != 4 or len(lambdas) != 3 or len(nus) != 2:
        raise ValueError("need 4 omegas, 3 lambdas and 2 nus")
    h = _ecosystem_matrix(omegas, lambdas, nus)
    keep = [i for i in range(16) if not (i >> 2) & 1]
    p = _basis_projector(16, keep)
    params = {f"omega{j}": w for j, w in enumerate(omegas)}
    params.update({f"lambda{j}": x for j, x in enumerate(lambdas)})
    params.update({f"nu{j}": x for j, x in enumerate(nus)})
    return ModelBundle(h, p, "four-mode ecosystem, L2 level forced empty", params)
