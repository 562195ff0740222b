"""Scalar root solvers for the secular equations of the worked examples.

These are deliberately independent of the matrix machinery so they can be
used as oracles against :func:`framespec.hamiltonian.e_connect`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BetaOutOfRange, NotStrictlyIncreasing

MAX_BISECTIONS = 200
_MIN_GAP = 1e-12


@dataclass(frozen=True)
class SecularRoots:
    roots: tuple[float, ...]
    residuals: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def to_dict(self) -> dict:
        return {"roots": list(self.roots), "residuals": list(self.residuals)}


def mercedes_poly(e1: float, e2: float, e3: float, mu: float) -> float:
    return (e1 - mu) * (e2 - mu) + (e2 - mu) * (e3 - mu) + (e1 - mu) * (e3 - mu)


def mercedes_roots(e1: float, e2: float, e3: float) -> SecularRoots:
    """Both roots of (E1-mu)(E2-mu) + (E2-mu)(E3-mu) + (E1-mu)(E3-mu) = 0.

    Written as 3 mu^2 - 2 s mu + q = 0 and solved without cancellation.
    """
    s = e1 + e2 + e3
    q = e1 * e2 + e2 * e3 + e1 * e3
    # discriminant / 4 as a sum of squares, never negative
    disc = 0.5 * ((e1 - e2) ** 2 + (e2 - e3) ** 2 + (e1 - e3) ** 2)
    root = math.sqrt(disc)
    big = s + math.copysign(root, s)
    if big == 0.0:
        lo = hi = 0.0
    else:
        r1 = big / 3.0
        r2 = q / big
        lo, hi = sorted((r1, r2))
    res = tuple(abs(mercedes_poly(e1, e2, e3, r)) for r in (lo, hi))
    return SecularRoots((lo, hi), res)


def casazza_function(e, mu: float) -> float:
    return float(sum(1.0 / (x - mu) for x in e))


def casazza_roots(e) -> SecularRoots:
    """Roots of sum_i 1/(E_i - mu) = 0 for strictly increasing E_1 < ... < E_K.

    Exactly one root lies in each gap (E_i, E_{i+1}); the function increases
    from -inf to +inf there, so plain bisection is safe.
    """
    e = [float(x) for x in e]
    for a, b in zip(e, e[1:]):
        if not b - a >= _MIN_GAP:
            raise NotStrictlyIncreasing(f"coefficients must increase strictly, got {a!r} then {b!r}")
    roots, res = [], []
    for a, b in zip(e, e[1:]):
        lo, hi = a, b
        for _ in range(MAX_BISECTIONS):
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if casazza_function(e, mid) < 0.0:
                lo = mid
            else:
                hi = mid
        cands = [x for x in (lo, hi) if a < x < b] or [0.5 * (lo + hi)]
        best = min(cands, key=lambda x: abs(casazza_function(e, x)))
        roots.append(best)
        res.append(abs(casazza_function(e, best)))
    return SecularRoots(tuple(roots), tuple(res))


def casazza_eigenvector(e, mu: float) -> np.ndarray:
    """Normalized f = sum_i (E_i - mu)^{-1} e_i."""
    f = 1.0 / (np.asarray(e, dtype=float) - mu)
    return f / np.linalg.norm(f)


def projected_pair_root(e3: float, e4: float, beta: float) -> float:
    """Solution of (E3 - mu) cos^2 b + (E4 - mu) sin^2 b = 0, b in (0, pi/2)."""
    if not 0.0 < beta < math.pi / 2:
        raise BetaOutOfRange(f"beta={beta!r} not in (0, pi/2)")
    c2 = math.cos(beta) ** 2
    s2 = math.sin(beta) ** 2
    return (e3 * c2 + e4 * s2) / (c2 + s2)
