"""Eigenvalue clustering of truncated block-frame Hamiltonians.

Coefficients accumulate at LIMIT; as more blocks are kept, more eigenvalues
of the truncated operator fall within EPS of LIMIT.
"""

import argparse

import numpy as np

from framespec import hamiltonian, models
from framespec.reproduce import block_coefficients


def cluster_count(k_max: int, limit: float, eps: float) -> tuple[int, int]:
    blocks = block_coefficients(k_max, limit)
    fh = hamiltonian.build(models.casazza_block_frame(k_max), [x for b in blocks for x in b])
    spec = hamiltonian.e_connect(fh, certify=False).tilde_E
    return spec.size, int(np.sum(np.abs(spec - limit) < eps))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-max", type=int, nargs="+", default=[4, 8, 12, 16])
    ap.add_argument("--limit", type=float, default=1.0)
    ap.add_argument("--eps", type=float, default=0.05)
    args = ap.parse_args()
    print(f"{'k_max':>6} {'dim':>5} {'near limit':>11}")
    for k in args.k_max:
        dim, near = cluster_count(k, args.limit, args.eps)
        print(f"{k:>6} {dim:>5} {near:>11}")


if __name__ == "__main__":
    main()
