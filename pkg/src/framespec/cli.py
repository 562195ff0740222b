"""Command-line front end.

    framespec frame check|dilate FILE
    framespec ham spectrum|connect FILE
    framespec ham certify FILE --mu VALUE
    framespec secular mercedes E1 E2 E3 | casazza E1 ... EK | pair E3 E4 BETA
    framespec reproduce ID|all

Exit codes: 0 success, 1 input error, 2 domain error, 3 reproduction failure.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import frames, hamiltonian, io, linalg, reproduce, secular
from .errors import DomainError, FrameSpecError, InputError, InternalInconsistency, NumericalFailure

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_REPRO = 0, 1, 2, 3


def default_tol() -> float:
    raw = os.environ.get("FRAMESPEC_TOL")
    if raw is None:
        return frames.PARSEVAL_TOL
    try:
        val = float(raw)
    except ValueError:
        raise InputError(f"FRAMESPEC_TOL: not a number: {raw!r}") from None
    if not val > 0:
        raise InputError("FRAMESPEC_TOL: must be positive")
    return val


def _emit(args, payload, human=None) -> None:
    if args.json or human is None:
        print(io.dumps(payload))
    else:
        print(human)


def _fmt(x) -> str:
    return f"{x:.12g}"


def cmd_frame_check(args) -> int:
    f = io.frame_from_obj(io.load_json(args.path))
    rep = frames.frame_report(f, args.tol)
    _emit(args, rep.to_dict(), "\n".join(f"{k}: {v}" for k, v in rep.to_dict().items()))
    return EXIT_OK


def cmd_dilate(args) -> int:
    f = io.frame_from_obj(io.load_json(args.path))
    dil = frames.naimark_dilate(f, args.tol)
    payload = {
        "excess": dil.psi.dim,
        "psi": io.frame_to_obj(dil.psi),
        "psi_gram": dil.psi.gram(),
        "onb": dil.onb,
        "orthonormality_residual": dil.residual,
        "tolerance_used": args.tol,
    }
    _emit(args, payload)
    return EXIT_OK


def _load_ham(args) -> hamiltonian.FrameHamiltonian:
    f, coeffs = io.hamiltonian_from_obj(io.load_json(args.path))
    return hamiltonian.build(f, coeffs, args.tol)


def cmd_spectrum(args) -> int:
    fh = _load_ham(args)
    eig = linalg.hermitian_eig(fh.matrix)
    residual = linalg.max_abs(fh.matrix @ eig.columns - eig.columns * eig.values)
    payload = {
        "eigenvalues": eig.values,
        "e_min": fh.coeffs.e_min,
        "e_max": fh.coeffs.e_max,
        "matrix": fh.matrix,
        "eigen_residual": residual,
        "tolerance_used": args.tol,
    }
    _emit(args, payload, "eigenvalues: " + " ".join(_fmt(x) for x in eig.values))
    return EXIT_OK


def cmd_connect(args) -> int:
    fh = _load_ham(args)
    ec = hamiltonian.e_connect(fh)
    payload = ec.to_dict()
    payload["tolerance_used"] = args.tol
    human = "\n".join(
        [f"E~: {' '.join(_fmt(x) for x in ec.tilde_E)}", f"reconstruction residual: {ec.reconstruction_residual:.3e}"]
    )
    _emit(args, payload, human)
    return EXIT_OK


def cmd_certify(args) -> int:
    fh = _load_ham(args)
    primary = hamiltonian.certify_eigenvalue(fh, args.mu)
    dual = hamiltonian.certify_eigenvalue_dual(fh, args.mu)
    payload = {"mu": args.mu, "accepted": primary.accepted, "gram": primary.to_dict(), "dual": dual.to_dict()}
    _emit(args, payload, f"mu={_fmt(args.mu)} accepted={primary.accepted}")
    return EXIT_OK


def cmd_secular(args) -> int:
    vals = args.values
    if args.kind == "mercedes":
        if len(vals) != 3:
            raise InputError("secular mercedes: expected three values E1 E2 E3")
        payload = secular.mercedes_roots(*vals).to_dict()
    elif args.kind == "casazza":
        if len(vals) < 2:
            raise InputError("secular casazza: expected at least two values")
        payload = secular.casazza_roots(vals).to_dict()
    else:
        if len(vals) != 3:
            raise InputError("secular pair: expected E3 E4 BETA")
        mu = secular.projected_pair_root(*vals)
        c2, s2 = np.cos(vals[2]) ** 2, np.sin(vals[2]) ** 2
        res = abs((vals[0] - mu) * c2 + (vals[1] - mu) * s2)
        payload = {"roots": [mu], "residuals": [float(res)]}
    _emit(args, payload, "roots: " + " ".join(_fmt(x) for x in payload["roots"]))
    return EXIT_OK


def format_report(rep: reproduce.ReproductionReport) -> str:
    lines = [f"Example {rep.example_id}: {rep.title} -> {'PASS' if rep.passed else 'FAIL'}"]
    for c in rep.checks:
        lines.append(f"  [{'ok' if c.passed else 'XX'}] {c.name:<34} tol={c.tolerance:<8.1e} ({c.source})")
    return "\n".join(lines)


def cmd_reproduce(args) -> int:
    if args.example != "all" and args.example not in {"1", "2", "3", "4", "5"}:
        raise InputError(f"reproduce: unknown example {args.example!r}")
    reports = reproduce.reproduce(args.example)
    ok = all(r.passed for r in reports)
    payload = {"pass": ok, "reports": [r.to_dict() for r in reports]}
    _emit(args, payload, "\n".join(format_report(r) for r in reports))
    return EXIT_OK if ok else EXIT_REPRO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="tolerance (default: FRAMESPEC_TOL or 1e-8)")
    common.add_argument("--json", action="store_true", help="emit JSON only")

    parser = argparse.ArgumentParser(prog="framespec", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="group", required=True)

    fr = sub.add_parser("frame", help="frame diagnostics").add_subparsers(dest="action", required=True)
    p = fr.add_parser("check", parents=[common])
    p.add_argument("path")
    p.set_defaults(func=cmd_frame_check)
    p = fr.add_parser("dilate", parents=[common])
    p.add_argument("path")
    p.set_defaults(func=cmd_dilate)

    ham = sub.add_parser("ham", help="frame Hamiltonians").add_subparsers(dest="action", required=True)
    for name, func in (("spectrum", cmd_spectrum), ("connect", cmd_connect)):
        p = ham.add_parser(name, parents=[common])
        p.add_argument("path")
        p.set_defaults(func=func)
    p = ham.add_parser("certify", parents=[common])
    p.add_argument("path")
    p.add_argument("--mu", type=float, required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("secular", parents=[common], help="secular equation solvers")
    p.add_argument("kind", choices=["mercedes", "casazza", "pair"])
    p.add_argument("values", type=float, nargs="+")
    p.set_defaults(func=cmd_secular)

    p = sub.add_parser("reproduce", parents=[common], help="reproduce the worked examples")
    p.add_argument("example", help="1..5 or all")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.tol is None:
            args.tol = default_tol()
        elif not args.tol > 0:
            raise InputError("--tol must be positive")
        return args.func(args)
    except (DomainError, NumericalFailure, InternalInconsistency) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (FrameSpecError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
