"""Command-line front end.

    pseudoeig solve     --matrix A.mtx --lambda0 1.9 --m 1 --k 5 [--orthonormalize] [--certify]
    pseudoeig refine    (same flags as solve; always orthonormalizes)
    pseudoeig identify  --matrix A.mtx --lambda0 2,0 [--theta 1e-2] [--kmax 8]
    pseudoeig fixtures  --name grid20|jbiteA|jbiteA-perturbed|example4|matrixB|all

Reports go to stdout as JSON.  Exit codes: 0 success, 1 input error,
2 non-convergence (or, for ``fixtures``, a failed check).
"""

import argparse
import logging
import sys

from . import io
from .exceptions import PseudoEigError
from .identify import AnchorSearchConfig, anchor_search, default_theta, numerical_nullity
from .refine import refine
from .reproduce import FIXTURE_NAMES, run_fixture
from .solver import SolverConfig, certify, pseudoeig
from .validation import check_matrix

EXIT_OK, EXIT_INPUT, EXIT_NOCONV = 0, 1, 2


class InputError(Exception):
    def __init__(self, kind, message):
        super().__init__(message)
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError("argument", message)


def parse_lambda0(text):
    """``re`` or ``re,im``."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise InputError("argument", f"--lambda0 expects 're' or 're,im', got {text!r}")


def _load(args):
    try:
        A = io.read_matrix(args.matrix, args.format)
        A = check_matrix(A, square=True)
    except FileNotFoundError as exc:
        raise InputError("io", f"no such file: {exc.filename}") from None
    except (IsADirectoryError, PermissionError, UnicodeDecodeError) as exc:
        raise InputError("io", str(exc)) from None
    except PseudoEigError as exc:
        raise InputError(exc.kind, str(exc)) from None
    except ValueError as exc:
        raise InputError("input", str(exc)) from None
    return A


def _input_digest(args, A, **extra):
    d = {
        "matrix": str(args.matrix),
        "rows": int(A.shape[0]),
        "cols": int(A.shape[1]),
        "sha256": io.file_digest(args.matrix),
        "lambda0": io.encode_complex(args.lambda0),
        "seed": int(args.seed),
    }
    d.update(extra)
    return d


def cmd_solve(args, out):
    A = _load(args)
    if args.m < 1 or args.k < 1 or args.m > A.shape[0] or args.k > A.shape[0]:
        raise InputError("dimension", f"multiplicity support {args.m}x{args.k} invalid for n={A.shape[0]}")
    cfg = SolverConfig(max_iter=args.max_iter, seed=args.seed)
    report = {"input": _input_digest(args, A, m=args.m, k=args.k, theta=None)}
    try:
        sol = pseudoeig(A, args.lambda0, args.m, args.k, cfg)
        if args.orthonormalize:
            sol = refine(A, sol, cfg)
    except PseudoEigError as exc:
        report.update(io.error_dict(type(exc).__name__, exc))
        out.write(io.dumps(report) + "\n")
        return EXIT_NOCONV
    report["solution"] = io.solution_dict(sol)
    if args.certify:
        try:
            report["certificate"] = io.certificate_dict(certify(A, sol))
        except PseudoEigError as exc:
            report["certificate"] = io.error_dict(type(exc).__name__, exc)["error"]
    out.write(io.dumps(report) + "\n")
    return EXIT_OK if sol.converged else EXIT_NOCONV


def cmd_refine(args, out):
    args.orthonormalize = True
    return cmd_solve(args, out)


def cmd_identify(args, out):
    A = _load(args)
    theta = args.theta if args.theta is not None else default_theta(A)
    if not theta > 0:
        raise InputError("argument", "--theta must be positive")
    if args.kmax < 1:
        raise InputError("argument", "--kmax must be >= 1")
    m = numerical_nullity(A, args.lambda0, theta)
    report = {"input": _input_digest(args, A, theta=theta, kmax=args.kmax), "m": m}
    if m == 0:
        report.update({"k_accepted": None, "diagnostics": []})
        out.write(io.dumps(report) + "\n")
        return EXIT_NOCONV
    cfg = SolverConfig(max_iter=args.max_iter, seed=args.seed)
    k, diag = anchor_search(A, args.lambda0, m, args.kmax, cfg, AnchorSearchConfig())
    report.update({"k_accepted": k, "diagnostics": io.diagnostics_list(diag)})
    out.write(io.dumps(report) + "\n")
    return EXIT_OK if k is not None else EXIT_NOCONV


def _fmt(v):
    if isinstance(v, complex):
        return f"{v.real:.15f}{v.imag:+.2e}i"
    if isinstance(v, float):
        return f"{v:.11g}" if 1e3 <= abs(v) < 1e12 else f"{v:.4g}"
    return str(v)


def cmd_fixtures(args, out):
    if args.name != "all" and args.name not in FIXTURE_NAMES:
        raise InputError("argument", f"unknown fixture {args.name!r}; choose from {', '.join(FIXTURE_NAMES)}, all")
    checks = run_fixture(args.name, seed=args.seed)
    header = ("fixture", "quantity", "actual", "expected", "tolerance", "status")
    rows = [
        (c.fixture, c.quantity, _fmt(c.actual), c.expected, c.tolerance,
         "info" if c.passed is None else ("PASS" if c.passed else "FAIL"))
        for c in checks
    ]
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    for r in [header] + rows:
        print("  ".join(s.ljust(w) for s, w in zip(r, widths)).rstrip(), file=sys.stderr)
    failed = any(c.passed is False for c in checks)
    out.write(io.dumps({"fixtures": [c.as_dict() for c in checks], "passed": not failed}) + "\n")
    return EXIT_NOCONV if failed else EXIT_OK


def build_parser():
    p = _Parser(prog="pseudoeig", description="Defective eigenvalues as pseudo-eigenvalues.")
    p.add_argument("-v", "--verbose", action="store_true", help="log iterations to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def matrix_flags(sp):
        sp.add_argument("--matrix", required=True, help="Matrix Market (array) or CSV file")
        sp.add_argument("--format", choices=io.FORMATS, default=None, help="default: by file extension")
        sp.add_argument("--lambda0", required=True, type=parse_lambda0, help="re or re,im")
        sp.add_argument("--seed", type=int, default=42)
        sp.add_argument("--max-iter", type=int, default=50)

    for name, fn in (("solve", cmd_solve), ("refine", cmd_refine)):
        sp = sub.add_parser(name, help="compute an m x k pseudo-eigenvalue" if name == "solve" else "solve, then orthonormalize and iterate again")
        matrix_flags(sp)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--orthonormalize", action="store_true")
        sp.add_argument("--certify", action="store_true")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("identify", help="identify the multiplicity support m x k")
    matrix_flags(sp)
    sp.add_argument("--theta", type=float, default=None, help="nullity tolerance (default 1e-2 ||A||_F / n)")
    sp.add_argument("--kmax", type=int, default=8)
    sp.set_defaults(func=cmd_identify)

    sp = sub.add_parser("fixtures", help="rerun the bundled fixture experiments")
    sp.add_argument("--name", required=True, help=f"{'|'.join(FIXTURE_NAMES)}|all")
    sp.add_argument("--seed", type=int, default=42)
    sp.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InputError as exc:
        out.write(io.dumps(io.error_dict(exc.kind, exc)) + "\n")
        return EXIT_INPUT
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args, out)
    except InputError as exc:
        out.write(io.dumps(io.error_dict(exc.kind, exc)) + "\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
