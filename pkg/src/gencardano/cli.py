"""Command-line interface.

All output is JSON on stdout; diagnostics go to stderr. Polynomial
coefficients are ascending (constant term first), both on input
(``--coeffs "-9,-6,0,1"`` is x^3 - 6x - 9) and on output, where each
coefficient is a ``[re, im]`` pair.

Exit codes: 0 success, 1 not a Cardano polynomial, 2 usage error,
3 oracle non-convergence, 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from typing import Optional, Sequence

import numpy as np

from . import cardano, chebyshev, ferrari, operators
from .cardano import CardanoParams
from .errors import CardanoError, DomainError, InconsistentInput, NonConvergence
from .poly import Polynomial, oracle_roots, poly_eval, root_multiset_equal, sort_roots

EXIT_OK = 0
EXIT_NOT_CARDANO = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3
EXIT_VERIFY_FAILED = 4

DEFAULT_TOL = 1e-8

_COEFF_LIST = re.compile(r"^-[^,\s]*(,[^,\s]*)+$")


class UsageError(Exception):
    pass


def tolerance() -> float:
    raw = os.environ.get("CARDANO_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"CARDANO_TOL is not a number: {raw!r}")
    if not tol > 0:
        raise UsageError("CARDANO_TOL must be positive")
    return tol


def parse_coeffs(text: str) -> Polynomial:
    try:
        values = [float(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed coefficient list: {text!r}")
    if not all(math.isfinite(v) for v in values):
        raise UsageError("coefficients must be finite")
    poly = Polynomial(values)
    if poly.degree < 1 or poly.max_abs_coeff() == 0:
        raise UsageError("need a polynomial of degree >= 1")
    return poly


def make_params(n, c, d) -> CardanoParams:
    try:
        return CardanoParams(n, c, d)
    except DomainError as exc:
        raise UsageError(str(exc))


def _pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def encode_poly(p: Polynomial) -> list[list[float]]:
    return [_pair(a) for a in p.coeffs]


def encode_roots(roots) -> list[dict]:
    return [{"re": float(r.real), "im": float(r.imag)} for r in sort_roots(roots)]


def solve_report(
    poly: Polynomial,
    roots,
    method: str,
    params: Optional[CardanoParams] = None,
    **extra,
) -> dict:
    """Assemble a SolveReport; the residual is computed from the serialized values."""
    out = {}
    if params is not None:
        out["params"] = params.as_dict()
    out["polynomial"] = encode_poly(poly)
    out["roots"] = encode_roots(roots)
    out["method"] = method
    out.update(extra)
    out["residual_max"] = residual_from_report(out)
    return out


def residual_from_report(report: dict) -> float:
    """Max |p(r)| over the report's roots, using only the JSON-level values."""
    poly = Polynomial([complex(re, im) for re, im in report["polynomial"]])
    if not report["roots"]:
        return 0.0
    roots = np.array([complex(r["re"], r["im"]) for r in report["roots"]])
    return float(np.max(np.abs(poly_eval(poly, roots))))


def _closed_form_method(params: CardanoParams) -> str:
    return "trig" if params.discriminant_is_negative() else "radical"


# -- subcommands --------------------------------------------------------------


def cmd_build(args) -> tuple[dict, int]:
    params = make_params(args.n, args.c, args.d)
    poly = cardano.build_polynomial(params)
    return {
        "params": params.as_dict(),
        "polynomial": encode_poly(poly),
        "coeffs": poly.real_coeffs(),
    }, EXIT_OK


def cmd_solve(args) -> tuple[dict, int]:
    if args.coeffs is not None:
        if any(v is not None for v in (args.n, args.c, args.d)):
            raise UsageError("give either --coeffs or --n/--c/--d, not both")
        poly = parse_coeffs(args.coeffs)
        params = cardano.recognize(poly, 1e-9)
        if params is None:
            roots = oracle_roots(poly)
            return solve_report(poly, roots, "oracle"), EXIT_OK
        # report the polynomial as given, solved through its Cardano form
        roots = cardano.closed_form_roots(params)
        return solve_report(poly, roots, _closed_form_method(params), params), EXIT_OK
    if any(v is None for v in (args.n, args.c, args.d)):
        raise UsageError("solve needs --coeffs or all of --n, --c, --d")
    params = make_params(args.n, args.c, args.d)
    poly = cardano.build_polynomial(params)
    roots = cardano.closed_form_roots(params)
    return solve_report(poly, roots, _closed_form_method(params), params), EXIT_OK


def cmd_recognize(args) -> tuple[dict, int]:
    text = args.coeffs if args.coeffs is not None else args.coeff_list
    if text is None:
        raise UsageError("recognize needs a coefficient list")
    params = cardano.recognize(parse_coeffs(text), args.tol)
    if params is None:
        return {"result": "not-cardano"}, EXIT_NOT_CARDANO
    return {"result": "cardano", "params": params.as_dict()}, EXIT_OK


def cmd_ferrari(args) -> tuple[dict, int]:
    general = [args.a3, args.a2, args.a1, args.a0]
    depressed = [args.a, args.b, args.c]
    if all(v is not None for v in general) and all(v is None for v in depressed):
        sol = ferrari.solve_quartic_general(*general)
    elif all(v is not None for v in depressed) and all(v is None for v in general):
        sol = ferrari.solve_quartic_depressed(*depressed)
    else:
        raise UsageError("ferrari needs either --a --b --c or --a3 --a2 --a1 --a0")
    report = solve_report(
        sol.polynomial,
        sol.roots,
        "ferrari",
        resolvent=encode_poly(sol.resolvent),
        aux={"y": sol.aux.y, "alpha": sol.aux.alpha, "beta": sol.aux.beta},
        biquadratic=sol.biquadratic,
    )
    return report, EXIT_OK


def cmd_verify_op(args) -> tuple[dict, int]:
    params = make_params(args.n, args.c, args.d)
    if params.n > operators.MAX_DIM:
        raise UsageError(f"n must be <= {operators.MAX_DIM} for dense operators")
    tol = tolerance()
    rep = operators.verify_cardano_identity(params)
    closed = cardano.closed_form_roots(params)
    recovered = operators.fourier_root_recovery(params)
    comm = operators.commutation_check(params.n)
    checks = {
        "w_identity": rep.w_residual <= tol * rep.scale,
        "x_identity": rep.x_residual <= tol * rep.scale,
        "circulant": rep.circulant_first_row is not None,
        "spectrum": root_multiset_equal(rep.spectrum, np.diag(operators.fujii_w(params)), 1e-9),
        "commutation": comm <= 1e-12 * params.n,
        "fourier_recovery": root_multiset_equal(recovered, closed, 1e-9),
    }
    row = rep.circulant_first_row
    out = {
        "params": params.as_dict(),
        "identity_residual": rep.identity_residual,
        "w_residual": rep.w_residual,
        "x_residual": rep.x_residual,
        "scale": rep.scale,
        "tolerance": tol,
        "circulant_firstrow": None if row is None else [_pair(v) for v in row],
        "spectrum": encode_roots(rep.spectrum),
        "commutation_residual": comm,
        "fourier_roots": encode_roots(recovered),
        "checks": checks,
        "ok": all(checks.values()),
    }
    return out, EXIT_OK if out["ok"] else EXIT_VERIFY_FAILED


def cmd_chebyshev(args) -> tuple[dict, int]:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    om = chebyshev.omega_recurrence(args.n)
    out = {"n": args.n, "omega": list(om.coeffs)}
    if (args.c is None) != (args.d is None):
        raise UsageError("give both --c and --d, or neither")
    if args.c is not None:
        seq = chebyshev.cardano_recurrence_sequence(args.c, args.d, max(3, args.n))
        out["c"], out["d"] = args.c, args.d
        out["cardano"] = seq[args.n - 1].real_coeffs()
    return out, EXIT_OK


# -- plumbing -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gencardano", description=__doc__.splitlines()[0])
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="compact JSON (default)")
    fmt.add_argument("--pretty", action="store_true", help="indented JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="coefficients of C_{n,c,d}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("solve", help="roots of a polynomial or of C_{n,c,d}")
    p.add_argument("--coeffs", help="ascending comma-separated coefficients")
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=float)
    p.add_argument("--d", type=float)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("recognize", help="detect a Cardano polynomial")
    p.add_argument("coeff_list", nargs="?")
    p.add_argument("--coeffs")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("ferrari", help="quartic via the resolvent cubic")
    for name in ("a", "b", "c", "a3", "a2", "a1", "a0"):
        p.add_argument(f"--{name}", type=float)
    p.set_defaults(func=cmd_ferrari)

    p = sub.add_parser("verify-op", help="operator identities for C_{n,c,d}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.set_defaults(func=cmd_verify_op)

    p = sub.add_parser("chebyshev", help="Vieta-Lucas polynomial and Cardano recurrence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float)
    p.add_argument("--d", type=float)
    p.set_defaults(func=cmd_chebyshev)
    return parser


def _normalize_argv(argv: Sequence[str]) -> list[str]:
    # argparse mistakes "-9,-6,0,1" for an option; bind such lists explicitly
    out: list[str] = []
    for tok in argv:
        if _COEFF_LIST.match(tok):
            if out and out[-1] == "--coeffs":
                out[-1] = f"--coeffs={tok}"
            else:
                out.append(f"--coeffs={tok}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_normalize_argv(argv))
        payload, code = args.func(args)
    except UsageError as exc:
        print(f"gencardano: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergence as exc:
        print(f"gencardano: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except (DomainError, InconsistentInput, CardanoError) as exc:
        print(f"gencardano: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    indent = 2 if args.pretty else None
    sys.stdout.write(json.dumps(payload, indent=indent, ensure_ascii=False) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
