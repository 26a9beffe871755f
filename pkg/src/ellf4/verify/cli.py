"""Command-line entry point: ``ellf4 verify|list-suites|eval``."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from ..errors import EllF4Error, UnknownSuite
from .report import emit_report, summary_line
from .suites import DEFAULT_SEED, REGISTRY, SuiteSpec, run_suite

REPORT_DIR_ENV = "ELLF4_REPORT_DIR"

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def _complex_list(text: str) -> list:
    return [_complex(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ellf4", description="Numerical checks for the F4-symmetric elliptic integral.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("suite")
    v.add_argument("--points", type=int, default=None, help="number of sampled points (suite default otherwise)")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--tol", type=float, default=None, help="relative tolerance for every identity in the suite")
    v.add_argument("--json", dest="json_path", default=None, help="write the JSON report here")
    v.add_argument("--p", type=_complex, default=None)
    v.add_argument("--q", type=_complex, default=None)
    v.add_argument("--quiet", action="store_true", help="print only the summary line")

    sub.add_parser("list-suites", help="list registered suites")

    e = sub.add_parser("eval", help="evaluate a single function")
    ev = e.add_subparsers(dest="what", required=True)

    g = ev.add_parser("gamma", help="elliptic gamma Gamma(x;p,q)")
    g.add_argument("x", type=_complex)
    g.add_argument("--p", type=_complex, required=True)
    g.add_argument("--q", type=_complex, required=True)

    th = ev.add_parser("theta", help="theta(x;p)")
    th.add_argument("x", type=_complex)
    th.add_argument("--p", type=_complex, required=True)

    ph = ev.add_parser("phi", help="r+1phi_r series")
    ph.add_argument("--num", type=_complex_list, required=True, help="comma separated numerators")
    ph.add_argument("--den", type=_complex_list, default=[], help="comma separated denominators")
    ph.add_argument("--q", type=_complex, required=True)
    ph.add_argument("--z", type=_complex, required=True)

    w = ev.add_parser("w", help="very-well-poised r+1W_r series")
    w.add_argument("--a", type=_complex, required=True)
    w.add_argument("--b", type=_complex_list, default=[])
    w.add_argument("--q", type=_complex, required=True)
    w.add_argument("--z", type=_complex, required=True)

    e0 = ev.add_parser("e0", help="E^0 by quadrature and by its product formula")
    e0.add_argument("t", type=_complex_list, help="five free parameters; the sixth is fixed by balancing")
    e0.add_argument("--p", type=_complex, required=True)
    e0.add_argument("--q", type=_complex, required=True)

    f4 = ev.add_parser("ef4", help="E(b;t;p,q)")
    f4.add_argument("--b", type=_complex, required=True)
    f4.add_argument("--t", type=_complex_list, required=True, help="t1,t2,t3,t4")
    f4.add_argument("--p", type=_complex, required=True)
    f4.add_argument("--q", type=_complex, required=True)
    return parser


def _cmd_verify(args) -> int:
    tolerances = {"*": args.tol} if args.tol is not None else {}
    try:
        spec = SuiteSpec(args.suite, args.points, args.seed, tolerances=tolerances, p=args.p, q=args.q)
    except UnknownSuite:
        print(f"unknown suite {args.suite!r}; see 'ellf4 list-suites'", file=sys.stderr)
        return EXIT_CONFIG
    except (EllF4Error, ValueError) as exc:
        print(f"bad configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    report = run_suite(spec)
    if args.quiet:
        print(summary_line(report))
    else:
        emit_report(report, "text")
    json_path = args.json_path
    if json_path is None and os.environ.get(REPORT_DIR_ENV):
        json_path = Path(os.environ[REPORT_DIR_ENV]) / f"{spec.name}.json"
    if json_path is not None:
        try:
            emit_report(report, "json", json_path)
        except OSError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_CONFIG
    return EXIT_OK if report.all_passed else EXIT_FAIL


def _cmd_list() -> int:
    for name, suite in REGISTRY.items():
        print(f"{name:<16} {suite.default_points:>4} pts  tol {suite.default_tol:.0e}  {suite.description}")
    return EXIT_OK


def _print_value(value, err=None):
    value = complex(value)
    print(f"value {value.real:.16g} {value.imag:+.16g}j")
    if err is not None:
        print(f"error estimate {err:.3g}")


def _cmd_eval(args) -> int:
    from ..beta_integrals import BetaParams, F4IntegralParams, e0_product, e_f4, e_m
    from ..series import PhiSeriesSpec, sum_phi, sum_vwp_w
    from ..special_functions import EllipticBase, elliptic_gamma, pq_poch, theta

    if args.what == "gamma":
        base = EllipticBase(args.p, args.q)
        _, err_num = pq_poch(base.pq / args.x, base, return_error=True)
        _, err_den = pq_poch(args.x, base, return_error=True)
        _print_value(elliptic_gamma(args.x, base), err_num + err_den)
    elif args.what == "theta":
        _print_value(theta(args.x, args.p))
    elif args.what in ("phi", "w"):
        if args.what == "phi":
            res = sum_phi(PhiSeriesSpec(args.num, args.den, args.q, args.z))
        else:
            res = sum_vwp_w(args.a, args.b, args.q, args.z)
        _print_value(res.value, res.tail_estimate)
        print(f"terms {res.terms_used} terminated {res.terminated}")
    elif args.what == "e0":
        base = EllipticBase(args.p, args.q)
        params = BetaParams.balanced(args.t, base)
        diag = []
        value = e_m(params, base, diag=diag)
        _print_value(value, diag[-1].err_estimate)
        print(f"product {complex(e0_product(params.t, base))}")
    elif args.what == "ef4":
        base = EllipticBase(args.p, args.q)
        diag = []
        value = e_f4(F4IntegralParams(args.b, tuple(args.t), base), diag=diag)
        _print_value(value, diag[-1].err_estimate)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "list-suites":
        return _cmd_list()
    try:
        return _cmd_eval(args)
    except (EllF4Error, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
