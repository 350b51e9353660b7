"""Command line front end.

Exit codes: 0 when every emitted report passes, 1 when any identity fails,
2 on usage errors. Rationals are always printed as ``num/den`` strings.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import identities
from .bernoulli_euler import bernoulli_number, bernoulli_polynomial, euler_number, euler_polynomial
from .errors import BernsymError
from .exact_core import TruncatedSeries, format_rational, parse_rational, series_div_exact, series_exp
from .padic import (
    DEFAULT_PRECISION,
    QParameter,
    carlitz_beta,
    convergence_report,
    is_prime,
    q_integral_approx,
)
from .power_sums import alt_power_sum_closed, alt_power_sum_direct, power_sum_closed, power_sum_direct


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _prime(text: str) -> int:
    value = _nonneg_int(text)
    if not is_prime(value):
        raise argparse.ArgumentTypeError(f"{value} is not prime")
    return value


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _val(v) -> int | str:
    return "inf" if v == float("inf") else v


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernsym",
        description="Exact Bernoulli/Euler arithmetic, p-adic approximants and symmetry identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("number", help="print B_n or E_n = E_n(0)")
    p.add_argument("kind", choices=["bernoulli", "euler"])
    p.add_argument("n", type=_nonneg_int)

    p = sub.add_parser("polynomial", help="print B_n(x) or E_n(x) coefficients (ascending)")
    p.add_argument("kind", choices=["bernoulli", "euler"])
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("--at", type=_rational, help="evaluate at this rational instead")

    p = sub.add_parser("powersum", help="S_k(n) or, with --alternating, T_k(n)")
    p.add_argument("k", type=_nonneg_int)
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("--alternating", action="store_true")
    p.add_argument(
        "--method",
        choices=["direct", "closed"],
        default="direct",
        help="closed uses Bernoulli/Euler polynomials (T_k(n) needs even n)",
    )

    p = sub.add_parser("series", help="EGF coefficients computed by exact series division")
    p.add_argument("kind", choices=["bernoulli", "euler", "exp"])
    p.add_argument("--order", type=_nonneg_int, default=10)
    p.add_argument("--c", type=_rational, default=Fraction(1), help="rate for exp(c t)")

    p = sub.add_parser("verify", help="sweep an identity over a parameter grid")
    p.add_argument("identity", help=f"one of: {', '.join(identities.VERIFIERS)}")
    p.add_argument("--n-max", type=_nonneg_int, default=4)
    p.add_argument("--w-max", type=_pos_int, default=3)
    p.add_argument("--w", type=_pos_int, action="append", help="explicit weight (repeatable)")
    p.add_argument("--x", type=_rational, action="append", help='argument "num/den" (repeatable)')
    p.add_argument("--order", type=_nonneg_int, default=8)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("padic", help="p-adic convergence reports and Carlitz numbers")
    p.add_argument("kind", choices=["volkenborn", "fermionic", "carlitz", "qintegral"])
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--n", type=_nonneg_int, default=1)
    p.add_argument("--N-max", dest="N_max", type=_pos_int, default=5)
    p.add_argument("--N", dest="N", type=_pos_int, default=2, help="level for qintegral")
    p.add_argument("--q", help='deformation parameter, e.g. "1+5" or "1+3^2"')
    p.add_argument("--m", type=_nonneg_int, default=0)
    p.add_argument("--precision", type=_pos_int, default=DEFAULT_PRECISION)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    return parser


def _cmd_number(args, out) -> int:
    value = bernoulli_number(args.n) if args.kind == "bernoulli" else euler_number(args.n)
    print(format_rational(value), file=out)
    return 0


def _cmd_polynomial(args, out) -> int:
    poly = bernoulli_polynomial(args.n) if args.kind == "bernoulli" else euler_polynomial(args.n)
    if args.at is not None:
        print(format_rational(poly(args.at)), file=out)
    else:
        print(_dump(poly.to_strings()), file=out)
    return 0


def _cmd_powersum(args, out, parser) -> int:
    k, n = args.k, args.n
    if args.method == "direct":
        value = alt_power_sum_direct(k, n) if args.alternating else power_sum_direct(k, n)
    elif args.alternating:
        if n % 2:
            parser.error("closed alternating sum T_k(n) needs even n")
        value = alt_power_sum_closed(k, n + 1)
    else:
        value = power_sum_closed(k + 1, n + 1)
    print(format_rational(value), file=out)
    return 0


def _cmd_series(args, out) -> int:
    K = args.order
    if args.kind == "exp":
        s = series_exp(args.c, K)
    elif args.kind == "bernoulli":
        t = TruncatedSeries.monomial(1, K + 1)
        s = series_div_exact(t, series_exp(1, K + 1) - 1, 1)
    else:
        s = series_div_exact(TruncatedSeries([2], K), series_exp(1, K) + 1, 0)
    print(_dump(s.to_strings()), file=out)
    return 0


def _cmd_verify(args, out, parser) -> int:
    v = identities.VERIFIERS.get(args.identity)
    if v is None:
        parser.error(f"unknown identity {args.identity!r}; choose from {', '.join(identities.VERIFIERS)}")
    if args.w:
        weights = sorted(set(args.w))
    else:
        weights = list(range(1, args.w_max + 1))
    if v.odd_only:
        if args.w:
            even = [w for w in weights if w % 2 == 0]
            if even:
                parser.error(f"{v.name} is defined for odd weights only; got {even}")
        elif args.w_max % 2 == 0:
            parser.error(
                f"{v.name} is defined for odd weights only; --w-max must be odd (got {args.w_max})"
            )
        weights = [w for w in weights if w % 2]
    if args.format == "csv" and v.kind in ("series", "ratio"):
        parser.error("csv output covers scalar identities only; use --format json")
    xs = args.x or [Fraction(0)]

    passed = failed = 0
    writer = None
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["identity", "n", "w1", "w2", "x", "lhs", "rhs", "pass"])
    try:
        for report in identities.sweep(v.name, args.n_max, weights, xs, args.order):
            if report.passed:
                passed += 1
            else:
                failed += 1
            if writer is None:
                print(report.to_json(), file=out)
            else:
                d = report.to_dict()
                prm = d["params"]
                writer.writerow(
                    [d["identity"], prm.get("n", ""), prm.get("w1", ""), prm.get("w2", ""),
                     prm.get("x", ""), d["lhs"], d["rhs"], str(d["pass"]).lower()]
                )
    except BernsymError as exc:
        parser.error(str(exc))
    summary = {"summary": {"identity": v.name, "total": passed + failed, "passed": passed, "failed": failed}}
    print(_dump(summary), file=out if writer is None else sys.stderr)
    return 0 if failed == 0 else 1


def _cmd_padic(args, out, parser) -> int:
    try:
        if args.kind in ("volkenborn", "fermionic"):
            if args.kind == "fermionic" and args.p == 2:
                parser.error("the fermionic integral needs an odd prime")
            rows = convergence_report(args.kind, args.n, args.p, args.N_max)
            if args.format == "csv":
                w = csv.writer(out, lineterminator="\n")
                w.writerow(["N", "valuation"])
                w.writerows([N, _val(v)] for N, v in rows)
            else:
                print(_dump({
                    "kind": args.kind, "p": args.p, "n": args.n,
                    "valuations": [_val(v) for _, v in rows],
                }), file=out)
            return 0
        if args.q is None:
            parser.error(f"padic {args.kind} needs --q")
        q = QParameter.parse(args.q, args.p, args.precision)
        if args.kind == "carlitz":
            beta = carlitz_beta(args.m, q)
            print(_dump({"m": args.m, "q": format_rational(q.exact), "beta": beta.to_dict()}), file=out)
        else:
            value = q_integral_approx(args.m, q, args.N, args.precision)
            print(_dump({"m": args.m, "q": format_rational(q.exact), "N": args.N,
                         "value": value.to_dict()}), file=out)
    except BernsymError as exc:
        parser.error(str(exc))
    return 0


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "number":
        return _cmd_number(args, out)
    if args.command == "polynomial":
        return _cmd_polynomial(args, out)
    if args.command == "powersum":
        return _cmd_powersum(args, out, parser)
    if args.command == "series":
        return _cmd_series(args, out)
    if args.command == "verify":
        return _cmd_verify(args, out, parser)
    return _cmd_padic(args, out, parser)


if __name__ == "__main__":
    sys.exit(main())
