"""Command line front end.

Subcommands expose the main library surfaces: series expansion, single
partition-sum values, identity verification, sign-expression sweeps, and
lattice point counts.  Output is a plain aligned table by default or a JSON
envelope with stable keys under --json.  Exit status: 0 on success, 1 when a
verification or detection run found a mismatch, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .detector import Expression, LelievreExpression, detect_range
from .eisenstein import delta2, delta3, eisenstein_e, eisenstein_g
from .identities import run_identity_suite
from .lattice import CATALOG_NAMES, catalog, lattice_count_formula, theta_series
from .numtheory import residue_classes
from .partitions import (
    VARIANTS,
    MacMahonParams,
    macmahon_series,
    variant_params,
    variant_series,
    verify_main_identity,
)


def _add_family_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("partition family")
    group.add_argument("--variant", choices=sorted(VARIANTS), help="named parameter set")
    group.add_argument("--modulus", type=int, help="residue modulus of the part condition")
    group.add_argument("--residues", help="comma separated residues, e.g. 1,4")
    group.add_argument("--epsilon", choices=["+1", "-1"], default="+1", help="sign weight on parts")


def _resolve_family(args: argparse.Namespace, parser: argparse.ArgumentParser, k: int):
    """Return (params, signed) from either a variant letter or explicit data."""
    if args.variant is not None:
        if args.modulus is not None or args.residues is not None:
            parser.error("--variant cannot be combined with --modulus/--residues")
        base = variant_params(args.variant, 1)
        return MacMahonParams(base.classes, base.eps, k), VARIANTS[args.variant][3]
    if args.modulus is None or args.residues is None:
        parser.error("need either --variant or both --modulus and --residues")
    try:
        residues = [int(r) for r in args.residues.split(",") if r.strip()]
        classes = residue_classes(args.modulus, residues)
    except ValueError as exc:
        parser.error(str(exc))
    return MacMahonParams(classes, 1 if args.epsilon == "+1" else -1, k), False


def _emit(args: argparse.Namespace, command: str, params: dict[str, Any],
          rows: list[dict[str, Any]], violations: list[Any]) -> None:
    if args.json:
        doc = {"command": command, "params": params, "rows": rows, "violations": violations}
        print(json.dumps(doc, indent=2))
        return
    if rows:
        headers = list(rows[0])
        widths = [max(len(h), max(len(str(r[h])) for r in rows)) for h in headers]
        print("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
        for row in rows:
            print("  ".join(str(row[h]).ljust(w) for h, w in zip(headers, widths)))
    if violations:
        print(f"violations: {violations}")


def _cmd_series(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    order = args.order
    params: dict[str, Any] = {"kind": args.kind, "order": order}
    if args.kind == "macmahon":
        family, signed = _resolve_family(args, parser, args.k)
        if args.variant is not None:
            series = variant_series(args.variant, args.k, order)
            params["variant"] = args.variant
        else:
            series = macmahon_series(family, order)
        params.update(modulus=family.classes.modulus,
                      residues=sorted(family.classes.residues),
                      epsilon=family.eps, k=args.k, signed=signed)
    elif args.kind == "divisor":
        family, _ = _resolve_family(args, parser, 1)
        series = eisenstein_g(family.classes, family.eps, args.k, order)
        params.update(modulus=family.classes.modulus,
                      residues=sorted(family.classes.residues),
                      epsilon=family.eps, weight=args.k)
    elif args.kind == "eisenstein":
        series = eisenstein_e(args.k, order)
        params["weight"] = args.k
    elif args.kind == "delta2":
        series = delta2(order)
    elif args.kind == "delta3":
        series = delta3(order)
    else:
        lat = catalog(args.lattice)
        series = theta_series(lat, order)
        params["lattice"] = args.lattice
    rows = [{"n": n, "coefficient": str(series[n])} for n in range(order + 1)]
    _emit(args, "series", params, rows, [])
    return 0


def _cmd_mk(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    family, signed = _resolve_family(args, parser, args.k)
    lo = args.n if args.lo is None else args.lo
    hi = args.n if args.hi is None else args.hi
    if lo is None:
        parser.error("need --n or --lo/--hi")
    series = macmahon_series(family, hi)
    sign = -1 if signed and args.k % 2 else 1
    rows = [{"n": n, "value": int(series[n]) * sign} for n in range(lo, hi + 1)]
    params = {"modulus": family.classes.modulus, "residues": sorted(family.classes.residues),
              "epsilon": family.eps, "k": args.k, "signed": signed}
    _emit(args, "mk", params, rows, [])
    return 0


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    rows: list[dict[str, Any]] = []
    violations: list[Any] = []
    params: dict[str, Any] = {"target": args.target, "order": args.order}
    if args.target == "main-identity":
        family, _ = _resolve_family(args, parser, args.k)
        report = verify_main_identity(family, args.order)
        rows.append({"check": "main identity", "k": args.k, "status": report.status,
                     "first_mismatch": report.first_mismatch})
        if not report.ok:
            violations.append({"k": args.k, "first_mismatch": report.first_mismatch})
        params.update(modulus=family.classes.modulus,
                      residues=sorted(family.classes.residues), epsilon=family.eps, k=args.k)
    elif args.target == "variants":
        params["kmax"] = args.kmax
        for letter in sorted(VARIANTS):
            for k in range(1, args.kmax + 1):
                report = verify_main_identity(variant_params(letter, k), args.order)
                rows.append({"check": f"variant {letter}", "k": k, "status": report.status,
                             "first_mismatch": report.first_mismatch})
                if not report.ok:
                    violations.append({"variant": letter, "k": k,
                                       "first_mismatch": report.first_mismatch})
    else:
        for result in run_identity_suite(args.order):
            rows.append({"check": result.name,
                         "status": "ok" if result.ok else "mismatch",
                         "detail": result.detail})
            if not result.ok:
                violations.append({"check": result.name, "detail": result.detail})
    _emit(args, "verify", params, rows, violations)
    return 1 if violations else 0


def _parse_expression(args: argparse.Namespace, parser: argparse.ArgumentParser):
    if args.expression == "lelievre":
        if args.level is None or args.k is None or args.l is None:
            parser.error("lelievre expressions need --level, --k and --l")
        try:
            return LelievreExpression(args.level, args.k, args.l)
        except ValueError as exc:
            parser.error(str(exc))
    return Expression(args.expression)


def _cmd_detect(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    expr = _parse_expression(args, parser)
    try:
        report = detect_range(expr, args.lo, args.hi, args.backend, args.threads)
    except ValueError as exc:
        parser.error(str(exc))
    rows = [{"n": r.n, "value": r.value, "sign": r.sign.value,
             "expected": r.expected.value, "label": r.label,
             "status": "ok" if r.ok else "mismatch"} for r in report.rows]
    params = {"expression": report.expression, "backend": report.backend,
              "lo": report.lo, "hi": report.hi}
    _emit(args, "detect", params, rows, list(report.violations))
    return 0 if report.ok else 1


def _cmd_lattice(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.lo < 0 or args.hi < args.lo:
        parser.error("need 0 <= --lo <= --hi")
    lat = catalog(args.name)
    theta = theta_series(lat, args.hi)
    formula_name = "E8-even" if args.name == "E8" else args.name
    rows = []
    violations: list[int] = []
    for n in range(args.lo, args.hi + 1):
        count = theta.counts[n]
        row: dict[str, Any] = {"n": n, "norm": n * lat.norm_unit, "count": count}
        if args.check:
            # the closed forms start at n = 1; norm zero is left unchecked
            expected = lattice_count_formula(formula_name, n) if n >= 1 else None
            row["formula"] = expected
            if expected is not None and count != expected:
                violations.append(n)
        rows.append(row)
    params = {"name": args.name, "lo": args.lo, "hi": args.hi, "check": args.check}
    _emit(args, "lattice", params, rows, violations)
    return 1 if violations else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="macmahon",
                                     description="exact partition sums, q-series and prime detectors")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="expand a series and print coefficients")
    p.add_argument("kind", choices=["macmahon", "divisor", "eisenstein", "delta2", "delta3", "theta"])
    _add_family_arguments(p)
    p.add_argument("--k", type=int, default=2, help="depth (macmahon) or weight (divisor, eisenstein)")
    p.add_argument("--lattice", choices=list(CATALOG_NAMES), default="E8")
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("mk", help="partition sum values at single n or a range")
    _add_family_arguments(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--lo", type=int)
    p.add_argument("--hi", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_mk)

    p = sub.add_parser("verify", help="check identities at truncated order")
    p.add_argument("target", choices=["main-identity", "variants", "identities"])
    _add_family_arguments(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("detect", help="classify a range of n by expression sign")
    p.add_argument("--expression", required=True,
                   choices=[e.value for e in Expression] + ["lelievre"])
    p.add_argument("--level", type=int, help="level N for lelievre expressions")
    p.add_argument("--k", type=int, help="lower exponent for lelievre expressions")
    p.add_argument("--l", type=int, help="upper exponent for lelievre expressions")
    p.add_argument("--lo", type=int, default=2)
    p.add_argument("--hi", type=int, default=100)
    p.add_argument("--backend", choices=["formula", "bruteforce"], default="formula")
    p.add_argument("--threads", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_detect)

    p = sub.add_parser("lattice", help="count lattice vectors by norm")
    p.add_argument("--name", choices=list(CATALOG_NAMES), required=True)
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, default=20)
    p.add_argument("--check", action="store_true",
                   help="compare enumeration against the closed divisor formulas")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_lattice)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
