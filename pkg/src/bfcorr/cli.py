"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .asymm import apply_J, apply_J_inverse, asymm_inner
from .boson import BosonPolynomial, boson_inner
from .bridge import DEFAULT_MAX_DEGREE, DEFAULT_ORACLE_DEGREE, boson_to_fermion, fermion_to_boson, verify_isometry
from .fermion import ChargeError, FockVector, asymm_to_fermion, fermion_to_asymm, fock_inner
from .linear import format_rational
from .parser import ParseError, parse_element
from .serialize import DocumentError, dumps, loads
from .symm import (
    SchurExpansion,
    SymmElement,
    apply_I,
    apply_I_inverse,
    character_table,
    hall_inner,
    power_to_schur,
    schur_to_power,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_json(path: str, source: str):
    value = loads(_read(path))
    if source == "boson" and isinstance(value, BosonPolynomial):
        return value
    if source == "symm" and isinstance(value, SymmElement):
        return value
    if source == "symm" and isinstance(value, SchurExpansion):
        return schur_to_power(value)
    if source == "fermion" and isinstance(value, FockVector):
        return value
    raise UsageError(f"{path}: document space does not match --from {source}")


def _load(source: str, expr: str | None, json_path: str | None, max_degree: int):
    if expr is not None:
        if source == "fermion":
            raise UsageError("fermion input is accepted only as a JSON document (--json)")
        return parse_element(expr, source, max_degree=max_degree)
    return _load_json(json_path, source)


def _check_degree(value, max_degree: int) -> None:
    if isinstance(value, FockVector):
        degree = max((l.partition.weight for l in value), default=-1)
    else:
        degree = value.degree()
    if degree > max_degree:
        raise UsageError(f"degree {degree} exceeds the cap {max_degree} (raise --max-degree)")


def convert(value, source: str, target: str):
    """Route ``value`` from ``source`` ('boson', 'symm', 'fermion') to ``target``."""
    if source == "boson" and target == "fermion":
        return boson_to_fermion(value)
    if source == "fermion" and target == "boson":
        return fermion_to_boson(value)
    if source == "boson":
        hub = apply_I(value)
    elif source == "symm":
        hub = value
    else:
        hub = apply_J_inverse(fermion_to_asymm(value))
    if target == "boson":
        return apply_I_inverse(hub)
    if target == "symm-p":
        return hub
    if target == "symm-s":
        return power_to_schur(hub)
    if target == "asymm":
        return apply_J(hub)
    if target == "fermion":
        return asymm_to_fermion(apply_J(hub))
    raise UsageError(f"unknown target space {target!r}")


def _emit(value, fmt: str) -> None:
    sys.stdout.write(dumps(value) if fmt == "json" else f"{value}\n")


def cmd_convert(args) -> int:
    value = _load(args.source, args.expr, args.json, args.max_degree)
    if args.target not in ("boson", "symm-p") or args.source == "fermion":
        _check_degree(value, args.max_degree)
    _emit(convert(value, args.source, args.target), args.format)
    return EXIT_OK


def cmd_schur_expand(args) -> int:
    args.target = "symm-s"
    return cmd_convert(args)


def cmd_inner(args) -> int:
    if args.space == "fermion" or args.json:
        f, g = (_load_json(path, args.space) for path in (args.f, args.g))
    else:
        f, g = (parse_element(text, args.space, max_degree=args.max_degree) for text in (args.f, args.g))
    product = {"boson": boson_inner, "symm": hall_inner, "fermion": fock_inner}[args.space]
    print(format_rational(product(f, g)))
    return EXIT_OK


def _format_table(lambdas, mus, rows) -> str:
    header = ["chi"] + [str(mu) for mu in mus]
    body = [[str(lam)] + [str(v) for v in row] for lam, row in zip(lambdas, rows)]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = []
    for r in [header] + body:
        lines.append("  ".join([r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]))
    return "\n".join(lines) + "\n"


def cmd_chartable(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError("n must be a positive integer")
    if n > args.max_degree:
        raise UsageError(f"n = {n} exceeds the cap {args.max_degree} (raise --max-degree)")
    lambdas, mus, rows = character_table(n)
    if args.format == "json":
        doc = {"n": n, "lambdas": [list(l) for l in lambdas], "mus": [list(m) for m in mus], "table": rows}
        sys.stdout.write(json.dumps(doc) + "\n")
    else:
        sys.stdout.write(_format_table(lambdas, mus, rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.degree < 0:
        raise UsageError("--degree must be non-negative")
    if args.degree > args.max_degree:
        raise UsageError(f"--degree {args.degree} exceeds the cap {args.max_degree} (raise --max-degree)")
    report = verify_isometry(args.degree, max_degree=args.max_degree, oracle_degree=args.oracle_degree)
    if args.format == "json":
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bfcorr",
        description="Exact boson-fermion correspondence: F -> Symm -> Asymm -> Lambda.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, help="degree cap (default %(default)s)")
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")

    def source(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--expr", help="expression in z- or p-variables")
        group.add_argument("--json", metavar="FILE", help="JSON document ('-' for stdin)")

    p = sub.add_parser("convert", help="map a vector between spaces")
    p.add_argument("--from", dest="source", choices=("boson", "symm", "fermion"), required=True)
    p.add_argument("--to", dest="target", choices=("boson", "symm-p", "symm-s", "asymm", "fermion"), required=True)
    source(p)
    common(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("schur-expand", help="alias of convert --to symm-s")
    p.add_argument("--from", dest="source", choices=("boson", "symm"), default="symm")
    source(p)
    common(p)
    p.set_defaults(func=cmd_schur_expand)

    p = sub.add_parser("inner", help="inner product of two vectors")
    p.add_argument("--space", choices=("boson", "symm", "fermion"), required=True)
    p.add_argument("--json", action="store_true", help="F and G are JSON files (always so for fermion)")
    p.add_argument("f")
    p.add_argument("g")
    common(p, fmt=False)
    p.set_defaults(func=cmd_inner)

    p = sub.add_parser("chartable", help="character table of S_n")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("verify", help="check the composed map is an isometry")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument(
        "--oracle-degree", type=int, default=DEFAULT_ORACLE_DEGREE,
        help="run the finite-variable Vandermonde check up to this degree (default %(default)s)",
    )
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParseError, DocumentError, ChargeError, ValueError) as exc:
        print(f"bfcorr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
