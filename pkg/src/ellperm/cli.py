"""Command-line front end.

Subcommands expose the triangle, class enumerations, weight polynomials,
elliptic Taylor coefficients, continued-fraction convergents, the number
routes, and the claim report.  Output is deterministic: identical
invocations produce byte-identical output.

Exit codes: 0 success, 1 usage error, 2 only under `verify --strict` when an
anchor claim fails.  The default output format for `verify` and `report` can
be set with the ELLPERM_FORMAT environment variable (text, json or csv).
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__, andre, cfrac, entringer, jacobi, verify
from .exact import poly_eval
from .permutations import ClassTag, StatVariant, class_weight_poly, enumerate_class, stat

FORMAT_ENV_VAR = "ELLPERM_FORMAT"

_CLI_CLASSES = {
    "sn": ClassTag.S_ODD,
    "cn": ClassTag.C_EVEN,
    "dn": ClassTag.D_EVEN,
    "ascending": ClassTag.ASCENDING_ANY,
}


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _default_format() -> str:
    value = os.environ.get(FORMAT_ENV_VAR, "text")
    return value if value in ("text", "json", "csv") else "text"


def _parse_modulus(text: str) -> Fraction:
    """Accept '3/4' or 'm=3/4'."""
    if text.startswith("m="):
        text = text[2:]
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational modulus: {text!r} ({exc})")


def _stat_variant(text: str) -> StatVariant:
    try:
        return StatVariant(text)
    except ValueError:
        choices = ", ".join(v.value for v in StatVariant)
        raise argparse.ArgumentTypeError(f"unknown statistic {text!r} (choose from {choices})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ellperm",
        description="exact verification lab for alternating-permutation and "
        "elliptic-series identities",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("entringer", help="print triangle rows")
    p.add_argument("--rows", type=int, required=True, help="number of rows beyond row 0")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("enumerate", help="list the members of a class")
    p.add_argument(
        "--class",
        dest="class_name",
        choices=sorted(_CLI_CLASSES),
        required=True,
        help="sn: odd up-down, cn: even up-down, dn: even down-up, "
        "ascending: up-down of any size",
    )
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--stat", type=_stat_variant, default=None, help="append a statistic value")

    p = sub.add_parser("weights", help="print weight polynomials per size")
    p.add_argument("--class", dest="class_name", choices=sorted(_CLI_CLASSES), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--stat", type=_stat_variant, required=True)

    p = sub.add_parser("jacobi", help="elliptic Taylor coefficients")
    p.add_argument("--max-n", type=int, required=True, help="largest lattice index n")
    p.add_argument("--at", type=_parse_modulus, default=None, metavar="m=RAT")

    p = sub.add_parser("cfrac", help="expand a continued-fraction convergent")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--scheme", choices=sorted(cfrac.builtin_schemes()))
    group.add_argument("--scheme-file", help="JSON file: name, leading, alpha, beta")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--at", type=_parse_modulus, default=None, metavar="m=RAT")

    p = sub.add_parser("andre", help="secant-tangent numbers")
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("verify", help="run claims and print the report")
    p.add_argument("--claims", default=None, help="comma-separated claim ids (default: all)")
    p.add_argument("--strict", action="store_true", help="exit 2 when an anchor claim fails")
    p.add_argument("--format", choices=("text", "json", "csv"), default=None)
    _add_cap_flags(p)

    p = sub.add_parser("report", help="write the full default report")
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.add_argument("--format", choices=("text", "json", "csv"), default=None)
    _add_cap_flags(p)

    return parser


def _add_cap_flags(p: argparse.ArgumentParser) -> None:
    defaults = verify.Caps()
    p.add_argument("--max-size", type=int, default=defaults.perm_size,
                   help=f"odd exhaustive-permutation cap (default {defaults.perm_size})")
    p.add_argument("--max-rows", type=int, default=defaults.triangle_rows,
                   help=f"triangle rows (default {defaults.triangle_rows})")
    p.add_argument("--max-order", type=int, default=defaults.series_order,
                   help=f"fraction expansion order (default {defaults.series_order})")
    p.add_argument("--max-depth", type=int, default=defaults.cfrac_depth,
                   help=f"convergent depth (default {defaults.cfrac_depth})")
    p.add_argument("--max-terms", type=int, default=defaults.andre_terms,
                   help=f"number-route index cap (default {defaults.andre_terms})")


def _caps_from_args(args: argparse.Namespace) -> verify.Caps:
    return verify.Caps(
        perm_size=args.max_size,
        triangle_rows=args.max_rows,
        series_order=args.max_order,
        cfrac_depth=args.max_depth,
        andre_terms=args.max_terms,
    )


def _cmd_entringer(args) -> int:
    if args.rows < 0:
        print("ellperm: error: --rows must be non-negative", file=sys.stderr)
        return 1
    t = entringer.build_triangle(args.rows)
    for n, row in enumerate(t.rows):
        if args.format == "csv":
            print(",".join(map(str, row)))
        else:
            print(f"n={n}: " + " ".join(map(str, row)))
    return 0


def _cmd_enumerate(args) -> int:
    tag = _CLI_CLASSES[args.class_name]
    try:
        for p in enumerate_class(tag, args.size):
            if args.stat is None:
                print(p)
            else:
                print(f"{p}  {stat(p, args.stat)}")
    except ValueError as exc:
        print(f"ellperm: error: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_weights(args) -> int:
    tag = _CLI_CLASSES[args.class_name]
    try:
        for n in range(args.max_n + 1):
            poly = class_weight_poly(tag, n, args.stat)
            print(f"n={n}: {poly}")
    except ValueError as exc:
        print(f"ellperm: error: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_jacobi(args) -> int:
    if args.max_n < 0:
        print("ellperm: error: --max-n must be non-negative", file=sys.stderr)
        return 1
    t = jacobi.jacobi_taylor(args.max_n)
    for n in range(t.count):
        if args.at is None:
            s, c, d = t.s[n], t.c[n], t.d[n]
        else:
            s = poly_eval(t.s[n], args.at)
            c = poly_eval(t.c[n], args.at)
            d = poly_eval(t.d[n], args.at)
        print(f"n={n}: s={s}  c={c}  d={d}")
    return 0


def _cmd_cfrac(args) -> int:
    try:
        if args.scheme_file:
            scheme = cfrac.load_scheme(args.scheme_file)
        else:
            scheme = cfrac.builtin_schemes()[args.scheme]
        series = cfrac.cf_convergent_series(scheme, args.depth, args.order, args.at)
    except (OSError, ValueError) as exc:
        print(f"ellperm: error: {exc}", file=sys.stderr)
        return 1
    print(f"scheme={scheme.name} depth={args.depth} order={args.order}"
          + (f" m={args.at}" if args.at is not None else ""))
    for i, coeff in enumerate(series.coeffs):
        print(f"u^{i}: {coeff}")
    return 0


def _cmd_andre(args) -> int:
    if args.max_n < 1:
        print("ellperm: error: --max-n must be at least 1", file=sys.stderr)
        return 1
    for n, value in enumerate(andre.a_recurrence(args.max_n)):
        print(f"n={n}: {value}")
    return 0


def _cmd_verify(args) -> int:
    selection = None
    if args.claims:
        selection = {claim_id.strip() for claim_id in args.claims.split(",") if claim_id.strip()}
    try:
        caps = _caps_from_args(args)
        verdicts = verify.run_claims(selection, caps)
    except ValueError as exc:
        print(f"ellperm: error: {exc}", file=sys.stderr)
        return 1
    fmt = args.format or _default_format()
    sys.stdout.write(verify.render_report(verdicts, fmt))
    if args.strict and not verify.anchors_pass(verdicts):
        return 2
    return 0


def _cmd_report(args) -> int:
    try:
        caps = _caps_from_args(args)
        verdicts = verify.run_claims(None, caps)
    except ValueError as exc:
        print(f"ellperm: error: {exc}", file=sys.stderr)
        return 1
    fmt = args.format or _default_format()
    document = verify.render_report(verdicts, fmt)
    if args.out == "-":
        sys.stdout.write(document)
    else:
        with open(args.out, "w") as handle:
            handle.write(document)
    return 0


_COMMANDS = {
    "entringer": _cmd_entringer,
    "enumerate": _cmd_enumerate,
    "weights": _cmd_weights,
    "jacobi": _cmd_jacobi,
    "cfrac": _cmd_cfrac,
    "andre": _cmd_andre,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return _COMMANDS[args.command](args)


def entry() -> None:
    sys.exit(main())
