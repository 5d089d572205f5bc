"""Command-line interface.

Subcommands:

    count      one counting value on stdout
    table      TSV grid of values, rows n = 0..N, columns k = 0..K
    sequence   OEIS-style export (b-file or CSV), optionally via a
               bundled concordance record
    verify     run the cross-path verification checks
    bijection  encode a composition to its sequence pair, or decode back

All output is plain ASCII with stable ordering.  Exit status: 0 on success
(and on a fully passing verify), 1 when verify finds a failure, 2 for usage
errors and refusals.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import concordance as concordance_mod
from .bijection import (
    InvalidPairError,
    MinusClassError,
    decode_pair,
    encode_pair,
    format_pair,
    parse_pair,
)
from .formulas import FormulaVariant, formula_count
from .genfun import gf_count
from .oracle import DEFAULT_ENUMERATION_CAP, EnumerationCapError, brute_count
from .stats import (
    CountSpec,
    Family,
    Modulus,
    Sign,
    format_composition,
    format_modulus,
    parse_composition,
    parse_modulus,
)
from .verify import DEFAULT_MODULI, run_all

BRUTE_OPTIN_LIMIT = 20


class CliError(Exception):
    """Raised for refusals and invalid requests; rendered on stderr, exit 2."""


def _add_family_options(parser: argparse.ArgumentParser, with_k: bool = True) -> None:
    parser.add_argument("--family", choices=["pc", "ac"], required=True,
                        help="count by mismatching (pc) or matching (ac) mirror pairs")
    parser.add_argument("--reduced", action="store_true",
                        help="count swap-equivalence classes instead of compositions")
    parser.add_argument("--sign", choices=["plus", "minus", "total"], required=True)
    parser.add_argument("--mod", required=True, metavar="M|inf",
                        help="modulus for the pair comparison; 'inf' means equality")
    if with_k:
        parser.add_argument("--k", type=int, required=True, help="statistic value")


def _add_method_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--method", choices=["formula", "gf", "brute"], default="formula")
    parser.add_argument("--variant", type=int, choices=[1, 2, 3],
                        help="published formula variant (only with --method formula)")
    parser.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                        help="enumeration cap for --method brute")
    parser.add_argument("--force", action="store_true",
                        help=f"allow brute force above n={BRUTE_OPTIN_LIMIT}")


def _parse_cell(args: argparse.Namespace) -> tuple[Family, bool, Sign, Modulus]:
    try:
        modulus = parse_modulus(args.mod)
    except ValueError as error:
        raise CliError(str(error)) from None
    return Family(args.family), args.reduced, Sign(args.sign), modulus


def _evaluate(args: argparse.Namespace, family, reduced, sign, modulus, n: int, k: int) -> int:
    if n < 0:
        raise CliError(f"n must be >= 0, got {n}")
    if k < 0:
        raise CliError(f"k must be >= 0, got {k}")
    variant = FormulaVariant(args.variant) if args.variant is not None else None
    if variant is not None and args.method != "formula":
        raise CliError("--variant selects among closed formulas; it requires --method formula")
    try:
        if args.method == "formula":
            return formula_count(family, reduced, sign, modulus, n, k, variant)
        if args.method == "gf":
            return gf_count(family, reduced, sign, modulus, n, k)
        if n > BRUTE_OPTIN_LIMIT and not args.force:
            raise CliError(
                f"brute force above n={BRUTE_OPTIN_LIMIT} needs --force "
                f"(2^{n - 1} compositions)"
            )
        return brute_count(CountSpec(family, reduced, sign, modulus, k), n, cap=args.cap)
    except EnumerationCapError as error:
        raise CliError(str(error)) from None
    except ValueError as error:
        raise CliError(str(error)) from None


def _cmd_count(args: argparse.Namespace) -> int:
    family, reduced, sign, modulus = _parse_cell(args)
    print(_evaluate(args, family, reduced, sign, modulus, args.n, args.k))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    family, reduced, sign, modulus = _parse_cell(args)
    if args.n_max < 0 or args.k_max < 0:
        raise CliError("--n-max and --k-max must be >= 0")
    header = ["n"] + [f"k={k}" for k in range(args.k_max + 1)]
    print("\t".join(header))
    for n in range(args.n_max + 1):
        row = [str(n)]
        for k in range(args.k_max + 1):
            row.append(str(_evaluate(args, family, reduced, sign, modulus, n, k)))
        print("\t".join(row))
    return 0


def _cmd_sequence(args: argparse.Namespace) -> int:
    if args.concordance:
        try:
            record = concordance_mod.lookup(args.concordance)
        except KeyError as error:
            raise CliError(str(error)) from None
        for flag, value in (("--family", args.family), ("--sign", args.sign), ("--mod", args.mod)):
            if value is not None:
                raise CliError(f"{flag} conflicts with --concordance (the record pins it)")
        family, reduced, sign, modulus = record.family, record.reduced, record.sign, record.modulus
        if record.k is None and args.k is None:
            raise CliError(f"{record.id} is a triangle; pass --k")
        if record.k is not None and args.k is not None:
            raise CliError(f"--k conflicts with --concordance ({record.id} pins k={record.k})")
    else:
        for flag, value in (("--family", args.family), ("--sign", args.sign), ("--mod", args.mod)):
            if value is None:
                raise CliError(f"{flag} is required unless --concordance is given")
        if args.k is None:
            raise CliError("--k is required unless --concordance is given")
        family, reduced, sign, modulus = _parse_cell(args)
        record = None

    lines = []
    for idx in range(args.offset, args.n_max + 1):
        if record is not None:
            n, k = record.mapped_index(idx, args.k)
            if n < 0:
                value = 0
            else:
                value = _evaluate(args, family, reduced, sign, modulus, n, k)
            quotient, remainder = divmod(value, record.divisor)
            if remainder:
                raise CliError(
                    f"{record.id}: count {value} at n={n} is not divisible by {record.divisor}"
                )
            value = quotient
        else:
            value = _evaluate(args, family, reduced, sign, modulus, idx, args.k)
        separator = " " if args.format == "bfile" else ","
        lines.append(f"{idx}{separator}{value}")
    text = "".join(line + "\n" for line in lines)
    if args.out:
        try:
            with open(args.out, "w", encoding="ascii") as handle:
                handle.write(text)
        except OSError as error:
            raise CliError(f"cannot write {args.out}: {error}") from None
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        moduli = tuple(parse_modulus(tok) for tok in args.mods.split(","))
    except ValueError as error:
        raise CliError(str(error)) from None
    if args.n_max < 0 or args.k_max < 0:
        raise CliError("--n-max and --k-max must be >= 0")
    try:
        results = run_all(n_max=args.n_max, k_max=args.k_max, moduli=moduli, cap=args.cap)
    except EnumerationCapError as error:
        raise CliError(str(error)) from None
    if args.report == "json":
        print(json.dumps([r.as_dict() for r in results], indent=2))
    else:
        for r in results:
            if r.ok:
                print(f"PASS {r.check}")
            else:
                print(f"FAIL {r.check} params={r.params} expected={r.expected} actual={r.actual}")
    return 0 if all(r.ok for r in results) else 1


def _cmd_bijection(args: argparse.Namespace) -> int:
    try:
        if args.direction == "encode":
            c = parse_composition(args.value)
            print(format_pair(encode_pair(c)))
        else:
            pair = parse_pair(args.value)
            print(format_composition(decode_pair(pair)))
    except (MinusClassError, InvalidPairError, ValueError) as error:
        raise CliError(str(error)) from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palcomp",
        description="Count integer compositions by palindromicity statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print one counting value")
    _add_family_options(p_count)
    p_count.add_argument("--n", type=int, required=True)
    _add_method_options(p_count)
    p_count.set_defaults(func=_cmd_count)

    p_table = sub.add_parser("table", help="print a TSV grid over n and k")
    _add_family_options(p_table, with_k=False)
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--k-max", type=int, required=True)
    _add_method_options(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_seq = sub.add_parser("sequence", help="export one sequence (b-file or CSV)")
    p_seq.add_argument("--family", choices=["pc", "ac"])
    p_seq.add_argument("--reduced", action="store_true")
    p_seq.add_argument("--sign", choices=["plus", "minus", "total"])
    p_seq.add_argument("--mod", metavar="M|inf")
    p_seq.add_argument("--k", type=int)
    p_seq.add_argument("--n-max", type=int, required=True)
    p_seq.add_argument("--format", choices=["bfile", "csv"], default="bfile")
    p_seq.add_argument("--offset", type=int, default=0, help="first printed index")
    p_seq.add_argument("--out", help="write to a file instead of stdout")
    p_seq.add_argument("--concordance", metavar="ID",
                       help="take family, parameters, and index shift from a bundled record")
    _add_method_options(p_seq)
    p_seq.set_defaults(func=_cmd_sequence)

    p_verify = sub.add_parser("verify", help="cross-check formulas, series, and brute force")
    p_verify.add_argument("--n-max", type=int, default=14)
    p_verify.add_argument("--k-max", type=int, default=4)
    p_verify.add_argument("--mods", default=",".join(format_modulus(m) for m in DEFAULT_MODULI),
                          help="comma-separated moduli, e.g. '1,2,3,4,5,inf'")
    p_verify.add_argument("--report", choices=["text", "json"], default="text")
    p_verify.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    p_verify.set_defaults(func=_cmd_verify)

    p_bij = sub.add_parser("bijection", help="composition <-> sequence pair")
    bij_sub = p_bij.add_subparsers(dest="direction", required=True)
    p_enc = bij_sub.add_parser("encode", help="composition to pair")
    p_enc.add_argument("value", help="comma-separated composition, e.g. '2,1,3,4,1,1,5'")
    p_enc.set_defaults(func=_cmd_bijection)
    p_dec = bij_sub.add_parser("decode", help="pair to composition")
    p_dec.add_argument("value", help="pair as 'h1,h2,...;t1,t2,...'")
    p_dec.set_defaults(func=_cmd_bijection)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
