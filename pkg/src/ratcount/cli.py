"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
3 value outside a scheme's domain/image or a direction the scheme lacks.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotFound, NotInImage, RatCountError
from .numerics import as_positive, cf_expand, format_rational, parse_rational
from .pairings import LatticePair, PairingScheme, decode_pair, encode_pair
from .registry import compose_permutation, get_scheme, scheme_ids, schemes, verify_prefix
from .sequences import engel_expand, hyperbinary

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


class UsageError(Exception):
    pass


def render(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, LatticePair):
        return str(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def parse_pair(text: str) -> LatticePair:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        n, m = (int(part) for part in body.split(","))
    except ValueError:
        raise UsageError(f"not a pair: {text!r}") from None
    return LatticePair(n, m)


def parse_value(domain: str, text: str):
    if domain == "pairs":
        return parse_pair(text)
    try:
        value = parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if domain == "Q+":
        as_positive(value)
    return value


def _scheme(name: str):
    try:
        return get_scheme(name)
    except NotFound as exc:
        raise UsageError(f"{exc.args[0]}; known: {', '.join(scheme_ids())}") from None


class _Writer:
    """Row emitter for the three output formats."""

    def __init__(self, fmt: str, columns: Sequence[str], plain: Sequence[int] = (1,), out=None):
        self.fmt = fmt
        self.columns = columns
        self.plain = plain
        self.out = out or sys.stdout
        self._csv = None
        if fmt == "csv":
            self._csv = csv.writer(self.out, lineterminator="\n")
            self._csv.writerow(columns)

    def row(self, values: Sequence, extra: dict | None = None) -> None:
        if self.fmt == "plain":
            print(" ".join(render(values[i]) for i in self.plain), file=self.out)
        elif self.fmt == "csv":
            self._csv.writerow([render(v) for v in values])
        else:
            obj = {}
            for col, v in zip(self.columns, values):
                obj[col] = v if isinstance(v, int) or v is None else render(v)
            obj.update(extra or {})
            print(json.dumps(obj), file=self.out)


def _unrank_or_none(desc, k: int):
    try:
        return desc.unrank(k)
    except NotInImage:
        return None


def cmd_list(args) -> int:
    desc = _scheme(args.scheme)
    if not desc.has_unrank:
        print(f"error: {desc.id} has no unrank direction", file=sys.stderr)
        return EXIT_DOMAIN
    if args.count < 1 or args.start < 1:
        raise UsageError("--count and --start must be positive")
    writer = _Writer(args.format, ("index", "value"))
    for k in range(args.start, args.start + args.count):
        writer.row((k, _unrank_or_none(desc, k)), {"scheme": desc.id})
    return EXIT_OK


def cmd_rank(args) -> int:
    desc = _scheme(args.scheme)
    if not desc.has_rank:
        print(f"error: {desc.id} has no rank direction", file=sys.stderr)
        return EXIT_DOMAIN
    value = parse_value(desc.domain, args.value)
    k = desc.rank(value)
    _Writer(args.format, ("index", "value"), plain=(0,)).row((k, value), {"scheme": desc.id})
    return EXIT_OK


def cmd_unrank(args) -> int:
    desc = _scheme(args.scheme)
    if not desc.has_unrank:
        print(f"error: {desc.id} has no unrank direction", file=sys.stderr)
        return EXIT_DOMAIN
    value = desc.unrank(args.index)
    _Writer(args.format, ("index", "value")).row((args.index, value), {"scheme": desc.id})
    return EXIT_OK


def _compare_chunk(a: str, b: str, lo: int, hi: int) -> list[tuple[int, Fraction, int]]:
    first, second = get_scheme(a), get_scheme(b)
    rows = []
    for k in range(lo, hi + 1):
        value = first.unrank(k)
        rows.append((k, value, second.rank(value)))
    return rows


def cmd_compare(args) -> int:
    _scheme(args.a)
    _scheme(args.b)
    if args.prefix < 1:
        raise UsageError("--prefix must be positive")
    # fail fast on a missing direction before printing anything
    compose_permutation(args.a, args.b, 1)
    n = args.prefix
    workers = _workers(args.parallel, n)
    if workers == 1:
        rows: Iterable = _compare_chunk(args.a, args.b, 1, n)
    else:
        step = -(-n // workers)
        bounds = [(lo, min(lo + step - 1, n)) for lo in range(1, n + 1, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_compare_chunk, [args.a] * len(bounds), [args.b] * len(bounds), *zip(*bounds))
            rows = [row for part in parts for row in part]
    writer = _Writer(args.format, ("index", "value", "rank"), plain=(0, 1, 2))
    for row in rows:
        writer.row(row, {"scheme": args.a, "target": args.b})
    return EXIT_OK


def _workers(parallel: bool, n: int) -> int:
    if not parallel:
        return 1
    return max(1, min(os.cpu_count() or 1, n // 1000 or 1))


def cmd_verify(args) -> int:
    _scheme(args.scheme)
    if args.prefix < 1:
        raise UsageError("--prefix must be positive")
    report = verify_prefix(
        args.scheme,
        args.prefix,
        workers=_workers(args.parallel, args.prefix),
        all_failures=args.all_failures,
    )
    print(report.summary())
    for note in report.notes:
        print(f"note: {note}")
    for k, detail in report.all_failures[1:]:
        print(f"also failed at k={k}: {detail}")
    print(report.to_json())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_schemes(args) -> int:
    cols = ("id", "domain", "kind", "has_rank", "has_unrank", "summary")
    if args.format == "jsonl":
        for desc in schemes():
            print(json.dumps(desc.as_dict()))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(cols)
        for desc in schemes():
            writer.writerow([desc.as_dict()[c] for c in cols])
    else:
        for desc in schemes():
            dirs = "+".join(d for d, ok in (("rank", desc.has_rank), ("unrank", desc.has_unrank)) if ok)
            print(f"{desc.id:24} {desc.domain:5} {desc.kind:10} {dirs:12} {desc.summary}")
    return EXIT_OK


def _emit_sequence(fmt: str, label: str, key: str, items: Sequence[int], value) -> None:
    if fmt == "jsonl":
        print(json.dumps({"value": render(value), key: list(items)}))
    elif fmt == "csv":
        print(f"index,{label}")
        for i, x in enumerate(items):
            print(f"{i},{x}")
    else:
        print(" ".join(str(x) for x in items))


def cmd_cf(args) -> int:
    r = parse_value("Q+", args.value)
    _emit_sequence(args.format, "quotient", "quotients", cf_expand(r).quotients, r)
    return EXIT_OK


def cmd_engel(args) -> int:
    r = parse_value("Q+", args.value)
    _emit_sequence(args.format, "denominator", "denominators", engel_expand(r).denoms, r)
    return EXIT_OK


def cmd_hyperbinary(args) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    _Writer(args.format, ("index", "value")).row((args.n, hyperbinary(args.n)), {"scheme": "hyperbinary"})
    return EXIT_OK


def _pairing(name: str) -> PairingScheme:
    try:
        return PairingScheme(name)
    except ValueError:
        known = ", ".join(s.value for s in PairingScheme)
        raise UsageError(f"unknown pairing scheme {name!r}; known: {known}") from None


def cmd_pair(args) -> int:
    scheme = _pairing(args.scheme)
    pair = LatticePair(args.n, args.m)
    _Writer(args.format, ("index", "value"), plain=(0,)).row((encode_pair(scheme, pair), pair), {"scheme": scheme.value})
    return EXIT_OK


def cmd_unpair(args) -> int:
    scheme = _pairing(args.scheme)
    pair = decode_pair(scheme, args.index)
    _Writer(args.format, ("index", "value")).row((args.index, pair), {"scheme": scheme.value})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "jsonl"), default=argparse.SUPPRESS)
    common.add_argument(
        "--seed-free", action="store_true", default=argparse.SUPPRESS,
        help="reserved; every command is already deterministic",
    )

    parser = argparse.ArgumentParser(
        prog="ratcount",
        description="Enumerate, rank and verify enumerations of the positive rationals.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schemes", parents=[common], help="list registered schemes")
    p.set_defaults(func=cmd_schemes)

    p = sub.add_parser("list", parents=[common], help="print a prefix of an enumeration")
    p.add_argument("scheme")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--start", type=int, default=1)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("rank", parents=[common], help="position of a value")
    p.add_argument("scheme")
    p.add_argument("value", help="p/q, an integer, or n,m for pairing schemes")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("unrank", parents=[common], help="value at a position")
    p.add_argument("scheme")
    p.add_argument("index", type=int)
    p.set_defaults(func=cmd_unrank)

    p = sub.add_parser("compare", parents=[common], help="permutation induced by two bijections")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--prefix", type=int, default=10)
    p.add_argument("--parallel", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", parents=[common], help="check a prefix of a scheme")
    p.add_argument("scheme")
    p.add_argument("--prefix", type=int, default=10_000)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--all-failures", action="store_true", help="list every failure, not just the first")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cf", parents=[common], help="continued fraction quotients (trailing-1 form)")
    p.add_argument("value")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("engel", parents=[common], help="Engel denominators of a rational in (0,1)")
    p.add_argument("value")
    p.set_defaults(func=cmd_engel)

    p = sub.add_parser("hyperbinary", parents=[common], help="number of hyperbinary representations")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_hyperbinary)

    p = sub.add_parser("pair", parents=[common], help="encode a pair with a pairing scheme")
    p.add_argument("scheme")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("unpair", parents=[common], help="decode a pairing code")
    p.add_argument("scheme")
    p.add_argument("index", type=int)
    p.set_defaults(func=cmd_unpair)

    # let "-1/2" through as a positional value rather than an unknown flag
    for each in (parser, *sub.choices.values()):
        each._negative_number_matcher = _NEGATIVE_VALUE
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # parent-parser actions are shared, so defaults are filled in here
    for name, default in (("format", "plain"), ("seed_free", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RatCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
