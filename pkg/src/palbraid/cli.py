"""Command-line front end.

Exit codes: 0 ok, 1 a check failed (or nothing was found), 2 usage or parse
error.  Output contains no timestamps and is identical across runs.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from .braid import parse_word
from .closure import EquivariantPair, closure_diagram, format_pair, parse_pair
from .corpus import corpus_verify, load_corpus
from .errors import (
    BraidError,
    MalformedToken,
    OutOfRangeGenerator,
    ParseError,
    StrandMismatch,
)
from .garside import is_palindromic
from .invariants import DEFAULT_MAX_CROSSINGS, alexander, jones
from .moves import apply_move, parse_move
from .search import NotFoundWithinBudget, SearchBudget, check_trace, find_trace, parse_trace

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_USAGE_ERRORS = (ParseError, MalformedToken, OutOfRangeGenerator, StrandMismatch)

# a word such as "-1 2" would otherwise be taken for an option
_NEGATIVE_WORD = re.compile(r"^-\d[\d\s+-]*$")


class _UsageError(Exception):
    pass


def _protect_words(argv: Sequence[str]) -> list[str]:
    return [" " + a if _NEGATIVE_WORD.match(a) else a for a in argv]


def _strands(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise _UsageError(f"strand count must be an integer, got {text!r}") from None
    if n < 1:
        raise _UsageError(f"strand count must be positive, got {n}")
    return n


def _pair_from_args(args: Sequence[str], validate: bool = True) -> EquivariantPair:
    """Accept ``N:A|B``, ``N A|B``, ``N A B`` or ``N A | B``."""
    args = list(args)
    if len(args) == 1:
        return parse_pair(args[0].strip(), validate=validate)
    if len(args) == 4 and args[2].strip() == "|":
        args = [args[0], args[1], args[3]]
    if len(args) == 2:
        return parse_pair(args[1], _strands(args[0]), validate=validate)
    if len(args) == 3:
        return parse_pair(f"{args[1]}|{args[2]}", _strands(args[0]), validate=validate)
    raise _UsageError("expected a pair as N:ALPHA|BETA, or N ALPHA BETA, or N ALPHA | BETA")


def _cmd_palcheck(ns) -> int:
    w = parse_word(ns.word, _strands(ns.strands))
    ok = is_palindromic(w)
    if ns.format == "tsv":
        print(f"{w.strands}\t{w}\t{'true' if ok else 'false'}")
    else:
        print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_closure(ns) -> int:
    p = _pair_from_args(ns.pair, validate=not ns.no_validate)
    text = closure_diagram(p).to_text()
    if text:
        print(text)
    return EXIT_OK


def _cmd_invariant(ns) -> int:
    p = _pair_from_args(ns.pair, validate=not ns.no_validate)
    if ns.command == "jones":
        value = jones(closure_diagram(p), max_crossings=ns.max_crossings)
    else:
        value = alexander(p)
    if ns.format == "tsv":
        print(f"{format_pair(p)}\t{ns.command}\t{value}")
    else:
        print(value)
    return EXIT_OK


def _cmd_apply(ns) -> int:
    p = parse_pair(ns.pair.strip())
    for text in ns.moves:
        p = apply_move(p, parse_move(text, p.strands))
    print(format_pair(p))
    return EXIT_OK


def _budget(ns, p, q) -> SearchBudget:
    default = SearchBudget.default_for(p, q)
    return SearchBudget(
        max_strands=ns.max_strands if ns.max_strands is not None else default.max_strands,
        max_conj_len=ns.max_conj_len,
        max_nodes=ns.max_nodes,
    )


def _cmd_search(ns) -> int:
    p, q = parse_pair(ns.pair_a.strip()), parse_pair(ns.pair_b.strip())
    try:
        budget = _budget(ns, p, q)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    try:
        trace = find_trace(p, q, budget)
    except NotFoundWithinBudget:
        print("NOT-FOUND")
        return EXIT_FAIL
    text = trace.to_text()
    if text:
        print(text)
    return EXIT_OK


def _cmd_verify(ns) -> int:
    p, q = parse_pair(ns.pair_a.strip()), parse_pair(ns.pair_b.strip())
    if ns.trace == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(ns.trace, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _UsageError(f"cannot read {ns.trace}: {exc.strerror}") from None
    trace = parse_trace(text, p, q)
    try:
        check_trace(trace, q)
    except BraidError as exc:
        print(f"false\t{exc}")
        return EXIT_FAIL
    print("true")
    return EXIT_OK


def _cmd_corpus(ns) -> int:
    try:
        entries = load_corpus(ns.path)
    except OSError as exc:
        raise _UsageError(f"cannot read {ns.path}: {exc.strerror}") from None
    report = corpus_verify(entries)
    print(report.to_tsv() if ns.format == "tsv" else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "tsv"), default="text")

    parser = argparse.ArgumentParser(
        prog="palbraid", description="Palindromic braids and strongly invertible links."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("palcheck", parents=[common], help="is a braid word palindromic")
    s.add_argument("strands")
    s.add_argument("word")
    s.set_defaults(func=_cmd_palcheck)

    for name, func, what in (
        ("closure", _cmd_closure, "PD code of the closure"),
        ("jones", _cmd_invariant, "Jones polynomial of the closure"),
        ("alexander", _cmd_invariant, "Alexander polynomial of the closure"),
    ):
        s = sub.add_parser(name, parents=[common], help=what)
        s.add_argument("pair", nargs="+", metavar="PAIR", help="N:ALPHA|BETA or N ALPHA [|] BETA")
        s.add_argument("--no-validate", action="store_true", help="skip the palindromicity check")
        if name == "jones":
            s.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
        s.set_defaults(func=func)

    s = sub.add_parser("apply", parents=[common], help="apply moves to a pair")
    s.add_argument("pair", help="N:ALPHA|BETA")
    s.add_argument("moves", nargs="+", metavar="MOVE", help='e.g. "conj 1 -2", "stabS first +", "swap"')
    s.set_defaults(func=_cmd_apply)

    for name, func, what in (
        ("search", _cmd_search, "search for a move sequence"),
        ("verify", _cmd_verify, "replay a move sequence"),
    ):
        s = sub.add_parser(name, parents=[common], help=what)
        s.add_argument("pair_a", metavar="PAIR_A")
        s.add_argument("pair_b", metavar="PAIR_B")
        if name == "search":
            s.add_argument("--max-strands", type=int, default=None)
            s.add_argument("--max-conj-len", type=int, default=3)
            s.add_argument("--max-nodes", type=int, default=100_000)
        else:
            s.add_argument("trace", help="trace file, or - for stdin")
        s.set_defaults(func=func)

    s = sub.add_parser("corpus", help="corpus operations")
    csub = s.add_subparsers(dest="corpus_command", required=True)
    v = csub.add_parser("verify", parents=[common], help="check every corpus row")
    v.add_argument("path", nargs="?", default=None, help="corpus file (default: bundled table)")
    v.set_defaults(func=_cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(_protect_words(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return ns.func(ns)
    except (_UsageError, *_USAGE_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BraidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
