"""Command-line interface.

Exit codes: 0 success, 1 ``member`` said no, 2 unreadable input, 3 covering
or graph not connected, 4 computed basis failed its invariants, 5 word not in
the subgroup (``rewrite``), 6 infinite index (``fold``), 7 a counterexample
check failed.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import serialize
from .counterexample import fixed_words_check, verify_explicit_basis
from .covering import fold_words, is_member
from .errors import (
    DomainError,
    FreeGroupError,
    InfiniteIndex,
    InvalidLetter,
    InvalidPermutation,
    NotConnected,
    NotMember,
    WordSyntaxError,
)
from .graphs import euler_rank, non_tree_edges, spanning_tree
from .schreier import check_basis, eval_basis, rank_formula, rewrite_in_basis, subgroup_basis
from .words import Alphabet, format_word, parse_word

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_NOT_CONNECTED = 3
EXIT_INVARIANT = 4
EXIT_NOT_MEMBER = 5
EXIT_INFINITE_INDEX = 6
EXIT_CHECK_FAILED = 7

PARSE_ERRORS = (serialize.DocumentError, WordSyntaxError, InvalidLetter, InvalidPermutation)


class _Exit(Exception):
    def __init__(self, code: int, message: str = "", payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Exit(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from None


def _emit(args, doc: dict, human: str) -> None:
    if args.format == "structured":
        sys.stdout.write(serialize.dumps(doc))
    else:
        sys.stdout.write(human.rstrip("\n") + "\n")


def _covering(path: str):
    return serialize.load_covering(_read(path))


def cmd_basis(args) -> int:
    c = _covering(args.covering)
    b = subgroup_basis(c)
    doc = serialize.basis_to_dict(b, c)
    problems = check_basis(b, c)
    if problems:
        raise _Exit(EXIT_INVARIANT, "; ".join(problems), doc)
    formula = doc["formula"]
    lines = [
        f"index m = {c.fiber_size}, free rank n = {c.rank}",
        f"rank {b.rank} = m(n-1)+1 = {formula['value']}",
        "generators:",
    ]
    for i, (g, e) in enumerate(zip(doc["generators"], doc["edges"])):
        lines.append(f"  g{i} = {g}    [edge {e['generator']} at {e['source']}]")
    lines.append("tree edges:")
    lines.extend(f"  {t['generator']}: {t['source']} -> {t['target']}" for t in doc["tree_edges"])
    if not doc["tree_edges"]:
        lines.append("  (none)")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_member(args) -> int:
    c = _covering(args.covering)
    w = parse_word(c.alphabet, args.word)
    member = is_member(c, w)
    _emit(args, {"word": format_word(w), "member": member}, "true" if member else "false")
    return EXIT_OK if member else EXIT_FALSE


def cmd_rewrite(args) -> int:
    c = _covering(args.covering)
    w = parse_word(c.alphabet, args.word)
    b = subgroup_basis(c)
    try:
        bw = rewrite_in_basis(b, c, w)
    except NotMember as exc:
        raise _Exit(EXIT_NOT_MEMBER, str(exc)) from None
    back = eval_basis(b, bw)
    ok = back == w
    doc = {
        "word": format_word(w),
        "basis_word": format_word(bw),
        "generators": [format_word(g) for g in b.generators],
        "roundtrip": format_word(back),
        "roundtrip_ok": ok,
    }
    human = f"{format_word(bw)}\nroundtrip: {format_word(back)} {'OK' if ok else 'MISMATCH'}"
    _emit(args, doc, human)
    if not ok:
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_rank(args) -> int:
    if args.covering is not None:
        c = _covering(args.covering)
        n, m = c.rank, c.fiber_size
    elif args.n is not None and args.m is not None:
        n, m = args.n, args.m
    else:
        raise _Exit(EXIT_PARSE, "give a covering file or both -n and -m")
    try:
        r = rank_formula(n, m)
    except DomainError as exc:
        raise _Exit(EXIT_PARSE, str(exc)) from None
    _emit(args, {"n": n, "m": m, "rank": r}, f"m(n-1)+1 = {m}({n}-1)+1 = {r}")
    return EXIT_OK


def _alphabet(args) -> Alphabet:
    if args.names:
        names = [s for s in args.names.replace(",", " ").split() if s]
        try:
            return Alphabet.from_names(names)
        except ValueError as exc:
            raise _Exit(EXIT_PARSE, str(exc)) from None
    if args.rank is None:
        raise _Exit(EXIT_PARSE, "give --names or --rank")
    return Alphabet(args.rank)


def cmd_fold(args) -> int:
    alphabet = _alphabet(args)
    words = [parse_word(alphabet, s) for s in args.words]
    try:
        c = fold_words(alphabet, words)
    except InfiniteIndex as exc:
        core = exc.core
        doc = {
            "error": "infinite index",
            "core": {
                "vertices": core.num_vertices,
                "edges": [[s, alphabet.names[a], d] for s, a, d in core.edges],
                "deficient": core.deficient_vertices(),
            },
        }
        raise _Exit(EXIT_INFINITE_INDEX, str(exc), doc) from None
    doc = serialize.covering_to_dict(c)
    lines = [f"covering with {c.fiber_size} sheets, basepoint {c.basepoint}"]
    lines.extend(f"  {alphabet.names[a]}: {list(p)}" for a, p in enumerate(c.action))
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_pi1(args) -> int:
    g = serialize.load_graph(_read(args.graph))
    r = euler_rank(g)
    t = spanning_tree(g, 0)
    loops = non_tree_edges(g, t)
    doc = {"rank": r, "generator_edges": loops, "tree_edges": sorted(t.tree_edges)}
    human = f"rank {r}\ngenerator edges: {' '.join(map(str, loops)) or '(none)'}"
    _emit(args, doc, human)
    return EXIT_OK


def cmd_counterexample(args) -> int:
    report = verify_explicit_basis()
    check = fixed_words_check(args.max_len)
    report.checks.append(check)
    _emit(args, report.as_dict(), str(report))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("human", "structured"), default="human")

    parser = argparse.ArgumentParser(
        prog="nielsen-schreier",
        description="Free bases of finite-index subgroups of free groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[fmt], help="Schreier basis of a covering")
    p.add_argument("covering", help="covering JSON file, or - for stdin")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("member", parents=[fmt], help="is a word in the subgroup?")
    p.add_argument("covering")
    p.add_argument("word")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("rewrite", parents=[fmt], help="express a member over the basis")
    p.add_argument("covering")
    p.add_argument("word")
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("rank", parents=[fmt], help="rank of an index-m subgroup")
    p.add_argument("covering", nargs="?")
    p.add_argument("-n", type=int, help="rank of the free group")
    p.add_argument("-m", type=int, help="index of the subgroup")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("fold", parents=[fmt], help="covering of the subgroup generated by words")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--names", help="generator names, e.g. a,b")
    group.add_argument("--rank", type=int, help="use generators g0..g{rank-1}")
    p.add_argument("words", nargs="*")
    p.set_defaults(func=cmd_fold)

    p = sub.add_parser("pi1", parents=[fmt], help="fundamental group rank of a graph")
    p.add_argument("graph", help="graph file (JSON or text), or - for stdin")
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("counterexample", parents=[fmt], help="check the swap counterexample")
    p.add_argument("--max-len", type=int, default=8, help="fixed-word scan length")
    p.set_defaults(func=cmd_counterexample)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        code, message, payload = exc.code, str(exc), exc.payload
    except PARSE_ERRORS as exc:
        code, message, payload = EXIT_PARSE, str(exc), None
    except NotConnected as exc:
        code, message = EXIT_NOT_CONNECTED, str(exc)
        payload = {"error": "not connected", "labels": list(exc.labels or ())}
    except FreeGroupError as exc:
        code, message, payload = EXIT_PARSE, str(exc), None
    if payload is not None and args.format == "structured":
        payload = dict(payload, exit_code=code, message=message)
        sys.stdout.write(serialize.dumps(payload))
    elif payload is not None and "labels" in payload:
        print(f"component labels: {payload['labels']}")
    elif payload is not None and "core" in payload:
        core = payload["core"]
        print(f"core graph: {core['vertices']} vertices, edges {core['edges']}")
    print(f"error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
