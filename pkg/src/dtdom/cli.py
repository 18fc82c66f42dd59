"""Command-line front-end.

Exit codes: 0 success or verification pass, 1 verification failure,
2 input error, 3 domain error (isolated vertex for a total variant,
exceptional graph handed to the constructor).
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .constructor import construct_dtd_clawfree, greedy_dtd
from .domination import (
    DomainError,
    DominationKind,
    dtd_uncovered,
    exact_number,
    is_dominating_set,
    is_dtd_set,
    is_total_dominating_set,
)
from .enumeration import EnumSpec, GraphClass, enumerate_graphs
from .families import generate_named
from .graph import Graph, GraphInputError
from .graphio import FORMATS, dump_graph, load_graph, to_graph6
from .verify import (
    check_clawfree_theorem,
    check_dtd_le_gt,
    check_graph_theorem,
    check_mindeg2_observation,
    check_order7_census,
    check_tree_theorem,
    emit_report,
)

_KINDS = {
    "dom": DominationKind.DOMINATION,
    "tdom": DominationKind.TOTAL_DOMINATION,
    "dtd": DominationKind.DISJUNCTIVE_TOTAL_DOMINATION,
}

_CLASSES = {
    "all": GraphClass.ALL_CONNECTED,
    "clawfree": GraphClass.CONNECTED_CLAW_FREE,
    "trees": GraphClass.TREES,
}


def _witness_str(vertices) -> str:
    return ",".join(str(v) for v in sorted(vertices))


def _parse_set(text: str, n: int):
    out = set()
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            v = int(token)
        except ValueError:
            raise GraphInputError(f"malformed vertex token: {token!r}") from None
        if not 0 <= v < n:
            raise GraphInputError(f"vertex {v} out of range 0..{n - 1}")
        out.add(v)
    return frozenset(out)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dtdom",
        description="Exact computation and verification for disjunctive total domination.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact minimum with a witness set")
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=FORMATS, default="edgelist")

    p = sub.add_parser("check-set", help="validate a candidate set")
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--set", dest="candidate", required=True, help="comma list, e.g. 0,2,5")
    p.add_argument("--format", choices=FORMATS, default="edgelist")

    p = sub.add_parser("generate", help="build a named family member")
    p.add_argument("--family", required=True, help="e.g. T(4), H(3), L(13), C10', P7")
    p.add_argument("--out")
    p.add_argument("--format", choices=FORMATS, default="edgelist")

    p = sub.add_parser("construct", help="bounded DTD-set for a claw-free graph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("--greedy", action="store_true", help="greedy baseline instead")

    p = sub.add_parser("verify", help="run a theorem checker")
    p.add_argument(
        "--theorem",
        choices=["census7", "tree", "graph", "clawfree", "mindeg2", "dtd-le-gt"],
        required=True,
    )
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--corpus", default=None, help="graph6 file for deeper orders")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", choices=["json", "text"], default="text")

    p = sub.add_parser("enumerate", help="stream non-isomorphic graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="klass", choices=sorted(_CLASSES), default="all")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("convert", help="translate between graph file formats")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format-in", choices=FORMATS, required=True)
    p.add_argument("--format-out", choices=FORMATS, required=True)
    p.add_argument("--out")
    return parser


def _cmd_compute(args) -> int:
    g = load_graph(args.infile, args.format)
    res = exact_number(g, _KINDS[args.kind])
    print(res.value)
    print(_witness_str(res.witness))
    return 0


def _cmd_check_set(args) -> int:
    g = load_graph(args.infile, args.format)
    s = _parse_set(args.candidate, g.n)
    kind = _KINDS[args.kind]
    smask = 0
    for u in s:
        smask |= 1 << u
    if kind is DominationKind.DOMINATION:
        ok = is_dominating_set(g, s)
        uncovered = frozenset(
            v for v in range(g.n) if v not in s and not g.bits[v] & smask
        )
    elif kind is DominationKind.TOTAL_DOMINATION:
        ok = is_total_dominating_set(g, s)
        uncovered = frozenset(v for v in range(g.n) if not g.bits[v] & smask)
    else:
        ok = is_dtd_set(g, s)
        uncovered = dtd_uncovered(g, s)
    if ok:
        print("valid")
        return 0
    print("invalid")
    print("uncovered: " + _witness_str(uncovered))
    return 1


def _cmd_generate(args) -> int:
    g = generate_named(args.family)
    _emit(dump_graph(g, args.format), args.out)
    return 0


def _cmd_construct(args) -> int:
    g = load_graph(args.infile, args.format)
    if args.greedy:
        witness = greedy_dtd(g)
        tag = "greedy"
    else:
        witness, tag = construct_dtd_clawfree(g)
    print(len(witness))
    print(_witness_str(witness))
    print(tag)
    return 0


def _cmd_verify(args) -> int:
    theorem = args.theorem
    jobs = max(1, args.jobs)
    if theorem == "census7":
        report = check_order7_census(jobs=jobs)
    elif theorem == "tree":
        report = check_tree_theorem(max_n=args.max_n or 12, jobs=jobs)
    elif theorem == "graph":
        report = check_graph_theorem(corpus=args.corpus, jobs=jobs)
    elif theorem == "clawfree":
        report = check_clawfree_theorem(
            max_n=args.max_n or 8, corpus=args.corpus, jobs=jobs
        )
    elif theorem == "mindeg2":
        report = check_mindeg2_observation(max_n=args.max_n or 8, jobs=jobs)
    else:
        report = check_dtd_le_gt(max_n=args.max_n or 8, jobs=jobs)
    sys.stdout.write(emit_report(report, args.report))
    if args.report == "json":
        sys.stdout.write("\n")
    return 0 if report.passed else 1


def _cmd_enumerate(args) -> int:
    klass = _CLASSES[args.klass]
    if args.jobs > 1 and klass is not GraphClass.TREES:
        from .enumeration import iter_level_parallel

        stream = iter_level_parallel(
            args.n, klass is GraphClass.CONNECTED_CLAW_FREE, args.jobs
        )
        lines = sorted(to_graph6(Graph.from_bits(args.n, rows)) for rows in stream)
    else:
        lines = sorted(to_graph6(g) for g in enumerate_graphs(EnumSpec(args.n, klass)))
    _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    return 0


def _cmd_convert(args) -> int:
    g = load_graph(args.infile, args.format_in)
    _emit(dump_graph(g, args.format_out), args.out)
    return 0


_DISPATCH = {
    "compute": _cmd_compute,
    "check-set": _cmd_check_set,
    "generate": _cmd_generate,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "convert": _cmd_convert,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except GraphInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
