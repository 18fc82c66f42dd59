"""Machine verification of the bounds, censuses, and characterizations.

Each checker sweeps an exhaustively enumerated universe (or a supplied
graph6 corpus), evaluates the exact solvers, and emits a structured
report.  A report passes exactly when its violation list is empty; an
equality case that matches no expected family is itself recorded as a
violation, because that is precisely what would falsify the
characterization being checked.  Reports identify graphs by graph6
strings so results reproduce across machines.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Tuple

from .domination import DominationKind, exact_number
from .enumeration import connected_clawfree_graphs, connected_graphs, free_trees
from .families import FamilyClass, FamilyId, exceptional_member, generate, in_class
from .graph import Graph, GraphInputError, is_claw_free, is_connected
from .graphio import iter_graph6_file, to_graph6
from .canon import certificate, is_isomorphic


DTD = DominationKind.DISJUNCTIVE_TOTAL_DOMINATION
TDOM = DominationKind.TOTAL_DOMINATION


def _corpus_stream(path: str, clawfree_only: bool = False) -> List[Graph]:
    """Connected graphs of a corpus file, deduplicated, any order."""
    seen = set()
    out = []
    for g in iter_graph6_file(path):
        if not is_connected(g):
            continue
        if clawfree_only and not is_claw_free(g):
            continue
        cert = certificate(g.n, g.bits)
        if cert in seen:
            continue
        seen.add(cert)
        out.append(g)
    return out


@dataclass
class VerificationReport:
    theorem: str
    universe: str
    checked: int = 0
    violations: List[str] = field(default_factory=list)
    equality_cases: List[Tuple[str, str]] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def expect_count(self, name: str, got: int, want: int) -> None:
        self.counts[name] = got
        if got != want:
            self.violations.append(f"count:{name}={got} expected {want}")


def emit_report(report: VerificationReport, fmt: str = "json") -> str:
    """Deterministic serialization; 'json' (stable key order) or 'text'."""
    if fmt == "json":
        payload = {
            "theorem": report.theorem,
            "universe": report.universe,
            "checked": report.checked,
            "violations": list(report.violations),
            "equality_cases": [list(e) for e in report.equality_cases],
            "counts": dict(sorted(report.counts.items())),
            "elapsed_ms": report.elapsed_ms,
            "status": "pass" if report.passed else "fail",
        }
        return json.dumps(payload, indent=2)
    if fmt == "text":
        lines = [
            f"theorem: {report.theorem}",
            f"universe: {report.universe}",
            f"checked: {report.checked}",
            f"status: {'pass' if report.passed else 'fail'}",
        ]
        for name in sorted(report.counts):
            lines.append(f"count {name}: {report.counts[name]}")
        for g6, cls in report.equality_cases:
            lines.append(f"equality {g6}: {cls}")
        for v in report.violations:
            lines.append(f"violation: {v}")
        lines.append(f"elapsed_ms: {report.elapsed_ms}")
        return "\n".join(lines) + "\n"
    raise GraphInputError(f"unknown report format: {fmt}")


# -- parallel helpers -----------------------------------------------------------


def _dtd_value_of_rows(payload):
    n, rows = payload
    g = Graph.from_bits(n, rows)
    return rows, exact_number(g, DTD).value


def _dtd_and_gt_of_rows(payload):
    n, rows = payload
    g = Graph.from_bits(n, rows)
    return rows, exact_number(g, DTD).value, exact_number(g, TDOM).value


def map_solver(graphs: Iterable[Graph], jobs: int = 1, with_gt: bool = False):
    """Evaluate the exact solver across a stream, optionally in parallel.

    Yields (graph, dtd) or (graph, dtd, gt) tuples; the output order is the
    input order regardless of the worker count.
    """
    fn = _dtd_and_gt_of_rows if with_gt else _dtd_value_of_rows
    if jobs <= 1:
        for g in graphs:
            out = fn((g.n, g.bits))
            yield (g,) + out[1:]
        return
    glist = list(graphs)
    with Pool(jobs) as pool:
        results = pool.map(fn, [(g.n, g.bits) for g in glist], chunksize=64)
    for g, out in zip(glist, results):
        yield (g,) + tuple(out[1:])


# -- the checkers ----------------------------------------------------------------


def check_order7_census(jobs: int = 1) -> VerificationReport:
    """Exhaustive order-7 census: 20 graphs with total domination number 4,
    12 of them claw-free (the L-list), 6 of those with disjunctive total
    domination number 4 (the S1-sublist)."""
    t0 = time.monotonic()
    report = VerificationReport(
        theorem="order7-census", universe="all connected graphs, n=7 (builtin)"
    )
    graphs = list(connected_graphs(7))
    report.expect_count("connected", len(graphs), 853)
    gt4 = []
    for g, dtd, gt in map_solver(graphs, jobs=jobs, with_gt=True):
        report.checked += 1
        if gt == 4:
            gt4.append((g, dtd))
    report.expect_count("total_domination_4", len(gt4), 20)
    clawfree = [(g, dtd) for g, dtd in gt4 if is_claw_free(g)]
    report.expect_count("clawfree_total_domination_4", len(clawfree), 12)
    l_members = {i: generate(FamilyId("L", (i,))) for i in range(1, 13)}
    matched = set()
    s1_found = set()
    for g, dtd in clawfree:
        hit = next((i for i, lg in l_members.items() if is_isomorphic(g, lg)), None)
        if hit is None:
            report.violations.append(f"unexpected-member:{to_graph6(g)}")
            continue
        matched.add(hit)
        report.equality_cases.append((to_graph6(g), str(FamilyId("L", (hit,)))))
        if dtd == 4:
            s1_found.add(hit)
    for i in sorted(set(l_members) - matched):
        report.violations.append(f"missing-member:L({i})")
    report.expect_count("clawfree_dtd_4", len(s1_found), 6)
    if s1_found != {1, 2, 3, 5, 6, 10} and len(s1_found) == 6:
        report.violations.append(f"s1-mismatch:{sorted(s1_found)}")
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


def _expected_tree_equality(n: int, include_small: bool = True) -> List[FamilyId]:
    out: List[FamilyId] = []
    if n % 3 != 1:
        return out
    k = (n - 1) // 3
    if k >= 1:
        out.append(FamilyId("T", (k,)))
    if k >= 2:
        out.append(FamilyId("F", (k,)))
    if include_small and n == 4:
        out.append(FamilyId("Star", (3,)))
    if include_small and n == 7:
        out.append(FamilyId("TStar"))
    return out


def check_tree_theorem(max_n: int = 12, jobs: int = 1) -> VerificationReport:
    """Trees of order 4..max_n other than the 5- and 6-paths satisfy
    3*dtd <= 2(n-1), with equality exactly on the expected families."""
    if not 4 <= max_n <= 16:
        raise GraphInputError("tree check supports 4 <= max_n <= 16")
    t0 = time.monotonic()
    report = VerificationReport(
        theorem="tree-characterization",
        universe=f"trees, 4 <= n <= {max_n} (builtin), excluding P5 and P6",
    )
    p5, p6 = generate(FamilyId("P", (5,))), generate(FamilyId("P", (6,)))
    for n in range(4, max_n + 1):
        trees = [
            t
            for t in free_trees(n)
            if not (n == 5 and is_isomorphic(t, p5))
            and not (n == 6 and is_isomorphic(t, p6))
        ]
        expected = _expected_tree_equality(n)
        found: List[Graph] = []
        for g, dtd in map_solver(trees, jobs=jobs):
            report.checked += 1
            if 3 * dtd > 2 * (n - 1):
                report.violations.append(f"bound:{to_graph6(g)} dtd={dtd}")
            elif 3 * dtd == 2 * (n - 1):
                found.append(g)
        report.counts[f"equality_n{n}"] = len(found)
        remaining = {str(fid): generate(fid) for fid in expected}
        for g in found:
            hit = next(
                (name for name, eg in remaining.items() if is_isomorphic(g, eg)), None
            )
            if hit is None:
                report.equality_cases.append((to_graph6(g), "unclassified"))
                report.violations.append(f"unclassified-equality:{to_graph6(g)}")
            else:
                del remaining[hit]
                report.equality_cases.append((to_graph6(g), hit))
            if n >= 8 and hit in ("Star(3)", "TStar"):
                report.violations.append(f"large-order-small-family:{hit}")
        for name in sorted(remaining):
            report.violations.append(f"missing-equality:n={n} {name}")
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


def check_graph_theorem(corpus: Optional[str] = None, jobs: int = 1) -> VerificationReport:
    """Connected graphs of order 8 (builtin) satisfy 3*dtd <= 2(n-1) with no
    equality case; corpus graphs of order >= 8 are checked the same way,
    with equality cases classified into the three extremal families."""
    t0 = time.monotonic()
    universe = "all connected graphs, n=8 (builtin)"
    if corpus:
        universe += f" + corpus {corpus}"
    report = VerificationReport(theorem="general-bound", universe=universe)

    def handle(g: Graph, dtd: int) -> None:
        report.checked += 1
        n = g.n
        if 3 * dtd > 2 * (n - 1):
            report.violations.append(f"bound:{to_graph6(g)} dtd={dtd}")
            return
        if 3 * dtd != 2 * (n - 1):
            return
        for cls, tag in (
            (FamilyClass.CAL_T, "T"),
            (FamilyClass.CAL_F, "F"),
            (FamilyClass.CAL_G, "G"),
        ):
            if in_class(g, cls):
                fid = f"{tag}({(n - 1) // 3})"
                report.equality_cases.append((to_graph6(g), fid))
                report.counts[f"equality_n{n}"] = report.counts.get(f"equality_n{n}", 0) + 1
                return
        report.equality_cases.append((to_graph6(g), "unclassified"))
        report.violations.append(f"unclassified-equality:{to_graph6(g)}")

    for g, dtd in map_solver(connected_graphs(8), jobs=jobs):
        handle(g, dtd)
    if report.counts.get("equality_n8"):
        report.violations.append("equality-at-n8")
    if corpus:
        stream = _corpus_stream(corpus)
        for g in stream:
            if g.n < 8:
                report.violations.append(f"corpus-order-below-8:{to_graph6(g)}")
        for g, dtd in map_solver([g for g in stream if g.n >= 8], jobs=jobs):
            handle(g, dtd)
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


def check_clawfree_theorem(max_n: int = 8, corpus: Optional[str] = None, jobs: int = 1) -> VerificationReport:
    """Connected claw-free graphs are exceptional or satisfy 7*dtd <= 4n,
    and every equality case lies in the two equality families."""
    if not 2 <= max_n <= 12:
        raise GraphInputError("claw-free check supports 2 <= max_n <= 12")
    t0 = time.monotonic()
    universe = f"connected claw-free graphs, 2 <= n <= {max_n} (builtin)"
    if corpus:
        universe += f" + corpus {corpus}"
    report = VerificationReport(theorem="clawfree-bound", universe=universe)

    def handle(g: Graph, dtd: int) -> None:
        report.checked += 1
        exc = exceptional_member(g)
        if exc is not None:
            report.counts["exceptional"] = report.counts.get("exceptional", 0) + 1
            return
        if 7 * dtd > 4 * g.n:
            report.violations.append(f"bound:{to_graph6(g)} dtd={dtd}")
            return
        if 7 * dtd < 4 * g.n:
            return
        report.counts["equality"] = report.counts.get("equality", 0) + 1
        if in_class(g, FamilyClass.CAL_H):
            report.equality_cases.append((to_graph6(g), f"H({g.n // 7})"))
        elif in_class(g, FamilyClass.CAL_S):
            report.equality_cases.append((to_graph6(g), "S-list"))
        else:
            report.equality_cases.append((to_graph6(g), "unclassified"))
            report.violations.append(f"unclassified-equality:{to_graph6(g)}")

    for n in range(2, max_n + 1):
        for g, dtd in map_solver(connected_clawfree_graphs(n), jobs=jobs):
            handle(g, dtd)
    if corpus:
        for g, dtd in map_solver(_corpus_stream(corpus, clawfree_only=True), jobs=jobs):
            handle(g, dtd)
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


def check_mindeg2_observation(max_n: int = 8, jobs: int = 1) -> VerificationReport:
    """Connected claw-free graphs with minimum degree 2 fall strictly below
    4n/7 except for the 3-cycle and the 7-cycle."""
    if not 3 <= max_n <= 12:
        raise GraphInputError("min-degree-2 check supports 3 <= max_n <= 12")
    t0 = time.monotonic()
    report = VerificationReport(
        theorem="clawfree-mindeg2-strict",
        universe=f"connected claw-free graphs with min degree 2, n <= {max_n} (builtin)",
    )
    c3 = generate(FamilyId("C", (3,)))
    c7 = generate(FamilyId("C", (7,)))
    for n in range(3, max_n + 1):
        pool = [g for g in connected_clawfree_graphs(n) if g.min_degree() >= 2]
        for g, dtd in map_solver(pool, jobs=jobs):
            report.checked += 1
            if 7 * dtd < 4 * g.n:
                continue
            if is_isomorphic(g, c3) or is_isomorphic(g, c7):
                report.counts["exceptions"] = report.counts.get("exceptions", 0) + 1
                report.equality_cases.append((to_graph6(g), f"C({g.n})"))
            else:
                report.violations.append(f"bound:{to_graph6(g)} dtd={dtd}")
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


def check_dtd_le_gt(max_n: int = 8, jobs: int = 1) -> VerificationReport:
    """The disjunctive total domination number never exceeds the total
    domination number, over the whole builtin universe."""
    if not 2 <= max_n <= 8:
        raise GraphInputError("comparison check supports 2 <= max_n <= 8")
    t0 = time.monotonic()
    report = VerificationReport(
        theorem="dtd-le-total",
        universe=f"all connected graphs, 2 <= n <= {max_n} (builtin)",
    )
    for n in range(2, max_n + 1):
        for g, dtd, gt in map_solver(connected_graphs(n), jobs=jobs, with_gt=True):
            report.checked += 1
            if dtd > gt:
                report.violations.append(f"gap:{to_graph6(g)} dtd={dtd} gt={gt}")
            elif dtd == gt:
                report.counts["equality"] = report.counts.get("equality", 0) + 1
            else:
                report.counts["strict"] = report.counts.get("strict", 0) + 1
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


# -- heavy helper for the constructor sweep (picklable for worker pools) ---------


def constructor_check_of_parent(payload):
    """Expand one claw-free parent and run the constructor on every child.

    Returns (children, failures, tag_counts); used by tests and scripts to
    parallelize the exhaustive constructor sweep at the top order.
    """
    from .constructor import construct_dtd_clawfree
    from .domination import is_dtd_set
    from .enumeration import accepted_children

    parent, = payload if isinstance(payload, tuple) and len(payload) == 1 else (payload,)
    children = 0
    failures = []
    tags: Dict[str, int] = {}
    for rows in accepted_children(parent, True):
        n = len(rows)
        g = Graph.from_bits(n, rows)
        children += 1
        if exceptional_member(g) is not None:
            continue
        witness, tag = construct_dtd_clawfree(g)
        tags[tag] = tags.get(tag, 0) + 1
        if not is_dtd_set(g, witness) or 7 * len(witness) > 4 * n:
            failures.append(to_graph6(g))
    return children, failures, tags
