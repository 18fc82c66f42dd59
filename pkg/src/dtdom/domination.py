"""Domination predicates, exact minimum solvers, and path/cycle closed forms.

Three set kinds are covered: dominating sets, total dominating sets, and
disjunctive total dominating sets (every vertex has a neighbor in the set
or at least two set members at distance exactly 2).  The exact solver is
an ascending-cardinality search with logically forced-vertex propagation
and a coverage-capacity bound; nothing heuristic prunes a feasible branch,
so its results are safe to use as the oracle for every theorem check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, Optional

from .graph import (
    DistanceTable,
    Graph,
    GraphInputError,
    bits_to_vertices,
    distance2_bits,
    leaves,
)


class DomainError(ValueError):
    """Input outside a solver's mathematical domain (e.g. isolated vertex)."""


class DominationKind(Enum):
    DOMINATION = "dom"
    TOTAL_DOMINATION = "tdom"
    DISJUNCTIVE_TOTAL_DOMINATION = "dtd"


@dataclass(frozen=True)
class SolveResult:
    kind: DominationKind
    value: int
    witness: FrozenSet[int]
    explored: int


def _to_mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


# -- predicates ---------------------------------------------------------------


def is_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    """Every vertex outside ``s`` has a neighbor in ``s``."""
    smask = _to_mask(s)
    for v in range(g.n):
        if not (smask >> v) & 1 and not (g.bits[v] & smask):
            return False
    return True


def is_total_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    """Every vertex of ``g``, members of ``s`` included, has a neighbor in ``s``."""
    smask = _to_mask(s)
    return all(g.bits[v] & smask for v in range(g.n))


def dtd_uncovered(g: Graph, s: Iterable[int], dist: Optional[DistanceTable] = None) -> FrozenSet[int]:
    """Vertices violating the disjunctive total domination condition."""
    smask = _to_mask(s)
    if dist is None:
        d2 = distance2_bits(g)
    else:
        d2 = tuple(
            _to_mask(u for u in range(g.n) if dist.dist[v][u] == 2) for v in range(g.n)
        )
    bad = []
    for v in range(g.n):
        if g.bits[v] & smask:
            continue
        if (d2[v] & smask).bit_count() >= 2:
            continue
        bad.append(v)
    return frozenset(bad)


def is_dtd_set(g: Graph, s: Iterable[int], dist: Optional[DistanceTable] = None) -> bool:
    """Every vertex has a neighbor in ``s`` or two ``s``-members at distance 2."""
    return not dtd_uncovered(g, s, dist)


# -- exact solver --------------------------------------------------------------


def exact_number(g: Graph, kind: DominationKind) -> SolveResult:
    """Exact minimum cardinality with witness, by ascending-cardinality search.

    Intended for n up to ~20.  For the total variants every vertex must have
    a neighbor (DomainError otherwise); disconnected inputs are permitted and
    solved globally.
    """
    n = g.n
    total_kind = kind is not DominationKind.DOMINATION
    if total_kind:
        for v in range(n):
            if not g.bits[v]:
                raise DomainError(f"vertex {v} is isolated; {kind.value} undefined")
    if n == 0:
        return SolveResult(kind, 0, frozenset(), 0)

    nbr = g.bits
    d2 = distance2_bits(g) if kind is DominationKind.DISJUNCTIVE_TOTAL_DOMINATION else None
    full = (1 << n) - 1
    dom_kind = kind is DominationKind.DOMINATION
    explored = 0

    unit_cap = 1
    for w in range(n):
        cap = nbr[w].bit_count() + (1 if dom_kind else 0)
        if d2 is not None:
            cap += d2[w].bit_count()
        unit_cap = max(unit_cap, cap)

    def search(k: int) -> Optional[int]:
        nonlocal explored

        def rec(smask: int, banned: int, size: int, adjcov: int, d2one: int, d2two: int) -> Optional[int]:
            nonlocal explored
            explored += 1
            while True:
                if dom_kind:
                    covered = smask | adjcov
                elif d2 is None:
                    covered = adjcov
                else:
                    covered = adjcov | d2two
                unc = full & ~covered
                if not unc:
                    return smask
                budget = k - size
                if budget == 0:
                    return None
                blocked = banned | smask
                forced = 0
                u = unc
                while u:
                    low = u & -u
                    v = low.bit_length() - 1
                    u ^= low
                    avail_n = nbr[v] & ~blocked
                    if dom_kind:
                        avail_n |= low & ~blocked
                    if d2 is None:
                        if not avail_n:
                            return None
                        if not (avail_n & (avail_n - 1)):
                            forced |= avail_n
                    else:
                        need = 1 if (d2one >> v) & 1 else 2
                        avail_d = d2[v] & ~blocked
                        cnt_d = avail_d.bit_count()
                        d2_viable = cnt_d >= need and need <= budget
                        if not avail_n:
                            if not d2_viable:
                                return None
                            if cnt_d == need:
                                forced |= avail_d
                        elif not (avail_n & (avail_n - 1)) and not d2_viable:
                            forced |= avail_n
                forced &= ~smask
                if not forced:
                    break
                if size + forced.bit_count() > k:
                    return None
                f = forced
                while f:
                    low = f & -f
                    w = low.bit_length() - 1
                    f ^= low
                    smask |= low
                    adjcov |= nbr[w]
                    if d2 is not None:
                        dw = d2[w]
                        d2two |= dw & d2one
                        d2one |= dw
                    size += 1

            # capacity bound: each addition fixes at most unit-capacity deficits
            avail = full & ~banned & ~smask
            best_gain = 0
            a = avail
            while a:
                low = a & -a
                w = low.bit_length() - 1
                a ^= low
                reach = nbr[w]
                if dom_kind:
                    reach |= low
                if d2 is not None:
                    reach |= d2[w]
                gain = (reach & unc).bit_count()
                if gain > best_gain:
                    best_gain = gain
            if best_gain == 0 or unc.bit_count() > budget * best_gain:
                return None

            # branch on the uncovered vertex with fewest helpers
            pick, pick_opts, pick_cnt = -1, 0, 1 << 30
            u = unc
            while u:
                low = u & -u
                v = low.bit_length() - 1
                u ^= low
                opts = nbr[v] & ~blocked
                if dom_kind:
                    opts |= low & ~blocked
                if d2 is not None:
                    need = 1 if (d2one >> v) & 1 else 2
                    avail_d = d2[v] & ~blocked
                    if avail_d.bit_count() >= need and need <= budget:
                        opts |= avail_d
                cnt = opts.bit_count()
                if cnt < pick_cnt:
                    pick, pick_opts, pick_cnt = v, opts, cnt
                    if cnt <= 2:
                        break
            tried = 0
            o = pick_opts
            while o:
                low = o & -o
                w = low.bit_length() - 1
                o ^= low
                adj2 = adjcov | nbr[w]
                one2, two2 = d2one, d2two
                if d2 is not None:
                    dw = d2[w]
                    two2 |= dw & one2
                    one2 |= dw
                hit = rec(smask | low, banned | tried, size + 1, adj2, one2, two2)
                if hit is not None:
                    return hit
                tried |= low
            return None

        return rec(0, 0, 0, 0, 0, 0)

    lower = max(1, -(-n // unit_cap))
    for k in range(lower, n + 1):
        hit = search(k)
        if hit is not None:
            return SolveResult(kind, hit.bit_count(), bits_to_vertices(hit), explored)
    raise DomainError("no feasible set exists")  # unreachable after isolation check


def dominating_number(g: Graph) -> int:
    return exact_number(g, DominationKind.DOMINATION).value


def total_domination_number(g: Graph) -> int:
    return exact_number(g, DominationKind.TOTAL_DOMINATION).value


def dtd_number(g: Graph) -> int:
    return exact_number(g, DominationKind.DISJUNCTIVE_TOTAL_DOMINATION).value


# -- closed forms for paths and cycles -----------------------------------------


def dtd_cycle_formula(n: int) -> int:
    """Minimum disjunctive total domination of the n-cycle (n >= 3)."""
    if n < 3:
        raise GraphInputError("cycle formula needs n >= 3")
    if n % 5 == 0:
        return 2 * n // 5
    return -(-2 * (n + 1) // 5)


def dtd_path_formula(n: int) -> int:
    """Minimum disjunctive total domination of the n-path (n >= 3)."""
    if n < 3:
        raise GraphInputError("path formula needs n >= 3")
    base = -(-2 * (n + 1) // 5)
    return base + 1 if n % 5 == 1 else base


def gt_cycle_formula(n: int) -> int:
    """Total domination number of the n-cycle (n >= 3)."""
    if n < 3:
        raise GraphInputError("cycle formula needs n >= 3")
    return n // 2 + (-(-n // 4)) - n // 4


def cycle_witness(n: int) -> FrozenSet[int]:
    """Explicit minimum DTD-set of C_n: consecutive pairs every five vertices.

    Pairs sit at indices {5i, 5i+1}; the residue tail adds vertex n-1 when
    n = 1 (mod 5) and the pair {n-5, n-4} (mod n) for residues 2, 3, 4.
    Always has size ``dtd_cycle_formula(n)``.
    """
    if n < 3:
        raise GraphInputError("cycle witness needs n >= 3")
    s = set()
    for i in range(n // 5):
        s.add(5 * i)
        s.add(5 * i + 1)
    r = n % 5
    if r == 1:
        s.add(n - 1)
    elif r:
        s.add((n - 5) % n)
        s.add((n - 4) % n)
    return frozenset(s)


# -- support-vertex exchange ----------------------------------------------------


def support_exchange(
    g: Graph,
    s: Iterable[int],
    v: int,
    include_degree2_neighbor: bool = False,
) -> FrozenSet[int]:
    """Same-size minimum DTD-set containing the support vertex ``v``.

    ``v`` must be a support vertex with exactly one non-leaf neighbor ``w``
    and ``s`` a minimum DTD-set; a leaf neighbor of ``v`` in ``s`` is swapped
    for ``v`` when needed.  With ``include_degree2_neighbor`` (requires
    ``deg(w) == 2``) the result contains both ``v`` and ``w``.
    """
    s = frozenset(s)
    if not is_dtd_set(g, s):
        raise GraphInputError("s is not a disjunctive total dominating set")
    lv = leaves(g)
    if v in lv or not any(u in lv for u in g.adj[v]):
        raise GraphInputError(f"vertex {v} is not a support vertex")
    non_leaf = sorted(u for u in g.adj[v] if u not in lv)
    if len(non_leaf) != 1:
        raise GraphInputError(
            f"vertex {v} has {len(non_leaf)} non-leaf neighbors, need exactly 1"
        )
    w = non_leaf[0]

    out = s
    if v not in out:
        swappable = sorted(u for u in g.adj[v] if u in lv and u in out)
        if not swappable:
            raise GraphInputError("no leaf neighbor of v available to swap")
        out = (out - {swappable[0]}) | {v}
        if not is_dtd_set(g, out):
            raise GraphInputError("exchange broke the set; s was not minimum")

    if include_degree2_neighbor:
        if g.degree(w) != 2:
            raise GraphInputError(f"neighbor {w} has degree {g.degree(w)}, need 2")
        if w not in out:
            swappable = sorted(u for u in g.adj[v] if u in lv and u in out)
            if not swappable:
                raise GraphInputError("no leaf neighbor of v available to swap")
            out = (out - {swappable[0]}) | {w}
            if not is_dtd_set(g, out):
                raise GraphInputError("exchange broke the set; s was not minimum")
    return out
