"""Canonical forms and isomorphism by partition refinement with backtracking.

Certificates come from individualization-refinement over vertex bitmask
rows: refine to an equitable ordered partition (cells kept as bitmasks),
branch on the first non-singleton cell, and keep the lexicographically
smallest relabeled adjacency.  After individualizing inside an equitable
partition only the new singleton needs to re-enter the splitter queue,
and automorphisms discovered at equal-certificate leaves prune sibling
branches, which keeps symmetric graphs (cliques, cycles) cheap.  Intended
for n <= 16; everything in this package stays well inside that.
"""

from __future__ import annotations

from collections import deque
from typing import List, Optional, Sequence, Tuple

from .graph import Graph


def _refine(n: int, rows: Sequence[int], parts: List[int], queue) -> List[int]:
    """Coarsest equitable refinement; ``parts`` is an ordered list of cell masks.

    ``queue`` holds the splitter masks still to be processed (None means all
    of ``parts``, the from-scratch case).  Cells split into count-ascending
    groups; singleton and pair splitters take pure bitmask shortcuts.
    """
    parts = list(parts)
    work = deque(parts if queue is None else queue)
    while work:
        w = work.popleft()
        single = not w & (w - 1)
        if single:
            reach = rows[w.bit_length() - 1]
            reach2 = 0
        else:
            reach = 0
            ww = w
            while ww:
                low = ww & -ww
                ww ^= low
                reach |= rows[low.bit_length() - 1]
            if w.bit_count() == 2:
                a = w & -w
                reach2 = rows[a.bit_length() - 1] & rows[(w ^ a).bit_length() - 1]
                single = None  # pair shortcut marker
        i = 0
        while i < len(parts):
            cell = parts[i]
            if cell & (cell - 1):
                hit = cell & reach
                if hit:
                    if single:
                        repl = [cell ^ hit, hit] if cell ^ hit else None
                    elif single is None:
                        two = cell & reach2
                        one = hit ^ two
                        repl = [g for g in (cell & ~reach, one, two) if g]
                        if len(repl) < 2:
                            repl = None
                    else:
                        buckets = {}
                        c = cell
                        while c:
                            low = c & -c
                            c ^= low
                            cnt = (rows[low.bit_length() - 1] & w).bit_count()
                            if cnt in buckets:
                                buckets[cnt] |= low
                            else:
                                buckets[cnt] = low
                        repl = (
                            [buckets[k] for k in sorted(buckets)]
                            if len(buckets) > 1
                            else None
                        )
                    if repl:
                        parts[i : i + 1] = repl
                        work.extend(repl)
                        i += len(repl)
                        continue
            i += 1
    return parts


def _relabeled_rows(n: int, rows: Sequence[int], order: Sequence[int]) -> Tuple[int, ...]:
    """Adjacency rows after relabeling vertex ``order[i]`` to ``i``."""
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = []
    for v in order:
        row = rows[v]
        acc = 0
        while row:
            low = row & -row
            acc |= 1 << pos[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return tuple(out)


def certificate(n: int, rows: Sequence[int], anchor: Optional[int] = None) -> Tuple[int, ...]:
    """Canonical certificate of the graph given by bitmask ``rows``.

    Certificates are equal exactly for isomorphic graphs; with ``anchor``
    set, equal exactly for isomorphic vertex-rooted graphs.
    """
    return _search(n, rows, anchor)[0]


def automorphism_generators(n: int, rows: Sequence[int]) -> List[Tuple[int, ...]]:
    """Automorphisms discovered during the canonical search.

    Every returned permutation is a genuine automorphism; the list is not
    guaranteed to generate the full group, so it may only be used where
    under-merged orbits merely cost work, never correctness.
    """
    return _search(n, rows, None)[2]


def isomorphism_map(g1: Graph, g2: Graph) -> Optional[List[int]]:
    """An explicit isomorphism ``phi`` with ``phi[v1] = v2``, or None.

    Composes the two canonical labelings, so the returned map is one
    witness, deterministic for fixed inputs.
    """
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    cert1, order1, _ = _search(g1.n, g1.bits, None)
    cert2, order2, _ = _search(g2.n, g2.bits, None)
    if cert1 != cert2:
        return None
    phi = [0] * g1.n
    for a, b in zip(order1, order2):
        phi[a] = b
    return phi


def anchored_profile(n: int, rows: Sequence[int], u: int):
    """Cheap invariant of the vertex-rooted graph, with a certificate bonus.

    Returns ``(invariant, certificate_or_None)``: the invariant is the
    (size, degree) profile of the refinement seeded at ``u``, and when the
    refinement is already discrete the full anchored certificate falls out
    for the price of one relabeling and is returned too.
    """
    full = (1 << n) - 1
    ub = 1 << u
    parts = _refine(n, rows, [ub, full ^ ub] if full ^ ub else [ub], None)
    inv = []
    discrete = True
    for c in parts:
        sz = c.bit_count()
        if sz > 1:
            discrete = False
        inv.append((sz, rows[(c & -c).bit_length() - 1].bit_count()))
    if discrete:
        order = [c.bit_length() - 1 for c in parts]
        return tuple(inv), _relabeled_rows(n, rows, order)
    return tuple(inv), None


def _search(n: int, rows: Sequence[int], anchor: Optional[int]):
    if n == 0:
        return (), [], []
    full = (1 << n) - 1
    if anchor is None:
        parts0 = [full]
    else:
        abit = 1 << anchor
        parts0 = [abit, full ^ abit] if full ^ abit else [abit]

    best: Optional[Tuple[int, ...]] = None
    best_order: Optional[List[int]] = None
    generators: List[Tuple[int, ...]] = []
    leaf_seen = {}

    def in_known_orbit(v: int, done: List[int], prefix: Tuple[int, ...]) -> bool:
        gens = [s for s in generators if all(s[p] == p for p in prefix)]
        if not gens:
            return False
        orbit = set(done)
        frontier = list(done)
        while frontier:
            u = frontier.pop()
            for s in gens:
                w = s[u]
                if w not in orbit:
                    if w == v:
                        return True
                    orbit.add(w)
                    frontier.append(w)
        return False

    def recurse(parts: List[int], prefix: Tuple[int, ...]) -> None:
        nonlocal best, best_order
        idx = -1
        for i, cell in enumerate(parts):
            if cell & (cell - 1):
                idx = i
                break
        if idx == -1:
            order = [cell.bit_length() - 1 for cell in parts]
            cand = _relabeled_rows(n, rows, order)
            if best is None or cand < best:
                best = cand
                best_order = order
            prev = leaf_seen.get(cand)
            if prev is None:
                if len(leaf_seen) < 256:
                    leaf_seen[cand] = order
            elif prev != order:
                sigma = [0] * n
                for a, b in zip(prev, order):
                    sigma[a] = b
                generators.append(tuple(sigma))
            return
        cell = parts[idx]
        head, tail = parts[:idx], parts[idx + 1 :]
        done: List[int] = []
        c = cell
        while c:
            low = c & -c
            c ^= low
            v = low.bit_length() - 1
            if done and in_known_orbit(v, done, prefix):
                continue
            done.append(v)
            rest = cell ^ low
            split = head + [low, rest] + tail
            recurse(_refine(n, rows, split, [low]), prefix + (v,))

    recurse(_refine(n, rows, parts0, None), ())
    assert best is not None
    return best, best_order, generators


def canonical_form(g: Graph) -> bytes:
    """Canonical certificate packed as bytes; equal iff isomorphic."""
    cert = certificate(g.n, g.bits)
    width = (g.n + 7) // 8 or 1
    return bytes([g.n]) + b"".join(r.to_bytes(width, "little") for r in cert)


def canonical_relabel(g: Graph) -> Graph:
    """The canonically labeled copy of ``g``."""
    return Graph.from_bits(g.n, certificate(g.n, g.bits))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Certificate-based isomorphism test (intended for n <= 16)."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return certificate(g1.n, g1.bits) == certificate(g2.n, g2.bits)
