"""Exhaustive small-order enumeration: one representative per isomorphism class.

Connected graphs (and connected claw-free graphs) are generated by vertex
augmentation: every connected graph on n vertices arises from a connected
graph on n-1 vertices by attaching a new vertex to a nonempty neighborhood,
and both connectivity and claw-freeness survive deleting a non-cutvertex.
A canonical-deletion rule makes the generation isomorphism-exact without a
global seen-set: a candidate is kept only when the new vertex is the
designated deletion point of the child, decided over non-cutvertices by the
invariant chain (degree, sorted neighbor degrees, rooted BFS profile,
rooted refinement profile, anchored certificate).  Duplicates can then only
come from automorphic neighborhoods of the same parent, handled by orbit
merging and a small per-parent bucket of anchored certificates.

Trees come from the classic level-sequence successor algorithm over
centroid-rooted layouts, linear work per tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .canon import anchored_profile, certificate
from .graph import Graph, GraphInputError
from .graphio import iter_graph6_file

ALL_CONNECTED_MAX = 8
CLAW_FREE_MAX = 12
TREES_MAX = 16


class GraphClass(Enum):
    ALL_CONNECTED = "all"
    CONNECTED_CLAW_FREE = "clawfree"
    TREES = "trees"


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate: order, class, and builtin generation or a corpus."""

    n: int
    klass: GraphClass = GraphClass.ALL_CONNECTED
    source: Optional[str] = None  # path of a graph6 file instead of builtin


# -- neighborhood masks of the new vertex ---------------------------------------


_BIG = 1 << 20


def _candidate_masks(
    rows: Sequence[int],
    pdeg: Sequence[int],
    noncut: int,
    nonadj_pairs,
) -> List[int]:
    """Nonempty new-vertex neighborhoods that can possibly be accepted.

    Degree pruning: a parent non-cutvertex u outside the mask keeps degree
    deg(u) in the child and stays non-cut, and one inside a mask of size >= 2
    keeps degree deg(u)+1 and stays non-cut; either bounds the mask size,
    because the new vertex (degree = mask size) must minimize degree over
    non-cutvertices to be the canonical deletion point.

    Claw pruning (when ``nonadj_pairs`` is given): the new vertex centers a
    claw exactly when the mask holds an independent triple (monotone), and a
    mask vertex w centers one exactly when some non-adjacent pair inside
    N(w) misses the mask; those pairs are carried as open obligations and a
    branch dies once an obligation can no longer be hit.
    """
    n = len(rows)
    # minimum non-cut parent degree over the suffix [v, n)
    suffix = [_BIG] * (n + 1)
    for v in range(n - 1, -1, -1):
        d = pdeg[v] if noncut >> v & 1 else _BIG
        suffix[v] = d if d < suffix[v + 1] else suffix[v + 1]
    out: List[int] = []
    # node: next vertex, mask, size, min degree over swallowed non-cuts,
    #       min degree over skipped non-cuts, open pairs
    stack = [(0, 0, 0, _BIG, _BIG, ())]
    clawfree = nonadj_pairs is not None
    while stack:
        start, mask, msize, min_in, min_out, pairs = stack.pop()
        if mask and not pairs and msize <= (
            min_out if min_out < suffix[start] else suffix[start]
        ):
            out.append(mask)
        cur_out = min_out
        s = msize + 1
        for v in range(start, n):
            if s > cur_out:
                break  # every further candidate skips the same cheap vertex
            vnoncut = noncut >> v & 1
            nmin_in = min_in
            if vnoncut and pdeg[v] < nmin_in:
                nmin_in = pdeg[v]
            if s >= 2 and s > nmin_in + 1:
                pass  # swallowed non-cutvertex would beat the new vertex
            else:
                row = rows[v]
                dead = False
                if clawfree:
                    # mask stays triple-free iff v's non-neighbors in it
                    # form a clique
                    nn = mask & ~row
                    while nn:
                        low = nn & -nn
                        nn ^= low
                        if nn & ~rows[low.bit_length() - 1]:
                            dead = True
                            break
                if not dead:
                    vb = 1 << v
                    nm = mask | vb
                    limit = vb << 1  # pairs entirely below v+1 die unhit
                    live = []
                    for pm in pairs:
                        if pm & nm:
                            continue
                        if pm < limit:
                            dead = True
                            break
                        live.append(pm)
                    if not dead and clawfree:
                        for pm in nonadj_pairs[v]:
                            if pm & nm:
                                continue
                            if pm < limit:
                                dead = True
                                break
                            live.append(pm)
                    if not dead:
                        stack.append((v + 1, nm, s, nmin_in, cur_out, tuple(live)))
            if vnoncut and pdeg[v] < cur_out:
                cur_out = pdeg[v]
    return out


def _nonadj_pairs(rows: Sequence[int]) -> List[List[int]]:
    """Per vertex: two-bit masks of the non-adjacent pairs in its neighborhood."""
    out = []
    for w in range(len(rows)):
        nb = []
        r = rows[w]
        while r:
            low = r & -r
            nb.append(low.bit_length() - 1)
            r ^= low
        lst = []
        for i in range(len(nb) - 1):
            a = nb[i]
            for j in range(i + 1, len(nb)):
                b = nb[j]
                if not rows[a] >> b & 1:
                    lst.append((1 << a) | (1 << b))
        out.append(lst)
    return out


# -- canonical-deletion acceptance ----------------------------------------------


def _neighbor_degrees(rows: Sequence[int], degs: Sequence[int], u: int) -> List[int]:
    out = []
    r = rows[u]
    while r:
        low = r & -r
        out.append(degs[low.bit_length() - 1])
        r ^= low
    out.sort()
    return out


def _bfs_signature(rows: Sequence[int], degs: Sequence[int], src: int) -> Tuple:
    """Rooted BFS invariant: per level, the sorted multiset of
    (degree, neighbors on this level, neighbors one level back)."""
    seen = 1 << src
    frontier = seen
    prev = 0
    sig = []
    while frontier:
        level = []
        reach = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            b = low.bit_length() - 1
            r = rows[b]
            level.append((degs[b], (r & frontier).bit_count(), (r & prev).bit_count()))
            reach |= r
        level.sort()
        sig.append(tuple(level))
        prev = frontier
        frontier = reach & ~seen
        seen |= frontier
    return tuple(sig)


def _components_without(rows: Sequence[int], n: int, u: int) -> List[int]:
    """Component masks of the graph minus vertex ``u``."""
    full = ((1 << n) - 1) & ~(1 << u)
    comps = []
    todo = full
    while todo:
        seen = todo & -todo
        frontier = seen
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                reach |= rows[low.bit_length() - 1]
            frontier = reach & todo & ~seen
            seen |= frontier
        comps.append(seen)
        todo &= ~seen
    return comps


def _deletion_check(parent, pdeg, comps, mask, msize):
    """Is the new vertex the canonical deletion point of parent+mask?

    The new vertex (index n) is never a cutvertex; an old vertex u stays
    non-cut exactly when every component of parent-u is hit by mask-u (the
    new vertex then re-links them), or parent-u is empty and u is off-mask
    alone.  Candidates are compared on the invariant chain (degree, sorted
    neighbor degrees, rooted BFS profile, rooted refinement profile,
    anchored certificate); full certificates arbitrate only final ties.

    Returns ``(accepted, profile_or_None, certificate_or_None)`` so the
    caller can reuse whatever the decision had to compute as dedup keys.
    """
    n = len(parent)

    def noncut(u: int) -> bool:
        mrem = mask & ~(1 << u)
        if not mrem:
            return not comps[u]
        for c in comps[u]:
            if not c & mrem:
                return False
        return True

    ties = []
    for u in range(n):
        du = pdeg[u] + (mask >> u & 1)
        if du < msize and noncut(u):
            return False, None, None  # a smaller-degree non-cutvertex wins
        if du == msize and noncut(u):
            ties.append(u)
    if not ties:
        return True, None, None

    vbit = 1 << n
    child = [parent[u] | vbit if mask >> u & 1 else parent[u] for u in range(n)]
    child.append(mask)
    degs = [pdeg[u] + (mask >> u & 1) for u in range(n)]
    degs.append(msize)
    key_new = _neighbor_degrees(child, degs, n)
    final = []
    for u in ties:
        key_u = _neighbor_degrees(child, degs, u)
        if key_u < key_new:
            return False, None, None
        if key_u == key_new:
            final.append(u)
    if not final:
        return True, None, None
    sig_new = _bfs_signature(child, degs, n)
    last = []
    for u in final:
        sig_u = _bfs_signature(child, degs, u)
        if sig_u < sig_new:
            return False, None, None
        if sig_u == sig_new:
            last.append(u)
    if not last:
        return True, None, None
    inv_new, cert_new = anchored_profile(n + 1, child, n)
    remaining = []
    for u in last:
        inv_u, cert_u = anchored_profile(n + 1, child, u)
        if inv_u < inv_new:
            return False, None, None
        if inv_u == inv_new:
            if cert_new is not None:
                # equal profiles imply equal discreteness, so cert_u is set
                if cert_u < cert_new:
                    return False, None, None
            else:
                remaining.append(u)
    if cert_new is None and remaining:
        cert_new = certificate(n + 1, child, anchor=n)
        for u in remaining:
            if certificate(n + 1, child, anchor=u) < cert_new:
                return False, None, None
    return True, inv_new, cert_new


def _refine_is_discrete(n: int, rows) -> bool:
    """Discrete refinement proves the graph rigid (no duplicates possible)."""
    from .canon import _refine

    parts = _refine(n, rows, [(1 << n) - 1], None)
    return all(not cell & (cell - 1) for cell in parts)


def _orbit_representative_masks(n: int, parent, masks: List[int]) -> List[int]:
    """Keep one mask per discovered automorphism orbit of the parent.

    Generators may be incomplete, so this only shrinks the duplicate load;
    the bucket net downstream stays responsible for exactness.
    """
    from .canon import automorphism_generators

    gens = automorphism_generators(n, parent)
    if not gens:
        return masks
    tables = [[1 << s[u] for u in range(n)] for s in gens]
    seen = set()
    kept = []
    for mask in masks:
        if mask in seen:
            continue
        kept.append(mask)
        orbit = {mask}
        frontier = [mask]
        while frontier:
            m = frontier.pop()
            for table in tables:
                im = 0
                mm = m
                while mm:
                    low = mm & -mm
                    mm ^= low
                    im |= table[low.bit_length() - 1]
                if im not in orbit:
                    orbit.add(im)
                    frontier.append(im)
        seen |= orbit
    return kept


def accepted_children(parent: Tuple[int, ...], clawfree: bool) -> List[Tuple[int, ...]]:
    """Children of one parent, pairwise non-isomorphic across the whole level.

    The canonical-deletion rule leaves only duplicates caused by automorphic
    neighborhoods of this same parent.  Mask orbits under discovered parent
    automorphisms are merged up front when the mask list is large; accepted
    children are then bucketed by a cheap rooted invariant, and anchored
    certificates arbitrate only inside a bucket collision.
    """
    n = len(parent)
    vbit = 1 << n
    pdeg = [r.bit_count() for r in parent]
    if any(pdeg[u] > pdeg[u + 1] for u in range(n - 1)):
        # degree-ascending labels let the walk's size caps bite immediately
        order = sorted(range(n), key=pdeg.__getitem__)
        pos = [0] * n
        for i, u in enumerate(order):
            pos[i] = u
        inv = [0] * n
        for i, u in enumerate(order):
            inv[u] = i
        relabeled = []
        for i in range(n):
            row = parent[pos[i]]
            acc = 0
            while row:
                low = row & -row
                row ^= low
                acc |= 1 << inv[low.bit_length() - 1]
            relabeled.append(acc)
        parent = tuple(relabeled)
        pdeg = [r.bit_count() for r in parent]
    comps = [_components_without(parent, n, u) for u in range(n)]
    noncut = 0
    for u in range(n):
        if len(comps[u]) <= 1:
            noncut |= 1 << u
    nonadj = _nonadj_pairs(parent) if clawfree else None
    masks = _candidate_masks(parent, pdeg, noncut, nonadj)
    if len(masks) >= 16 and not _refine_is_discrete(n, parent):
        masks = _orbit_representative_masks(n, parent, masks)
    buckets = {}
    out = []
    for mask in masks:
        accepted, prof, cert = _deletion_check(
            parent, pdeg, comps, mask, mask.bit_count()
        )
        if not accepted:
            continue
        child = [parent[u] | vbit if mask >> u & 1 else parent[u] for u in range(n)]
        child.append(mask)
        degs = [pdeg[u] + (mask >> u & 1) for u in range(n)]
        degs.append(mask.bit_count())
        sig = _bfs_signature(child, degs, n)
        bucket = buckets.get(sig)
        if bucket is None:
            buckets[sig] = [[child, prof, cert]]
            out.append(tuple(child))
            continue
        if prof is None:
            prof, cert = anchored_profile(n + 1, child, n)
        duplicate = False
        for item in bucket:
            if item[1] is None:
                item[1], item[2] = anchored_profile(n + 1, item[0], n)
            if item[1] != prof:
                continue
            if cert is None:
                cert = certificate(n + 1, child, anchor=n)
            if item[2] is None:
                item[2] = certificate(n + 1, item[0], anchor=n)
            if item[2] == cert:
                duplicate = True
                break
        if not duplicate:
            bucket.append([child, prof, cert])
            out.append(tuple(child))
    return out


_LEVEL_CACHE: Dict[Tuple[int, bool], List[Tuple[int, ...]]] = {}
_LEVEL_CACHE_MAX = {False: ALL_CONNECTED_MAX, True: 11}


def level_rows(n: int, clawfree: bool) -> List[Tuple[int, ...]]:
    """All classes at order n as canonical bitmask rows (cached)."""
    limit = CLAW_FREE_MAX if clawfree else ALL_CONNECTED_MAX
    if not 1 <= n <= limit:
        raise GraphInputError(f"builtin enumeration supports 1 <= n <= {limit}")
    key = (n, clawfree)
    cached = _LEVEL_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 1:
        rows = [(0,)]
    else:
        rows = []
        for parent in level_rows(n - 1, clawfree):
            rows.extend(accepted_children(parent, clawfree))
    if n <= _LEVEL_CACHE_MAX[clawfree]:
        _LEVEL_CACHE[key] = rows
    return rows


def iter_level(n: int, clawfree: bool) -> Iterator[Tuple[int, ...]]:
    """Stream classes at order n without materializing the top level."""
    limit = CLAW_FREE_MAX if clawfree else ALL_CONNECTED_MAX
    if not 1 <= n <= limit:
        raise GraphInputError(f"builtin enumeration supports 1 <= n <= {limit}")
    if n <= _LEVEL_CACHE_MAX[clawfree]:
        yield from level_rows(n, clawfree)
        return
    for parent in level_rows(n - 1, clawfree):
        yield from accepted_children(parent, clawfree)


def iter_level_parallel(n: int, clawfree: bool, jobs: int) -> Iterator[Tuple[int, ...]]:
    """Like :func:`iter_level` with the last augmentation step fanned out
    over a worker pool; the stream order then depends on scheduling, so
    callers needing determinism must canonicalize downstream."""
    limit = CLAW_FREE_MAX if clawfree else ALL_CONNECTED_MAX
    if not 1 <= n <= limit:
        raise GraphInputError(f"builtin enumeration supports 1 <= n <= {limit}")
    if jobs <= 1 or n == 1:
        yield from iter_level(n, clawfree)
        return
    from functools import partial
    from multiprocessing import get_context

    parents = level_rows(n - 1, clawfree)
    worker = partial(accepted_children, clawfree=clawfree)
    with get_context("fork").Pool(jobs) as pool:
        for batch in pool.imap_unordered(worker, parents, chunksize=64):
            yield from batch


def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs of order n up to isomorphism (n <= 8 builtin)."""
    for rows in iter_level(n, clawfree=False):
        yield Graph.from_bits(n, rows)


def connected_clawfree_graphs(n: int) -> Iterator[Graph]:
    """All connected claw-free graphs of order n up to isomorphism (n <= 12)."""
    for rows in iter_level(n, clawfree=True):
        yield Graph.from_bits(n, rows)


# -- free trees ------------------------------------------------------------------
# Level-sequence successor generation of centroid-rooted layouts; each valid
# layout is one free tree, so no dedup pass is needed.


def _layout_successor(layout: List[int], p: Optional[int] = None) -> Optional[List[int]]:
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    out = list(layout)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_layout(layout: List[int]):
    """Left subtree of the root, and the layout with that subtree removed."""
    m = None
    seen_one = False
    for i, lvl in enumerate(layout):
        if lvl == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    if m is None:
        m = len(layout)
    left = [layout[i] - 1 for i in range(1, m)]
    rest = [0] + layout[m:]
    return left, rest


def _free_tree_step(candidate: List[int]) -> Optional[List[int]]:
    """Return ``candidate`` when it encodes a free tree, else jump past it."""
    left, rest = _split_layout(candidate)
    left_h, rest_h = max(left), max(rest)
    valid = rest_h >= left_h
    if valid and rest_h == left_h:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return candidate
    p = len(left)
    succ = _layout_successor(candidate, p)
    if candidate[p] > 2:
        new_left, _ = _split_layout(succ)
        suffix = list(range(1, max(new_left) + 2))
        succ[-len(suffix):] = suffix
    return succ


def _layout_edges(layout: Sequence[int]) -> List[Tuple[int, int]]:
    edges = []
    stack: List[int] = []
    for i, lvl in enumerate(layout):
        while stack and layout[stack[-1]] >= lvl:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return edges


def free_trees(n: int) -> Iterator[Graph]:
    """All trees of order n up to isomorphism (n <= 16 builtin)."""
    if not 1 <= n <= TREES_MAX:
        raise GraphInputError(f"builtin tree enumeration supports 1 <= n <= {TREES_MAX}")
    if n == 1:
        yield Graph(1)
        return
    layout: Optional[List[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _free_tree_step(layout)
        if layout is None:
            break
        yield Graph(n, _layout_edges(layout))
        layout = _layout_successor(layout)


# -- the public stream ------------------------------------------------------------


def enumerate_graphs(spec: EnumSpec) -> Iterator[Graph]:
    """Stream of pairwise non-isomorphic graphs matching the spec.

    Builtin generation respects the class caps (all-connected n <= 8, claw
    free n <= 12, trees n <= 16); a graph6 corpus may be supplied instead and
    is filtered to the requested class and deduplicated.
    """
    if spec.source is not None:
        yield from _from_corpus(spec)
        return
    if spec.klass is GraphClass.ALL_CONNECTED:
        yield from connected_graphs(spec.n)
    elif spec.klass is GraphClass.CONNECTED_CLAW_FREE:
        yield from connected_clawfree_graphs(spec.n)
    elif spec.klass is GraphClass.TREES:
        yield from free_trees(spec.n)
    else:  # pragma: no cover
        raise GraphInputError(f"unknown class {spec.klass}")


def _from_corpus(spec: EnumSpec) -> Iterator[Graph]:
    from .graph import is_claw_free, is_connected, is_tree

    seen = set()
    for g in iter_graph6_file(spec.source):
        if g.n != spec.n or not is_connected(g):
            continue
        if spec.klass is GraphClass.CONNECTED_CLAW_FREE and not is_claw_free(g):
            continue
        if spec.klass is GraphClass.TREES and not is_tree(g):
            continue
        cert = certificate(g.n, g.bits)
        if cert in seen:
            continue
        seen.add(cert)
        yield g
