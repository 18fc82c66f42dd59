"""Immutable simple-graph core: neighborhoods, distances, structural predicates.

Vertices are dense integers ``0..n-1``.  Adjacency is exposed both as
frozensets (``g.adj``) and as per-vertex bitmasks (``g.bits``); the bitmask
view is what the solvers and enumerators loop over.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple

INFINITY = float("inf")

VertexSet = frozenset  # subsets of 0..n-1 are the currency of every predicate


class GraphInputError(ValueError):
    """Malformed construction input (out-of-range endpoint, loop edge, ...)."""


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Instances validate symmetry/no-loop invariants on construction and are
    safe to share across workers; every operation in this package treats
    them as pure values.
    """

    __slots__ = ("n", "adj", "bits")

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]] = ()):
        if n < 0:
            raise GraphInputError("vertex count must be >= 0")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphInputError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise GraphInputError(f"loop edge at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in nbrs)
        self.bits = tuple(_mask(s) for s in nbrs)

    @classmethod
    def from_bits(cls, n: int, bits: Iterable[int]) -> "Graph":
        """Trusted fast path used by the enumerators; skips validation."""
        g = object.__new__(cls)
        g.n = n
        g.bits = tuple(bits)
        g.adj = tuple(frozenset(_bits_to_set(b)) for b in g.bits)
        return g

    # -- basic accessors ---------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(len(s) for s in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def with_edge(self, u: int, v: int) -> "Graph":
        """New graph with one extra edge (used by the spanning-subgraph tests)."""
        if u == v:
            raise GraphInputError(f"loop edge at vertex {u}")
        return Graph(self.n, list(self.edges()) + [(u, v)])

    def relabel(self, perm) -> "Graph":
        """Apply a vertex relabeling; ``perm[old] = new``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits_to_set(mask: int):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def bits_to_vertices(mask: int) -> VertexSet:
    """Decode a bitmask into a vertex set."""
    return frozenset(_bits_to_set(mask))


def from_edge_list(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Validating constructor; duplicate edges collapse, loops are rejected."""
    return Graph(n, edges)


# -- distances -------------------------------------------------------------


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop counts; unreachable pairs hold ``INFINITY``."""

    dist: Tuple[Tuple[float, ...], ...]

    def __getitem__(self, v: int) -> Tuple[float, ...]:
        return self.dist[v]


def bfs_distances(g: Graph) -> DistanceTable:
    """Exact hop distances by BFS from every vertex."""
    rows = []
    for src in range(g.n):
        row = [INFINITY] * g.n
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u]
            for w in g.adj[u]:
                if row[w] is INFINITY:
                    row[w] = du + 1
                    queue.append(w)
        rows.append(tuple(row))
    return DistanceTable(tuple(rows))


def distance2_bits(g: Graph) -> Tuple[int, ...]:
    """Per-vertex bitmask of vertices at distance exactly 2."""
    out = []
    for v in range(g.n):
        reach = 0
        for w in g.adj[v]:
            reach |= g.bits[w]
        out.append(reach & ~g.bits[v] & ~(1 << v))
    return tuple(out)


# -- connectivity ----------------------------------------------------------


def connected_components(g: Graph):
    """Vertex sets of the components, each sorted by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    """One component; the empty graph and K_1 count as connected."""
    if g.n <= 1:
        return True
    return len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count == g.n - 1


def cutvertices(g: Graph) -> VertexSet:
    """Articulation vertices of ``g`` (iterative lowpoint DFS)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack = [(root, iter(g.adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, it = stack[-1]
            child = next(it, None)
            if child is None:
                stack.pop()
                p = parent[u]
                if p != -1:
                    low[p] = min(low[p], low[u])
                    if p != root and low[u] >= disc[p]:
                        cut[p] = True
                continue
            if disc[child] == -1:
                parent[child] = u
                if u == root:
                    root_children += 1
                disc[child] = low[child] = timer
                timer += 1
                stack.append((child, iter(g.adj[child])))
            elif child != parent[u]:
                low[u] = min(low[u], disc[child])
        if root_children >= 2:
            cut[root] = True
    return frozenset(v for v in range(n) if cut[v])


# -- structural predicates ---------------------------------------------------


def find_claw(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """A witness induced K_{1,3} as ``(center, a, b, c)``, or None.

    Scans each neighborhood for an independent triple; fine at the target
    sizes (a few hundred vertices at most).
    """
    for center in range(g.n):
        nb = sorted(g.adj[center])
        if len(nb) < 3:
            continue
        k = len(nb)
        for i in range(k - 2):
            a = nb[i]
            for j in range(i + 1, k - 1):
                b = nb[j]
                if b in g.adj[a]:
                    continue
                both = ~(g.bits[a] | g.bits[b])
                for t in range(j + 1, k):
                    c = nb[t]
                    if (both >> c) & 1:
                        return (center, a, b, c)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def leaves(g: Graph) -> VertexSet:
    """Vertices of degree 1."""
    return frozenset(v for v in range(g.n) if len(g.adj[v]) == 1)


def support_vertices(g: Graph) -> VertexSet:
    """Vertices adjacent to at least one leaf."""
    lv = leaves(g)
    return frozenset(next(iter(g.adj[u])) for u in lv)


# -- subgraphs ---------------------------------------------------------------


def induced_subgraph(g: Graph, s: Iterable[int]):
    """Subgraph induced on ``s`` with dense relabeling.

    Returns ``(subgraph, mapping)`` where ``mapping[old] = new``.
    """
    keep = sorted(set(s))
    if keep and not (0 <= keep[0] and keep[-1] < g.n):
        raise GraphInputError("induced set out of range")
    mapping = {old: new for new, old in enumerate(keep)}
    edges = [
        (mapping[u], mapping[v])
        for u, v in g.edges()
        if u in mapping and v in mapping
    ]
    return Graph(len(keep), edges), mapping


def remove_vertices(g: Graph, s: Iterable[int]):
    """Same shape as :func:`induced_subgraph`, induced on the complement."""
    drop = set(s)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))
