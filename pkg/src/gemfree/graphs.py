"""Immutable simple graphs over dense 0-based vertices with bitmask adjacency.

Vertex sets are plain Python ints used as bit vectors (bit v set means vertex
v is in the set), which keeps set algebra to single machine operations for the
sizes this package targets (n <= 512).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 512


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, out-of-range set bit)."""


def mask_of(vertices: Iterable[int]) -> int:
    """Bit-vector of a vertex collection."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; `adj[v]` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside supported range 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = self.full_mask
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency row {v} has bits >= n")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                out.append((v, u))
        return out

    def vertices(self) -> range:
        return range(self.n)

    def neighbors_of_set(self, mask: int) -> int:
        """Union of neighborhoods of the set, minus nothing (open N(S) may hit S)."""
        m = 0
        for v in bits(mask):
            m |= self.adj[v]
        return m

    def components(self, within: int | None = None) -> list[int]:
        """Connected-component masks, restricted to `within` if given.

        Returned in ascending order of least vertex.
        """
        remaining = self.full_mask if within is None else within
        comps = []
        while remaining:
            start = remaining & -remaining
            comp = start
            frontier = start
            while frontier:
                grow = 0
                for v in bits(frontier):
                    grow |= self.adj[v]
                grow &= remaining & ~comp
                comp |= grow
                frontier = grow
            comps.append(comp)
            remaining &= ~comp
        return comps

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (self.adj[v] & mask) != mask & ~(1 << v):
                return False
        return True

    def relabel(self, perm: list[int]) -> "Graph":
        """Image graph under vertex map v -> perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj), self.name)


def build_graph(n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
    """Graph from an edge list; duplicates collapse, endpoints validated."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), name)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, adj, f"co-{g.name}" if g.name else "")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    adj = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def join(g1: Graph, g2: Graph) -> Graph:
    left_full = (1 << g1.n) - 1
    right_full = ((1 << g2.n) - 1) << g1.n
    adj = [row | right_full for row in g1.adj]
    adj += [(row << g1.n) | left_full for row in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    """Induced subgraph plus the new-index -> old-vertex map."""
    if mask & ~g.full_mask:
        raise GraphError("vertex set has bits outside the graph")
    verts = list(bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in bits(g.adj[v] & mask):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(verts), tuple(adj), g.name), verts


def bracket_complete(g: Graph, s: int, t: int) -> bool:
    """True iff every vertex of S is adjacent to every vertex of T."""
    if s & t:
        raise GraphError("bracket sets must be disjoint")
    return all((g.adj[v] & t) == t for v in bits(s))


def bracket_empty(g: Graph, s: int, t: int) -> bool:
    """True iff there is no edge between S and T."""
    if s & t:
        raise GraphError("bracket sets must be disjoint")
    return all(not (g.adj[v] & t) for v in bits(s))


@dataclass(frozen=True)
class Coloring:
    """Total vertex coloring; colors are positive ints, num_colors = max used."""

    colors: tuple[int, ...]
    num_colors: int = field(default=-1)

    def __post_init__(self) -> None:
        if any(c < 1 for c in self.colors):
            raise GraphError("colors must be positive integers")
        maxc = max(self.colors, default=0)
        if self.num_colors == -1:
            object.__setattr__(self, "num_colors", maxc)
        elif self.num_colors < maxc:
            raise GraphError("num_colors below maximum color used")

    @property
    def distinct_colors(self) -> int:
        return len(set(self.colors))

    def color_class(self, c: int) -> int:
        return mask_of(v for v, cv in enumerate(self.colors) if cv == c)

    def normalize(self) -> "Coloring":
        """Renumber colors 1..k in order of first occurrence."""
        seen: dict[int, int] = {}
        out = []
        for c in self.colors:
            if c not in seen:
                seen[c] = len(seen) + 1
            out.append(seen[c])
        return Coloring(tuple(out), len(seen))
