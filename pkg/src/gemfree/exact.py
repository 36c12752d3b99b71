"""Exact combinatorial oracles: maximum clique, independence number, chromatic number.

All solvers are exact and deterministic in their returned values; they are
sized for the desk-scale instances this package cares about (n <= 64 for the
chromatic search, n <= a few hundred for cliques).
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graphs import Coloring, Graph, bits, complement, mask_of


class SizeGuardError(ValueError):
    """Instance exceeds the exactness guardrail."""


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    witness: int  # vertex bitmask, lexicographically least maximum clique


@dataclass(frozen=True)
class ChiResult:
    chi: int
    witness: Coloring


def _greedy_color_bound(g: Graph, cand: int) -> int:
    """Number of color classes a greedy partition of `cand` needs (clique upper bound)."""
    classes = 0
    remaining = cand
    while remaining:
        classes += 1
        avail = remaining
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~g.adj[v] & ~(1 << v)
            remaining &= ~(1 << v)
    return classes


def clique_number(g: Graph) -> int:
    """Exact clique number by branch and bound over bitmask candidate sets."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        while cand:
            if size + _greedy_color_bound(g, cand) <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            new = cand & g.adj[v]
            if size + 1 + new.bit_count() > best:
                if new:
                    expand(size + 1, new)
                elif size + 1 > best:
                    best = size + 1

    if g.n:
        expand(0, g.full_mask)
    return best


def _has_clique(g: Graph, cand: int, k: int) -> bool:
    """Does `cand` contain a clique of size k?"""
    if k <= 0:
        return True
    if cand.bit_count() < k:
        return False
    if _greedy_color_bound(g, cand) < k:
        return False
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= ~(1 << v)
        if _has_clique(g, cand & g.adj[v], k - 1):
            return True
    return False


def max_clique(g: Graph) -> CliqueResult:
    """Clique number plus the lexicographically least maximum clique."""
    omega = clique_number(g)
    witness = 0
    cand = g.full_mask
    need = omega
    while need:
        for v in bits(cand):
            if _has_clique(g, cand & g.adj[v], need - 1):
                witness |= 1 << v
                cand &= g.adj[v]
                need -= 1
                break
        else:  # pragma: no cover - would contradict clique_number
            raise AssertionError("clique reconstruction failed")
    return CliqueResult(omega, witness)


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def _k_colorable(g: Graph, k: int, clique: list[int]) -> list[int] | None:
    """DSATUR-ordered backtracking k-colorability decision.

    `clique` vertices are precolored 1..|clique| to break color symmetry.
    Returns a proper coloring (1-based list) or None.
    """
    if len(clique) > k:
        return None
    n = g.n
    colors = [0] * n
    # forbidden[v] = bitmask of colors (bit c-1) already on neighbors of v
    forbidden = [0] * n
    uncolored = g.full_mask
    max_used = 0
    for i, v in enumerate(clique):
        colors[v] = i + 1
        uncolored &= ~(1 << v)
        for u in bits(g.adj[v]):
            forbidden[u] |= 1 << i
        max_used = max(max_used, i + 1)

    def pick() -> int:
        best_v = -1
        best_key = (-1, -1)
        for v in bits(uncolored):
            key = (forbidden[v].bit_count(), (g.adj[v] & uncolored).bit_count())
            if key > best_key:
                best_key = key
                best_v = v
        return best_v

    def solve(max_used: int) -> bool:
        nonlocal uncolored
        if not uncolored:
            return True
        v = pick()
        limit = min(k, max_used + 1)
        avail = ~forbidden[v] & ((1 << limit) - 1)
        if not avail:
            return False
        uncolored &= ~(1 << v)
        for c in bits(avail):
            colors[v] = c + 1
            touched = []
            ok = True
            for u in bits(g.adj[v] & uncolored):
                if not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    touched.append(u)
                    if forbidden[u].bit_count() >= k:
                        # u would have no color left only if all k are forbidden
                        if forbidden[u] == (1 << k) - 1:
                            ok = False
            if ok and solve(max(max_used, c + 1)):
                return True
            for u in touched:
                forbidden[u] &= ~(1 << c)
        colors[v] = 0
        uncolored |= 1 << v
        return False

    if solve(max_used):
        return colors
    return None


def chromatic_number(g: Graph, max_n: int = 64) -> ChiResult:
    """Exact chromatic number with an optimal coloring witness.

    Iterative deepening on k from the clique lower bound, DSATUR backtracking
    with max-clique symmetry breaking. Refuses instances larger than `max_n`.
    """
    if g.n > max_n:
        raise SizeGuardError(f"n={g.n} exceeds exact-chi guardrail {max_n}")
    if g.n == 0:
        return ChiResult(0, Coloring((), 0))
    clique = sorted(bits(max_clique(g).witness))
    k = len(clique)
    while True:
        colors = _k_colorable(g, k, clique)
        if colors is not None:
            return ChiResult(k, Coloring(tuple(colors)).normalize())
        k += 1


def chi_alpha2_shortcut(g: Graph) -> int:
    """Chromatic number when alpha(G) <= 2.

    Color classes have size <= 2, so an optimal coloring is n minus a maximum
    matching of the complement (matched pairs share a color).
    """
    if independence_number(g) > 2:
        raise ValueError("shortcut requires independence number <= 2")
    co = complement(g)
    h = nx.Graph()
    h.add_nodes_from(range(co.n))
    h.add_edges_from(co.edges())
    matching = nx.max_weight_matching(h, maxcardinality=True)
    return g.n - len(matching)


def alpha2_optimal_coloring(g: Graph) -> Coloring:
    """Optimal coloring witness for the alpha <= 2 shortcut."""
    if independence_number(g) > 2:
        raise ValueError("shortcut requires independence number <= 2")
    co = complement(g)
    h = nx.Graph()
    h.add_nodes_from(range(co.n))
    h.add_edges_from(co.edges())
    matching = nx.max_weight_matching(h, maxcardinality=True)
    colors = [0] * g.n
    c = 0
    for u, v in sorted(tuple(sorted(e)) for e in matching):
        c += 1
        colors[u] = colors[v] = c
    for v in range(g.n):
        if colors[v] == 0:
            c += 1
            colors[v] = c
    return Coloring(tuple(colors), c)
