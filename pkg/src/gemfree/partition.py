"""Clique-relative vertex partition and its structural invariant checkers.

Given an ordered maximum clique A = (v_1..v_w), every outside vertex lands in
I_k (misses exactly v_k) or in C_{i,j} for the lex-least pair (i,j) of missed
clique positions. C'_{i,j} drops the vertices isolated inside their cell;
D_{i,j} collects the clique positions with no neighbor in C'_{i,j}.

The checkers turn the structural statements that hold for (P3 u P2)-free /
gem-free / class-member graphs into executable predicates with machine-readable
reports; on class members every clause must pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exact import clique_number, max_clique
from .graphs import Graph, bits, bracket_complete, bracket_empty, induced_subgraph, mask_of
from .patterns import find_induced, is_p3_free, is_p4_free

LexPair = tuple[int, int]  # 1-based clique positions, i < j


class PartitionError(ValueError):
    """A is not an ordered maximum clique of G."""


def lex_pairs(omega: int) -> list[LexPair]:
    return [(i, j) for i in range(1, omega + 1) for j in range(i + 1, omega + 1)]


@dataclass(frozen=True)
class WBCPartition:
    graph: Graph
    A: tuple[int, ...]  # v_1..v_omega by position
    I: tuple[int, ...]  # I_1..I_omega as masks (index k-1)
    C: dict[LexPair, int]  # cell masks, all pairs in L
    Cprime: dict[LexPair, int]
    D: dict[LexPair, frozenset[int]]  # clique positions 1..omega

    @property
    def omega(self) -> int:
        return len(self.A)

    def position_vertex(self, k: int) -> int:
        return self.A[k - 1]

    def na_positions(self, mask: int) -> frozenset[int]:
        """Clique positions whose vertex has a neighbor in `mask`."""
        return frozenset(
            k for k in range(1, self.omega + 1) if self.graph.adj[self.A[k - 1]] & mask
        )

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "A": list(self.A),
            "I": {str(k + 1): sorted(bits(self.I[k])) for k in range(self.omega)},
            "C": {f"{i},{j}": sorted(bits(m)) for (i, j), m in self.C.items()},
            "Cprime": {f"{i},{j}": sorted(bits(m)) for (i, j), m in self.Cprime.items()},
            "D": {f"{i},{j}": sorted(d) for (i, j), d in self.D.items()},
        }


def build_partition(g: Graph, a: list[int] | tuple[int, ...]) -> WBCPartition:
    """The unique partition determined by G and the ordered maximum clique A."""
    a = tuple(a)
    amask = mask_of(a)
    if len(set(a)) != len(a) or not g.is_clique(amask):
        raise PartitionError("A is not a clique")
    if len(a) != clique_number(g):
        raise PartitionError("A is not a maximum clique")
    omega = len(a)
    i_sets = [0] * omega
    c_sets = {pair: 0 for pair in lex_pairs(omega)}
    for v in range(g.n):
        if amask >> v & 1:
            continue
        missed = [k for k in range(1, omega + 1) if not g.has_edge(v, a[k - 1])]
        if len(missed) == 1:
            i_sets[missed[0] - 1] |= 1 << v
        else:
            c_sets[(missed[0], missed[1])] |= 1 << v
    cprime = {}
    d_sets = {}
    for pair, cell in c_sets.items():
        iso = 0
        for v in bits(cell):
            if not g.adj[v] & cell:
                iso |= 1 << v
        cp = cell & ~iso
        cprime[pair] = cp
        d_sets[pair] = frozenset(
            k for k in range(1, omega + 1) if not g.adj[a[k - 1]] & cp
        )
    return WBCPartition(g, a, tuple(i_sets), c_sets, cprime, d_sets)


def partition_for(g: Graph) -> WBCPartition:
    """Partition relative to the canonical (lex-least, ascending) maximum clique."""
    return build_partition(g, sorted(bits(max_clique(g).witness)))


@dataclass(frozen=True)
class CheckEntry:
    clause: str
    bindings: dict[str, Any]
    ok: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class CheckReport:
    name: str
    applicable: bool
    entries: tuple[CheckEntry, ...] = ()
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.applicable and all(e.ok for e in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.ok]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "passed": self.passed,
            "reason": self.reason,
            "failures": [
                {"clause": e.clause, "bindings": e.bindings, "witness": e.witness}
                for e in self.failures()
            ],
            "num_entries": len(self.entries),
        }


def check_fact1(g: Graph, p: WBCPartition) -> CheckReport:
    """Cell structure forced by (P3 u P2)-freeness.

    (i) each <C_{i,j}> is P3-free (disjoint union of cliques);
    (ii) a in C_{i,j} is adjacent to v_1..v_j except v_i, v_j.
    """
    entries = []
    for (i, j), cell in p.C.items():
        sub, verts = induced_subgraph(g, cell)
        w = find_induced(sub, "p3")
        entries.append(
            CheckEntry(
                "fact1.i",
                {"i": i, "j": j},
                w is None,
                tuple(verts[v] for v in w.embedding) if w else None,
            )
        )
        for a in bits(cell):
            required = [k for k in range(1, j + 1) if k not in (i, j)]
            bad = [k for k in required if not g.has_edge(a, p.A[k - 1])]
            entries.append(
                CheckEntry(
                    "fact1.ii",
                    {"i": i, "j": j, "a": a},
                    not bad,
                    tuple(bad) if bad else None,
                )
            )
    return CheckReport("fact1", True, tuple(entries))


def check_lemma_gem(g: Graph, p: WBCPartition) -> CheckReport:
    """Cell structure forced by gem-freeness, for cells with j >= 3.

    (i) <C_{i,j}> is P4-free; (ii) a component touching v_l is complete to v_l;
    (iii) a missing v_l has no neighbor in I_l; (iv) component clique number is
    at most the number of clique vertices with no neighbor in the component.
    """
    entries = []
    omega = p.omega
    for (i, j), cell in p.C.items():
        if j < 3:
            continue
        sub, verts = induced_subgraph(g, cell)
        w = find_induced(sub, "p4")
        entries.append(
            CheckEntry(
                "lemma_gem.i",
                {"i": i, "j": j},
                w is None,
                tuple(verts[v] for v in w.embedding) if w else None,
            )
        )
        comps = g.components(cell)
        for comp in comps:
            for ell in range(1, omega + 1):
                vl = p.A[ell - 1]
                if g.adj[vl] & comp:
                    ok = bracket_complete(g, comp, 1 << vl)
                    entries.append(
                        CheckEntry(
                            "lemma_gem.ii",
                            {"i": i, "j": j, "component_min": (comp & -comp).bit_length() - 1, "l": ell},
                            ok,
                            None if ok else tuple(v for v in bits(comp) if not g.has_edge(v, vl)),
                        )
                    )
            sub_c, _ = induced_subgraph(g, comp)
            wc = clique_number(sub_c)
            bound = sum(1 for k in range(1, omega + 1) if not g.adj[p.A[k - 1]] & comp)
            entries.append(
                CheckEntry(
                    "lemma_gem.iv",
                    {"i": i, "j": j, "component_min": (comp & -comp).bit_length() - 1,
                     "omega_H": wc, "bound": bound},
                    wc <= bound,
                )
            )
        for a in bits(cell):
            for ell in range(1, omega + 1):
                if g.has_edge(a, p.A[ell - 1]):
                    continue
                ok = bracket_empty(g, 1 << a, p.I[ell - 1])
                entries.append(
                    CheckEntry(
                        "lemma_gem.iii",
                        {"i": i, "j": j, "a": a, "l": ell},
                        ok,
                        None if ok else tuple(bits(g.adj[a] & p.I[ell - 1])),
                    )
                )
    return CheckReport("lemma_gem", True, tuple(entries))


def check_lemma_class(g: Graph, p: WBCPartition) -> CheckReport:
    """Structure of class members with omega >= 3, for cells with j >= 3.

    (i) a neighbor v_l of any a in C_{i,j} is complete to C'_{i,j} (and a
    non-neighbor of C'_{i,j} sees none of C_{i,j}); (ii) omega(<C'_{i,j}>) <=
    |D_{i,j}|; (iii) no edges between sibling cells; (iv) a live C'_{i,j}
    empties later cells in its rows, earlier C' cells, and (for j >= 4) the
    whole column.
    """
    if p.omega < 3:
        return CheckReport("lemma_class", False, reason="requires omega >= 3")
    entries = []
    omega = p.omega
    for (i, j), cell in p.C.items():
        if j < 3:
            continue
        cp = p.Cprime[(i, j)]
        # (i) both directions
        for ell in range(1, omega + 1):
            vl = p.A[ell - 1]
            if g.adj[vl] & cell:
                ok = bracket_complete(g, cp, 1 << vl)
                entries.append(
                    CheckEntry(
                        "lemma_class.i",
                        {"i": i, "j": j, "l": ell},
                        ok,
                        None if ok else tuple(v for v in bits(cp) if not g.has_edge(v, vl)),
                    )
                )
            if any(not g.has_edge(b, vl) for b in bits(cp)):
                ok = bracket_empty(g, cell, 1 << vl)
                entries.append(
                    CheckEntry(
                        "lemma_class.i-consequence",
                        {"i": i, "j": j, "l": ell},
                        ok,
                        None if ok else tuple(bits(g.adj[vl] & cell)),
                    )
                )
        # (ii)
        sub, _ = induced_subgraph(g, cp)
        entries.append(
            CheckEntry(
                "lemma_class.ii",
                {"i": i, "j": j, "omega_Cprime": clique_number(sub), "D_size": len(p.D[(i, j)])},
                clique_number(sub) <= len(p.D[(i, j)]),
            )
        )
        # (iii): [C_{i,j}, C_{i,l}] = [C_{i,j}, C_{j,l}] = empty for l > j >= 3
        for ell in range(j + 1, omega + 1):
            for other in ((i, ell), (j, ell)):
                ocell = p.C.get(other, 0)
                ok = bracket_empty(g, cell, ocell)
                entries.append(
                    CheckEntry(
                        "lemma_class.iii",
                        {"cell": (i, j), "other": other},
                        ok,
                        None if ok else _first_cross_edge(g, cell, ocell),
                    )
                )
        if j >= 4:
            for k in range(1, j):
                if k == i:
                    continue
                ocell = p.C.get((k, j), 0)
                ok = bracket_empty(g, cell, ocell)
                entries.append(
                    CheckEntry(
                        "lemma_class.iii-column",
                        {"cell": (i, j), "other": (k, j)},
                        ok,
                        None if ok else _first_cross_edge(g, cell, ocell),
                    )
                )
        # (iv)
        if cp:
            for ell in range(j + 1, omega + 1):
                for other in ((i, ell), (j, ell)):
                    entries.append(
                        CheckEntry(
                            "lemma_class.iv",
                            {"cell": (i, j), "must_be_empty": other},
                            p.C.get(other, 0) == 0,
                            tuple(bits(p.C.get(other, 0))) or None,
                        )
                    )
            for ell in range(3, j):
                if ell > i:
                    entries.append(
                        CheckEntry(
                            "lemma_class.iv",
                            {"cell": (i, j), "must_be_Cprime_empty": (i, ell)},
                            p.Cprime.get((i, ell), 0) == 0,
                            tuple(bits(p.Cprime.get((i, ell), 0))) or None,
                        )
                    )
            if j >= 4:
                for k in range(1, j):
                    if k == i:
                        continue
                    entries.append(
                        CheckEntry(
                            "lemma_class.iv-column",
                            {"cell": (i, j), "must_be_empty": (k, j)},
                            p.C.get((k, j), 0) == 0,
                            tuple(bits(p.C.get((k, j), 0))) or None,
                        )
                    )
    return CheckReport("lemma_class", True, tuple(entries))


def check_claim1(g: Graph, p: WBCPartition) -> CheckReport:
    """For j,l,r >= 3 with C_{r,s} nonempty: C'_{1,j} u C'_{2,l} is complete
    to {v_r, v_s} u C_{r,s}."""
    if p.omega < 3:
        return CheckReport("claim1", False, reason="requires omega >= 3")
    entries = []
    omega = p.omega
    left = 0
    for j in range(3, omega + 1):
        left |= p.Cprime.get((1, j), 0) | p.Cprime.get((2, j), 0)
    for (r, s), cell in p.C.items():
        if r < 3 or not cell:
            continue
        target = cell | (1 << p.A[r - 1]) | (1 << p.A[s - 1])
        ok = bracket_complete(g, left & ~target, target & ~left)
        entries.append(
            CheckEntry(
                "claim1",
                {"r": r, "s": s},
                ok,
                None if ok else _first_missing_cross(g, left & ~target, target & ~left),
            )
        )
    return CheckReport("claim1", True, tuple(entries))


def _first_cross_edge(g: Graph, s: int, t: int) -> tuple[int, int] | None:
    for v in bits(s):
        hit = g.adj[v] & t
        if hit:
            return (v, (hit & -hit).bit_length() - 1)
    return None


def _first_missing_cross(g: Graph, s: int, t: int) -> tuple[int, int] | None:
    for v in bits(s):
        missing = t & ~g.adj[v]
        if missing:
            return (v, (missing & -missing).bit_length() - 1)
    return None


def run_all_checks(g: Graph, p: WBCPartition) -> dict[str, CheckReport]:
    return {
        "fact1": check_fact1(g, p),
        "lemma_gem": check_lemma_gem(g, p),
        "lemma_class": check_lemma_class(g, p),
        "claim1": check_claim1(g, p),
    }
