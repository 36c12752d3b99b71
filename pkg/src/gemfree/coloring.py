"""Constructive certified colorings for {P3 u P2, gem}-free graphs.

`color_two_omega` follows the case analysis of the 2w upper-bound proof step
by step, recording every choice point in a trace, and re-verifies the result
before returning (certify-always). `color_three_omega` is the simpler 3w-2
construction via two cograph pieces. Both refuse non-members with a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exact import max_clique
from .graphs import Coloring, Graph, GraphError, bits, induced_subgraph, mask_of
from .partition import WBCPartition, build_partition
from .patterns import PatternWitness, find_induced, is_class_member, is_p4_free


class ClassViolationError(ValueError):
    """Input is outside {P3 u P2, gem}-free; carries the forbidden embedding."""

    def __init__(self, witness: PatternWitness):
        super().__init__(f"input contains an induced {witness.pattern_name}: {witness.embedding}")
        self.witness = witness


class CertificationError(RuntimeError):
    """The constructed coloring failed re-verification (bug or proof-gap candidate)."""

    def __init__(self, message: str, conflict: tuple[int, int] | None = None,
                 trace: "ColoringTrace | None" = None):
        super().__init__(message)
        self.conflict = conflict
        self.trace = trace


@dataclass
class ColoringTrace:
    """Record of which proof case fired and every choice the construction made."""

    A: tuple[int, ...] = ()
    case: str = ""  # omega<=2 | Case1 | Case2-simple | Case2.1 | Case2.2
    j: int | None = None
    l: int | None = None
    S: tuple[int, ...] = ()
    T: tuple[int, ...] = ()
    shared_positions: tuple[int, ...] = ()
    pool_assignments: list[dict[str, Any]] = field(default_factory=list)
    u_vertices: tuple[int, ...] = ()
    z_vertices: tuple[int, ...] = ()
    verified: bool = False

    def record_pool(self, label: str, vertices: list[int], colors: list[int]) -> None:
        self.pool_assignments.append(
            {"where": label, "vertices": list(vertices), "colors": list(colors)}
        )

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "A": list(self.A),
            "case": self.case,
            "j": self.j,
            "l": self.l,
            "S": list(self.S),
            "T": list(self.T),
            "shared_positions": list(self.shared_positions),
            "pool_assignments": self.pool_assignments,
            "u_vertices": list(self.u_vertices),
            "z_vertices": list(self.z_vertices),
            "verified": self.verified,
        }


def verify_proper(g: Graph, coloring: Coloring) -> tuple[bool, tuple[int, int] | None]:
    """Properness check; returns the lexicographically first conflicting edge."""
    if len(coloring.colors) != g.n:
        raise GraphError("coloring is not total on V(G)")
    for v in range(g.n):
        for u in bits(g.adj[v] >> (v + 1) << (v + 1)):
            if coloring.colors[v] == coloring.colors[u]:
                return False, (v, u)
    return True, None


def greedy_coloring(g: Graph, order: list[int]) -> Coloring:
    """First-fit along the given vertex order."""
    if sorted(order) != list(range(g.n)):
        raise GraphError("order is not a permutation of V(G)")
    colors = [0] * g.n
    for v in order:
        used = {colors[u] for u in bits(g.adj[v]) if colors[u]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def color_cograph(g: Graph) -> Coloring:
    """Optimal coloring of a P4-free graph via its cotree.

    Disconnected level: color components independently, reusing colors.
    Co-disconnected level (a join): children use disjoint color ranges.
    """
    w = find_induced(g, "p4")
    if w is not None:
        raise ClassViolationError(w)

    def rec(mask: int) -> dict[int, int]:
        verts = list(bits(mask))
        if len(verts) == 1:
            return {verts[0]: 1}
        comps = g.components(mask)
        if len(comps) > 1:
            out: dict[int, int] = {}
            for comp in comps:
                out.update(rec(comp))
            return out
        # connected: the complement restricted to mask must be disconnected
        co_comps = _co_components(g, mask)
        if len(co_comps) == 1:
            raise CertificationError("connected and co-connected piece in a cograph")
        out = {}
        offset = 0
        for comp in co_comps:
            sub = rec(comp)
            for v, c in sub.items():
                out[v] = c + offset
            offset += max(sub.values())
        return out

    if g.n == 0:
        return Coloring((), 0)
    assignment = rec(g.full_mask)
    return Coloring(tuple(assignment[v] for v in range(g.n)))


def _co_components(g: Graph, mask: int) -> list[int]:
    """Components of the complement restricted to `mask`."""
    remaining = mask
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= mask & ~g.adj[v] & ~(1 << v)
            grow &= remaining & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        remaining &= ~comp
    return comps


def _clique_components(g: Graph, cell: int, where: str,
                       trace: ColoringTrace | None) -> list[int]:
    """Components of a cell, certified to be cliques (P3-freeness consequence)."""
    comps = g.components(cell)
    for comp in comps:
        if not g.is_clique(comp):
            raise CertificationError(f"component of {where} is not a clique", trace=trace)
    return comps


def _assign_pool(colors: list[int], comp: int, pool: list[int], where: str,
                 trace: ColoringTrace) -> list[int]:
    """Injective pool assignment: ascending vertices take ascending pool colors."""
    verts = list(bits(comp))
    if len(verts) > len(pool):
        raise CertificationError(f"color pool exhausted at {where}", trace=trace)
    used = pool[: len(verts)]
    for v, c in zip(verts, used):
        colors[v] = c
    trace.record_pool(where, verts, used)
    return used


def color_two_omega(g: Graph) -> tuple[Coloring, ColoringTrace]:
    """Proper coloring of a class member with at most 2*omega(G) colors."""
    if g.n < 1:
        raise GraphError("coloring requires at least one vertex")
    member, witness = is_class_member(g)
    if not member:
        assert witness is not None
        raise ClassViolationError(witness)

    mc = max_clique(g)
    a = tuple(sorted(bits(mc.witness)))
    omega = mc.omega
    p = build_partition(g, a)
    trace = ColoringTrace(A=a)
    colors = [0] * g.n

    # base colors: position k covers v_k and I_k
    for k in range(1, omega + 1):
        colors[a[k - 1]] = k
        for v in bits(p.I[k - 1]):
            colors[v] = k

    c12 = p.C.get((1, 2), 0)

    if omega <= 2:
        trace.case = "omega<=2"
        stray = 0
        for pair, cell in p.C.items():
            if pair != (1, 2):
                stray |= cell
        if stray:
            raise CertificationError("cells outside C_{1,2} despite omega <= 2", trace=trace)
        pool = list(range(omega + 1, 2 * omega + 1))
        for comp in _clique_components(g, c12, "C_{1,2}", trace):
            _assign_pool(colors, comp, pool, "C_{1,2}", trace)
    else:
        case1 = any(cell and pair[0] >= 3 for pair, cell in p.C.items())
        if case1:
            trace.case = "Case1"
            for pair in sorted(p.C):
                if pair == (1, 2):
                    continue
                cell = p.C[pair]
                if not cell:
                    continue
                cp = p.Cprime[pair]
                pool = sorted(p.D[pair])
                for comp in _clique_components(g, cp, f"C'_{pair}", trace):
                    _assign_pool(colors, comp, pool, f"C'_{pair} from D{pair}", trace)
                for v in bits(cell & ~cp):
                    colors[v] = pair[0]
                if cell & ~cp:
                    trace.record_pool(
                        f"C_{pair} leftovers", sorted(bits(cell & ~cp)),
                        [pair[0]] * (cell & ~cp).bit_count(),
                    )
        else:
            _color_case2(g, p, colors, trace)
        _color_c12(g, p, colors, trace)

    coloring = Coloring(tuple(colors))
    if any(c == 0 for c in colors):
        raise CertificationError("coloring not total", trace=trace)
    if coloring.num_colors > 2 * omega:
        raise CertificationError("bound 2*omega exceeded", trace=trace)
    ok, conflict = verify_proper(g, coloring)
    if not ok:
        raise CertificationError("improper coloring produced", conflict=conflict, trace=trace)
    trace.verified = True
    return coloring, trace


def _unique_live_row_cell(p: WBCPartition, row: int, trace: ColoringTrace) -> int | None:
    """The unique column j >= 3 with C'_{row,j} nonempty, or None."""
    live = [j for j in range(3, p.omega + 1)
            if j > row and p.Cprime.get((row, j), 0)]
    if len(live) > 1:
        raise CertificationError(
            f"multiple live C' cells in row {row}: {live} (contradicts uniqueness)",
            trace=trace,
        )
    return live[0] if live else None


def _color_case2(g: Graph, p: WBCPartition, colors: list[int], trace: ColoringTrace) -> None:
    omega = p.omega
    a = p.A
    j = _unique_live_row_cell(p, 1, trace)
    ell = _unique_live_row_cell(p, 2, trace)
    trace.j, trace.l = j, ell
    cp1 = p.Cprime.get((1, j), 0) if j else 0
    cp2 = p.Cprime.get((2, ell), 0) if ell else 0
    d1 = p.D[(1, j)] if j else frozenset()
    d2 = p.D[(2, ell)] if ell else frozenset()
    shared = d1 & d2 if (j and ell) else frozenset()
    trace.shared_positions = tuple(sorted(shared))

    u_vertices: list[int] = []

    if not cp1 or not cp2 or not shared:
        trace.case = "Case2-simple"
        if cp1:
            pool = sorted(d1)
            for comp in _clique_components(g, cp1, f"C'_(1,{j})", trace):
                _assign_pool(colors, comp, pool, f"C'_(1,{j}) from D(1,{j})", trace)
        if cp2:
            pool = sorted(d2)
            for comp in _clique_components(g, cp2, f"C'_(2,{ell})", trace):
                _assign_pool(colors, comp, pool, f"C'_(2,{ell}) from D(2,{ell})", trace)
    elif len(shared) >= 2:
        trace.case = "Case2.1"
        comps1 = _clique_components(g, cp1, f"C'_(1,{j})", trace)
        comps2 = _clique_components(g, cp2, f"C'_(2,{ell})", trace)
        s_comp = max(comps1, key=lambda m: (m.bit_count(), -(m & -m)))
        t_comp = max(comps2, key=lambda m: (m.bit_count(), -(m & -m)))
        trace.S = tuple(bits(s_comp))
        trace.T = tuple(bits(t_comp))
        na_s = p.na_positions(s_comp)
        na_t = p.na_positions(t_comp)
        if na_s & na_t:
            raise CertificationError(
                "N_A(S) and N_A(T) intersect in Case 2.1", trace=trace
            )
        pool_s = sorted(na_t) + sorted(shared)
        used_s = _assign_pool(colors, s_comp, pool_s, "S from N_A(T)+shared", trace)
        pool_t = sorted(na_s) + sorted(shared - set(used_s))
        used_t = _assign_pool(colors, t_comp, pool_t, "T from N_A(S)+shared", trace)
        for comp in comps1:
            if comp != s_comp:
                _assign_pool(colors, comp, sorted(used_s), "C'_(1,j) reuse of S colors", trace)
        for comp in comps2:
            if comp != t_comp:
                _assign_pool(colors, comp, sorted(used_t), "C'_(2,l) reuse of T colors", trace)
    else:
        trace.case = "Case2.2"
        pool2 = sorted(d2)
        for comp in _clique_components(g, cp2, f"C'_(2,{ell})", trace):
            _assign_pool(colors, comp, pool2, f"C'_(2,{ell}) from D(2,{ell})", trace)
        pool1 = sorted(d1 - shared) + [omega + 1]
        for comp in _clique_components(g, cp1, f"C'_(1,{j})", trace):
            used = _assign_pool(colors, comp, pool1, f"C'_(1,{j}) from D minus shared + w+1", trace)
            if omega + 1 in used:
                u_vertices.append(list(bits(comp))[used.index(omega + 1)])
    trace.u_vertices = tuple(u_vertices)

    # leftovers of rows 1 and 2 take the row color
    left1 = 0
    left2 = 0
    for q in range(3, omega + 1):
        left1 |= p.C.get((1, q), 0)
        left2 |= p.C.get((2, q), 0)
    left1 &= ~cp1
    left2 &= ~cp2
    for v in bits(left1):
        colors[v] = 1
    for v in bits(left2):
        colors[v] = 2
    if left1:
        trace.record_pool("row-1 leftovers", sorted(bits(left1)), [1] * left1.bit_count())
    if left2:
        trace.record_pool("row-2 leftovers", sorted(bits(left2)), [2] * left2.bit_count())


def _color_c12(g: Graph, p: WBCPartition, colors: list[int], trace: ColoringTrace) -> None:
    omega = p.omega
    c12 = p.C.get((1, 2), 0)
    if not c12:
        return
    comps = _clique_components(g, c12, "C_{1,2}", trace)
    wc = max(comp.bit_count() for comp in comps)
    upper_pool = list(range(omega + 2, 2 * omega + 1))
    if wc <= omega - 1:
        for comp in comps:
            _assign_pool(colors, comp, upper_pool, "C_{1,2} (small)", trace)
    elif (omega + 1) not in colors:
        pool = list(range(omega + 1, 2 * omega + 1))
        for comp in comps:
            _assign_pool(colors, comp, pool, "C_{1,2} (w+1 free)", trace)
    else:
        u_set = mask_of(trace.u_vertices)
        z_list = []
        for comp in comps:
            if comp.bit_count() == omega:
                z = next((v for v in bits(comp) if not g.adj[v] & u_set), None)
                if z is None:
                    raise CertificationError(
                        "no vertex of a full C_{1,2} component avoids all u_i",
                        trace=trace,
                    )
                z_list.append(z)
                colors[z] = omega + 1
                _assign_pool(colors, comp & ~(1 << z), upper_pool,
                             "C_{1,2} full component minus z", trace)
                trace.record_pool("z gets w+1", [z], [omega + 1])
            else:
                _assign_pool(colors, comp, upper_pool, "C_{1,2} (small)", trace)
        trace.z_vertices = tuple(z_list)


def color_three_omega(g: Graph) -> Coloring:
    """Proper coloring of a class member with at most 3*omega - 2 colors.

    Splits V(G) minus C_{1,2} into two P4-free pieces, colors each optimally
    via the cotree, then gives C_{1,2} fresh colors.
    """
    if g.n < 1:
        raise GraphError("coloring requires at least one vertex")
    member, witness = is_class_member(g)
    if not member:
        assert witness is not None
        raise ClassViolationError(witness)
    mc = max_clique(g)
    a = tuple(sorted(bits(mc.witness)))
    omega = mc.omega
    p = build_partition(g, a)

    piece1 = 0  # (v_k u I_k for k >= 2) plus all cells with i >= 2
    for k in range(2, omega + 1):
        piece1 |= (1 << a[k - 1]) | p.I[k - 1]
    for (i, j), cell in p.C.items():
        if i >= 2:
            piece1 |= cell
    piece2 = (1 << a[0]) | p.I[0]  # v_1 u I_1 plus cells C_{1,j}, j >= 3
    for j in range(3, omega + 1):
        piece2 |= p.C.get((1, j), 0)
    c12 = p.C.get((1, 2), 0)

    colors = [0] * g.n
    offset = 0
    for label, piece in (("piece1", piece1), ("piece2", piece2)):
        if not piece:
            continue
        sub, verts = induced_subgraph(g, piece)
        if not is_p4_free(sub):
            raise CertificationError(f"{label} is not P4-free (contradicts the construction)")
        sub_col = color_cograph(sub)
        for i, v in enumerate(verts):
            colors[v] = sub_col.colors[i] + offset
        offset += sub_col.num_colors
    for comp in g.components(c12):
        if not g.is_clique(comp):
            raise CertificationError("C_{1,2} component is not a clique")
        for i, v in enumerate(bits(comp)):
            colors[v] = offset + 1 + i

    coloring = Coloring(tuple(colors)).normalize()
    if coloring.num_colors > max(3 * omega - 2, 1):
        raise CertificationError("bound 3*omega-2 exceeded")
    ok, conflict = verify_proper(g, coloring)
    if not ok:
        raise CertificationError("improper coloring produced", conflict=conflict)
    return coloring
