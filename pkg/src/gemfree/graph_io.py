"""Graph file formats: DIMACS .col, plain edge list, JSON, DOT (write-only)."""

from __future__ import annotations

import json
from pathlib import Path

from .graphs import Graph, GraphError, build_graph

FORMATS = ("dimacs", "edgelist", "json")


def parse_dimacs(text: str, name: str = "") -> Graph:
    """DIMACS .col: `p edge n m` header, `e u v` lines with 1-based endpoints."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise GraphError(f"bad DIMACS header on line {lineno}: {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphError("DIMACS edge line before header")
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"DIMACS endpoint out of range on line {lineno}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"unrecognized DIMACS line {lineno}: {line!r}")
    if n is None:
        raise GraphError("missing DIMACS header")
    return build_graph(n, edges, name)


def to_dimacs(g: Graph) -> str:
    lines = [f"c {g.name}" if g.name else "c", f"p edge {g.n} {g.num_edges}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str, name: str = "") -> Graph:
    """First line `n m`, then m lines `u v`, 0-based."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError("edge-list header must be 'n m'")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        u, v = map(int, ln.split())
        edges.append((u, v))
    return build_graph(n, edges, name)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_json_graph(text: str, name: str = "") -> Graph:
    data = json.loads(text)
    try:
        return build_graph(
            int(data["n"]),
            [tuple(e) for e in data["edges"]],
            data.get("name", name),
        )
    except (KeyError, TypeError) as exc:
        raise GraphError(f"bad JSON graph object: {exc}") from exc


def to_json_graph(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges()], "name": g.name})


def to_dot(g: Graph) -> str:
    lines = [f'graph "{g.name or "G"}" {{']
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        return to_dimacs(g)
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "json":
        return to_json_graph(g)
    if fmt == "dot":
        return to_dot(g)
    raise GraphError(f"unknown format {fmt!r}")


def parse(text: str, fmt: str, name: str = "") -> Graph:
    if fmt == "dimacs":
        return parse_dimacs(text, name)
    if fmt == "edgelist":
        return parse_edgelist(text, name)
    if fmt == "json":
        return parse_json_graph(text, name)
    raise GraphError(f"unknown format {fmt!r}")


def format_for_path(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix == ".col":
        return "dimacs"
    if suffix == ".json":
        return "json"
    if suffix == ".dot":
        return "dot"
    return "edgelist"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    text = Path(path).read_text()
    fmt = fmt or format_for_path(path)
    return parse(text, fmt, name=Path(path).stem)
