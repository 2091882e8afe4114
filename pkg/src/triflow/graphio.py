"""Reading and writing graphs: edge-list text, JSON, graph6, and DOT export."""

from __future__ import annotations

import json
from typing import Any

from .errors import LoopEdgeError, ParseError
from .multigraph import Multigraph, Orientation


def parse_edgelist(text: str) -> Multigraph:
    """Parse the plain format: first line ``n m``, then ``m`` lines ``u v``.

    Vertex indices are 0-based; repeated ``u v`` lines are parallel edges.
    Loops and malformed lines raise :class:`ParseError` with the line number.
    """
    lines = text.splitlines()
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise ParseError("empty input")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("expected header 'n m'", line=lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header values must be integers", line=lineno) from None
    if n < 0 or m < 0:
        raise ParseError("header values must be nonnegative", line=lineno)
    if len(rows) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(rows) - 1}", line=lineno)
    edges = []
    for eid, (lineno, row) in enumerate(rows[1:]):
        parts = row.split()
        if len(parts) != 2:
            raise ParseError("expected 'u v'", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("endpoints must be integers", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range 0..{n - 1}", line=lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u} is not allowed", line=lineno)
        edges.append((eid, u, v))
    return Multigraph(range(n), edges)


def to_edgelist(graph: Multigraph) -> str:
    """Serialize to the edge-list format (vertices renumbered 0..n-1)."""
    order = graph.vertex_list()
    pos = {v: i for i, v in enumerate(order)}
    lines = [f"{graph.n} {graph.m}"]
    for _, u, v in graph.edge_list():
        lines.append(f"{pos[u]} {pos[v]}")
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> Multigraph:
    """Parse the JSON schema: ``{"vertices": [...], "edges": [...]}``.

    Each edge is either a pair ``[u, v]`` or an object
    ``{"id": e, "u": u, "v": v}`` (ids default to position).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", line=exc.lineno) from None
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise ParseError("JSON graph needs 'vertices' and 'edges' arrays")
    vertices = doc["vertices"]
    if not all(isinstance(v, int) for v in vertices):
        raise ParseError("vertex ids must be integers")
    edges = []
    for i, item in enumerate(doc["edges"]):
        if isinstance(item, list) and len(item) == 2:
            eid, u, v = i, item[0], item[1]
        elif isinstance(item, dict) and {"u", "v"} <= set(item):
            eid, u, v = item.get("id", i), item["u"], item["v"]
        else:
            raise ParseError(f"edge #{i} must be [u, v] or {{id, u, v}}")
        if u == v:
            raise ParseError(f"edge #{i} is a loop at vertex {u}")
        edges.append((eid, u, v))
    try:
        return Multigraph(vertices, edges)
    except LoopEdgeError as exc:
        raise ParseError(str(exc)) from None


def to_json_dict(graph: Multigraph, orientation: Orientation | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "vertices": graph.vertex_list(),
        "edges": [{"id": eid, "u": u, "v": v} for eid, u, v in graph.edge_list()],
    }
    if orientation is not None:
        doc["orientation"] = {str(eid): list(arc) for eid, arc in sorted(orientation.arcs.items())}
    return doc


def to_json(graph: Multigraph, orientation: Orientation | None = None) -> str:
    return json.dumps(to_json_dict(graph, orientation), sort_keys=True, indent=2) + "\n"


# -- graph6 (simple graphs only) -------------------------------------------------


def parse_graph6(text: str) -> Multigraph:
    """Decode a single graph6 line (simple graphs, order up to 62)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 input")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError("invalid graph6 character")
    if data[0] == 63:
        raise ParseError("graph6 orders above 62 are not supported")
    n = data[0]
    bits_needed = n * (n - 1) // 2
    bits = []
    for b in data[1:]:
        for k in range(5, -1, -1):
            bits.append((b >> k) & 1)
    if len(bits) < bits_needed:
        raise ParseError("graph6 data too short for its order")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((len(edges), u, v))
            idx += 1
    return Multigraph(range(n), edges)


def to_graph6(graph: Multigraph) -> str:
    """Encode a simple graph (parallel edges rejected) as graph6."""
    if graph.has_parallel_edges():
        raise ParseError("graph6 cannot encode parallel edges")
    order = graph.vertex_list()
    if len(order) > 62:
        raise ParseError("graph6 orders above 62 are not supported")
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    adj = [[False] * n for _ in range(n)]
    for _, u, v in graph.edge_list():
        adj[pos[u]][pos[v]] = adj[pos[v]][pos[u]] = True
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if adj[u][v] else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        byte = 0
        for b in bits[i:i + 6]:
            byte = (byte << 1) | b
        out.append(chr(byte + 63))
    return "".join(out)


# -- DOT export -------------------------------------------------------------------


def to_dot(graph: Multigraph, orientation: Orientation | None = None,
           name: str = "g") -> str:
    """Render as DOT; with an orientation the edges come out directed."""
    lines = []
    if orientation is None:
        lines.append(f"graph {name} {{")
        arrow = "--"
        rows = [(u, v) for _, u, v in graph.edge_list()]
    else:
        orientation.validate_on(graph)
        lines.append(f"digraph {name} {{")
        arrow = "->"
        rows = [orientation.arcs[eid] for eid, _, _ in graph.edge_list()]
    for v in graph.vertex_list():
        lines.append(f"  {v};")
    for u, v in rows:
        lines.append(f"  {u} {arrow} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- format detection --------------------------------------------------------------


def parse_graph(text: str, fmt: str = "auto") -> Multigraph:
    """Parse edge-list, JSON, or graph6 input; ``fmt='auto'`` sniffs the format."""
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "json":
        return parse_json(text)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt != "auto":
        raise ParseError(f"unknown format {fmt!r}")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json(text)
    if stripped.startswith(">>graph6<<"):
        return parse_graph6(text)
    first = stripped.splitlines()[0].split() if stripped else []
    if len(first) == 2 and all(p.lstrip("-").isdigit() for p in first):
        return parse_edgelist(text)
    return parse_graph6(text)


def load_graph(path: str, fmt: str = "auto") -> Multigraph:
    if fmt == "auto" and "." in path:
        ext = path.rsplit(".", 1)[1].lower()
        fmt = {"json": "json", "g6": "graph6", "graph6": "graph6",
               "txt": "edgelist", "edges": "edgelist"}.get(ext, "auto")
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), fmt)
