"""Built-in small graphs with their expected properties.

Named entries are exact transcriptions of the depicted exceptional graphs;
each carries the claims the surrounding theorems make about it, which
``verify_claims`` re-derives with the toolkit's own deciders.  Parametric
families (complete graphs, cycles, wheels) are generated on demand.

Eighteen further special graphs of order at most eight are known to exist but
have no published adjacency data available here; they are registered as
placeholders that refuse to materialize.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .connectivity import edge_connectivity, independence_number, odd_edge_connectivity
from .errors import CatalogError
from .multigraph import Multigraph, underlying_simple
from .orientation import is_z3_connected, mod3_orientation
from .reduction import is_z3_reduced

__all__ = ["CatalogEntry", "ClaimReport", "get", "list_names", "verify_claims",
           "ore_condition", "VERIFY_ALL_NAMES"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Multigraph
    claims: tuple[tuple[str, object], ...]
    description: str
    layout: dict[int, tuple[float, float]] | None = None


@dataclass(frozen=True)
class ClaimResult:
    prop: str
    expected: object
    actual: object
    ok: bool


@dataclass(frozen=True)
class ClaimReport:
    name: str
    results: tuple[ClaimResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


def ore_condition(graph: Multigraph) -> bool:
    """Every nonadjacent vertex pair has degree sum at least the order."""
    simple = underlying_simple(graph)
    if simple.n < 3 or simple.m != graph.m:
        return False
    order = simple.vertex_list()
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            if simple.multiplicity(u, v) == 0 and \
                    simple.degree(u) + simple.degree(v) < simple.n:
                return False
    return True


def _entry(name: str, pairs: list[tuple[int, int]], claims: list[tuple[str, object]],
           description: str, layout: dict[int, tuple[float, float]] | None = None) -> CatalogEntry:
    graph = Multigraph.from_edge_pairs(1 + max(max(u, v) for u, v in pairs), pairs)
    return CatalogEntry(name, graph, tuple(claims), description, layout)


def _g3() -> CatalogEntry:
    pairs = [(0, 3), (0, 1), (0, 2), (1, 2), (3, 2), (1, 3),
             (0, 4), (0, 5), (4, 3), (3, 5), (4, 5)]
    layout = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0), 4: (0, -1.25), 5: (1, -1.25)}
    claims = [("has_mod3", False), ("z3_connected", False), ("z3_reduced", True),
              ("edge_connectivity", 3), ("independence_number", 2),
              ("num_vertices", 6), ("num_edges", 11),
              ("degree_sequence", [5, 5, 3, 3, 3, 3])]
    return _entry("G3", pairs, claims,
                  "two adjacent dominating degree-5 vertices over four degree-3 vertices",
                  layout)


def _g4() -> CatalogEntry:
    pairs = [(0, 1), (0, 2), (2, 3), (1, 3), (1, 2),
             (0, 4), (0, 5), (3, 4), (4, 5), (3, 5)]
    layout = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0), 4: (0, -1.25), 5: (1, -1.25)}
    claims = [("has_mod3", True), ("z3_connected", False), ("z3_reduced", True),
              ("num_vertices", 6), ("num_edges", 10)]
    return _entry("G4", pairs, claims,
                  "two degree-4 vertices sharing two triangles plus a bottom 4-cycle",
                  layout)


def _g5() -> CatalogEntry:
    pairs = [(0, 1), (0, 3), (4, 3), (4, 2), (2, 1),
             (5, 0), (5, 1), (5, 3), (5, 2), (5, 4)]
    layout = {0: (4, -0.25), 1: (4.5, 0.35), 2: (5, -0.25),
              3: (4, -1.25), 4: (5, -1.25), 5: (4.5, -0.65)}
    claims = [("has_mod3", False), ("z3_connected", False),
              ("num_vertices", 6), ("num_edges", 10),
              ("degree_sequence", [5, 3, 3, 3, 3, 3])]
    return _entry("G5", pairs, claims, "the 5-wheel", layout)


def _g10() -> CatalogEntry:
    pairs = [(0, 1), (0, 2), (2, 3), (3, 1), (3, 0), (2, 1),
             (0, 4), (4, 3), (4, 5), (6, 5), (4, 6), (3, 6), (3, 5)]
    layout = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0),
              4: (0, -1.25), 5: (1, -1.25), 6: (0.65, -0.75)}
    claims = [("z3_connected", False), ("z3_reduced", True),
              ("num_vertices", 7), ("num_edges", 13)]
    return _entry("G10", pairs, claims,
                  "two complete 4-vertex blocks sharing a vertex, plus one extra edge",
                  layout)


def _g11() -> CatalogEntry:
    pairs = [(0, 1), (0, 2), (2, 3), (3, 1), (3, 0), (2, 1),
             (4, 3), (4, 5), (6, 5), (4, 6), (3, 6), (3, 5)]
    layout = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0),
              4: (0, -1.25), 5: (1, -1.25), 6: (0.65, -0.75)}
    claims = [("z3_connected", False), ("z3_reduced", True),
              ("num_vertices", 7), ("num_edges", 12)]
    return _entry("G11", pairs, claims,
                  "two complete 4-vertex blocks sharing a single vertex", layout)


def _g18() -> CatalogEntry:
    pairs = [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7),
             (0, 4), (3, 7), (0, 5), (4, 1), (1, 5), (1, 6),
             (2, 6), (2, 5), (3, 6), (2, 7)]
    layout = {0: (10, 1), 1: (10, 0.25), 2: (10, -0.5), 3: (10, -1.25),
              4: (11, 1), 5: (11, 0.25), 6: (11, -0.5), 7: (11, -1.25)}
    claims = [("has_mod3", False), ("z3_connected", False),
              ("independence_number", 2), ("num_vertices", 8), ("num_edges", 16)]
    return _entry("G18", pairs, claims,
                  "order-8 graph with degree sequence (5,5,5,5,3,3,3,3)", layout)


def _fz(index: int) -> CatalogEntry:
    no_flow = [("has_mod3", False), ("z3_connected", False), ("ore_condition", True)]
    flow_only = [("has_mod3", True), ("z3_connected", False), ("ore_condition", True)]
    if index == 1:
        pairs = [(0, 3), (0, 1), (0, 2), (1, 2), (1, 5),
                 (1, 3), (4, 2), (0, 5), (4, 3), (4, 5)]
        layout = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0),
                  4: (0, -1.25), 5: (1, -1.25)}
        return _entry("FZ-1", pairs, no_flow + [("num_edges", 10)],
                      "order-6 graph with two degree-4 and four degree-3 vertices", layout)
    if index == 2:
        base = _g3()
        return CatalogEntry("FZ-2", base.graph, tuple(no_flow + [("num_edges", 11)]),
                            base.description, base.layout)
    if index == 3:
        base = _g5()
        return CatalogEntry("FZ-3", base.graph, tuple(no_flow + [("num_edges", 10)]),
                            base.description, base.layout)
    if index == 4:
        pairs = [(4, 1), (5, 2), (1, 2), (4, 5), (3, 1), (3, 2),
                 (0, 4), (0, 5), (0, 3)]
        layout = {0: (0.5, -0.5), 1: (0, 1), 2: (1, 1), 3: (0.5, 0.25),
                  4: (0, -1.25), 5: (1, -1.25)}
        return _entry("FZ-4", pairs, no_flow + [("num_edges", 9)],
                      "the triangular prism", layout)
    if index == 5:
        pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
        layout = {0: (0, 0), 1: (1, 0), 2: (0, -1.25), 3: (1, -1.25)}
        return _entry("FZ-5", pairs, no_flow + [("num_edges", 6)],
                      "the complete graph on four vertices", layout)
    if index == 6:
        pairs = [(0, 2), (1, 2), (2, 3), (0, 3), (3, 1), (4, 0), (4, 1)]
        layout = {0: (0, -0.25), 1: (1, -0.25), 2: (0, -1.25),
                  3: (1, -1.25), 4: (0.5, 0.5)}
        return _entry("FZ-6", pairs, no_flow + [("num_edges", 7)],
                      "a near-complete order-4 block with a degree-2 apex", layout)
    if index == 7:
        pairs = [(0, 3), (0, 2), (1, 2), (1, 5), (1, 3),
                 (4, 2), (0, 5), (4, 3), (4, 5)]
        layout = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0),
                  4: (0, -1.25), 5: (1, -1.25)}
        return _entry("FZ-7", pairs, flow_only + [("num_edges", 9)],
                      "the complete bipartite graph on 3+3 vertices", layout)
    if index == 8:
        base = _g4()
        return CatalogEntry("FZ-8", base.graph, tuple(flow_only + [("num_edges", 10)]),
                            base.description, base.layout)
    if index == 9:
        pairs = [(0, 3), (3, 4), (4, 2), (2, 1), (0, 1), (0, 4), (2, 3), (0, 2)]
        layout = {0: (0, -0.25), 1: (0.5, 0.35), 2: (1, -0.25),
                  3: (0, -1.25), 4: (1, -1.25)}
        return _entry("FZ-9", pairs,
                      flow_only + [("z3_reduced", True), ("num_edges", 8),
                                   ("degree_sequence", [4, 4, 3, 3, 2])],
                      "the complete graph on five vertices minus two incident edges",
                      layout)
    if index == 10:
        pairs = [(0, 1), (0, 3), (1, 3), (0, 2), (3, 2)]
        layout = {0: (0, 0), 1: (1, 0), 2: (0, -1.25), 3: (1, -1.25)}
        return _entry("FZ-10", pairs, flow_only + [("num_edges", 5)],
                      "the complete graph on four vertices minus one edge", layout)
    if index == 11:
        pairs = [(0, 1), (1, 3), (0, 2), (3, 2)]
        layout = {0: (0, 0), 1: (1, 0), 2: (0, -1.25), 3: (1, -1.25)}
        return _entry("FZ-11", pairs, flow_only + [("num_edges", 4)],
                      "the 4-cycle", layout)
    if index == 12:
        pairs = [(0, 1), (2, 1), (2, 0)]
        layout = {0: (0, -1.25), 1: (1, -1.25), 2: (0.5, 0)}
        return _entry("FZ-12", pairs, flow_only + [("num_edges", 3)],
                      "the triangle", layout)
    raise CatalogError(f"no such entry FZ-{index}")


def _complete(n: int) -> CatalogEntry:
    if n < 1:
        raise CatalogError("complete graphs need n >= 1")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    graph = Multigraph(range(n), ((i, u, v) for i, (u, v) in enumerate(pairs)))
    z3 = n == 1 or n >= 5
    mod3 = n not in (2, 4)
    return CatalogEntry(f"K_{n}", graph,
                        (("has_mod3", mod3), ("z3_connected", z3)),
                        f"complete graph on {n} vertices")


def _cycle(n: int) -> CatalogEntry:
    if n < 2:
        raise CatalogError("cycles need n >= 2 (the data model is loopless)")
    pairs = [(i, (i + 1) % n) for i in range(n)]
    graph = Multigraph(range(n), ((i, u, v) for i, (u, v) in enumerate(pairs)))
    return CatalogEntry(f"C_{n}", graph,
                        (("has_mod3", True), ("z3_connected", n == 2)),
                        f"cycle on {n} vertices" + (" (digon)" if n == 2 else ""))


def _wheel(n: int) -> CatalogEntry:
    if n < 2:
        raise CatalogError("wheels need rim length n >= 2")
    pairs = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    pairs += [(0, 1 + i) for i in range(n)]
    graph = Multigraph(range(n + 1), ((i, u, v) for i, (u, v) in enumerate(pairs)))
    even = n % 2 == 0
    return CatalogEntry(f"W_{n}", graph,
                        (("has_mod3", even), ("z3_connected", even),
                         ("num_vertices", n + 1), ("num_edges", 2 * n)),
                        f"wheel with rim length {n}")


_FIXED: dict[str, Callable[[], CatalogEntry]] = {
    "G3": _g3, "G4": _g4, "G5": _g5, "G10": _g10, "G11": _g11, "G18": _g18,
}
for _i in range(1, 13):
    _FIXED[f"FZ-{_i}"] = (lambda i=_i: _fz(i))

_PLACEHOLDERS = tuple(f"YLL-{i}" for i in range(1, 19))

_FAMILIES: dict[str, Callable[[int], CatalogEntry]] = {
    "K": _complete, "C": _cycle, "W": _wheel,
}

VERIFY_ALL_NAMES: tuple[tuple[str, int | None], ...] = tuple(
    [(name, None) for name in ("G3", "G4", "G5", "G10", "G11", "G18")]
    + [(f"FZ-{i}", None) for i in range(1, 13)]
    + [("K", n) for n in range(1, 7)]
    + [("C", n) for n in range(2, 7)]
    + [("W", n) for n in range(2, 9)]
)


def list_names() -> list[str]:
    names = sorted(_FIXED) + [f"{f}_<n>" for f in sorted(_FAMILIES)]
    return names + list(_PLACEHOLDERS)


def get(name: str, parameter: int | None = None) -> CatalogEntry:
    """Fresh copy of a catalog graph with its claim list."""
    if name in _FAMILIES:
        if parameter is None:
            raise CatalogError(f"family {name!r} needs a parameter")
        return _FAMILIES[name](parameter)
    if name.startswith(("K_", "C_", "W_")) and name[2:].isdigit():
        return _FAMILIES[name[0]](int(name[2:]))
    if name in _PLACEHOLDERS:
        raise CatalogError(
            f"{name} is one of eighteen special graphs whose adjacency is "
            "not depicted in this paper's source material")
    if name in _FIXED:
        if parameter is not None:
            raise CatalogError(f"{name} takes no parameter")
        return _FIXED[name]()
    raise CatalogError(f"unknown catalog name {name!r}")


def _decide(graph: Multigraph, prop: str) -> object:
    if prop == "has_mod3":
        return mod3_orientation(graph) is not None
    if prop == "z3_connected":
        return is_z3_connected(graph)
    if prop == "z3_reduced":
        return is_z3_reduced(graph)
    if prop == "edge_connectivity":
        return edge_connectivity(graph).cut_size
    if prop == "odd_edge_connectivity":
        report = odd_edge_connectivity(graph)
        return None if report is None else report.cut_size
    if prop == "independence_number":
        return independence_number(graph)[0]
    if prop == "ore_condition":
        return ore_condition(graph)
    if prop == "num_vertices":
        return graph.n
    if prop == "num_edges":
        return graph.m
    if prop == "degree_sequence":
        return graph.degree_sequence()
    raise CatalogError(f"claims cannot reference undecidable property {prop!r}")


def verify_claims(name: str, parameter: int | None = None) -> ClaimReport:
    """Re-derive every stored claim with the toolkit's deciders."""
    entry = get(name, parameter)
    results = []
    for prop, expected in entry.claims:
        actual = _decide(entry.graph, prop)
        results.append(ClaimResult(prop, expected, actual, actual == expected))
    return ClaimReport(entry.name, tuple(results))
