"""Loopless multigraph data model and its primitive structural operations.

Vertices are opaque integer ids.  Edges carry explicit integer ids so that
parallel edges are first-class and so that edge identities survive graph
surgery (contraction keeps the ids of surviving edges).  Graphs are treated
as immutable: every operation returns a new graph, and merged vertices get
fresh ids recorded in a :class:`ReductionTrace`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import DomainError, LoopEdgeError


class Multigraph:
    """A finite loopless multigraph with stable edge ids.

    Parameters
    ----------
    vertices:
        Iterable of integer vertex ids.
    edges:
        Iterable of ``(edge_id, u, v)`` triples.  ``u != v`` is required;
        repeated ``(u, v)`` pairs with distinct ids are parallel edges.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_incident")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int, int]] = ()):
        self._vertices: frozenset[int] = frozenset(vertices)
        self._edges: dict[int, tuple[int, int]] = {}
        for eid, u, v in edges:
            if u == v:
                raise LoopEdgeError(f"edge {eid} is a loop at vertex {u}")
            if eid in self._edges:
                raise DomainError(f"duplicate edge id {eid}")
            if u not in self._vertices or v not in self._vertices:
                raise DomainError(f"edge {eid} uses unknown endpoint")
            self._edges[eid] = (u, v)
        self._adj: dict[int, dict[int, list[int]]] | None = None
        self._incident: dict[int, list[int]] | None = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_edge_pairs(cls, n_or_vertices: int | Iterable[int],
                        pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        """Build a graph from unlabelled ``(u, v)`` pairs; ids are 0,1,2,..."""
        if isinstance(n_or_vertices, int):
            vertices: Iterable[int] = range(n_or_vertices)
        else:
            vertices = n_or_vertices
        return cls(vertices, ((i, u, v) for i, (u, v) in enumerate(pairs)))

    # -- basic accessors ------------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    def vertex_list(self) -> list[int]:
        """Vertices in ascending id order (the deterministic iteration order)."""
        return sorted(self._vertices)

    @property
    def edges(self) -> Mapping[int, tuple[int, int]]:
        return self._edges

    def edge_list(self) -> list[tuple[int, int, int]]:
        """Edges as ``(edge_id, u, v)`` sorted by edge id."""
        return [(eid, u, v) for eid, (u, v) in sorted(self._edges.items())]

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self._edges[eid]

    def _index(self) -> None:
        if self._adj is not None:
            return
        adj: dict[int, dict[int, list[int]]] = {v: {} for v in self._vertices}
        inc: dict[int, list[int]] = {v: [] for v in self._vertices}
        for eid, (u, v) in sorted(self._edges.items()):
            adj[u].setdefault(v, []).append(eid)
            adj[v].setdefault(u, []).append(eid)
            inc[u].append(eid)
            inc[v].append(eid)
        self._adj = adj
        self._incident = inc

    def degree(self, v: int) -> int:
        """Number of edge incidences at ``v`` (parallel edges all count)."""
        self._index()
        return len(self._incident[v])  # type: ignore[index]

    def degree_sequence(self) -> list[int]:
        return sorted((self.degree(v) for v in self._vertices), reverse=True)

    def neighbors(self, v: int) -> set[int]:
        self._index()
        return set(self._adj[v])  # type: ignore[index]

    def incident_edges(self, v: int) -> list[int]:
        """Edge ids at ``v`` in ascending order."""
        self._index()
        return list(self._incident[v])  # type: ignore[index]

    def multiplicity(self, u: int, v: int) -> int:
        self._index()
        return len(self._adj[u].get(v, ()))  # type: ignore[index]

    def edges_between(self, u: int, v: int) -> list[int]:
        self._index()
        return list(self._adj[u].get(v, ()))  # type: ignore[index]

    def has_parallel_edges(self) -> bool:
        self._index()
        return any(len(ids) > 1 for nbrs in self._adj.values() for ids in nbrs.values())  # type: ignore[union-attr]

    # -- derived graphs -------------------------------------------------------

    def induced(self, S: Iterable[int]) -> "Multigraph":
        """Induced subgraph on ``S``; surviving edges keep their ids."""
        s = frozenset(S)
        if not s <= self._vertices:
            raise DomainError("induced subgraph on vertices outside the graph")
        edges = [(eid, u, v) for eid, (u, v) in self._edges.items() if u in s and v in s]
        return Multigraph(s, edges)

    def without_vertices(self, S: Iterable[int]) -> "Multigraph":
        return self.induced(self._vertices - frozenset(S))

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        """New graph with extra edges (fresh ids) between existing vertices."""
        nid = self.fresh_edge_id()
        extra = []
        for u, v in pairs:
            extra.append((nid, u, v))
            nid += 1
        return Multigraph(self._vertices, list(self.edge_list()) + extra)

    def relabel(self, mapping: Mapping[int, int]) -> "Multigraph":
        """Rename vertices through an injective mapping (edge ids unchanged)."""
        img = [mapping[v] for v in self._vertices]
        if len(set(img)) != len(img):
            raise DomainError("relabel mapping is not injective")
        return Multigraph(img, ((eid, mapping[u], mapping[v])
                                for eid, (u, v) in self._edges.items()))

    def fresh_vertex_id(self) -> int:
        return max(self._vertices, default=-1) + 1

    def fresh_edge_id(self) -> int:
        return max(self._edges, default=-1) + 1

    # -- connectivity primitives ----------------------------------------------

    def components(self) -> list[frozenset[int]]:
        """Connected components, each as a vertex set, ordered by smallest member."""
        self._index()
        seen: set[int] = set()
        out = []
        for root in self.vertex_list():
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:  # type: ignore[index]
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- dunder ----------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge: ``arcs[edge_id] == (tail, head)``."""

    arcs: Mapping[int, tuple[int, int]]

    def imbalances(self) -> dict[int, int]:
        """Out-degree minus in-degree for every vertex touched by an arc."""
        out: dict[int, int] = {}
        for tail, head in self.arcs.values():
            out[tail] = out.get(tail, 0) + 1
            out[head] = out.get(head, 0) - 1
        return out

    def imbalance(self, v: int) -> int:
        return self.imbalances().get(v, 0)

    def reversed(self) -> "Orientation":
        return Orientation({e: (h, t) for e, (t, h) in self.arcs.items()})

    def validate_on(self, graph: Multigraph) -> None:
        """Check the orientation covers exactly the graph's edges."""
        if set(self.arcs) != set(graph.edges):
            raise DomainError("orientation does not cover the edge set")
        for eid, (tail, head) in self.arcs.items():
            if {tail, head} != set(graph.endpoints(eid)):
                raise DomainError(f"arc for edge {eid} does not match its endpoints")


@dataclass(frozen=True)
class ContractionEvent:
    """One merge step: ``merged`` collapsed into the fresh vertex ``new_id``."""

    merged: frozenset[int]
    new_id: int
    note: str = ""


@dataclass
class ReductionTrace:
    """Auditable record of a sequence of contractions.

    ``vertex_map`` sends every vertex of the original graph to its image in
    the final graph; untouched vertices map to themselves.
    """

    events: list[ContractionEvent] = field(default_factory=list)
    vertex_map: dict[int, int] = field(default_factory=dict)
    size_cap: int | None = None
    certified_complete: bool = True

    @classmethod
    def identity(cls, graph: Multigraph) -> "ReductionTrace":
        return cls(events=[], vertex_map={v: v for v in graph.vertices})

    def record(self, merged: Iterable[int], new_id: int, note: str = "") -> None:
        merged_set = frozenset(merged)
        self.events.append(ContractionEvent(merged_set, new_id, note))
        images = {v for v, img in self.vertex_map.items() if img in merged_set}
        for v in images:
            self.vertex_map[v] = new_id

    def image(self, v: int) -> int:
        return self.vertex_map[v]

    def extend(self, other: "ReductionTrace") -> None:
        for event in other.events:
            self.record(event.merged, event.new_id, event.note)


# -- structural operations -----------------------------------------------------


def _check_vertex_subset(graph: Multigraph, S: Iterable[int]) -> frozenset[int]:
    s = frozenset(S)
    if not s <= graph.vertices:
        raise DomainError("vertex set is not contained in the graph")
    return s


def boundary_edges(graph: Multigraph, S: Iterable[int]) -> set[int]:
    """Edge ids with exactly one endpoint in ``S``.

    ``S`` must be a nonempty proper subset of the vertex set.
    """
    s = _check_vertex_subset(graph, S)
    if not s or s == graph.vertices:
        raise DomainError("boundary requires a nonempty proper vertex subset")
    return {eid for eid, (u, v) in graph.edges.items() if (u in s) != (v in s)}


def cross_edges(graph: Multigraph, U: Iterable[int], W: Iterable[int]) -> set[int]:
    """Edge ids with one endpoint in ``U`` and the other in ``W`` (disjoint sets)."""
    us = _check_vertex_subset(graph, U)
    ws = _check_vertex_subset(graph, W)
    if us & ws:
        raise DomainError("cross_edges requires disjoint vertex sets")
    return {eid for eid, (u, v) in graph.edges.items()
            if (u in us and v in ws) or (u in ws and v in us)}


def contract(graph: Multigraph, S: Iterable[int],
             trace: ReductionTrace | None = None,
             note: str = "") -> tuple[Multigraph, ReductionTrace]:
    """Merge ``S`` into one fresh vertex, deleting the edges inside ``S``.

    Surviving edges keep their ids.  Loops created by the merge are the edges
    inside ``S`` and are deleted; parallel edges created by the merge remain.
    """
    s = _check_vertex_subset(graph, S)
    if not s:
        raise DomainError("cannot contract an empty vertex set")
    new_id = graph.fresh_vertex_id()
    if trace is None:
        trace = ReductionTrace.identity(graph)
    trace.record(s, new_id, note)

    def img(v: int) -> int:
        return new_id if v in s else v

    vertices = (graph.vertices - s) | {new_id}
    edges = [(eid, img(u), img(v)) for eid, (u, v) in graph.edges.items()
             if not (u in s and v in s)]
    return Multigraph(vertices, edges), trace


def lift(graph: Multigraph, v: int, e1: int, e2: int) -> Multigraph:
    """Replace the edges ``e1 = u1 v`` and ``e2 = u2 v`` by a new edge ``u1 u2``.

    Lifting a parallel pair (``u1 == u2``) would create a loop and is rejected.
    The new edge gets a fresh id; ``degree(v)`` drops by exactly two.
    """
    if e1 == e2:
        raise DomainError("lift needs two distinct edges")
    for eid in (e1, e2):
        if eid not in graph.edges:
            raise DomainError(f"unknown edge id {eid}")
        if v not in graph.endpoints(eid):
            raise DomainError(f"edge {eid} is not incident to vertex {v}")
    u1 = next(x for x in graph.endpoints(e1) if x != v)
    u2 = next(x for x in graph.endpoints(e2) if x != v)
    if u1 == u2:
        raise LoopEdgeError("lifting a parallel pair would create a loop")
    edges = [(eid, a, b) for eid, (a, b) in graph.edges.items() if eid not in (e1, e2)]
    edges.append((graph.fresh_edge_id(), u1, u2))
    return Multigraph(graph.vertices, edges)


def underlying_simple(graph: Multigraph) -> Multigraph:
    """Collapse every parallel class to a single edge (same vertex set)."""
    seen: dict[frozenset[int], int] = {}
    for eid, (u, v) in sorted(graph.edges.items()):
        key = frozenset((u, v))
        if key not in seen:
            seen[key] = eid
    return Multigraph(graph.vertices,
                      ((eid, *sorted(pair)) for pair, eid in seen.items()))


def neighborhood_closure(graph: Multigraph, X: Iterable[int]) -> frozenset[int]:
    """``X`` together with every vertex adjacent to it; ``X`` must be nonempty."""
    xs = _check_vertex_subset(graph, X)
    if not xs:
        raise DomainError("neighborhood closure of an empty set")
    closed = set(xs)
    for v in xs:
        closed |= graph.neighbors(v)
    return frozenset(closed)


def edges_inside(graph: Multigraph, S: Iterable[int]) -> int:
    """Number of edges with both endpoints in ``S`` (multiplicities counted)."""
    s = _check_vertex_subset(graph, S)
    return sum(1 for u, v in graph.edges.values() if u in s and v in s)


def spanning_subsets(items: list[int], size: int) -> Iterator[tuple[int, ...]]:
    """Deterministic lexicographic ``size``-subsets of ``items`` (sorted first)."""
    import itertools

    yield from itertools.combinations(sorted(items), size)
