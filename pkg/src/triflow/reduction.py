"""Structural surgeries: wheels, W-contraction, Z3-subgraph search, reduction,
and odd-connectivity-preserving vertex splitting."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .canonical import canonical_key
from .connectivity import odd_edge_connectivity
from .errors import DomainError
from .multigraph import (Multigraph, ReductionTrace, contract, lift, underlying_simple)
from .orientation import is_z3_connected

__all__ = [
    "WheelWitness", "WContractionSpec", "find_wheel", "wheel_edge_ids",
    "w_contract", "find_z3_subgraph", "z3_reduce", "is_z3_reduced",
    "split_vertex", "suppress_even_vertices",
]


@dataclass(frozen=True)
class WheelWitness:
    """A wheel subgraph: ``center`` joined to every vertex of the rim cycle."""

    center: int
    rim: tuple[int, ...]

    @property
    def odd(self) -> bool:
        return len(self.rim) % 2 == 1

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.rim) | {self.center}

    def validate(self, graph: Multigraph) -> None:
        if len(self.rim) < 3 or len(set(self.rim)) != len(self.rim):
            raise DomainError("wheel rim must be a cycle on at least 3 distinct vertices")
        if self.center in self.rim:
            raise DomainError("wheel center cannot lie on the rim")
        for i, r in enumerate(self.rim):
            if graph.multiplicity(self.center, r) == 0:
                raise DomainError(f"center {self.center} is not adjacent to rim vertex {r}")
            nxt = self.rim[(i + 1) % len(self.rim)]
            if graph.multiplicity(r, nxt) == 0:
                raise DomainError(f"rim vertices {r} and {nxt} are not adjacent")


@dataclass(frozen=True)
class WContractionSpec:
    """A wheel plus the partition (X, Y) of its vertices to contract."""

    wheel: WheelWitness
    X: frozenset[int]
    Y: frozenset[int]

    def validate(self, graph: Multigraph) -> None:
        self.wheel.validate(graph)
        verts = self.wheel.vertex_set
        if self.X | self.Y != verts or self.X & self.Y:
            raise DomainError("X, Y must partition the wheel's vertex set")
        rim = self.wheel.rim
        pairs = {frozenset((rim[i], rim[(i + 1) % len(rim)])) for i in range(len(rim))}
        if self.X not in pairs and self.Y not in pairs:
            raise DomainError("one of X, Y must be two adjacent rim vertices")


def _bounded_cycle(adj: dict[int, set[int]], parity: str,
                   max_len: int | None) -> list[int] | None:
    """Lexicographically-least cycle of the requested parity, if any.

    Cycles are walked from their smallest vertex with the smaller neighbour
    second, so depth-first search in ascending order finds the least
    representation first.
    """
    want = {"any": (0, 1), "odd": (1,), "even": (0,)}[parity]

    def walk(start: int, path: list[int], used: set[int]) -> list[int] | None:
        if max_len is not None and len(path) > max_len:
            return None
        here = path[-1]
        for nxt in sorted(adj[here]):
            if nxt == start and len(path) >= 3 and path[1] < path[-1] \
                    and len(path) % 2 in want:
                return list(path)
            if nxt > start and nxt not in used:
                path.append(nxt)
                used.add(nxt)
                found = walk(start, path, used)
                if found is not None:
                    return found
                used.discard(nxt)
                path.pop()
        return None

    for start in sorted(adj):
        found = walk(start, [start], {start})
        if found is not None:
            return found
    return None


def find_wheel(graph: Multigraph, parity: str = "any",
               max_rim: int | None = None) -> WheelWitness | None:
    """Smallest-center wheel subgraph of the requested rim parity.

    Works on the underlying simple graph; deterministic order (smallest
    center id, then lexicographically least rim cycle).
    """
    if parity not in ("any", "odd", "even"):
        raise DomainError(f"unknown wheel parity {parity!r}")
    simple = underlying_simple(graph)
    for center in simple.vertex_list():
        hood = simple.neighbors(center)
        if len(hood) < 3:
            continue
        sub = simple.induced(hood)
        adj = {v: sub.neighbors(v) for v in hood}
        rim = _bounded_cycle(adj, parity, max_rim)
        if rim is not None:
            return WheelWitness(center, tuple(rim))
    return None


def wheel_edge_ids(graph: Multigraph, wheel: WheelWitness) -> set[int]:
    """One edge id per wheel adjacency (smallest id of each parallel class)."""
    wheel.validate(graph)
    ids = set()
    rim = wheel.rim
    for i, r in enumerate(rim):
        ids.add(min(graph.edges_between(wheel.center, r)))
        ids.add(min(graph.edges_between(r, rim[(i + 1) % len(rim)])))
    return ids


def w_contract(graph: Multigraph,
               spec: WContractionSpec) -> tuple[Multigraph, ReductionTrace]:
    """Delete the wheel's edges, contract X and Y, and join them by a new edge.

    Requires an odd rim and a wheel that is a proper subgraph of the host.
    """
    spec.validate(graph)
    if not spec.wheel.odd:
        raise DomainError("W-contraction applies to odd wheels only")
    doomed = wheel_edge_ids(graph, spec.wheel)
    proper = (spec.wheel.vertex_set < graph.vertices) or (graph.m > len(doomed))
    if not proper:
        raise DomainError("the wheel must be a proper subgraph of the host graph")
    stripped = Multigraph(graph.vertices,
                          ((eid, u, v) for eid, (u, v) in graph.edges.items()
                           if eid not in doomed))
    trace = ReductionTrace.identity(graph)
    merged_x, trace = contract(stripped, spec.X, trace, note="wheel-part-X")
    x = trace.image(next(iter(spec.X)))
    merged_y, trace = contract(merged_x, spec.Y, trace, note="wheel-part-Y")
    y = trace.image(next(iter(spec.Y)))
    result = merged_y.add_edges([(x, y)])
    return result, trace


# -- Z3-connected subgraph search ----------------------------------------------------

_Z3_VERDICTS: dict[bytes, bool] = {}


def _z3_connected_memo(sub: Multigraph) -> bool:
    key = canonical_key(sub)
    hit = _Z3_VERDICTS.get(key)
    if hit is None:
        hit = is_z3_connected(sub)
        _Z3_VERDICTS[key] = hit
    return hit


def clear_z3_memo() -> None:
    _Z3_VERDICTS.clear()


def _has_bridge(graph: Multigraph) -> bool:
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    counter = itertools.count()

    def dfs(v: int, via_edge: int | None) -> bool:
        disc[v] = low[v] = next(counter)
        for eid in graph.incident_edges(v):
            if eid == via_edge:
                continue
            u, w = graph.endpoints(eid)
            other = w if u == v else u
            if other not in disc:
                if dfs(other, eid):
                    return True
                low[v] = min(low[v], low[other])
                if low[other] > disc[v]:
                    return True
            else:
                low[v] = min(low[v], disc[other])
        return False

    for root in graph.vertex_list():
        if root not in disc and dfs(root, None):
            return True
    return False


def _first_digon(graph: Multigraph) -> frozenset[int] | None:
    pairs = sorted({tuple(sorted((u, v))) for u, v in graph.edges.values()})
    for u, v in pairs:
        if graph.multiplicity(u, v) >= 2:
            return frozenset((u, v))
    return None


def _find_z3_subgraph_with_note(graph: Multigraph,
                                size_cap: int) -> tuple[frozenset[int], str] | None:
    if size_cap < 2:
        raise DomainError("size cap must be at least 2")
    digon = _first_digon(graph)
    if digon is not None:
        return digon, "digon"
    if size_cap >= 5:
        wheel = find_wheel(graph, "even", max_rim=size_cap - 1)
        if wheel is not None:
            return wheel.vertex_set, "even-wheel"
    # General enumeration by increasing size.  Two-vertex hits can only be
    # digons (handled above); any larger Z3-connected subgraph is connected,
    # bridgeless, has minimum degree 2, and strictly more edges than a cycle.
    order = graph.vertex_list()
    for size in range(3, min(size_cap, graph.n) + 1):
        for combo in itertools.combinations(order, size):
            sub = graph.induced(combo)
            if sub.m < size + 1:
                continue
            if any(sub.degree(v) < 2 for v in combo):
                continue
            if not sub.is_connected():
                continue
            if _has_bridge(sub):
                continue
            if _z3_connected_memo(sub):
                return frozenset(combo), "z3-subgraph"
    return None


def find_z3_subgraph(graph: Multigraph, size_cap: int) -> frozenset[int] | None:
    """A vertex set inducing a Z3-connected subgraph within the cap, if any.

    Search order: digons, then even wheels, then all connected induced
    subgraphs by increasing size.  Induced subgraphs suffice because adding
    edges preserves Z3-connectivity.
    """
    hit = _find_z3_subgraph_with_note(graph, size_cap)
    return None if hit is None else hit[0]


def z3_reduce(graph: Multigraph, size_cap: int) -> tuple[Multigraph, ReductionTrace]:
    """Contract Z3-connected subgraphs (within the cap) to a fixed point.

    With ``size_cap >= |V|`` at every step the result is the true reduction;
    otherwise the trace is flagged as certified only within the cap.
    """
    if size_cap < 2:
        raise DomainError("size cap must be at least 2")
    trace = ReductionTrace.identity(graph)
    current = graph
    capped = False
    while True:
        if current.n > size_cap:
            capped = True
        hit = _find_z3_subgraph_with_note(current, min(size_cap, max(current.n, 2)))
        if hit is None:
            break
        subset, note = hit
        current, trace = contract(current, subset, trace, note=note)
    trace.size_cap = size_cap
    trace.certified_complete = not capped
    return current, trace


def is_z3_reduced(graph: Multigraph) -> bool:
    """No nontrivial Z3-connected subgraph at all (full cap)."""
    return find_z3_subgraph(graph, max(graph.n, 2)) is None


# -- splitting -----------------------------------------------------------------------


def split_vertex(graph: Multigraph, v: int, k: int) -> Multigraph | None:
    """Lift one edge pair at ``v`` so that odd-edge-connectivity stays exactly ``k``.

    Preconditions follow the splitting lemma: the graph's odd-edge-connectivity
    is ``k`` (graphs with no odd cut are vacuously fine) and ``degree(v)`` is
    neither 2 nor ``k``.  Returns ``None`` only if no pair preserves — under
    the preconditions that would falsify the lemma, so callers should treat it
    as an anomaly.
    """
    if v not in graph.vertices:
        raise DomainError(f"unknown vertex {v}")
    d = graph.degree(v)
    if d == 2:
        raise DomainError("splitting does not apply to a vertex of degree two")
    if d == k:
        raise DomainError("splitting requires degree(v) != k")
    if d < 2:
        raise DomainError("splitting needs at least two incident edges")
    before = odd_edge_connectivity(graph)
    if before is not None and before.cut_size != k:
        raise DomainError(
            f"graph has odd-edge-connectivity {before.cut_size}, not {k}")
    for e1, e2 in itertools.combinations(graph.incident_edges(v), 2):
        far1 = next(x for x in graph.endpoints(e1) if x != v)
        far2 = next(x for x in graph.endpoints(e2) if x != v)
        if far1 == far2:
            continue
        lifted = lift(graph, v, e1, e2)
        after = odd_edge_connectivity(lifted)
        if before is None and after is None:
            return lifted
        if before is not None and after is not None and after.cut_size == k:
            return lifted
    return None


def suppress_even_vertices(graph: Multigraph, k: int) -> Multigraph:
    """Lift away all even-degree vertices, deleting them once isolated.

    Repeatedly applies :func:`split_vertex` while the vertex has degree above
    two; a final degree-two remnant is suppressed directly (or deleted when
    its two edges are parallel), which never lowers the odd-edge-connectivity.
    """
    current = graph
    while True:
        target = next((u for u in current.vertex_list()
                       if current.degree(u) % 2 == 0 and current.degree(u) > 0), None)
        if target is None:
            return current
        while current.degree(target) > 2:
            split = split_vertex(current, target, k)
            if split is None:
                raise AssertionError(
                    "no preserving pair found; splitting lemma falsification candidate")
            current = split
        e1, e2 = current.incident_edges(target)
        far1 = next(x for x in current.endpoints(e1) if x != target)
        far2 = next(x for x in current.endpoints(e2) if x != target)
        if far1 != far2:
            current = lift(current, target, e1, e2)
        current = current.without_vertices([target])
