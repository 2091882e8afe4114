"""Exact connectivity and independence parameters.

Edge connectivity runs repeated max-flow with a fixed source.  The odd and
essential variants enumerate every vertex subset (vectorized, exact up to
24 vertices).  The independence number is exact branch-and-bound with a
greedy clique-cover bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitsets import (SUBSET_SCAN_MAX_VERTICES, all_cut_sizes, inside_edge_counts,
                      lexicographic_min_witness, mask_to_set)
from .errors import CapabilityError, DomainError
from .maxflow import Dinic
from .multigraph import Multigraph, boundary_edges, neighborhood_closure, underlying_simple

__all__ = [
    "CutReport", "edge_connectivity", "odd_edge_connectivity",
    "essential_edge_connectivity", "independence_number", "neighborhood_closure",
]


@dataclass(frozen=True)
class CutReport:
    """A cut value together with a vertex set attaining it."""

    cut_size: int
    witness: frozenset[int]
    odd: bool

    def revalidate(self, graph: Multigraph) -> None:
        if len(boundary_edges(graph, self.witness)) != self.cut_size:
            raise AssertionError("cut witness does not attain the reported size")


def _report(graph: Multigraph, witness: frozenset[int], size: int) -> CutReport:
    rep = CutReport(size, witness, bool(size % 2))
    rep.revalidate(graph)
    return rep


def edge_connectivity(graph: Multigraph) -> CutReport:
    """Minimum edge cut with witness.  Disconnected graphs report size 0."""
    if graph.n < 2:
        raise DomainError("edge connectivity needs at least two vertices")
    comps = graph.components()
    if len(comps) > 1:
        return _report(graph, comps[0], 0)
    order = graph.vertex_list()
    pos = {v: i for i, v in enumerate(order)}
    source = order[0]
    best: tuple[int, tuple[int, ...]] | None = None
    for target in order[1:]:
        net = Dinic(graph.n)
        for _, u, v in graph.edge_list():
            net.add_edge(pos[u], pos[v], 1)
            net.add_edge(pos[v], pos[u], 1)
        value = net.max_flow(pos[source], pos[target])
        side = net.reachable_from(pos[source])
        witness = tuple(sorted(order[i] for i in side))
        if best is None or (value, witness) < best:
            best = (value, witness)
    assert best is not None
    return _report(graph, frozenset(best[1]), best[0])


def _proper_mask_filter(n: int) -> np.ndarray:
    sel = np.ones(1 << n, dtype=bool)
    sel[0] = sel[-1] = False
    return sel


def _min_cut_among(graph: Multigraph, keep: np.ndarray, cuts: np.ndarray,
                   order: list[int]) -> CutReport | None:
    if not keep.any():
        return None
    value = int(cuts[keep].min())
    masks = np.nonzero(keep & (cuts == value))[0]
    witness = lexicographic_min_witness(masks, order)
    return _report(graph, witness, value)


def odd_edge_connectivity(graph: Multigraph) -> CutReport | None:
    """Minimum odd-size edge cut; ``None`` when every cut is even.

    Exact by exhaustive subset enumeration; inputs above
    ``SUBSET_SCAN_MAX_VERTICES`` vertices are rejected.
    """
    if graph.n < 2:
        raise DomainError("odd edge connectivity needs at least two vertices")
    if all(graph.degree(v) % 2 == 0 for v in graph.vertices):
        return None
    cuts, order = all_cut_sizes(graph)
    keep = _proper_mask_filter(graph.n) & (cuts % 2 == 1)
    return _min_cut_among(graph, keep, cuts, order)


def _nontrivial_components(graph: Multigraph, side: frozenset[int]) -> int:
    sub = graph.induced(side)
    return sum(1 for comp in sub.components() if sub.induced(comp).m >= 1)


def essential_edge_connectivity(graph: Multigraph) -> CutReport | None:
    """Minimum essential edge cut; ``None`` if no essential cut exists.

    A cut is essential when removing it leaves at least two components that
    each contain an edge.  Isolated vertices are irrelevant to both the cut
    sizes and the essentialness, so they are dropped before enumeration.
    """
    if graph.n < 2:
        raise DomainError("essential edge connectivity needs at least two vertices")
    if graph.m < 2:
        return None
    active = [v for v in graph.vertex_list() if graph.degree(v) > 0]
    if len(active) < 2:
        return None
    if len(active) > SUBSET_SCAN_MAX_VERTICES:
        raise CapabilityError(
            f"subset enumeration is exact only up to {SUBSET_SCAN_MAX_VERTICES} vertices")
    core = graph.induced(active)
    inside, order = inside_edge_counts(core, active)
    degs_cuts, _ = all_cut_sizes(core, active)
    cuts = degs_cuts
    inside_comp = core.m - inside - cuts
    proper = _proper_mask_filter(core.n)

    both_sides = proper & (inside >= 1) & (inside_comp >= 1)
    best = _min_cut_among(core, both_sides, cuts, order)
    best_val = best.cut_size if best is not None else None

    # One edgeless side: essential only if the other side splits into two
    # nontrivial components on its own.
    pending = proper & ((inside == 0) | (inside_comp == 0))
    if best_val is not None:
        pending &= cuts <= best_val
    candidates = np.nonzero(pending)[0]
    if candidates.size:
        candidates = candidates[np.argsort(cuts[candidates], kind="stable")]
        found: list[frozenset[int]] = []
        found_val: int | None = None
        for mask in candidates:
            val = int(cuts[mask])
            if found_val is not None and val > found_val:
                break
            side = mask_to_set(int(mask), order)
            empty, other = (side, frozenset(active) - side)
            if inside[mask] != 0:
                empty, other = other, empty
            if _nontrivial_components(core, other) >= 2:
                found.append(side)
                found_val = val
        if found_val is not None and (best_val is None or found_val <= best_val):
            if best_val is not None and found_val == best_val:
                found.append(best.witness)  # type: ignore[union-attr]
            witness = min(found, key=lambda s: tuple(sorted(s)))
            return _report(graph, witness, found_val)
    if best is None:
        return None
    return _report(graph, best.witness, best.cut_size)


def independence_number(graph: Multigraph) -> tuple[int, frozenset[int]]:
    """Exact maximum independent set of the underlying simple graph."""
    simple = underlying_simple(graph)
    adj = {v: simple.neighbors(v) for v in simple.vertices}
    best_size = 0
    best_set: tuple[int, ...] = ()

    def clique_cover_bound(cands: list[int]) -> int:
        cliques: list[set[int]] = []
        for v in cands:
            for cl in cliques:
                if cl <= adj[v]:
                    cl.add(v)
                    break
            else:
                cliques.append({v})
        return len(cliques)

    def solve(cands: set[int], current: list[int]) -> None:
        nonlocal best_size, best_set
        if len(current) > best_size:
            best_size = len(current)
            best_set = tuple(sorted(current))
        if not cands:
            return
        ordered = sorted(cands)
        if len(current) + clique_cover_bound(ordered) <= best_size:
            return
        pivot = max(ordered, key=lambda v: (len(adj[v] & cands), -v))
        solve(cands - adj[pivot] - {pivot}, current + [pivot])
        if len(cands) - 1 + len(current) > best_size:
            solve(cands - {pivot}, current)

    solve(set(simple.vertices), [])
    witness = frozenset(best_set)
    for u in witness:
        if adj[u] & witness:
            raise AssertionError("independence witness is not independent")
    return best_size, witness
