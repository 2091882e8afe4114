"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

import itertools

from triflow.multigraph import Multigraph


def complete(n: int) -> Multigraph:
    return Multigraph.from_edge_pairs(n, [(u, v) for u in range(n)
                                          for v in range(u + 1, n)])


def cycle(n: int) -> Multigraph:
    return Multigraph.from_edge_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def digon() -> Multigraph:
    return Multigraph.from_edge_pairs(2, [(0, 1), (0, 1)])


def wheel(rim: int) -> Multigraph:
    pairs = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    pairs += [(0, 1 + i) for i in range(rim)]
    return Multigraph.from_edge_pairs(rim + 1, pairs)


def star(leaves: int) -> Multigraph:
    return Multigraph.from_edge_pairs(leaves + 1, [(0, i + 1) for i in range(leaves)])


def brute_min_cut(graph: Multigraph, parity: str = "any") -> int | None:
    """Exhaustive minimum cut by direct subset iteration (independent oracle)."""
    verts = graph.vertex_list()
    best = None
    for size in range(1, len(verts)):
        for subset in itertools.combinations(verts, size):
            inside = set(subset)
            cut = sum(1 for u, v in graph.edges.values() if (u in inside) != (v in inside))
            if parity == "odd" and cut % 2 == 0:
                continue
            if best is None or cut < best:
                best = cut
    return best


def brute_alpha(graph: Multigraph) -> int:
    """Exhaustive maximum independent set size (independent oracle)."""
    verts = graph.vertex_list()
    adjacent = {frozenset((u, v)) for u, v in graph.edges.values()}
    best = 0
    for size in range(len(verts), 0, -1):
        for subset in itertools.combinations(verts, size):
            if all(frozenset(p) not in adjacent
                   for p in itertools.combinations(subset, 2)):
                return size
    return best


def brute_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    """Permutation search isomorphism test for graphs up to ~8 vertices."""
    if g.n != h.n or g.m != h.m:
        return False
    gv, hv = g.vertex_list(), h.vertex_list()
    for perm in itertools.permutations(hv):
        mapping = dict(zip(gv, perm))
        if all(g.multiplicity(u, v) == h.multiplicity(mapping[u], mapping[v])
               for u in gv for v in gv if u < v):
            return True
    return False
