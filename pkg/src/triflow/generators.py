"""Seeded random graph generators for the verification sweeps.

Everything takes a ``random.Random`` so runs replay exactly from a seed.
Generators that promise a structural property (odd-5-edge-connected, contains
an odd wheel properly, ...) verify it and resample until it holds.
"""

from __future__ import annotations

import random

from .connectivity import edge_connectivity, essential_edge_connectivity, odd_edge_connectivity
from .multigraph import Multigraph
from .reduction import find_wheel, wheel_edge_ids


def random_multigraph(rng: random.Random, max_n: int = 9, max_extra: int = 6,
                      connected: bool = True) -> Multigraph:
    """A random loopless multigraph: a random tree plus random chords."""
    n = rng.randint(2, max_n)
    pairs: list[tuple[int, int]] = []
    if connected:
        for v in range(1, n):
            pairs.append((rng.randrange(v), v))
    extra = rng.randint(0, max_extra + n)
    for _ in range(extra):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            pairs.append((u, v))
    if not pairs:
        pairs.append((0, 1))
    return Multigraph.from_edge_pairs(n, pairs)


def random_simple_graph(rng: random.Random, n: int, p: float) -> Multigraph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Multigraph.from_edge_pairs(n, pairs)


def random_regular_multigraph(rng: random.Random, n: int, d: int,
                              tries: int = 400) -> Multigraph:
    """Configuration-model d-regular multigraph, resampling until loopless."""
    if (n * d) % 2:
        raise ValueError("n * d must be even")
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(tries):
        rng.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        if all(u != v for u, v in pairs):
            return Multigraph.from_edge_pairs(n, pairs)
    raise RuntimeError("configuration model kept producing loops")


def random_odd5_connected(rng: random.Random, max_n: int = 12,
                          tries: int = 4000) -> Multigraph:
    """A connected graph with odd-edge-connectivity exactly 5 (5-regular base)."""
    for _ in range(tries):
        n = rng.choice([k for k in range(6, max_n + 1) if k % 2 == 0])
        graph = random_regular_multigraph(rng, n, 5)
        if not graph.is_connected():
            continue
        report = odd_edge_connectivity(graph)
        if report is not None and report.cut_size == 5:
            return graph
    raise RuntimeError("failed to sample an odd-5-edge-connected graph")


def random_odd5_with_even_vertex(rng: random.Random,
                                 max_n: int = 12) -> tuple[Multigraph, int]:
    """Odd-5-edge-connected graph plus one even-degree vertex (degree 6)."""
    while True:
        base = random_odd5_connected(rng, max_n)
        order = base.vertex_list()
        u, v = rng.sample(order, 2)
        graph = base.add_edges([(u, v)])
        report = odd_edge_connectivity(graph)
        if report is not None and report.cut_size == 5:
            return graph, u


def random_with_proper_odd_wheel(rng: random.Random, rim: int | None = None,
                                 extra_vertices: int = 2,
                                 extra_edges: int = 5) -> Multigraph:
    """Plant an odd wheel, then grow random structure around it."""
    if rim is None:
        rim = rng.choice([3, 3, 5])
    n = rim + 1 + max(extra_vertices, 1)
    pairs = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    pairs += [(0, 1 + i) for i in range(rim)]
    wheel_verts = rim + 1
    for v in range(wheel_verts, n):
        pairs.append((rng.randrange(v), v))
    for _ in range(rng.randint(1, extra_edges)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            pairs.append((u, v))
    graph = Multigraph.from_edge_pairs(n, pairs)
    assert find_wheel(graph, "odd") is not None
    return graph


def random_5ec_ess8_with_odd_wheel(rng: random.Random,
                                   tries: int = 4000) -> Multigraph:
    """Dense sample that is 5-edge-connected, essentially 8-edge-connected,
    and properly contains an odd wheel."""
    for _ in range(tries):
        n = rng.randint(7, 9)
        graph = random_simple_graph(rng, n, rng.uniform(0.75, 0.95))
        if not graph.is_connected():
            continue
        if edge_connectivity(graph).cut_size < 5:
            continue
        essential = essential_edge_connectivity(graph)
        if essential is not None and essential.cut_size < 8:
            continue
        wheel = find_wheel(graph, "odd")
        if wheel is None:
            continue
        if wheel.vertex_set == graph.vertices and graph.m == len(wheel_edge_ids(graph, wheel)):
            continue
        return graph
    raise RuntimeError("failed to sample a 5ec/ess8 host with an odd wheel")
