import random

import pytest

from helpers import complete, cycle, digon, wheel
from triflow import catalog
from triflow.canonical import canonical_key
from triflow.connectivity import edge_connectivity, odd_edge_connectivity
from triflow.errors import DomainError
from triflow.generators import (random_multigraph, random_odd5_with_even_vertex,
                                random_with_proper_odd_wheel)
from triflow.multigraph import Multigraph
from triflow.orientation import mod3_orientation
from triflow.reduction import (WContractionSpec, WheelWitness, find_wheel,
                               find_z3_subgraph, is_z3_reduced, split_vertex,
                               suppress_even_vertices, w_contract, wheel_edge_ids,
                               z3_reduce)


def test_find_wheel_examples():
    found = find_wheel(complete(4))
    assert found is not None and found.center == 0 and len(found.rim) == 3
    assert find_wheel(cycle(5)) is None
    g5 = catalog.get("G5").graph
    found = find_wheel(g5)
    assert found is not None
    assert found.center == 5 and g5.degree(found.center) == 5
    assert set(found.rim) == g5.vertices - {5}


def test_find_wheel_parity_filters():
    w5 = wheel(5)
    assert find_wheel(w5, "odd") is not None
    assert find_wheel(w5, "even") is None
    w4 = wheel(4)
    assert find_wheel(w4, "even") is not None
    assert find_wheel(w4, "odd") is None  # a 4-cycle rim has no triangle
    chorded = w4.add_edges([(1, 3)])  # rim chord creates a triangle at the hub
    odd = find_wheel(chorded, "odd")
    assert odd is not None and len(odd.rim) % 2 == 1
    even = find_wheel(chorded, "even")
    assert even is not None and len(even.rim) % 2 == 0


def test_find_wheel_is_deterministic():
    graph = random_with_proper_odd_wheel(random.Random(4))
    assert find_wheel(graph, "odd") == find_wheel(graph, "odd")


def test_w_contract_structure():
    # K4 as an odd wheel, held properly inside a larger host.
    host = complete(4).add_edges([])
    host = Multigraph(list(host.vertices) + [4],
                      list(host.edge_list()) + [(6, 0, 4), (7, 1, 4)])
    spec_wheel = WheelWitness(0, (1, 2, 3))
    x = frozenset({1, 2})
    result, trace = w_contract(host, WContractionSpec(spec_wheel, x, frozenset({0, 3})))
    assert result.n == 3
    x_img = trace.image(1)
    y_img = trace.image(0)
    assert trace.image(2) == x_img and trace.image(3) == y_img
    # all six wheel edges removed, one fresh x-y edge added, host edges kept
    assert result.m == 2 + 1
    assert result.multiplicity(x_img, y_img) == 1
    assert result.multiplicity(y_img, 4) == 1   # edge (0,4) follows Y
    assert result.multiplicity(x_img, 4) == 1   # edge (1,4) follows X


def test_w_contract_preconditions():
    w3 = wheel(3)
    witness = WheelWitness(0, (1, 2, 3))
    spec = WContractionSpec(witness, frozenset({1, 2}), frozenset({0, 3}))
    with pytest.raises(DomainError):
        w_contract(w3, spec)  # not a proper subgraph
    host = wheel(4).add_edges([(1, 3)])
    even_wheel = find_wheel(host, "even")
    assert even_wheel is not None
    rim = even_wheel.rim
    even_spec = WContractionSpec(
        even_wheel, frozenset({rim[0], rim[1]}),
        even_wheel.vertex_set - {rim[0], rim[1]})
    with pytest.raises(DomainError):
        w_contract(host, even_spec)  # even rim
    w5_host = wheel(5).add_edges([(1, 3)])
    w5_witness = WheelWitness(0, (1, 2, 3, 4, 5))
    nonadjacent = WContractionSpec(w5_witness, frozenset({1, 3}),
                                   frozenset({0, 2, 4, 5}))
    with pytest.raises(DomainError):
        w_contract(w5_host, nonadjacent)  # {1,3} is not a rim-adjacent pair


def test_w_contract_soundness_sampled():
    rng = random.Random(31)
    for _ in range(30):
        graph = random_with_proper_odd_wheel(rng)
        found = find_wheel(graph, "odd")
        rim = found.rim
        x = frozenset({rim[0], rim[1]})
        contracted, _ = w_contract(
            graph, WContractionSpec(found, x, found.vertex_set - x))
        if mod3_orientation(contracted) is not None:
            assert mod3_orientation(graph) is not None


def test_find_z3_subgraph_examples():
    tri_doubled = Multigraph.from_edge_pairs(3, [(0, 1), (0, 1), (1, 2), (2, 0)])
    assert find_z3_subgraph(tri_doubled, 3) == {0, 1}
    host = wheel(4).add_edges([])
    hit = find_z3_subgraph(host, 5)
    assert hit is not None and len(hit) <= 5
    g3 = catalog.get("G3").graph
    assert find_z3_subgraph(g3, 6) is None
    with pytest.raises(DomainError):
        find_z3_subgraph(g3, 1)


def test_z3_reduce_examples():
    reduced, trace = z3_reduce(complete(5), 5)
    assert reduced.n == 1 and reduced.m == 0
    assert trace.certified_complete

    reduced, _ = z3_reduce(digon(), 2)
    assert reduced.n == 1

    g3 = catalog.get("G3").graph
    reduced, trace = z3_reduce(g3, 6)
    assert reduced == g3
    assert not trace.events


def test_z3_reduce_cap_binding_flag():
    k5 = complete(5)
    reduced, trace = z3_reduce(k5, 4)
    assert not trace.certified_complete  # 5 vertices exceeded the cap of 4
    assert trace.size_cap == 4
    # K5 has no Z3-connected subgraph on <= 4 vertices, so nothing contracts.
    assert reduced == k5


def test_z3_reduce_result_has_no_obvious_z3_subgraphs():
    rng = random.Random(41)
    for _ in range(40):
        graph = random_multigraph(rng, max_n=8)
        reduced, trace = z3_reduce(graph, max(graph.n, 2))
        assert trace.certified_complete
        assert not reduced.has_parallel_edges() or reduced.n == 1
        if reduced.n >= 5:
            assert find_wheel(reduced, "even") is None
        assert is_z3_reduced(reduced)


def test_z3_reduce_confluent_under_relabeling():
    rng = random.Random(43)
    for _ in range(25):
        graph = random_multigraph(rng, max_n=8)
        verts = graph.vertex_list()
        shuffled = verts[:]
        rng.shuffle(shuffled)
        relabeled = graph.relabel(dict(zip(verts, shuffled)))
        a, _ = z3_reduce(graph, max(graph.n, 2))
        b, _ = z3_reduce(relabeled, max(graph.n, 2))
        assert canonical_key(a) == canonical_key(b)


def test_z3_reduce_preserves_mod3_verdict_sampled():
    rng = random.Random(47)
    for _ in range(60):
        graph = random_multigraph(rng, max_n=8)
        reduced, _ = z3_reduce(graph, max(graph.n, 2))
        assert (mod3_orientation(graph) is None) == (mod3_orientation(reduced) is None)


def test_split_vertex_rejects_degree_two_and_wrong_k():
    path_square = cycle(4)
    with pytest.raises(DomainError):
        split_vertex(path_square, 0, 4)
    graph, vertex = random_odd5_with_even_vertex(random.Random(51))
    with pytest.raises(DomainError):
        split_vertex(graph, vertex, 6)  # degree(v) == 6 == k
    with pytest.raises(DomainError):
        split_vertex(graph, vertex, 3)  # graph is odd-5, not odd-3


def test_split_vertex_finds_preserving_pair():
    rng = random.Random(53)
    for _ in range(15):
        graph, vertex = random_odd5_with_even_vertex(rng)
        lifted = split_vertex(graph, vertex, 5)
        assert lifted is not None
        assert lifted.degree(vertex) == graph.degree(vertex) - 2
        after = odd_edge_connectivity(lifted)
        assert after is not None and after.cut_size == 5


def test_suppress_even_vertices_full_elimination():
    rng = random.Random(59)
    for _ in range(10):
        graph, _ = random_odd5_with_even_vertex(rng)
        result = suppress_even_vertices(graph, 5)
        assert all(result.degree(v) % 2 == 1 for v in result.vertices)
        report = odd_edge_connectivity(result)
        assert report is not None and report.cut_size == 5


def test_wheel_edge_ids_picks_one_per_adjacency():
    w5 = wheel(5)
    witness = find_wheel(w5, "odd")
    ids = wheel_edge_ids(w5, witness)
    assert len(ids) == 10


def test_k5_contains_w4_hence_not_reduced():
    assert not is_z3_reduced(complete(5))
    k5_minus_edge = Multigraph.from_edge_pairs(
        5, [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 1)])
    assert not is_z3_reduced(k5_minus_edge)
    assert is_z3_reduced(catalog.get("FZ-9").graph)
