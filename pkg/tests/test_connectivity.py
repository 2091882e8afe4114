import random

import pytest

from helpers import brute_alpha, brute_min_cut, complete, cycle, digon, star
from triflow import catalog
from triflow.connectivity import (edge_connectivity, essential_edge_connectivity,
                                  independence_number, odd_edge_connectivity)
from triflow.errors import CapabilityError, DomainError
from triflow.generators import random_multigraph
from triflow.multigraph import Multigraph, boundary_edges


def test_edge_connectivity_examples():
    assert edge_connectivity(complete(4)).cut_size == 3
    assert edge_connectivity(digon()).cut_size == 2
    g3 = catalog.get("G3").graph
    report = edge_connectivity(g3)
    assert report.cut_size == brute_min_cut(g3) == 3


def test_edge_connectivity_disconnected_and_tiny():
    two_parts = Multigraph.from_edge_pairs(4, [(0, 1), (2, 3)])
    report = edge_connectivity(two_parts)
    assert report.cut_size == 0
    assert report.witness in ({0, 1}, {2, 3})
    with pytest.raises(DomainError):
        edge_connectivity(Multigraph([0]))


def test_odd_edge_connectivity_examples():
    assert odd_edge_connectivity(cycle(4)) is None
    assert odd_edge_connectivity(complete(4)).cut_size == 3
    doubled = Multigraph.from_edge_pairs(
        4, [(0, 1), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    report = odd_edge_connectivity(doubled)
    assert report.cut_size == brute_min_cut(doubled, parity="odd") == 3


def test_essential_edge_connectivity_examples():
    assert essential_edge_connectivity(complete(4)).cut_size == 4
    assert essential_edge_connectivity(star(4)) is None
    assert essential_edge_connectivity(cycle(5)).cut_size == 2


def test_essential_cut_between_two_triangles():
    # two triangles joined through a middle vertex: either attachment edge is
    # an essential cut on its own, and the lexicographically-least witness
    # among the four candidates is the first triangle.
    graph = Multigraph.from_edge_pairs(
        7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 0), (6, 3)])
    report = essential_edge_connectivity(graph)
    assert report.cut_size == 1
    assert report.witness == {0, 1, 2}
    # isolating the middle vertex also counts as essential (it leaves two
    # nontrivial components) but is dominated by the single-edge cuts.
    assert len(boundary_edges(graph, {6})) == 2


def test_connectivity_capability_cap():
    path = Multigraph.from_edge_pairs(25, [(i, i + 1) for i in range(24)])
    with pytest.raises(CapabilityError):
        odd_edge_connectivity(path)
    with pytest.raises(CapabilityError):
        essential_edge_connectivity(path)
    # all-even degrees answer without enumerating; flow has no cap at all
    assert odd_edge_connectivity(cycle(25)) is None
    assert edge_connectivity(cycle(25)).cut_size == 2


def test_independence_number_examples():
    assert independence_number(complete(5))[0] == 1
    assert independence_number(cycle(5))[0] == 2
    g3 = catalog.get("G3").graph
    value, witness = independence_number(g3)
    assert value == brute_alpha(g3) == 2
    assert all(g3.multiplicity(u, v) == 0 for u in witness for v in witness if u < v)


def test_independence_number_matches_bruteforce_on_random_graphs():
    rng = random.Random(11)
    for _ in range(40):
        graph = random_multigraph(rng, max_n=7)
        assert independence_number(graph)[0] == brute_alpha(graph)


def test_cut_witnesses_attain_reported_sizes():
    rng = random.Random(13)
    for _ in range(40):
        graph = random_multigraph(rng, max_n=8)
        kappa = edge_connectivity(graph)
        assert len(boundary_edges(graph, kappa.witness)) == kappa.cut_size
        assert kappa.cut_size <= min(graph.degree(v) for v in graph.vertices)
        odd = odd_edge_connectivity(graph)
        if odd is not None:
            assert odd.cut_size % 2 == 1
            assert len(boundary_edges(graph, odd.witness)) == odd.cut_size
            assert odd.cut_size == brute_min_cut(graph, parity="odd")


def test_odd_cuts_exist_iff_odd_degree():
    rng = random.Random(17)
    for _ in range(40):
        graph = random_multigraph(rng, max_n=7)
        has_odd_degree = any(graph.degree(v) % 2 for v in graph.vertices)
        assert (odd_edge_connectivity(graph) is not None) == has_odd_degree
