import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import complete, cycle, digon, star, wheel
from triflow import catalog
from triflow.canonical import canonical_key
from triflow.errors import DomainError, LoopEdgeError
from triflow.multigraph import (Multigraph, boundary_edges, contract, cross_edges,
                                edges_inside, lift, neighborhood_closure,
                                underlying_simple)


@st.composite
def multigraphs(draw):
    n = draw(st.integers(min_value=2, max_value=7))
    pairs = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
        .filter(lambda p: p[0] != p[1]),
        min_size=1, max_size=14))
    return Multigraph.from_edge_pairs(n, pairs)


def test_construction_rejects_loops_and_duplicate_ids():
    with pytest.raises(LoopEdgeError):
        Multigraph([0, 1], [(0, 0, 0)])
    with pytest.raises(DomainError):
        Multigraph([0, 1], [(0, 0, 1), (0, 1, 0)])
    with pytest.raises(DomainError):
        Multigraph([0, 1], [(0, 0, 7)])


def test_degree_counts_parallel_edges():
    d = digon()
    assert d.degree(0) == d.degree(1) == 2
    assert d.multiplicity(0, 1) == 2
    assert d.has_parallel_edges()


def test_boundary_edges_examples():
    assert len(boundary_edges(complete(4), {0})) == 3
    assert len(boundary_edges(cycle(4), {0, 1})) == 2
    g3 = catalog.get("G3").graph
    deg5 = {v for v in g3.vertices if g3.degree(v) == 5}
    assert len(boundary_edges(g3, deg5)) == 8


def test_boundary_edges_rejects_empty_and_full():
    k4 = complete(4)
    with pytest.raises(DomainError):
        boundary_edges(k4, set())
    with pytest.raises(DomainError):
        boundary_edges(k4, k4.vertices)


def test_cross_edges_examples():
    assert len(cross_edges(complete(4), {0}, {1})) == 1
    assert len(cross_edges(digon(), {0}, {1})) == 2
    g3 = catalog.get("G3").graph
    deg5 = {v for v in g3.vertices if g3.degree(v) == 5}
    for v in g3.vertices - deg5:
        assert len(cross_edges(g3, deg5, {v})) == 2
    with pytest.raises(DomainError):
        cross_edges(complete(4), {0, 1}, {1, 2})


def test_contract_triangle_to_digon():
    c3 = cycle(3)
    result, trace = contract(c3, {0, 1})
    assert result.n == 2 and result.m == 2
    assert result.has_parallel_edges()
    new = trace.image(0)
    assert trace.image(1) == new and trace.image(2) == 2
    assert new not in (0, 1, 2)


def test_contract_digon_to_single_vertex():
    result, _ = contract(digon(), {0, 1})
    assert result.n == 1 and result.m == 0


def test_contract_k4_triangle_leaves_three_parallel_edges():
    result, _ = contract(complete(4), {0, 1, 2})
    assert result.n == 2 and result.m == 3
    u, v = result.vertex_list()
    assert result.multiplicity(u, v) == 3


def test_contract_preserves_surviving_edge_ids():
    k4 = complete(4)
    result, _ = contract(k4, {0, 1})
    survivors = {eid for eid, (u, v) in k4.edges.items()
                 if not (u in {0, 1} and v in {0, 1})}
    assert set(result.edges) == survivors


def test_lift_star_and_cycle():
    s3 = star(3)
    lifted = lift(s3, 0, *s3.edges_between(0, 1) + s3.edges_between(0, 2))
    assert lifted.degree(0) == 1
    assert lifted.multiplicity(1, 2) == 1

    c4 = cycle(4)
    e1, e2 = c4.incident_edges(0)
    shortcut = lift(c4, 0, e1, e2)
    assert shortcut.degree(0) == 0
    assert canonical_key(shortcut.without_vertices([0])) == canonical_key(cycle(3))


def test_lift_rim_pair_on_wheel_makes_parallel_edge():
    w5 = wheel(5)
    lifted = lift(w5, 0, min(w5.edges_between(0, 1)), min(w5.edges_between(0, 2)))
    assert lifted.multiplicity(1, 2) == 2


def test_lift_parallel_pair_rejected():
    d = digon()
    e1, e2 = d.incident_edges(0)
    with pytest.raises(LoopEdgeError):
        lift(d, 0, e1, e2)


def test_underlying_simple():
    assert underlying_simple(digon()).m == 1
    c3_doubled = Multigraph.from_edge_pairs(3, [(0, 1), (0, 1), (1, 2), (2, 0)])
    assert underlying_simple(c3_doubled).m == 3
    k4 = complete(4)
    assert underlying_simple(k4) == k4


def test_neighborhood_closure_examples():
    assert neighborhood_closure(complete(4), {0}) == frozenset(range(4))
    assert neighborhood_closure(cycle(5), {0}) == frozenset({4, 0, 1})
    with pytest.raises(DomainError):
        neighborhood_closure(cycle(5), set())


@given(multigraphs())
@settings(max_examples=120, deadline=None)
def test_handshake_identity(graph):
    assert sum(graph.degree(v) for v in graph.vertices) == 2 * graph.m


@given(multigraphs(), st.randoms(use_true_random=False))
@settings(max_examples=120, deadline=None)
def test_boundary_degree_identity(graph, rnd):
    verts = graph.vertex_list()
    size = rnd.randint(1, len(verts) - 1)
    subset = frozenset(rnd.sample(verts, size))
    assert len(boundary_edges(graph, subset)) == \
        sum(graph.degree(v) for v in subset) - 2 * edges_inside(graph, subset)


@given(multigraphs(), st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_lift_degree_effect(graph, rnd):
    candidates = [v for v in graph.vertices if graph.degree(v) >= 2]
    if not candidates:
        return
    v = rnd.choice(sorted(candidates))
    e1, e2 = rnd.sample(graph.incident_edges(v), 2)
    far1 = next(x for x in graph.endpoints(e1) if x != v)
    far2 = next(x for x in graph.endpoints(e2) if x != v)
    if far1 == far2:
        return
    lifted = lift(graph, v, e1, e2)
    assert lifted.degree(v) == graph.degree(v) - 2
    for u in graph.vertices - {v}:
        assert lifted.degree(u) == graph.degree(u)


@given(multigraphs(), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_contract_nested_compose_and_disjoint_commute(graph, rnd):
    verts = graph.vertex_list()
    if len(verts) < 4:
        return
    a, b, c, d = rnd.sample(verts, 4)
    # nested: contracting {a,b} then folding in c equals contracting {a,b,c}
    step1, trace1 = contract(graph, {a, b})
    step2, _ = contract(step1, {trace1.image(a), c})
    direct, _ = contract(graph, {a, b, c})
    assert canonical_key(step2) == canonical_key(direct)
    # disjoint: order of contracting {a,b} and {c,d} is irrelevant
    left, tl = contract(graph, {a, b})
    left, _ = contract(left, {c, d})
    right, tr = contract(graph, {c, d})
    right, _ = contract(right, {a, b})
    assert canonical_key(left) == canonical_key(right)


def test_trace_maps_every_original_vertex():
    g = complete(5)
    result, trace = contract(g, {0, 1})
    result, trace = contract(result, {trace.image(2), trace.image(3)}, trace)
    assert set(trace.vertex_map) == set(g.vertices)
    assert {trace.image(v) for v in g.vertices} == set(result.vertices)
