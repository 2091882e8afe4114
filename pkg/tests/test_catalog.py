import pytest

from helpers import complete, cycle
from triflow import catalog
from triflow.canonical import canonical_key
from triflow.errors import CatalogError
from triflow.multigraph import Multigraph


def test_g3_shape():
    entry = catalog.get("G3")
    g = entry.graph
    assert g.n == 6 and g.m == 11
    assert g.degree_sequence() == [5, 5, 3, 3, 3, 3]
    deg5 = [v for v in g.vertices if g.degree(v) == 5]
    assert len(deg5) == 2 and g.multiplicity(*deg5) == 1
    for v in g.vertices:
        if g.degree(v) == 3:
            assert all(g.multiplicity(v, d) == 1 for d in deg5)


def test_g5_is_a_five_wheel():
    g = catalog.get("G5").graph
    assert g.n == 6 and g.m == 10
    from triflow.reduction import find_wheel
    witness = find_wheel(g)
    assert witness is not None and len(witness.rim) == 5
    assert g.degree(witness.center) == 5


def test_g18_shape():
    g = catalog.get("G18").graph
    assert g.n == 8 and g.m == 16
    assert g.degree_sequence() == [5, 5, 5, 5, 3, 3, 3, 3]


def test_fz9_is_k5_minus_two_incident_edges():
    g = catalog.get("FZ-9").graph
    assert g.m == 8
    reference = Multigraph.from_edge_pairs(
        5, [(u, v) for u in range(5) for v in range(u + 1, 5)
            if (u, v) not in ((0, 1), (0, 2))])
    assert canonical_key(g) == canonical_key(reference)


def test_fz5_is_k4_and_fz11_fz12_are_cycles():
    assert canonical_key(catalog.get("FZ-5").graph) == canonical_key(complete(4))
    assert canonical_key(catalog.get("FZ-11").graph) == canonical_key(cycle(4))
    assert canonical_key(catalog.get("FZ-12").graph) == canonical_key(cycle(3))


def test_fz2_fz3_fz8_duplicate_named_graphs():
    assert canonical_key(catalog.get("FZ-2").graph) == canonical_key(catalog.get("G3").graph)
    assert canonical_key(catalog.get("FZ-3").graph) == canonical_key(catalog.get("G5").graph)
    assert canonical_key(catalog.get("FZ-8").graph) == canonical_key(catalog.get("G4").graph)


def test_all_twelve_ore_exceptions_satisfy_ore_condition():
    for i in range(1, 13):
        graph = catalog.get(f"FZ-{i}").graph
        assert catalog.ore_condition(graph), f"FZ-{i}"


def test_parametric_families():
    w4 = catalog.get("W", 4)
    assert w4.graph.n == 5 and w4.graph.m == 8
    assert catalog.get("K", 5).graph.m == 10
    assert catalog.get("C", 2).graph.multiplicity(0, 1) == 2
    assert catalog.get("K_4").graph.m == 6
    with pytest.raises(CatalogError):
        catalog.get("W")
    with pytest.raises(CatalogError):
        catalog.get("C", 1)


def test_unknown_name_and_placeholders():
    with pytest.raises(CatalogError):
        catalog.get("nosuch")
    with pytest.raises(CatalogError, match="not depicted"):
        catalog.get("YLL-7")
    assert "YLL-18" in catalog.list_names()


def test_get_returns_fresh_copies():
    a = catalog.get("G3").graph
    b = catalog.get("G3").graph
    assert a == b and a is not b


def test_verify_claims_g3():
    report = catalog.verify_claims("G3")
    assert report.ok
    props = {r.prop: r.actual for r in report.results}
    assert props["has_mod3"] is False
    assert props["z3_connected"] is False
    assert props["z3_reduced"] is True
    assert props["edge_connectivity"] == 3
    assert props["independence_number"] == 2


def test_verify_claims_flow_admissible_exceptions():
    for i in range(7, 13):
        report = catalog.verify_claims(f"FZ-{i}")
        assert report.ok, f"FZ-{i}: {[r for r in report.results if not r.ok]}"
        props = {r.prop: r.actual for r in report.results}
        assert props["has_mod3"] is True
        assert props["z3_connected"] is False


def test_claims_reject_unknown_property():
    with pytest.raises(CatalogError):
        catalog._decide(complete(3), "chromatic_number")
