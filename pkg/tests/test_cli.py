import json

import pytest

from triflow import cli
from triflow.graphio import to_json

K4_TEXT = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
C6_TEXT = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(K4_TEXT)
    return str(path)


@pytest.fixture
def g3_file(tmp_path):
    from triflow import catalog
    path = tmp_path / "g3.json"
    path.write_text(to_json(catalog.get("G3").graph))
    return str(path)


def test_decide_mod3_exit_codes(k4_file, g3_file, tmp_path, capsys):
    assert cli.main(["decide", g3_file, "--mod3"]) == 1
    assert cli.main(["decide", k4_file, "--mod3"]) == 1
    c6 = tmp_path / "c6.txt"
    c6.write_text(C6_TEXT)
    assert cli.main(["decide", str(c6), "--mod3"]) == 0


def test_decide_missing_file_is_input_error(capsys):
    assert cli.main(["decide", "/nonexistent/graph.txt", "--mod3"]) == 2


def test_parse_loop_is_input_error(tmp_path, capsys):
    bad = tmp_path / "loop.txt"
    bad.write_text("2 1\n0 0\n")
    assert cli.main(["decide", str(bad), "--mod3"]) == 2
    err = capsys.readouterr().err
    assert "line 2" in err


def test_capability_exit_code(k4_file, capsys):
    assert cli.main(["verify", "r-table", "--n", "9"]) == 3


def test_decide_z3conn(k4_file, tmp_path, capsys):
    assert cli.main(["decide", k4_file, "--z3conn"]) == 1
    digon = tmp_path / "digon.txt"
    digon.write_text("2 2\n0 1\n0 1\n")
    assert cli.main(["decide", str(digon), "--z3conn"]) == 0


def test_decide_boundary_file(tmp_path, capsys):
    digon = tmp_path / "digon.txt"
    digon.write_text("2 2\n0 1\n0 1\n")
    bfile = tmp_path / "b.json"
    bfile.write_text(json.dumps({"0": 1, "1": 2}))
    assert cli.main(["decide", str(digon), "--boundary", str(bfile)]) == 0


def test_decide_witness_files(tmp_path, capsys):
    c6 = tmp_path / "c6.txt"
    c6.write_text(C6_TEXT)
    prefix = str(tmp_path / "wit")
    assert cli.main(["decide", str(c6), "--mod3", "--witness", prefix]) == 0
    dot = (tmp_path / "wit.dot").read_text()
    assert dot.startswith("digraph")
    arcs = json.loads((tmp_path / "wit.json").read_text())
    assert len(arcs) == 6


def test_json_output_is_deterministic(g3_file, capsys):
    cli.main(["decide", g3_file, "--mod3", "--json"])
    first = capsys.readouterr().out
    cli.main(["decide", g3_file, "--mod3", "--json"])
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["feasible"] is False


def test_connectivity_command(k4_file, capsys):
    assert cli.main(["connectivity", k4_file, "--odd", "--essential",
                     "--alpha", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["edge_connectivity"]["value"] == 3
    assert doc["odd_edge_connectivity"]["value"] == 3
    assert doc["essential_edge_connectivity"]["value"] == 4
    assert doc["independence_number"]["value"] == 1


def test_reduce_command(tmp_path, capsys):
    k5 = tmp_path / "k5.txt"
    pairs = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    k5.write_text("5 10\n" + "".join(f"{u} {v}\n" for u, v in pairs))
    trace_out = tmp_path / "trace.json"
    assert cli.main(["reduce", str(k5), "--json", "--trace", str(trace_out)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["reduced"]["vertices"]) == 1
    assert doc["cap_binding"] is False
    trace = json.loads(trace_out.read_text())
    assert trace["certified_complete"] is True


def test_wheel_and_wcontract_commands(tmp_path, capsys):
    host = tmp_path / "host.txt"
    # K4 plus an attached pendant triangle keeps the wheel proper.
    host.write_text("6 9\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n4 5\n5 3\n")
    assert cli.main(["wheel", str(host), "--odd", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    wheel = doc["wheel"]
    assert wheel["odd"] is True
    rim = ",".join(str(r) for r in wheel["rim"])
    x = ",".join(str(r) for r in wheel["rim"][:2])
    assert cli.main(["wcontract", str(host), "--center", str(wheel["center"]),
                     "--rim", rim, "--X", x, "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["result"]["vertices"]) == 4  # x, y, and the two pendant vertices

    c5 = tmp_path / "c5.txt"
    c5.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert cli.main(["wheel", str(c5), "--json"]) == 1


def test_catalog_cli(tmp_path, capsys):
    assert cli.main(["catalog", "list"]) == 0
    assert "G3" in capsys.readouterr().out

    assert cli.main(["catalog", "show", "G3", "--dot"]) == 0
    assert capsys.readouterr().out.startswith("graph")

    assert cli.main(["catalog", "show", "W", "--param", "4", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["graph"]["vertices"]) == 5

    assert cli.main(["catalog", "verify", "G3"]) == 0
    assert cli.main(["catalog", "show", "nosuch"]) == 2
    assert cli.main(["catalog", "show", "YLL-3"]) == 2


def test_catalog_render_and_report(tmp_path, capsys):
    render = tmp_path / "g3.png"
    assert cli.main(["catalog", "show", "G3", "--render", str(render)]) == 0
    assert render.stat().st_size > 0

    report_dir = tmp_path / "report"
    assert cli.main(["catalog", "verify", "K_5", "--report-dir", str(report_dir)]) == 0
    assert (report_dir / "catalog.csv").exists()
    assert (report_dir / "catalog.png").exists()


def test_verify_lemma_cli(capsys):
    assert cli.main(["verify", "lemma", "order13", "--samples", "2",
                     "--seed", "5", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] is True and doc["seed"] == 5
    assert cli.main(["verify", "lemma", "nosuch", "--samples", "1"]) == 2


def test_verify_r_table_cli(capsys):
    assert cli.main(["verify", "r-table", "--n", "5", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["matches_reference"] is True
    assert [row["max_edges"] for row in doc["table"]] == [0, 1, 3, 6, 8]


def test_verify_family_cli(g3_file, capsys):
    assert cli.main(["verify", "family", g3_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["in_f1"] is True and doc["in_f2"] is False


def test_edge_list_round_trip_through_cli_formats(tmp_path, capsys):
    from triflow.canonical import canonical_key
    from triflow.graphio import load_graph
    source = tmp_path / "g.txt"
    source.write_text("3 4\n0 1\n0 1\n1 2\n2 0\n")
    graph = load_graph(str(source))
    json_path = tmp_path / "g.json"
    json_path.write_text(to_json(graph))
    again = load_graph(str(json_path))
    assert canonical_key(graph) == canonical_key(again)
    assert sorted(graph.edges.items()) == sorted(again.edges.items())
