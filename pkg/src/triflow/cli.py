"""Command-line entry point.

Exit codes: 0 feasible/pass, 1 infeasible/fail, 2 usage or input error,
3 capability error.  ``--json`` output is deterministic (byte-identical for
identical argv, input, and seed); wall-clock numbers only appear with
``--timing`` or in the stderr run record.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import catalog as catalog_mod
from . import verifier
from .errors import CapabilityError, DomainError, ParseError, TriflowError
from .graphio import load_graph, to_dot, to_json, to_json_dict
from .multigraph import Multigraph, Orientation
from .orientation import Z3Boundary, is_z3_connected, mod3_orientation, z3_orientation
from .reduction import WContractionSpec, WheelWitness, find_wheel, w_contract, z3_reduce

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2
EXIT_CAPABILITY = 3


def _digest(graph: Multigraph) -> str:
    return hashlib.sha256(to_json(graph).encode()).hexdigest()[:16]


def _emit(doc: dict, as_json: bool, lines: list[str] | None = None) -> None:
    if as_json:
        print(json.dumps(doc, sort_keys=True))
    elif lines:
        for line in lines:
            print(line)


def _run_record(command: str, digest: str, verdict: object, start: float,
                witness_ref: str | None = None, **params: object) -> None:
    record = {"command": command, "input": digest, "params": params,
              "verdict": verdict, "witness": witness_ref,
              "wall_ms": round(1000 * (time.time() - start), 1)}
    print(json.dumps(record, sort_keys=True), file=sys.stderr)


def _load(args: argparse.Namespace) -> Multigraph:
    return load_graph(args.file, getattr(args, "format", "auto"))


def _write_witness(graph: Multigraph, orientation: Orientation, prefix: str) -> str:
    with open(prefix + ".dot", "w", encoding="utf-8") as fh:
        fh.write(to_dot(graph, orientation))
    with open(prefix + ".json", "w", encoding="utf-8") as fh:
        json.dump({str(eid): list(arc) for eid, arc in sorted(orientation.arcs.items())},
                  fh, sort_keys=True, indent=2)
    return prefix + ".dot"


# -- subcommands ----------------------------------------------------------------------


def cmd_connectivity(args: argparse.Namespace) -> int:
    from .connectivity import (edge_connectivity, essential_edge_connectivity,
                               independence_number, odd_edge_connectivity)
    start = time.time()
    graph = _load(args)
    doc: dict[str, object] = {"n": graph.n, "m": graph.m}
    lines = []
    kappa = edge_connectivity(graph)
    doc["edge_connectivity"] = {"value": kappa.cut_size, "witness": sorted(kappa.witness)}
    lines.append(f"edge connectivity: {kappa.cut_size}  witness {sorted(kappa.witness)}")
    if args.odd:
        rep = odd_edge_connectivity(graph)
        doc["odd_edge_connectivity"] = (None if rep is None else
                                        {"value": rep.cut_size, "witness": sorted(rep.witness)})
        lines.append("odd edge connectivity: " +
                     ("absent (every cut is even)" if rep is None else
                      f"{rep.cut_size}  witness {sorted(rep.witness)}"))
    if args.essential:
        rep = essential_edge_connectivity(graph)
        doc["essential_edge_connectivity"] = (None if rep is None else
                                              {"value": rep.cut_size,
                                               "witness": sorted(rep.witness)})
        lines.append("essential edge connectivity: " +
                     ("absent" if rep is None else
                      f"{rep.cut_size}  witness {sorted(rep.witness)}"))
    if args.alpha:
        value, witness = independence_number(graph)
        doc["independence_number"] = {"value": value, "witness": sorted(witness)}
        lines.append(f"independence number: {value}  witness {sorted(witness)}")
    _emit(doc, args.json, lines)
    _run_record("connectivity", _digest(graph), doc["edge_connectivity"], start)
    return EXIT_OK


def cmd_decide(args: argparse.Namespace) -> int:
    start = time.time()
    graph = _load(args)
    witness: Orientation | None = None
    if args.z3conn:
        feasible = is_z3_connected(graph)
        question = "z3-connected"
    elif args.boundary:
        with open(args.boundary, encoding="utf-8") as fh:
            raw = json.load(fh)
        boundary = Z3Boundary({int(k): int(v) for k, v in raw.items()})
        witness = z3_orientation(graph, boundary)
        feasible = witness is not None
        question = "boundary-orientation"
    else:
        witness = mod3_orientation(graph)
        feasible = witness is not None
        question = "mod3-orientation"
    witness_ref = None
    if args.witness and witness is not None:
        witness_ref = _write_witness(graph, witness, args.witness)
    doc: dict[str, object] = {"question": question, "feasible": feasible}
    if witness is not None and args.witness is None:
        doc["orientation"] = {str(eid): list(arc)
                              for eid, arc in sorted(witness.arcs.items())}
    _emit(doc, args.json, [f"{question}: {'feasible' if feasible else 'infeasible'}"])
    _run_record("decide", _digest(graph), feasible, start, witness_ref,
                question=question)
    return EXIT_OK if feasible else EXIT_INFEASIBLE


def cmd_reduce(args: argparse.Namespace) -> int:
    start = time.time()
    graph = _load(args)
    cap = args.cap if args.cap is not None else max(graph.n, 2)
    reduced, trace = z3_reduce(graph, cap)
    doc = {
        "reduced": to_json_dict(reduced),
        "cap": cap,
        "cap_binding": not trace.certified_complete,
        "contractions": [{"merged": sorted(e.merged), "new": e.new_id, "kind": e.note}
                         for e in trace.events],
    }
    if args.trace:
        trace_doc = {"events": doc["contractions"],
                     "vertex_map": {str(k): v for k, v in sorted(trace.vertex_map.items())},
                     "size_cap": cap, "certified_complete": trace.certified_complete}
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump(trace_doc, fh, sort_keys=True, indent=2)
    lines = [f"reduced to {reduced.n} vertices, {reduced.m} edges "
             f"in {len(trace.events)} contractions",
             "cap was binding (result certified only within the cap)"
             if not trace.certified_complete else "cap was not binding"]
    _emit(doc, args.json, lines)
    _run_record("reduce", _digest(graph), f"{reduced.n}v/{reduced.m}e", start, cap=cap)
    return EXIT_OK


def cmd_wheel(args: argparse.Namespace) -> int:
    start = time.time()
    graph = _load(args)
    parity = "odd" if args.odd else ("even" if args.even else "any")
    found = find_wheel(graph, parity)
    doc = {"parity": parity,
           "wheel": None if found is None else
           {"center": found.center, "rim": list(found.rim), "odd": found.odd}}
    lines = ["no wheel found" if found is None else
             f"wheel: center {found.center}, rim {list(found.rim)} "
             f"({'odd' if found.odd else 'even'})"]
    _emit(doc, args.json, lines)
    _run_record("wheel", _digest(graph), found is not None, start, parity=parity)
    return EXIT_OK if found is not None else EXIT_INFEASIBLE


def cmd_wcontract(args: argparse.Namespace) -> int:
    start = time.time()
    graph = _load(args)
    rim = tuple(int(x) for x in args.rim.split(","))
    x_part = frozenset(int(x) for x in args.X.split(","))
    wheel = WheelWitness(args.center, rim)
    spec = WContractionSpec(wheel, x_part, wheel.vertex_set - x_part)
    result, trace = w_contract(graph, spec)
    doc = {"result": to_json_dict(result),
           "contractions": [{"merged": sorted(e.merged), "new": e.new_id}
                            for e in trace.events]}
    _emit(doc, args.json, [f"contracted to {result.n} vertices, {result.m} edges"])
    _run_record("wcontract", _digest(graph), f"{result.n}v/{result.m}e", start)
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    start = time.time()
    if args.action == "list":
        for name in catalog_mod.list_names():
            print(name)
        return EXIT_OK
    if args.action == "show":
        entry = catalog_mod.get(args.name, args.param)
        if args.dot:
            print(to_dot(entry.graph, name=entry.name.replace("-", "_")), end="")
        elif args.json:
            _emit({"name": entry.name, "description": entry.description,
                   "graph": to_json_dict(entry.graph),
                   "claims": [[p, e] for p, e in entry.claims]}, True)
        else:
            print(f"{entry.name}: {entry.description}")
            print(f"  {entry.graph.n} vertices, {entry.graph.m} edges, "
                  f"degrees {entry.graph.degree_sequence()}")
            for prop, expected in entry.claims:
                print(f"  claim {prop} = {expected}")
        if args.render:
            from .report import render_graph
            render_graph(entry.graph, args.render, layout=entry.layout, title=entry.name)
        return EXIT_OK
    # verify
    targets = (catalog_mod.VERIFY_ALL_NAMES if args.all
               else [(args.name, args.param)])
    rows = []
    all_ok = True
    t0 = time.time()
    for name, param in targets:
        t1 = time.time()
        report = catalog_mod.verify_claims(name, param)
        all_ok &= report.ok
        detail = "; ".join(f"{r.prop}={r.actual}" +
                           ("" if r.ok else f" (expected {r.expected})")
                           for r in report.results)
        rows.append({"check": report.name, "passed": report.ok, "details": detail,
                     "elapsed_s": round(time.time() - t1, 3)})
        if not args.json:
            print(f"{report.name}: {'PASS' if report.ok else 'FAIL'}  {detail}")
    doc: dict[str, object] = {"entries": [{"name": r["check"], "passed": r["passed"],
                                           "details": r["details"]} for r in rows],
                              "all_passed": all_ok}
    if args.timing:
        doc["elapsed_s"] = round(time.time() - t0, 3)
    _emit(doc, args.json)
    if args.report_dir:
        from .report import render_graph, write_report
        write_report(rows, args.report_dir, stem="catalog")
        for name, param in targets:
            try:
                entry = catalog_mod.get(name, param)
            except TriflowError:
                continue
            render_graph(entry.graph,
                         os.path.join(args.report_dir, f"{entry.name}.png"),
                         layout=entry.layout, title=entry.name)
    _run_record("catalog-verify", "-", all_ok, start)
    return EXIT_OK if all_ok else EXIT_INFEASIBLE


def cmd_verify(args: argparse.Namespace) -> int:
    start = time.time()
    if args.target == "r-table":
        upper = args.n
        rows = []
        values = []
        for n in range(1, upper + 1):
            res = verifier.r_table_details(n, allow_slow=args.long)
            values.append(res.max_edges)
            rows.append({"order": n, "max_edges": res.max_edges,
                         "extremal_classes": len(res.extremal)})
            if not args.json:
                print(f"r({n}) = {res.max_edges}  ({len(res.extremal)} extremal class"
                      f"{'es' if len(res.extremal) != 1 else ''})")
        expected = list(verifier.R_TABLE_REFERENCE[:upper])
        ok = values == expected
        _emit({"table": rows, "matches_reference": ok}, args.json)
        _run_record("verify-r-table", "-", ok, start, n=upper)
        return EXIT_OK if ok else EXIT_INFEASIBLE
    if args.target == "family":
        graph = load_graph(args.file, args.format)
        verdict = verifier.family_verdict(graph)
        doc = {"in_f1": verdict.in_f1, "in_f2": verdict.in_f2,
               "evidence": verdict.evidence, "notes": list(verdict.notes)}
        _emit(doc, args.json,
              [f"in F1: {verdict.in_f1}", f"in F2: {verdict.in_f2}"] +
              [f"  {k} = {v}" for k, v in verdict.evidence.items()])
        _run_record("verify-family", _digest(graph),
                    {"f1": verdict.in_f1, "f2": verdict.in_f2}, start)
        return EXIT_OK
    if args.target == "lemma":
        report = verifier.lemma_sweep(args.id, args.samples, args.seed)
        doc = report.to_dict()
        _emit(doc, args.json,
              [f"lemma {report.lemma_id}: checked {report.checked}, "
               f"triggered {report.triggered}, violations {len(report.violations)}"]
              + [f"  note: {n}" for n in report.notes])
        if report.violations and not args.json:
            print(json.dumps(report.violations[0], sort_keys=True))
        _run_record("verify-lemma", "-", report.passed, start,
                    lemma=args.id, samples=args.samples, seed=args.seed)
        return EXIT_OK if report.passed else EXIT_INFEASIBLE
    # verify all
    rows = []
    all_ok = True
    for check_id, runner in verifier.acceptance_checks():
        result = runner()
        all_ok &= result.passed
        rows.append({"check": result.check_id, "passed": result.passed,
                     "details": result.details, "elapsed_s": result.elapsed_s})
        print(f"{result.check_id}: {'PASS' if result.passed else 'FAIL'}  "
              f"[{result.elapsed_s}s] {result.details}")
    if args.json:
        doc = {"checks": [{"check": r["check"], "passed": r["passed"],
                           "details": r["details"]} for r in rows],
               "all_passed": all_ok}
        if args.timing:
            doc["checks"] = rows
        print(json.dumps(doc, sort_keys=True))
    if args.report_dir:
        from .report import write_report
        write_report(rows, args.report_dir, stem="verify")
    _run_record("verify-all", "-", all_ok, start)
    return EXIT_OK if all_ok else EXIT_INFEASIBLE


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triflow",
        description="Exact deciders for mod-3 orientations, Z3-connectivity, "
                    "and graph reductions on loopless multigraphs.")
    parser.add_argument("--threads", type=int, default=1,
                        help="cap on worker threads (current implementation is "
                             "sequential; accepted for interface stability)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--timing", action="store_true",
                       help="include wall times in JSON output")
        p.add_argument("--format", default="auto",
                       choices=["auto", "edgelist", "json", "graph6"])

    p = sub.add_parser("connectivity", help="cut and independence parameters")
    p.add_argument("file")
    p.add_argument("--odd", action="store_true")
    p.add_argument("--essential", action="store_true")
    p.add_argument("--alpha", action="store_true")
    common(p)
    p.set_defaults(func=cmd_connectivity)

    p = sub.add_parser("decide", help="orientation feasibility questions")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--mod3", action="store_true", help="mod-3 orientation (default)")
    group.add_argument("--z3conn", action="store_true", help="Z3-connectivity")
    group.add_argument("--boundary", metavar="B_FILE",
                       help="JSON map vertex -> residue in {0,1,2}")
    p.add_argument("--witness", metavar="PREFIX",
                   help="write PREFIX.dot and PREFIX.json with the orientation")
    common(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("reduce", help="contract Z3-connected subgraphs to a fixed point")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None,
                   help="largest subgraph size searched (default: full)")
    p.add_argument("--trace", metavar="OUT_JSON", help="write the contraction trace")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("wheel", help="find a wheel subgraph")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--odd", action="store_true")
    group.add_argument("--even", action="store_true")
    common(p)
    p.set_defaults(func=cmd_wheel)

    p = sub.add_parser("wcontract", help="contract an odd wheel into a single edge")
    p.add_argument("file")
    p.add_argument("--center", type=int, required=True)
    p.add_argument("--rim", required=True, help="comma-separated rim cycle")
    p.add_argument("--X", required=True, dest="X",
                   help="comma-separated part of the partition (two adjacent "
                        "rim vertices, or its complement)")
    common(p)
    p.set_defaults(func=cmd_wcontract)

    p = sub.add_parser("catalog", help="built-in graphs and their claims")
    cat_sub = p.add_subparsers(dest="action", required=True)
    pl = cat_sub.add_parser("list")
    pl.set_defaults(func=cmd_catalog, action="list")
    ps = cat_sub.add_parser("show")
    ps.add_argument("name")
    ps.add_argument("--param", type=int, default=None)
    ps.add_argument("--dot", action="store_true")
    ps.add_argument("--render", metavar="OUT_PNG")
    common(ps)
    ps.set_defaults(func=cmd_catalog, action="show")
    pv = cat_sub.add_parser("verify")
    pv.add_argument("name", nargs="?", default=None)
    pv.add_argument("--param", type=int, default=None)
    pv.add_argument("--all", action="store_true")
    pv.add_argument("--report-dir", default=None)
    common(pv)
    pv.set_defaults(func=cmd_catalog, action="verify")

    p = sub.add_parser("verify", help="theorem-level verification suites")
    ver_sub = p.add_subparsers(dest="target", required=True)
    pr = ver_sub.add_parser("r-table")
    pr.add_argument("--n", type=int, default=6)
    pr.add_argument("--long", action="store_true",
                    help="allow the hours-scale order-7 enumeration")
    common(pr)
    pr.set_defaults(func=cmd_verify, target="r-table")
    pf = ver_sub.add_parser("family")
    pf.add_argument("file")
    common(pf)
    pf.set_defaults(func=cmd_verify, target="family")
    pm = ver_sub.add_parser("lemma")
    pm.add_argument("id")
    pm.add_argument("--samples", type=int, required=True)
    pm.add_argument("--seed", type=int, default=0,
                    help="sweep seed (recorded in the report; default 0)")
    common(pm)
    pm.set_defaults(func=cmd_verify, target="lemma")
    pa = ver_sub.add_parser("all")
    pa.add_argument("--report-dir", default=None)
    common(pa)
    pa.set_defaults(func=cmd_verify, target="all")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (ParseError, DomainError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TriflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
