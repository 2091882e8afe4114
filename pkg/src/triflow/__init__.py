"""triflow: exact deciders for nowhere-zero 3-flow questions on multigraphs.

Decides mod-3 orientation existence (equivalently, nowhere-zero 3-flows) and
Z3-connectivity, performs the associated graph reductions (contracting
Z3-connected subgraphs, lifting/splitting, odd-wheel contraction), and ships
a catalog of the small exceptional graphs together with verification sweeps
of the structural facts the deciders rest on.
"""

from .catalog import CatalogEntry, get as catalog_get, verify_claims
from .connectivity import (CutReport, edge_connectivity, essential_edge_connectivity,
                           independence_number, neighborhood_closure,
                           odd_edge_connectivity)
from .errors import (CapabilityError, CatalogError, DomainError, LoopEdgeError,
                     ParseError, TriflowError, UnknownLemmaError)
from .graphio import (load_graph, parse_graph, to_dot, to_edgelist, to_graph6,
                      to_json, to_json_dict)
from .multigraph import (Multigraph, Orientation, ReductionTrace, boundary_edges,
                         contract, cross_edges, lift, underlying_simple)
from .orientation import (ImbalanceSpec, Z3Boundary, hakimi_feasible,
                          is_z3_connected, mod3_orientation, orient_with_imbalance,
                          z3_feasible, z3_orientation)
from .reduction import (WContractionSpec, WheelWitness, find_wheel, find_z3_subgraph,
                        is_z3_reduced, split_vertex, w_contract, z3_reduce)
from .verifier import (FamilyVerdict, decide_nz3f, family_verdict, lemma_sweep,
                       r_table, r_table_details)

__version__ = "0.1.0"

__all__ = [
    "Multigraph", "Orientation", "ReductionTrace", "ImbalanceSpec", "Z3Boundary",
    "CutReport", "WheelWitness", "WContractionSpec", "CatalogEntry", "FamilyVerdict",
    "boundary_edges", "cross_edges", "contract", "lift", "underlying_simple",
    "edge_connectivity", "odd_edge_connectivity", "essential_edge_connectivity",
    "independence_number", "neighborhood_closure",
    "hakimi_feasible", "orient_with_imbalance", "mod3_orientation", "z3_orientation",
    "z3_feasible", "is_z3_connected",
    "find_wheel", "w_contract", "find_z3_subgraph", "z3_reduce", "is_z3_reduced",
    "split_vertex",
    "catalog_get", "verify_claims", "r_table", "r_table_details", "family_verdict",
    "decide_nz3f", "lemma_sweep",
    "load_graph", "parse_graph", "to_dot", "to_edgelist", "to_graph6", "to_json",
    "to_json_dict",
    "TriflowError", "DomainError", "LoopEdgeError", "ParseError", "CapabilityError",
    "CatalogError", "UnknownLemmaError",
]
