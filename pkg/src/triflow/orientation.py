"""Orientation feasibility machinery.

Three independent decision routes are shipped on purpose:

* exact-imbalance orientation by a max-flow construction (prescribe the
  out-degree ``(deg(v) + target(v)) / 2`` at every vertex) — the witness path;
* a dynamic program over all per-vertex imbalance residues achievable by any
  orientation, which decides every boundary of a small graph at once;
* brute-force enumeration of all ``2**m`` orientations, capped at 20 edges,
  kept solely as a cross-validation oracle.

Residue-target searches enumerate per-vertex candidate imbalances.  Both the
parity and the residue constraint pin each candidate list to one residue
class mod 6, so the lists are arithmetic progressions with step 6 and the
zero-sum filter can prune exactly: every surviving prefix extends to a
zero-sum assignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from .bitsets import all_cut_sizes, lexicographic_min_witness, subset_sums
from .errors import CapabilityError, DomainError
from .maxflow import Dinic
from .multigraph import Multigraph, Orientation

__all__ = [
    "ImbalanceSpec", "Z3Boundary", "hakimi_feasible", "orient_with_imbalance",
    "hakimi_infeasibility_witness", "hakimi_cut_violation", "mod3_orientation",
    "z3_orientation", "z3_feasible", "is_z3_connected", "achievable_boundaries",
    "admissible_boundaries", "mod3_orientable_bruteforce",
    "hakimi_feasible_bruteforce", "z3_feasible_bruteforce",
]

ACHIEVABLE_DP_MAX_VERTICES = 15
Z3_CONNECTIVITY_MAX_VERTICES = 24
BRUTEFORCE_MAX_EDGES = 20


@dataclass(frozen=True)
class ImbalanceSpec:
    """Exact integer target ``out-degree - in-degree`` per vertex."""

    targets: Mapping[int, int]

    def validate(self, graph: Multigraph) -> None:
        if set(self.targets) != set(graph.vertices):
            raise DomainError("imbalance spec must assign every vertex exactly once")
        if sum(self.targets.values()) != 0:
            raise DomainError("imbalance targets must sum to zero")
        for v, target in self.targets.items():
            d = graph.degree(v)
            if (target - d) % 2:
                raise DomainError(f"target at vertex {v} has the wrong parity")
            if abs(target) > d:
                raise DomainError(f"target at vertex {v} exceeds its degree")

    def __getitem__(self, v: int) -> int:
        return self.targets[v]


@dataclass(frozen=True)
class Z3Boundary:
    """Per-vertex residue in {0, 1, 2} summing to 0 mod 3."""

    values: Mapping[int, int]

    def validate(self, graph: Multigraph) -> None:
        if set(self.values) != set(graph.vertices):
            raise DomainError("boundary must assign every vertex exactly once")
        if sum(self.values.values()) % 3:
            raise DomainError("boundary values must sum to 0 mod 3")

    def normalized(self) -> dict[int, int]:
        return {v: val % 3 for v, val in self.values.items()}

    def negated(self) -> "Z3Boundary":
        return Z3Boundary({v: (-val) % 3 for v, val in self.values.items()})

    @classmethod
    def zero(cls, graph: Multigraph) -> "Z3Boundary":
        return cls({v: 0 for v in graph.vertices})


def _as_spec(spec: ImbalanceSpec | Mapping[int, int]) -> ImbalanceSpec:
    return spec if isinstance(spec, ImbalanceSpec) else ImbalanceSpec(dict(spec))


def _as_boundary(b: Z3Boundary | Mapping[int, int]) -> Z3Boundary:
    bnd = b if isinstance(b, Z3Boundary) else Z3Boundary(dict(b))
    return Z3Boundary(bnd.normalized())


# -- exact-imbalance orientation (max-flow construction) -------------------------


def _flow_network(graph: Multigraph, spec: ImbalanceSpec):
    order = graph.vertex_list()
    pos = {v: i for i, v in enumerate(order)}
    eids = sorted(graph.edges)
    m, n = len(eids), len(order)
    source, sink = m + n, m + n + 1
    net = Dinic(m + n + 2)
    piece: list[tuple[int, int]] = []
    for i, eid in enumerate(eids):
        u, v = graph.endpoints(eid)
        net.add_edge(source, i, 1)
        piece.append((net.add_edge(i, m + pos[u], 1), net.add_edge(i, m + pos[v], 1)))
    for v in order:
        out_target = (graph.degree(v) + spec[v]) // 2
        net.add_edge(m + pos[v], sink, out_target)
    return net, eids, order, piece, source, sink


def orient_with_imbalance(graph: Multigraph,
                          spec: ImbalanceSpec | Mapping[int, int]) -> Orientation | None:
    """Witness orientation with the exact prescribed imbalances, or ``None``.

    Each edge is assigned to the endpoint that becomes its tail; feasibility
    is a max-flow saturating all edge nodes.  Returned witnesses are always
    revalidated against the spec.
    """
    spec = _as_spec(spec)
    spec.validate(graph)
    net, eids, _, piece, source, sink = _flow_network(graph, spec)
    if net.max_flow(source, sink) < len(eids):
        return None
    arcs = {}
    for i, eid in enumerate(eids):
        u, v = graph.endpoints(eid)
        arcs[eid] = (u, v) if net.flow_on(piece[i][0]) == 1 else (v, u)
    orientation = Orientation(arcs)
    achieved = orientation.imbalances()
    for v in graph.vertices:
        if achieved.get(v, 0) != spec[v]:
            raise AssertionError("orientation witness failed revalidation")
    return orientation


def hakimi_feasible(graph: Multigraph, spec: ImbalanceSpec | Mapping[int, int]) -> bool:
    """Whether some orientation attains the exact imbalance targets."""
    return orient_with_imbalance(graph, spec) is not None


def hakimi_infeasibility_witness(graph: Multigraph,
                                 spec: ImbalanceSpec | Mapping[int, int]) -> frozenset[int] | None:
    """A vertex set violating the cut condition, from the max-flow min cut."""
    spec = _as_spec(spec)
    spec.validate(graph)
    net, eids, order, _, source, sink = _flow_network(graph, spec)
    if net.max_flow(source, sink) >= len(eids):
        return None
    reach = net.reachable_from(source)
    m = len(eids)
    witness = frozenset(order[i - m] for i in reach if m <= i < m + len(order))
    total = sum(spec[v] for v in witness)
    cut = sum(1 for u, v in graph.edges.values() if (u in witness) != (v in witness))
    if abs(total) <= cut:
        raise AssertionError("extracted cut certificate does not violate the bound")
    return witness


def hakimi_cut_violation(graph: Multigraph,
                         spec: ImbalanceSpec | Mapping[int, int]) -> frozenset[int] | None:
    """Exhaustive-subset oracle: a set with ``|sum targets| > |boundary|``, if any."""
    spec = _as_spec(spec)
    spec.validate(graph)
    if graph.n < 2:
        return None
    cuts, order = all_cut_sizes(graph)
    sums = subset_sums([spec[v] for v in order])
    bad = np.abs(sums) > cuts
    bad[0] = bad[-1] = False
    if not bad.any():
        return None
    return lexicographic_min_witness(np.nonzero(bad)[0], order)


def hakimi_feasible_subsets(graph: Multigraph,
                            spec: ImbalanceSpec | Mapping[int, int]) -> bool:
    return hakimi_cut_violation(graph, spec) is None


# -- residue-target candidate search ----------------------------------------------


def _residue_mod6(degree: int, residue3: int) -> int:
    for r in range(6):
        if r % 2 == degree % 2 and r % 3 == residue3 % 3:
            return r
    raise AssertionError("unreachable")


def _candidate_lists(graph: Multigraph, boundary: Z3Boundary) -> list[tuple[int, list[int]]] | None:
    out = []
    values = boundary.normalized()
    for v in graph.vertex_list():
        d = graph.degree(v)
        r = _residue_mod6(d, values[v])
        lo = -d + ((r - (-d)) % 6)
        candidates = list(range(lo, d + 1, 6))
        if not candidates:
            return None
        out.append((v, candidates))
    out.sort(key=lambda item: (-len(item[1]), item[0]))
    return out


def _zero_sum_assignments(lists: list[tuple[int, list[int]]]) -> Iterator[dict[int, int]]:
    """All ways to pick one candidate per vertex with total zero.

    The suffix-range filter is exact because every candidate list is a full
    arithmetic progression with step 6, so no explored prefix dead-ends.
    """
    k = len(lists)
    suffix_min = [0] * (k + 1)
    suffix_max = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix_min[i] = suffix_min[i + 1] + lists[i][1][0]
        suffix_max[i] = suffix_max[i + 1] + lists[i][1][-1]
    chosen: dict[int, int] = {}

    def walk(i: int, partial: int) -> Iterator[dict[int, int]]:
        if i == k:
            if partial == 0:
                yield dict(chosen)
            return
        v, candidates = lists[i]
        for c in candidates:
            rest = -(partial + c)
            if suffix_min[i + 1] <= rest <= suffix_max[i + 1]:
                chosen[v] = c
                yield from walk(i + 1, partial + c)
        chosen.pop(lists[i][0], None)

    yield from walk(0, 0)


# -- achievable-residue dynamic program ---------------------------------------------


def achievable_boundaries(graph: Multigraph) -> tuple[np.ndarray, list[int]]:
    """Boolean table over all ``3**(n-1)`` boundaries: which are realizable.

    The index packs the residues of every vertex except the smallest one
    (whose residue is forced by the zero-sum constraint) in base 3 along the
    sorted vertex order.
    """
    order = graph.vertex_list()
    n = len(order)
    if n > ACHIEVABLE_DP_MAX_VERTICES:
        raise CapabilityError(
            f"boundary table supports at most {ACHIEVABLE_DP_MAX_VERTICES} vertices")
    size = 3 ** max(n - 1, 0)
    table = np.zeros(size, dtype=bool)
    table[0] = True
    if graph.m == 0:
        return table, order
    pos = {v: i - 1 for i, v in enumerate(order)}
    pow3 = np.array([3 ** i for i in range(max(n - 1, 0))], dtype=np.int64)
    idx = np.arange(size, dtype=np.int64)

    def bump(indices: np.ndarray, p: int, delta: int) -> np.ndarray:
        digit = (indices // pow3[p]) % 3
        return indices + pow3[p] * (((digit + delta) % 3) - digit)

    for _, u, v in graph.edge_list():
        pu, pv = pos[u], pos[v]
        back_plus = idx
        back_minus = idx
        if pu >= 0:
            back_plus = bump(back_plus, pu, -1)
            back_minus = bump(back_minus, pu, +1)
        if pv >= 0:
            back_plus = bump(back_plus, pv, +1)
            back_minus = bump(back_minus, pv, -1)
        table = table[back_plus] | table[back_minus]
    return table, order


def _boundary_index(boundary: Z3Boundary, order: list[int]) -> int:
    values = boundary.normalized()
    return sum(values[order[i]] * 3 ** (i - 1) for i in range(1, len(order)))


# -- public deciders -----------------------------------------------------------------


def z3_orientation(graph: Multigraph,
                   boundary: Z3Boundary | Mapping[int, int]) -> Orientation | None:
    """Witness orientation whose imbalance is ``boundary`` mod 3, or ``None``."""
    bnd = _as_boundary(boundary)
    bnd.validate(graph)
    if graph.m == 0:
        return Orientation({}) if all(val == 0 for val in bnd.normalized().values()) else None
    if graph.n <= ACHIEVABLE_DP_MAX_VERTICES:
        table, order = achievable_boundaries(graph)
        if not table[_boundary_index(bnd, order)]:
            return None
    lists = _candidate_lists(graph, bnd)
    if lists is None:
        return None
    values = bnd.normalized()
    for assignment in _zero_sum_assignments(lists):
        witness = orient_with_imbalance(graph, assignment)
        if witness is not None:
            achieved = witness.imbalances()
            for v in graph.vertices:
                if achieved.get(v, 0) % 3 != values[v]:
                    raise AssertionError("orientation witness failed residue revalidation")
            return witness
    if graph.n <= ACHIEVABLE_DP_MAX_VERTICES:
        raise AssertionError("boundary table and candidate search disagree")
    return None


def z3_feasible(graph: Multigraph, boundary: Z3Boundary | Mapping[int, int]) -> bool:
    bnd = _as_boundary(boundary)
    bnd.validate(graph)
    if graph.m == 0:
        return all(val == 0 for val in bnd.normalized().values())
    if graph.n <= ACHIEVABLE_DP_MAX_VERTICES:
        table, order = achievable_boundaries(graph)
        return bool(table[_boundary_index(bnd, order)])
    return z3_orientation(graph, bnd) is not None


def mod3_orientation(graph: Multigraph) -> Orientation | None:
    """An orientation with every imbalance divisible by 3, or ``None``."""
    return z3_orientation(graph, Z3Boundary.zero(graph))


def admissible_boundaries(graph: Multigraph) -> Iterator[Z3Boundary]:
    """All boundaries summing to 0 mod 3, deterministically ordered."""
    order = graph.vertex_list()
    if not order:
        return
    for rest in itertools.product(range(3), repeat=len(order) - 1):
        first = (-sum(rest)) % 3
        yield Z3Boundary(dict(zip(order, (first, *rest))))


def is_z3_connected(graph: Multigraph) -> bool:
    """Whether every admissible boundary admits a realizing orientation."""
    if graph.n <= 1:
        return True
    if graph.n > Z3_CONNECTIVITY_MAX_VERTICES:
        raise CapabilityError(
            f"Z3-connectivity decision supports at most {Z3_CONNECTIVITY_MAX_VERTICES} vertices")
    if not graph.is_connected():
        return False
    if graph.n <= ACHIEVABLE_DP_MAX_VERTICES:
        table, _ = achievable_boundaries(graph)
        return bool(table.all())
    # Beyond the table size: sweep boundaries; b and -b stand or fall together
    # (reverse every arc), so only the smaller of each pair is checked.
    for bnd in admissible_boundaries(graph):
        key = tuple(sorted(bnd.normalized().items()))
        neg_key = tuple(sorted(bnd.negated().normalized().items()))
        if key > neg_key:
            continue
        if z3_orientation(graph, bnd) is None:
            return False
    return True


# -- brute-force oracles (testing only) -----------------------------------------------


def _imbalance_chunks(graph: Multigraph, chunk: int = 1 << 14):
    if graph.m > BRUTEFORCE_MAX_EDGES:
        raise CapabilityError(
            f"brute-force enumeration is capped at {BRUTEFORCE_MAX_EDGES} edges")
    order = graph.vertex_list()
    pos = {v: i for i, v in enumerate(order)}
    eids = sorted(graph.edges)
    m = len(eids)
    incidence = np.zeros((m, len(order)), dtype=np.int16)
    for i, eid in enumerate(eids):
        u, v = graph.endpoints(eid)
        incidence[i, pos[u]] += 1
        incidence[i, pos[v]] -= 1
    total = 1 << m
    shifts = np.arange(m, dtype=np.int64)
    for start in range(0, total, chunk):
        ks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        signs = (((ks[:, None] >> shifts) & 1) * 2 - 1).astype(np.int16)
        yield order, signs @ incidence


def mod3_orientable_bruteforce(graph: Multigraph) -> bool:
    if graph.m == 0:
        return True
    return any((imb % 3 == 0).all(axis=1).any() for _, imb in _imbalance_chunks(graph))


def hakimi_feasible_bruteforce(graph: Multigraph,
                               spec: ImbalanceSpec | Mapping[int, int]) -> bool:
    spec = _as_spec(spec)
    spec.validate(graph)
    if graph.m == 0:
        return True
    for order, imb in _imbalance_chunks(graph):
        target = np.array([spec[v] for v in order], dtype=np.int16)
        if (imb == target).all(axis=1).any():
            return True
    return False


def z3_feasible_bruteforce(graph: Multigraph,
                           boundary: Z3Boundary | Mapping[int, int]) -> bool:
    bnd = _as_boundary(boundary)
    bnd.validate(graph)
    values = bnd.normalized()
    if graph.m == 0:
        return all(val == 0 for val in values.values())
    for order, imb in _imbalance_chunks(graph):
        target = np.array([values[v] for v in order], dtype=np.int16)
        if (imb % 3 == target).all(axis=1).any():
            return True
    return False
