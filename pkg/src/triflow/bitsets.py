"""Vectorized all-subsets scans: cut sizes and weighted subset sums.

Subsets of a fixed vertex order are encoded as bitmask indices: bit ``i`` of
the index corresponds to the ``i``-th vertex of the order.  Arrays of size
``2**n`` hold one value per subset, built by doubling, which keeps the whole
enumeration inside numpy.
"""

from __future__ import annotations

import numpy as np

from .errors import CapabilityError
from .multigraph import Multigraph

SUBSET_SCAN_MAX_VERTICES = 24


def subset_sums(values: list[int]) -> np.ndarray:
    """``out[mask] = sum(values[i] for i in mask)`` for all ``2**len`` masks."""
    out = np.zeros(1, dtype=np.int64)
    for val in values:
        out = np.concatenate([out, out + val])
    return out


def _weight_matrix(graph: Multigraph, order: list[int]) -> np.ndarray:
    pos = {v: i for i, v in enumerate(order)}
    w = np.zeros((len(order), len(order)), dtype=np.int64)
    for u, v in graph.edges.values():
        w[pos[u], pos[v]] += 1
        w[pos[v], pos[u]] += 1
    return w


def inside_edge_counts(graph: Multigraph, order: list[int] | None = None) -> tuple[np.ndarray, list[int]]:
    """Edges spanned inside every subset of the vertex order (multiplicities count)."""
    if order is None:
        order = graph.vertex_list()
    if len(order) > SUBSET_SCAN_MAX_VERTICES:
        raise CapabilityError(
            f"subset enumeration is exact only up to {SUBSET_SCAN_MAX_VERTICES} vertices")
    w = _weight_matrix(graph, order)
    inside = np.zeros(1, dtype=np.int64)
    for k in range(len(order)):
        into_k = subset_sums(list(w[k, :k]))
        inside = np.concatenate([inside, inside + into_k])
    return inside, order


def all_cut_sizes(graph: Multigraph, order: list[int] | None = None) -> tuple[np.ndarray, list[int]]:
    """``cut[mask] = |boundary(S_mask)|`` for every subset of the vertex order."""
    inside, order = inside_edge_counts(graph, order)
    degs = subset_sums([graph.degree(v) for v in order])
    return degs - 2 * inside, order


def mask_to_set(mask: int, order: list[int]) -> frozenset[int]:
    return frozenset(order[i] for i in range(len(order)) if (mask >> i) & 1)


def lexicographic_min_witness(masks: np.ndarray, order: list[int]) -> frozenset[int]:
    """Among subset masks, the one whose sorted vertex tuple is lexicographically least."""
    best: tuple[int, ...] | None = None
    for mask in masks:
        cand = tuple(sorted(mask_to_set(int(mask), order)))
        if best is None or cand < best:
            best = cand
    assert best is not None
    return frozenset(best)
