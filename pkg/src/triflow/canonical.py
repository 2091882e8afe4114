"""Canonical forms of small multigraphs.

Iterative colour refinement plus individualization backtracking; a leaf's
encoding is the upper triangle of the multiplicity matrix in the leaf order,
and the canonical form is the lexicographic minimum over all leaves.
Automorphisms discovered from equal-encoding leaves prune sibling branches,
which keeps highly symmetric graphs (complete graphs, wheels) tractable.
"""

from __future__ import annotations

from .multigraph import Multigraph

__all__ = ["canonical_key", "canonical_order", "are_isomorphic"]


def _refine(w: list[list[int]], colors: list[int]) -> list[int]:
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted((colors[u], w[v][u]) for u in range(n) if w[v][u])
            sigs.append((colors[v], tuple(nbr)))
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new_colors = [ranking[sig] for sig in sigs]
        if len(set(new_colors)) == len(set(colors)):
            return new_colors
        colors = new_colors


def _first_nonsingleton_cell(colors: list[int]) -> list[int]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    for c in sorted(cells):
        if len(cells[c]) > 1:
            return cells[c]
    return []


def _individualize(colors: list[int], v: int) -> list[int]:
    sigs = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
    return [ranking[sig] for sig in sigs]


def _encode(w: list[list[int]], perm: list[int]) -> tuple[int, ...]:
    n = len(perm)
    return tuple(w[perm[i]][perm[j]] for i in range(n) for j in range(i + 1, n))


class _Canonicalizer:
    def __init__(self, w: list[list[int]]):
        self.w = w
        self.n = len(w)
        self.best: tuple[int, ...] | None = None
        self.best_perm: list[int] | None = None
        self.first: tuple[int, ...] | None = None
        self.first_perm: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def run(self) -> None:
        init = [0] * self.n
        self._descend(_refine(self.w, init), [])

    def _leaf(self, colors: list[int]) -> None:
        perm = sorted(range(self.n), key=lambda v: colors[v])
        enc = _encode(self.w, perm)
        if self.first is None:
            self.first, self.first_perm = enc, perm
        elif enc == self.first:
            assert self.first_perm is not None
            auto = [0] * self.n
            for i in range(self.n):
                auto[self.first_perm[i]] = perm[i]
            self.automorphisms.append(auto)
        if self.best is None or enc < self.best:
            self.best, self.best_perm = enc, perm

    def _descend(self, colors: list[int], prefix: list[int]) -> None:
        cell = _first_nonsingleton_cell(colors)
        if not cell:
            self._leaf(colors)
            return
        tried: set[int] = set()
        for v in cell:
            if any(a[v] in tried and all(a[p] == p for p in prefix)
                   for a in self.automorphisms):
                tried.add(v)
                continue
            tried.add(v)
            self._descend(_refine(self.w, _individualize(colors, v)), prefix + [v])


def _multiplicity_matrix(graph: Multigraph) -> tuple[list[list[int]], list[int]]:
    order = graph.vertex_list()
    pos = {v: i for i, v in enumerate(order)}
    w = [[0] * len(order) for _ in order]
    for u, v in graph.edges.values():
        w[pos[u]][pos[v]] += 1
        w[pos[v]][pos[u]] += 1
    return w, order


def canonical_order(graph: Multigraph) -> list[int]:
    """Vertices listed so that relabelling by position yields the canonical form."""
    w, order = _multiplicity_matrix(graph)
    if not order:
        return []
    solver = _Canonicalizer(w)
    solver.run()
    assert solver.best_perm is not None
    return [order[i] for i in solver.best_perm]


def canonical_key(graph: Multigraph) -> bytes:
    """A label-independent fingerprint: equal keys mean isomorphic multigraphs."""
    w, order = _multiplicity_matrix(graph)
    n = len(order)
    if n == 0:
        return b"\x00"
    solver = _Canonicalizer(w)
    solver.run()
    assert solver.best is not None
    payload = [n]
    for mult in solver.best:
        if mult > 250:
            raise ValueError("multiplicities above 250 are not supported")
        payload.append(mult)
    return bytes(payload)


def are_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_key(g) == canonical_key(h)
