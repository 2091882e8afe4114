"""Report rendering: delimited check records plus matplotlib figures."""

from __future__ import annotations

import csv
import math
import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .multigraph import Multigraph, Orientation  # noqa: E402


def write_check_csv(rows: Sequence[dict[str, object]], path: str) -> None:
    """One row per check: ``check, passed, details, elapsed_s``."""
    fields = ["check", "passed", "details", "elapsed_s"]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row.get(k, "") for k in fields})


def render_summary(rows: Sequence[dict[str, object]], path: str) -> None:
    """Horizontal pass/fail bar chart of check wall times."""
    names = [str(r["check"]) for r in rows]
    times = [float(r.get("elapsed_s", 0.0) or 0.0) for r in rows]
    colors = ["#2a9d4e" if r["passed"] else "#c03a2b" for r in rows]
    fig, ax = plt.subplots(figsize=(7, max(2.0, 0.45 * len(rows) + 1)))
    ypos = range(len(rows))
    ax.barh(ypos, times, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xlabel("wall time (s)")
    passed = sum(1 for r in rows if r["passed"])
    ax.set_title(f"verification checks: {passed}/{len(rows)} passed")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _layout(graph: Multigraph,
            preset: dict[int, tuple[float, float]] | None) -> dict[int, tuple[float, float]]:
    if preset is not None and set(preset) >= set(graph.vertices):
        return {v: preset[v] for v in graph.vertices}
    order = graph.vertex_list()
    n = max(len(order), 1)
    return {v: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
            for i, v in enumerate(order)}


def render_graph(graph: Multigraph, path: str,
                 orientation: Orientation | None = None,
                 layout: dict[int, tuple[float, float]] | None = None,
                 title: str = "") -> None:
    """Draw the multigraph; parallel edges bow apart, orientations get arrows."""
    pos = _layout(graph, layout)
    fig, ax = plt.subplots(figsize=(4.2, 4.2))
    parallel_seen: dict[frozenset[int], int] = {}
    for eid, u, v in graph.edge_list():
        key = frozenset((u, v))
        rank = parallel_seen.get(key, 0)
        parallel_seen[key] = rank + 1
        total = graph.multiplicity(u, v)
        bow = 0.0 if total == 1 else 0.25 * (rank - (total - 1) / 2)
        tail, head = (u, v)
        if orientation is not None:
            tail, head = orientation.arcs[eid]
        (x1, y1), (x2, y2) = pos[tail], pos[head]
        style = f"arc3,rad={bow}"
        arrow = "-|>" if orientation is not None else "-"
        ax.annotate("", xy=(x2, y2), xytext=(x1, y1),
                    arrowprops={"arrowstyle": arrow, "connectionstyle": style,
                                "color": "#44546a", "shrinkA": 9, "shrinkB": 9})
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    ax.scatter(xs, ys, s=220, zorder=3, color="#f2b134", edgecolors="#44546a")
    for v, (x, y) in pos.items():
        ax.annotate(str(v), (x, y), ha="center", va="center", zorder=4, fontsize=8)
    ax.set_axis_off()
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    margin = 0.3
    ax.set_xlim(min(xs) - margin, max(xs) + margin)
    ax.set_ylim(min(ys) - margin, max(ys) + margin)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(rows: Sequence[dict[str, object]], outdir: str,
                 stem: str = "report") -> tuple[str, str]:
    """CSV plus summary figure in ``outdir``; returns both paths."""
    os.makedirs(outdir, exist_ok=True)
    csv_path = os.path.join(outdir, f"{stem}.csv")
    png_path = os.path.join(outdir, f"{stem}.png")
    write_check_csv(rows, csv_path)
    render_summary(rows, png_path)
    return csv_path, png_path
