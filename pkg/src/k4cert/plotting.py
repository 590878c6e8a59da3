"""Matplotlib figures written next to the CLI's delimited reports."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .extractor import Certificate  # noqa: E402
from .graph import Graph  # noqa: E402

PALETTE = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3"]
UNUSED = "#d9d9d9"

plt.rcParams.update({
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.bbox": "tight",
})


def circular_layout(n: int) -> list[tuple[float, float]]:
    if n == 1:
        return [(0.0, 0.0)]
    return [(math.cos(2 * math.pi * i / n + math.pi / 2), math.sin(2 * math.pi * i / n + math.pi / 2))
            for i in range(n)]


def _ordered_vertices(g: Graph, cert: Certificate) -> list[int]:
    # group branch sets around the circle so clusters read as blobs
    if cert.minor is None:
        return list(g.vertices())
    order = [v for s in cert.minor.sets for v in sorted(s)]
    return order + [v for v in g.vertices() if v not in set(order)]


def plot_certificate(g: Graph, cert: Certificate, path, title: Optional[str] = None) -> Path:
    order = _ordered_vertices(g, cert)
    spots = circular_layout(len(order)) if order else []
    pos = {v: spots[i] for i, v in enumerate(order)}
    fig, ax = plt.subplots(figsize=(5, 5))
    witness = set()
    if cert.minor is not None:
        witness = {tuple(sorted(e)) for e in cert.minor.witness_edges.values()}
    for a, b in g.sorted_edges():
        bold = (a, b) in witness
        ax.plot([pos[a][0], pos[b][0]], [pos[a][1], pos[b][1]],
                color="black" if bold else "#999999", lw=2.2 if bold else 0.8,
                zorder=1 if not bold else 2)
    if cert.minor is not None:
        fill = {v: PALETTE[i] for i, s in enumerate(cert.minor.sets) for v in s}
    else:
        fill = {v: PALETTE[cert.coloring[v] - 1] for v in g.vertices()}
    for v in g.vertices():
        ax.scatter(*pos[v], s=320, color=fill.get(v, UNUSED), edgecolor="black", zorder=3)
        ax.annotate(str(v), pos[v], ha="center", va="center", fontsize=8, zorder=4)
    if cert.trace is not None:
        t = cert.trace
        marks = {t.xy[0]: "x", t.xy[1]: "y", t.linkage.u: "u", t.linkage.v: "v"}
        marks.setdefault(t.carving.w, "w")
        marks.setdefault(t.carving.z, "z")
        for v, label in marks.items():
            x, y = pos[v]
            ax.annotate(label, (x * 1.18, y * 1.18), ha="center", va="center",
                        fontsize=11, fontstyle="italic")
    if cert.minor is not None:
        for i in range(4):
            ax.scatter([], [], color=PALETTE[i], label=f"H{i + 1}")
    else:
        for c in range(1, 4):
            ax.scatter([], [], color=PALETTE[c - 1], label=f"colour {c}")
    ax.legend(loc="upper right", fontsize=8, frameon=False)
    ax.set_title(title or ("K4 minor" if cert.minor is not None else "proper 3-colouring"))
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.set_aspect("equal")
    ax.axis("off")
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_sweep(summary, path, title: str = "sweep outcomes by edge count") -> Path:
    ms = sorted(summary.by_edges)
    colorable = [summary.by_edges[m]["colorable"] for m in ms]
    minor = [summary.by_edges[m]["minor"] for m in ms]
    free = [summary.by_edges[m]["minor_free"] for m in ms]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar(ms, colorable, color=PALETTE[2], label="3-colourable")
    ax.bar(ms, minor, bottom=colorable, color=PALETTE[0], label="K4 minor emitted")
    ax.step(ms, free, where="mid", color="black", lw=1.2, label="K4-minor-free (reduction)")
    ax.set_xlabel("edges")
    ax.set_ylabel("graphs")
    ax.set_title(title)
    ax.legend(frameon=False, fontsize=8)
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
