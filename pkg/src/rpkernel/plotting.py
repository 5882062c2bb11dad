"""Render a digraph, its arc colours and an optional kernel to an image file."""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .conditions import bipartition  # noqa: E402
from .digraph import ArcColouredDigraph, Digraph  # noqa: E402
from .dot import palette_colour  # noqa: E402


def layout(g: Digraph) -> list[tuple[float, float]]:
    """Two columns for a bipartite tournament, otherwise a circle."""
    parts = bipartition(g)
    if parts is not None and g.arc_count:
        pos = [(0.0, 0.0)] * g.n
        for x, part in zip((-1.0, 1.0), parts):
            for i, v in enumerate(part):
                pos[v] = (x, 1.0 - 2.0 * (i + 0.5) / len(part))
        return pos
    if g.n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(math.pi / 2 - 2 * math.pi * v / g.n), math.sin(math.pi / 2 - 2 * math.pi * v / g.n))
        for v in range(g.n)
    ]


def render(
    g: Digraph,
    path: str | Path,
    kernel: Iterable[int] = (),
    title: str | None = None,
    pos: Sequence[tuple[float, float]] | None = None,
) -> Path:
    pos = list(pos) if pos is not None else layout(g)
    chosen = set(kernel)
    fig, ax = plt.subplots(figsize=(5, 5))
    for u, v in g.arcs():
        colour = palette_colour(g.colour[(u, v)]) if isinstance(g, ArcColouredDigraph) else "#444444"
        # bend both arcs of a symmetric pair so they stay apart
        rad = 0.18 if g.has_arc(v, u) else 0.0
        ax.add_patch(
            FancyArrowPatch(
                pos[u],
                pos[v],
                arrowstyle="-|>",
                mutation_scale=14,
                color=colour,
                lw=1.6,
                shrinkA=13,
                shrinkB=13,
                connectionstyle=f"arc3,rad={rad}",
            )
        )
    for v, (x, y) in enumerate(pos):
        face = "#ffd966" if v in chosen else "white"
        ax.scatter([x], [y], s=520, c=face, edgecolors="black", zorder=3)
        ax.text(x, y, g.labels[v], ha="center", va="center", fontsize=9, zorder=4)
    ax.set_aspect("equal")
    ax.margins(0.15)
    ax.axis("off")
    if title:
        ax.set_title(title)
    out = Path(path)
    fig.savefig(out, bbox_inches="tight", dpi=120)
    plt.close(fig)
    return out
