"""Graphviz DOT export with a fixed colour palette."""
from __future__ import annotations

import json
from collections.abc import Iterable

from .digraph import ArcColouredDigraph, Digraph

PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
    "#000080",
    "#808000",
)


def palette_colour(colour: int) -> str:
    """Colour ``c`` maps to palette slot ``c - 1``, wrapping after 12."""
    return PALETTE[(colour - 1) % len(PALETTE)]


def _quote(name: str) -> str:
    return json.dumps(name)


def to_dot(g: Digraph, kernel: Iterable[int] = (), name: str = "D") -> str:
    chosen = set(kernel)
    lines = [f"digraph {_quote(name)} {{", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = ' [style=filled, fillcolor="#ffd966"]' if v in chosen else ""
        lines.append(f"  {_quote(g.labels[v])}{attrs};")
    for u, v in g.arcs():
        attrs = ""
        if isinstance(g, ArcColouredDigraph):
            c = g.colour[(u, v)]
            attrs = f' [color="{palette_colour(c)}"'
            if c > len(PALETTE):
                attrs += f', label="{c}"'
            attrs += "]"
        lines.append(f"  {_quote(g.labels[u])} -> {_quote(g.labels[v])}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
