"""The JSON instance document: ``{"vertices": [names], "arcs": [[from, to, colour], ...]}``."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .digraph import ArcColouredDigraph, Digraph
from .errors import DocumentError, InvalidDigraph


def parse_document(text: str) -> ArcColouredDigraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from None
    return from_document(doc)


def from_document(doc: Any) -> ArcColouredDigraph:
    if not isinstance(doc, dict) or set(doc) - {"vertices", "arcs"} or "vertices" not in doc:
        raise DocumentError('expected an object with keys "vertices" and "arcs"')
    names = doc["vertices"]
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise DocumentError('"vertices" must be a list of strings')
    index: dict[str, int] = {}
    for name in names:
        if name in index:
            raise DocumentError(f"duplicate vertex name {name!r}")
        index[name] = len(index)
    arcs = doc.get("arcs", [])
    if not isinstance(arcs, list):
        raise DocumentError('"arcs" must be a list')
    triples = []
    for i, arc in enumerate(arcs):
        if not (isinstance(arc, list) and len(arc) == 3):
            raise DocumentError(f"arc {i}: expected [from, to, colour]")
        u, v, c = arc
        for end in (u, v):
            if end not in index:
                raise DocumentError(f"arc {i}: undeclared vertex {end!r}")
        if isinstance(c, bool) or not isinstance(c, int) or c < 1:
            raise DocumentError(f"arc {i}: colour must be a positive integer, got {c!r}")
        triples.append((index[u], index[v], c))
    try:
        return ArcColouredDigraph(len(names), triples, names)
    except InvalidDigraph as exc:
        raise DocumentError(str(exc)) from None


def to_document(g: Digraph) -> dict[str, Any]:
    """Coloured arcs keep their colour; an uncoloured digraph writes ``null``."""
    colour = g.colour if isinstance(g, ArcColouredDigraph) else {}
    return {
        "vertices": list(g.labels),
        "arcs": [[g.labels[u], g.labels[v], colour.get((u, v))] for u, v in g.arcs()],
    }


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def serialize(g: Digraph) -> str:
    """Keys sorted like :func:`dumps`, but one arc per line."""
    doc = to_document(g)
    rows = [json.dumps(arc) for arc in doc["arcs"]]
    arcs = "[\n" + ",\n".join(f"    {r}" for r in rows) + "\n  ]" if rows else "[]"
    return f'{{\n  "arcs": {arcs},\n  "vertices": {json.dumps(doc["vertices"])}\n}}\n'


def load(path: str | Path) -> ArcColouredDigraph:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def save(g: Digraph, path: str | Path) -> None:
    Path(path).write_text(serialize(g), encoding="utf-8")
