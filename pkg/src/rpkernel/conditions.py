"""Digraph class recognition and the colouring hypotheses each constructor relies on."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import islice
from typing import Any

from .digraph import (
    CB5,
    QT4,
    TB4,
    ArcColouredDigraph,
    Digraph,
    PatternGraph,
    bits,
    cycle_arcs,
    induced_copies,
    iter_cycles,
)
from .verdict import Verdict

# condition names, shared with the solver's PreconditionFailed messages and the CLI
UNIQUE_CYCLE_RAINBOW = "unique cycle rainbow"
CYCLES3_RAINBOW = "3-cycles rainbow"
CYCLES4_RAINBOW = "4-cycles rainbow"
CYCLES6_RAINBOW = "6-cycles rainbow"
CYCLES4_MIN3 = "4-cycles >= 3 colours"
QT4_RAINBOW = "induced QT4 rainbow"
CB5_RAINBOW = "induced CB5 rainbow"
TB4_PROPER = "induced TB4 properly coloured"


@dataclass(frozen=True)
class CycleWitness:
    cycle: tuple[int, ...]
    colours: tuple[int, ...]

    def to_json(self, labels: Sequence[str]) -> dict[str, Any]:
        return {"cycle": [labels[v] for v in self.cycle], "colours": list(self.colours)}

    def describe(self, labels: Sequence[str]) -> str:
        cycle = " ".join(labels[v] for v in self.cycle)
        return f"cycle {cycle} colours {' '.join(map(str, self.colours))}"


@dataclass(frozen=True)
class CopyWitness:
    pattern: str
    mapping: tuple[int, ...]
    colours: tuple[int, ...]

    def to_json(self, labels: Sequence[str]) -> dict[str, Any]:
        names = _pattern(self.pattern).vertex_names
        return {
            "pattern": self.pattern,
            "copy": {p: labels[v] for p, v in zip(names, self.mapping)},
            "colours": list(self.colours),
        }

    def describe(self, labels: Sequence[str]) -> str:
        names = _pattern(self.pattern).vertex_names
        copy = " ".join(f"{p}={labels[v]}" for p, v in zip(names, self.mapping))
        return f"{self.pattern} copy {copy} colours {' '.join(map(str, self.colours))}"


def _pattern(name: str) -> PatternGraph:
    return {"QT4": QT4, "CB5": CB5, "TB4": TB4}[name]


def _cycle_colours(d: ArcColouredDigraph, cycle: Sequence[int]) -> tuple[int, ...]:
    return tuple(d.colour[a] for a in cycle_arcs(cycle))


# -- class detectors ----------------------------------------------------


def is_semicomplete(d: Digraph) -> bool:
    return all(d.neighbours(v) | 1 << v == d.all_mask for v in range(d.n))


def is_tournament(d: Digraph) -> bool:
    return is_semicomplete(d) and not any(d.out[v] & d.inn[v] for v in range(d.n))


def is_quasi_transitive(d: Digraph) -> bool:
    """Whenever u -> v -> w with u != w, the vertices u and w are adjacent."""
    for v in range(d.n):
        for u in bits(d.inn[v]):
            if (d.out[v] & ~(1 << u)) & ~d.neighbours(u):
                return False
    return True


def bipartition(d: Digraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """The parts (X, Y) if ``d`` is a bipartite tournament, X holding vertex 0.

    Every cross pair must carry exactly one arc; symmetric pairs are rejected.
    """
    if d.n < 2:
        return None
    side = [-1] * d.n
    side[0] = 0
    queue = [0]
    for v in queue:
        for w in bits(d.neighbours(v)):
            if side[w] < 0:
                side[w] = 1 - side[v]
                queue.append(w)
    if -1 in side:
        return None
    for u in range(d.n):
        for v in range(u + 1, d.n):
            forward, backward = d.has_arc(u, v), d.has_arc(v, u)
            if side[u] == side[v]:
                if forward or backward:
                    return None
            elif forward == backward:
                return None
    xs = tuple(v for v in range(d.n) if side[v] == 0)
    ys = tuple(v for v in range(d.n) if side[v] == 1)
    return xs, ys


def is_bipartite_tournament(d: Digraph) -> Verdict:
    parts = bipartition(d)
    return Verdict(parts is not None, parts)


def is_unicyclic(d: Digraph) -> Verdict:
    """True iff ``d`` has exactly one directed cycle; the witness is that cycle."""
    found = list(islice(iter_cycles(d), 2))
    if len(found) == 1:
        return Verdict(True, found[0])
    return Verdict(False, found[1] if found else None, f"{'no' if not found else 'several'} cycles")


# -- colouring hypotheses ----------------------------------------------


def _cycles_of_length(d: Digraph, k: int, cycles: Sequence[tuple[int, ...]] | None):
    pool = cycles if cycles is not None else iter_cycles(d, k)
    return (c for c in pool if len(c) == k)


def check_small_cycles_rainbow(
    d: ArcColouredDigraph, k: int, cycles: Sequence[tuple[int, ...]] | None = None
) -> Verdict:
    """Every cycle of length exactly ``k`` has pairwise distinct arc colours."""
    return check_cycles_min_colours(d, k, k, cycles)


def check_cycles_min_colours(
    d: ArcColouredDigraph, k: int, threshold: int, cycles: Sequence[tuple[int, ...]] | None = None
) -> Verdict:
    for cycle in _cycles_of_length(d, k, cycles):
        colours = _cycle_colours(d, cycle)
        if len(set(colours)) < threshold:
            return Verdict(False, CycleWitness(cycle, colours))
    return Verdict(True)


def check_4cycles_min_colours(
    d: ArcColouredDigraph, threshold: int = 3, cycles: Sequence[tuple[int, ...]] | None = None
) -> Verdict:
    return check_cycles_min_colours(d, 4, threshold, cycles)


def _copy_colours(d: ArcColouredDigraph, p: PatternGraph, f: Sequence[int]) -> tuple[int, ...]:
    return tuple(d.colour[(f[a], f[b])] for a, b in p.arcs)


def check_induced_pattern_rainbow(
    d: ArcColouredDigraph,
    pattern: PatternGraph,
    copies: Sequence[tuple[int, ...]] | None = None,
) -> Verdict:
    if copies is None:
        copies = induced_copies(d, pattern)
    for f in copies:
        colours = _copy_colours(d, pattern, f)
        if len(set(colours)) < len(colours):
            return Verdict(False, CopyWitness(pattern.name, f, colours))
    return Verdict(True)


def check_induced_tb4_properly(
    d: ArcColouredDigraph, copies: Sequence[tuple[int, ...]] | None = None
) -> Verdict:
    """In every induced TB4, consecutive arcs of the copy differ in colour."""
    if copies is None:
        copies = induced_copies(d, TB4)
    consecutive = [
        (i, j)
        for i, (_, b) in enumerate(TB4.arcs)
        for j, (a, _) in enumerate(TB4.arcs)
        if a == b
    ]
    for f in copies:
        colours = _copy_colours(d, TB4, f)
        if any(colours[i] == colours[j] for i, j in consecutive):
            return Verdict(False, CopyWitness(TB4.name, f, colours))
    return Verdict(True)


# -- combined report ----------------------------------------------------


@dataclass
class ClassReport:
    n: int
    colour_count: int
    is_unicyclic: bool
    is_semicomplete: bool
    is_tournament: bool
    is_quasi_transitive: bool
    is_bipartite_tournament: bool
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    unique_cycle: tuple[int, ...] | None = None
    conditions: dict[str, Verdict] = field(default_factory=dict)

    def hypotheses(self) -> dict[str, list[str]]:
        """Conditions each constructor needs, keyed by method tag (class-matching tags only)."""
        out: dict[str, list[str]] = {}
        if self.is_unicyclic:
            out["unicyclic"] = [UNIQUE_CYCLE_RAINBOW]
        if self.is_semicomplete:
            out["semicomplete"] = [CYCLES3_RAINBOW]
        if self.is_quasi_transitive:
            out["quasi_transitive"] = [CYCLES3_RAINBOW, QT4_RAINBOW]
        if self.is_bipartite_tournament and self.parts is not None:
            low = min(len(p) for p in self.parts)
            if self.colour_count <= 1 or low <= 1:
                out["bipartite"] = []
            elif low == 2:
                out["bipartite"] = [CYCLES4_MIN3]
            else:
                out["bipartite"] = [CYCLES4_RAINBOW, CYCLES6_RAINBOW, CB5_RAINBOW, TB4_PROPER]
        return out

    def applicable(self) -> list[str]:
        return [
            method
            for method, needs in self.hypotheses().items()
            if all(self.conditions[c].ok for c in needs)
        ]

    def to_json(self, labels: Sequence[str]) -> dict[str, Any]:
        conditions = {}
        for name, verdict in self.conditions.items():
            entry: dict[str, Any] = {"pass": verdict.ok}
            if not verdict.ok and verdict.witness is not None:
                entry["witness"] = verdict.witness.to_json(labels)
            conditions[name] = entry
        classes: dict[str, Any] = {
            "unicyclic": self.is_unicyclic,
            "semicomplete": self.is_semicomplete,
            "tournament": self.is_tournament,
            "quasi_transitive": self.is_quasi_transitive,
            "bipartite_tournament": self.is_bipartite_tournament,
        }
        doc: dict[str, Any] = {
            "vertices": self.n,
            "colours": self.colour_count,
            "classes": classes,
            "conditions": conditions,
            "applicable": self.applicable(),
        }
        if self.parts is not None:
            doc["bipartition"] = [[labels[v] for v in part] for part in self.parts]
        if self.unique_cycle is not None:
            doc["unique_cycle"] = [labels[v] for v in self.unique_cycle]
        return doc


def classify(d: ArcColouredDigraph) -> ClassReport:
    """Run every detector and every colour condition, sharing the enumerations."""
    cycles = list(iter_cycles(d, 6))
    uni = is_unicyclic(d)
    parts = bipartition(d)
    report = ClassReport(
        n=d.n,
        colour_count=d.colour_count,
        is_unicyclic=uni.ok,
        is_semicomplete=is_semicomplete(d),
        is_tournament=is_tournament(d),
        is_quasi_transitive=is_quasi_transitive(d),
        is_bipartite_tournament=parts is not None,
        parts=parts,
        unique_cycle=uni.witness if uni.ok else None,
    )
    cond = report.conditions
    if uni.ok:
        cycle = uni.witness
        cond[UNIQUE_CYCLE_RAINBOW] = check_small_cycles_rainbow(d, len(cycle), [cycle])
    cond[CYCLES3_RAINBOW] = check_small_cycles_rainbow(d, 3, cycles)
    cond[CYCLES4_RAINBOW] = check_small_cycles_rainbow(d, 4, cycles)
    cond[CYCLES6_RAINBOW] = check_small_cycles_rainbow(d, 6, cycles)
    cond[CYCLES4_MIN3] = check_4cycles_min_colours(d, 3, cycles)
    cond[QT4_RAINBOW] = check_induced_pattern_rainbow(d, QT4)
    cond[CB5_RAINBOW] = check_induced_pattern_rainbow(d, CB5)
    cond[TB4_PROPER] = check_induced_tb4_properly(d)
    return report
