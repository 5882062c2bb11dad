"""Named fixtures and seeded generators whose output satisfies a construction's hypotheses.

Generators colour first and then repair: any arc that takes part in a
violated colour condition and shares its colour with another arc of the
violation gets a colour never used before. An arc with a fresh colour is
globally unique, so each repair step strictly shrinks the set of arcs whose
colour is shared, and the loop ends after at most |A| steps per condition.
"""
from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass

from .conditions import (
    check_4cycles_min_colours,
    check_induced_pattern_rainbow,
    check_induced_tb4_properly,
    check_small_cycles_rainbow,
)
from .digraph import CB5, QT4, TB4, ArcColouredDigraph, PatternGraph, cycle_arcs, iter_cycles
from .errors import InvalidDigraph, UnknownFixture
from .verdict import Verdict

KINDS = ("unicyclic", "semicomplete", "quasi_transitive", "bipartite")
MAX_VERTICES = 64

Arc = tuple[int, int]


def _pattern_fixture(p: PatternGraph) -> ArcColouredDigraph:
    arcs = [(a, b, i + 1) for i, (a, b) in enumerate(p.arcs)]
    return ArcColouredDigraph(p.size, arcs, p.vertex_names)


def _fig4() -> ArcColouredDigraph:
    # x1 x2 | y1 y2 y3; colour 1 out of X except x2 -> y3, colour 2 back into X
    labels = ("x1", "x2", "y1", "y2", "y3")
    arcs = [(0, 2, 1), (0, 3, 1), (1, 4, 1), (4, 0, 2), (2, 1, 2), (3, 1, 2)]
    return ArcColouredDigraph(5, arcs, labels)


FIXTURES: dict[str, Callable[[], ArcColouredDigraph]] = {
    "QT4": lambda: _pattern_fixture(QT4),
    "CB5": lambda: _pattern_fixture(CB5),
    "TB4": lambda: _pattern_fixture(TB4),
    "FIG4": _fig4,
}


def fixture(name: str) -> ArcColouredDigraph:
    try:
        return FIXTURES[name.upper()]()
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None


@dataclass(frozen=True)
class GenProfile:
    """What to generate.

    ``n`` sizes every class except bipartite, which uses ``parts``.
    ``colouring`` is ``"injective"`` or ``"random"``; the latter draws from
    ``m`` colours before repair. ``p`` is the density knob: the chance of a
    symmetric partner (semicomplete) or of a seed arc (quasi-transitive).
    """

    kind: str
    n: int | None = None
    parts: tuple[int, int] | None = None
    colouring: str = "random"
    m: int = 3
    seed: int = 0
    p: float = 0.3

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown class {self.kind!r}; choose from {KINDS}")
        if self.colouring not in ("injective", "random"):
            raise ValueError("colouring must be 'injective' or 'random'")
        if self.m < 1:
            raise ValueError("m must be positive")
        if self.kind == "bipartite":
            if self.parts is None or min(self.parts) < 1:
                raise ValueError("bipartite profiles need parts (|X|, |Y|) with both >= 1")
            total = sum(self.parts)
        else:
            if self.n is None:
                raise ValueError(f"{self.kind} profiles need n")
            total = self.n
            least = 2 if self.kind == "unicyclic" else 1
            if self.n < least:
                raise ValueError(f"{self.kind} needs n >= {least}")
        if total > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices")


class _Palette:
    def __init__(self, rng: random.Random, profile: GenProfile) -> None:
        self.rng = rng
        self.profile = profile
        self.next_fresh = 1

    def colour(self, arcs: list[Arc]) -> dict[Arc, int]:
        if self.profile.colouring == "injective":
            colour = {a: i + 1 for i, a in enumerate(arcs)}
        else:
            colour = {a: self.rng.randint(1, self.profile.m) for a in arcs}
        self.next_fresh = max(colour.values(), default=0) + 1
        return colour

    def fresh(self) -> int:
        self.next_fresh += 1
        return self.next_fresh - 1


def _build(n: int, colour: dict[Arc, int]) -> ArcColouredDigraph:
    return ArcColouredDigraph(n, [(u, v, c) for (u, v), c in colour.items()])


def _rainbow_violation(arcs: list[Arc], colours: tuple[int, ...]) -> Arc:
    """An arc of the witness whose colour repeats within it."""
    return next(a for a, c in zip(arcs, colours) if colours.count(c) > 1)


def _violation_arcs(
    d: ArcColouredDigraph, check: Callable[[ArcColouredDigraph], Verdict]
) -> Arc | None:
    verdict = check(d)
    if verdict.ok:
        return None
    w = verdict.witness
    if hasattr(w, "cycle"):
        return _rainbow_violation(cycle_arcs(w.cycle), w.colours)
    pattern = {"QT4": QT4, "CB5": CB5, "TB4": TB4}[w.pattern]
    arcs = [(w.mapping[a], w.mapping[b]) for a, b in pattern.arcs]
    if w.pattern == "TB4":
        # the second arc of a monochromatic consecutive pair
        for i, (_, head) in enumerate(arcs):
            for j, (tail, _) in enumerate(arcs):
                if head == tail and w.colours[i] == w.colours[j]:
                    return arcs[j]
    return _rainbow_violation(arcs, w.colours)


def _repair(
    n: int,
    colour: dict[Arc, int],
    palette: _Palette,
    checks: list[Callable[[ArcColouredDigraph], Verdict]],
) -> dict[Arc, int]:
    while True:
        d = _build(n, colour)
        for check in checks:
            arc = _violation_arcs(d, check)
            if arc is not None:
                colour[arc] = palette.fresh()
                break
        else:
            return colour


def _finish(n: int, colour: dict[Arc, int], rng: random.Random) -> ArcColouredDigraph:
    """Shuffle vertex indices, name vertices v0.., and renumber colours 1..k by first use."""
    perm = list(range(n))
    rng.shuffle(perm)
    renumber: dict[int, int] = {}
    arcs = []
    for (u, v), c in sorted(colour.items(), key=lambda item: (perm[item[0][0]], perm[item[0][1]])):
        arcs.append((perm[u], perm[v], renumber.setdefault(c, len(renumber) + 1)))
    return ArcColouredDigraph(n, arcs, [f"v{i}" for i in range(n)])


def _unicyclic(profile: GenProfile, rng: random.Random, palette: _Palette) -> dict[Arc, int]:
    n = profile.n
    assert n is not None
    length = rng.randint(2, n)
    cycle = [(i, (i + 1) % length) for i in range(length)]
    arcs = list(cycle)
    for v in range(length, n):
        others = rng.sample(range(v), rng.randint(1, min(3, v)))
        outward = rng.random() < 0.5
        arcs.extend((v, w) if outward else (w, v) for w in others)
    colour = palette.colour(arcs)
    seen: set[int] = set()
    for a in cycle:
        if colour[a] in seen:
            colour[a] = palette.fresh()
        seen.add(colour[a])
    return colour


def _semicomplete(profile: GenProfile, rng: random.Random, palette: _Palette) -> dict[Arc, int]:
    n = profile.n
    assert n is not None
    arcs: list[Arc] = []
    for u in range(n):
        for v in range(u + 1, n):
            a, b = (u, v) if rng.random() < 0.5 else (v, u)
            arcs.append((a, b))
            if rng.random() < profile.p:
                arcs.append((b, a))
    colour = palette.colour(arcs)
    return _repair(n, colour, palette, [lambda d: check_small_cycles_rainbow(d, 3)])


def _quasi_transitive(profile: GenProfile, rng: random.Random, palette: _Palette) -> dict[Arc, int]:
    n = profile.n
    assert n is not None
    arcs = {(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < profile.p / 2}
    while True:
        gaps = [
            (u, w)
            for (u, v) in sorted(arcs)
            for (v2, w) in sorted(arcs)
            if v2 == v and u != w and (u, w) not in arcs and (w, u) not in arcs
        ]
        if not gaps:
            break
        u, w = gaps[0]
        arcs.add((u, w) if rng.random() < 0.5 else (w, u))
    colour = palette.colour(sorted(arcs))
    checks = [
        lambda d: check_small_cycles_rainbow(d, 3),
        lambda d: check_induced_pattern_rainbow(d, QT4),
    ]
    return _repair(n, colour, palette, checks)


def _bipartite(profile: GenProfile, rng: random.Random, palette: _Palette) -> dict[Arc, int]:
    assert profile.parts is not None
    nx, ny = profile.parts
    n = nx + ny
    bias = rng.uniform(0.25, 0.75)
    arcs = [
        (x, y) if rng.random() < bias else (y, x) for x in range(nx) for y in range(nx, n)
    ]
    colour = palette.colour(arcs)
    low = min(nx, ny)
    checks: list[Callable[[ArcColouredDigraph], Verdict]]
    if low == 2:
        checks = [lambda d: check_4cycles_min_colours(d, 3)]
    elif low >= 3:
        checks = [
            lambda d: check_small_cycles_rainbow(d, 4, list(iter_cycles(d, 4))),
            lambda d: check_small_cycles_rainbow(d, 6, list(iter_cycles(d, 6))),
            lambda d: check_induced_pattern_rainbow(d, CB5),
            check_induced_tb4_properly,
        ]
    else:
        checks = []
    return _repair(n, colour, palette, checks)


_GENERATORS = {
    "unicyclic": _unicyclic,
    "semicomplete": _semicomplete,
    "quasi_transitive": _quasi_transitive,
    "bipartite": _bipartite,
}


def generate(profile: GenProfile) -> ArcColouredDigraph:
    """A seeded instance of ``profile.kind`` satisfying that class's colour hypotheses."""
    rng = random.Random(profile.seed)
    palette = _Palette(rng, profile)
    colour = _GENERATORS[profile.kind](profile, rng, palette)
    n = sum(profile.parts) if profile.parts else profile.n
    assert n is not None
    try:
        return _finish(n, colour, rng)
    except InvalidDigraph as exc:  # pragma: no cover - generators only emit simple digraphs
        raise AssertionError(f"generator produced an invalid digraph: {exc}") from exc
