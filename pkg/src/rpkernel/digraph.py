"""Arc-coloured digraphs on vertices ``0..n-1`` with bitmask adjacency.

Adjacency is stored densely as one ``int`` bitmask per vertex (out and in);
neighbour lists are derived on demand. Every structural search in the
package runs on the bitmasks.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from itertools import permutations
import heapq

from .errors import EmptyVertexSet, InvalidDigraph


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Digraph:
    """Uncoloured digraph without loops or parallel arcs."""

    __slots__ = ("n", "out", "inn", "labels", "origin")

    def __init__(
        self,
        n: int,
        arcs: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
        origin: Sequence[int] | None = None,
    ) -> None:
        if n < 0:
            raise InvalidDigraph(f"negative vertex count {n}")
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidDigraph(f"arc ({u}, {v}) leaves the vertex range 0..{n - 1}")
            if u == v:
                raise InvalidDigraph(f"loop at vertex {u}")
            if out[u] >> v & 1:
                raise InvalidDigraph(f"parallel arc ({u}, {v})")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self.out: tuple[int, ...] = tuple(out)
        self.inn: tuple[int, ...] = tuple(inn)
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise InvalidDigraph("label count does not match vertex count")
        self.labels: tuple[str, ...] = tuple(labels)
        # index of each vertex in the digraph this one was induced from
        self.origin: tuple[int, ...] = tuple(origin) if origin is not None else tuple(range(n))

    # -- basic queries --------------------------------------------------

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.out[u])]

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.out[u] | self.inn[u]) >> v & 1)

    def neighbours(self, u: int) -> int:
        return self.out[u] | self.inn[u]

    def out_neighbours(self, u: int) -> list[int]:
        return list(bits(self.out[u]))

    def in_neighbours(self, u: int) -> list[int]:
        return list(bits(self.inn[u]))

    def out_degree(self, u: int) -> int:
        return self.out[u].bit_count()

    def in_degree(self, u: int) -> int:
        return self.inn[u].bit_count()

    def is_symmetric_arc(self, u: int, v: int) -> bool:
        return self.has_arc(u, v) and self.has_arc(v, u)

    def sources(self) -> list[int]:
        return [v for v in range(self.n) if not self.inn[v]]

    def sinks(self) -> list[int]:
        return [v for v in range(self.n) if not self.out[v]]

    def asymmetric_part(self) -> Digraph:
        """Spanning subdigraph keeping only the arcs whose reverse is absent."""
        return Digraph(
            self.n,
            [(u, v) for u, v in self.arcs() if not self.has_arc(v, u)],
            self.labels,
        )

    def uncoloured(self) -> Digraph:
        return Digraph(self.n, self.arcs(), self.labels, self.origin)

    def label_set(self, vertices: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in sorted(vertices)]

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.out == other.out

    def __hash__(self) -> int:
        return hash((self.n, self.out))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, arcs={self.arcs()!r})"


class ArcColouredDigraph(Digraph):
    """Digraph with a colour (positive integer) on every arc.

    Colours need not be contiguous; ``colour_count`` is the number of
    distinct colours that actually occur.
    """

    __slots__ = ("colour", "_colour_index")

    def __init__(
        self,
        n: int,
        arcs: Iterable[tuple[int, int, int]] = (),
        labels: Sequence[str] | None = None,
        origin: Sequence[int] | None = None,
    ) -> None:
        arcs = list(arcs)
        super().__init__(n, [(u, v) for u, v, _ in arcs], labels, origin)
        colour: dict[tuple[int, int], int] = {}
        for u, v, c in arcs:
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise InvalidDigraph(f"arc ({u}, {v}) has invalid colour {c!r}")
            colour[(u, v)] = c
        self.colour: Mapping[tuple[int, int], int] = colour
        palette = sorted(set(colour.values()))
        self._colour_index = {c: i for i, c in enumerate(palette)}

    @classmethod
    def from_digraph(cls, g: Digraph, colour: Mapping[tuple[int, int], int]) -> ArcColouredDigraph:
        return cls(g.n, [(u, v, colour[(u, v)]) for u, v in g.arcs()], g.labels, g.origin)

    @property
    def colour_count(self) -> int:
        return len(self._colour_index)

    def colours(self) -> list[int]:
        return sorted(self._colour_index)

    def colour_bit(self, u: int, v: int) -> int:
        """Single-bit mask identifying the colour of arc (u, v)."""
        return 1 << self._colour_index[self.colour[(u, v)]]

    def coloured_arcs(self) -> list[tuple[int, int, int]]:
        return [(u, v, self.colour[(u, v)]) for u, v in self.arcs()]

    def recoloured(self, colour: Mapping[tuple[int, int], int]) -> ArcColouredDigraph:
        return ArcColouredDigraph.from_digraph(self, colour)

    def path_colours(self, path: Sequence[int]) -> list[int]:
        return [self.colour[(a, b)] for a, b in zip(path, path[1:])]

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and self.out == other.out and dict(self.colour) == dict(other.colour)

    def __hash__(self) -> int:
        return hash((self.n, self.out, tuple(sorted(self.colour.items()))))

    def __repr__(self) -> str:
        return f"ArcColouredDigraph(n={self.n}, arcs={self.coloured_arcs()!r})"


# -- pattern digraphs ---------------------------------------------------


@dataclass(frozen=True)
class PatternGraph:
    name: str
    vertex_names: tuple[str, ...]
    arcs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.vertex_names)

    def digraph(self) -> Digraph:
        return Digraph(self.size, self.arcs, self.vertex_names)

    def automorphisms(self) -> tuple[tuple[int, ...], ...]:
        return _AUTOMORPHISMS[self.name]


def _pattern(name: str, names: str, arcs: str) -> PatternGraph:
    vs = tuple(names.split())
    idx = {v: i for i, v in enumerate(vs)}
    pairs = tuple((idx[a], idx[b]) for a, b in (p.split(">") for p in arcs.split()))
    return PatternGraph(name, vs, pairs)


QT4 = _pattern("QT4", "x y u v", "x>u u>v v>y y>u v>x")
CB5 = _pattern("CB5", "u1 u2 u3 u4 u5", "u1>u2 u2>u3 u3>u4 u4>u5 u4>u1 u5>u2")
TB4 = _pattern("TB4", "u1 u2 u3 u4", "u1>u2 u2>u3 u3>u4 u1>u4")
PATTERNS = {p.name: p for p in (QT4, CB5, TB4)}


def _compute_automorphisms(p: PatternGraph) -> tuple[tuple[int, ...], ...]:
    arcs = set(p.arcs)
    return tuple(
        perm
        for perm in permutations(range(p.size))
        if {(perm[a], perm[b]) for a, b in arcs} == arcs
    )


_AUTOMORPHISMS = {name: _compute_automorphisms(p) for name, p in PATTERNS.items()}


# -- structural operations ----------------------------------------------


def reachability(g: Digraph) -> list[int]:
    """``reach[v]`` is the mask of vertices reachable from ``v`` by a non-trivial walk."""
    reach = list(g.out)
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            acc = reach[v]
            for w in bits(reach[v]):
                acc |= reach[w]
            if acc != reach[v]:
                reach[v] = acc
                changed = True
    return reach


def strong_components(g: Digraph) -> list[list[int]]:
    """Strong components ordered so that arcs only run from earlier to later ones.

    Among components that are simultaneously available in the topological
    order, the one holding the smallest vertex index comes first.
    """
    reach = reachability(g)
    comp_of = [-1] * g.n
    comps: list[list[int]] = []
    for v in range(g.n):
        if comp_of[v] >= 0:
            continue
        mask = 1 << v
        for w in bits(reach[v]):
            if reach[w] >> v & 1:
                mask |= 1 << w
        members = list(bits(mask))
        for w in members:
            comp_of[w] = len(comps)
        comps.append(members)

    k = len(comps)
    succ: list[set[int]] = [set() for _ in range(k)]
    indeg = [0] * k
    for u, v in g.arcs():
        a, b = comp_of[u], comp_of[v]
        if a != b and b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    heap = [(comps[i][0], i) for i in range(k) if indeg[i] == 0]
    heapq.heapify(heap)
    order: list[list[int]] = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(comps[i])
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (comps[j][0], j))
    return order


def is_acyclic(g: Digraph) -> bool:
    return all(not (r >> v & 1) for v, r in enumerate(reachability(g)))


def topological_order(g: Digraph) -> list[int]:
    """Vertices of an acyclic digraph, tails before heads."""
    return [c[0] for c in strong_components(g)]


def iter_cycles(g: Digraph, k: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every directed cycle of length <= k once, starting at its minimum vertex."""
    limit = g.n if k is None else min(k, g.n)
    if limit < 2:
        return
    for s in range(g.n):
        higher = g.all_mask & ~((1 << (s + 1)) - 1)
        path = [s]

        def extend(v: int, visited: int) -> Iterator[tuple[int, ...]]:
            if g.out[v] >> s & 1 and len(path) >= 2:
                yield tuple(path)
            if len(path) == limit:
                return
            for w in bits(g.out[v] & higher & ~visited):
                path.append(w)
                yield from extend(w, visited | 1 << w)
                path.pop()

        yield from extend(s, 1 << s)


def cycles_up_to(g: Digraph, k: int) -> list[tuple[int, ...]]:
    """All directed cycles of length at most ``k``, sorted by length then vertices."""
    if k < 2:
        raise ValueError("cycle length bound must be at least 2")
    return sorted(iter_cycles(g, k), key=lambda c: (len(c), c))


def cycle_arcs(cycle: Sequence[int]) -> list[tuple[int, int]]:
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def iter_induced_copies(g: Digraph, pattern: PatternGraph) -> Iterator[tuple[int, ...]]:
    """Yield injective maps (as tuples) embedding ``pattern`` as an induced subdigraph.

    Only the representative that is lexicographically least within its
    automorphism orbit is produced.
    """
    p = pattern.size
    if p > g.n:
        return
    p_out = [0] * p
    for a, b in pattern.arcs:
        p_out[a] |= 1 << b
    autos = pattern.automorphisms()
    image: list[int] = []

    def consistent(w: int) -> bool:
        i = len(image)
        for j, u in enumerate(image):
            if bool(p_out[j] >> i & 1) != g.has_arc(u, w):
                return False
            if bool(p_out[i] >> j & 1) != g.has_arc(w, u):
                return False
        return True

    def search(used: int) -> Iterator[tuple[int, ...]]:
        if len(image) == p:
            f = tuple(image)
            if all(f <= tuple(f[s[i]] for i in range(p)) for s in autos):
                yield f
            return
        for w in range(g.n):
            if used >> w & 1 or not consistent(w):
                continue
            image.append(w)
            yield from search(used | 1 << w)
            image.pop()

    yield from search(0)


def induced_copies(g: Digraph, pattern: PatternGraph) -> list[tuple[int, ...]]:
    return list(iter_induced_copies(g, pattern))


def induced_subdigraph(g: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subdigraph induced by ``vertices``, re-indexed in ascending order.

    The result's ``origin`` maps each new index back to its index in ``g``;
    labels and arc colours are carried over.
    """
    keep = sorted(set(vertices))
    if not keep:
        raise EmptyVertexSet("induced subdigraph needs a nonempty vertex set")
    for v in keep:
        if not 0 <= v < g.n:
            raise InvalidDigraph(f"vertex {v} is not in the digraph")
    new = {v: i for i, v in enumerate(keep)}
    mask = to_mask(keep)
    labels = [g.labels[v] for v in keep]
    origin = keep
    if isinstance(g, ArcColouredDigraph):
        arcs = [
            (new[u], new[v], g.colour[(u, v)])
            for u in keep
            for v in bits(g.out[u] & mask)
        ]
        return ArcColouredDigraph(len(keep), arcs, labels, origin)
    return Digraph(
        len(keep),
        [(new[u], new[v]) for u in keep for v in bits(g.out[u] & mask)],
        labels,
        origin,
    )


def delete_vertex(g: Digraph, v: int) -> Digraph:
    return induced_subdigraph(g, [w for w in range(g.n) if w != v])
