"""Rainbow paths, rainbow reachability and the rainbow closure.

A rainbow path is a vertex-simple directed path whose arcs carry pairwise
distinct colours. Existence is decided by backtracking over states
(current vertex, visited vertices, used colours), all held as bitmasks.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .digraph import ArcColouredDigraph, Digraph, bits
from .errors import SameEndpoints
from .verdict import Verdict


@dataclass(frozen=True)
class WitnessPath:
    vertices: tuple[int, ...]
    colours: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.colours)

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def is_valid_in(self, d: ArcColouredDigraph) -> bool:
        """Check the path against ``d``: real arcs, recorded colours, simple, rainbow."""
        vs = self.vertices
        if len(vs) != len(self.colours) + 1 or len(set(vs)) != len(vs):
            return False
        if len(set(self.colours)) != len(self.colours):
            return False
        for (a, b), c in zip(zip(vs, vs[1:]), self.colours):
            if not d.has_arc(a, b) or d.colour[(a, b)] != c:
                return False
        return True


def _adjacency(d: ArcColouredDigraph) -> list[list[tuple[int, int]]]:
    return [[(w, d.colour_bit(v, w)) for w in bits(d.out[v])] for v in range(d.n)]


def _search_bound(d: ArcColouredDigraph) -> int:
    # distinct vertices and distinct colours both cap the length
    return min(d.n - 1, d.colour_count)


def _depth_limited(
    adj: list[list[tuple[int, int]]], u: int, v: int, depth: int
) -> list[int] | None:
    path = [u]

    def go(x: int, visited: int, used: int) -> bool:
        if len(path) - 1 == depth:
            return x == v
        for w, cb in adj[x]:
            if visited >> w & 1 or used & cb:
                continue
            if w == v and len(path) < depth:
                continue
            path.append(w)
            if go(w, visited | 1 << w, used | cb):
                return True
            path.pop()
        return False

    return path if go(u, 1 << u, 0) else None


def shortest_rainbow_path(d: ArcColouredDigraph, u: int, v: int) -> WitnessPath | None:
    """A shortest rainbow (u, v)-path, found by iterative deepening on its length."""
    if u == v:
        raise SameEndpoints(f"rainbow path endpoints coincide ({u})")
    adj = _adjacency(d)
    for depth in range(1, _search_bound(d) + 1):
        path = _depth_limited(adj, u, v, depth)
        if path is not None:
            return WitnessPath(tuple(path), tuple(d.path_colours(path)))
    return None


def rainbow_path_exists(d: ArcColouredDigraph, u: int, v: int) -> Verdict:
    """Verdict whose witness is a shortest rainbow (u, v)-path when one exists."""
    path = shortest_rainbow_path(d, u, v)
    return Verdict(path is not None, path)


def _reach_from(adj: list[list[tuple[int, int]]], n: int, u: int) -> int:
    target = ((1 << n) - 1) & ~(1 << u)
    reached = 0
    stack = [(u, 1 << u, 0)]
    while stack:
        x, visited, used = stack.pop()
        for w, cb in adj[x]:
            if visited >> w & 1 or used & cb:
                continue
            reached |= 1 << w
            if reached == target:
                return reached
            stack.append((w, visited | 1 << w, used | cb))
    return reached


class RainbowReachability:
    """Boolean matrix ``R[u, v]``: some rainbow (u, v)-path exists; ``R[u, u]`` is false."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]) -> None:
        self.n = n
        self.rows: tuple[int, ...] = tuple(rows)

    def __getitem__(self, pair: tuple[int, int]) -> bool:
        u, v = pair
        return bool(self.rows[u] >> v & 1)

    def row(self, u: int) -> int:
        return self.rows[u]

    def reaches(self, u: int, mask: int) -> bool:
        """True when ``u`` has a rainbow path to some vertex of ``mask``."""
        return bool(self.rows[u] & mask)

    def targets(self, u: int) -> list[int]:
        return list(bits(self.rows[u]))

    def matrix(self) -> list[list[bool]]:
        return [[bool(r >> v & 1) for v in range(self.n)] for r in self.rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RainbowReachability):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        return f"RainbowReachability({self.matrix()!r})"


def rainbow_reachability(d: ArcColouredDigraph) -> RainbowReachability:
    adj = _adjacency(d)
    return RainbowReachability(d.n, [_reach_from(adj, d.n, u) for u in range(d.n)])


def rainbow_closure(d: ArcColouredDigraph, reach: RainbowReachability | None = None) -> Digraph:
    """Uncoloured digraph on V(D) with an arc (u, v) whenever a rainbow (u, v)-path exists."""
    if reach is None:
        reach = rainbow_reachability(d)
    return Digraph(
        d.n,
        [(u, v) for u in range(d.n) for v in bits(reach.rows[u])],
        d.labels,
    )
