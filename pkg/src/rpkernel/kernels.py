"""Classical kernels of uncoloured digraphs."""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .digraph import Digraph, bits, is_acyclic, to_mask, topological_order
from .errors import InstanceTooLarge, NotAcyclic, PreconditionFailed, TheoremViolation
from .verdict import Verdict

DEFAULT_KERNEL_BOUND = 20


@dataclass(frozen=True)
class KernelViolation:
    """Why a vertex set fails to be a kernel.

    ``kind`` is ``"adjacent"`` / ``"rainbow_path"`` (independence broken by
    the ordered pair in ``vertices``) or ``"unabsorbed"`` (``vertices`` holds
    the single outside vertex that cannot reach the set).
    """

    kind: str
    vertices: tuple[int, ...]

    def describe(self, labels: tuple[str, ...]) -> str:
        names = [labels[v] for v in self.vertices]
        if self.kind == "unabsorbed":
            return f"{names[0]} unabsorbed"
        if self.kind == "rainbow_path":
            return f"rainbow path {names[0]} -> {names[1]} inside the set"
        return f"{names[0]} -> {names[1]} inside the set"


def canonical(sets: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    """Sort vertex sets by size, then lexicographically."""
    return sorted((tuple(sorted(s)) for s in sets), key=lambda s: (len(s), s))


def is_kernel(g: Digraph, vertices: Iterable[int]) -> Verdict:
    s = to_mask(vertices)
    for u in bits(s):
        inside = g.out[u] & s
        if inside:
            return Verdict(False, KernelViolation("adjacent", (u, next(bits(inside)))))
    for v in bits(g.all_mask & ~s):
        if not g.out[v] & s:
            return Verdict(False, KernelViolation("unabsorbed", (v,)))
    return Verdict(True)


def _check_bound(g: Digraph, bound: int | None) -> None:
    limit = DEFAULT_KERNEL_BOUND if bound is None else bound
    if g.n > limit:
        raise InstanceTooLarge(f"{g.n} vertices exceeds the enumeration bound {limit}")


def iter_kernel_masks(g: Digraph) -> Iterator[int]:
    """Yield every kernel as a bitmask.

    Independent sets are grown in index order; a branch dies as soon as an
    excluded vertex can no longer be absorbed by the current set or by the
    vertices still eligible to join it.
    """
    n, out = g.n, g.out
    nbr = [g.out[v] | g.inn[v] for v in range(n)]
    full = g.all_mask

    def go(i: int, chosen: int, blocked: int, excluded: int) -> Iterator[int]:
        possible = chosen | (full & ~blocked & ~((1 << i) - 1))
        for v in bits(excluded):
            if not out[v] & possible:
                return
        if i == n:
            yield chosen
            return
        if not blocked >> i & 1:
            yield from go(i + 1, chosen | 1 << i, blocked | nbr[i] | 1 << i, excluded)
        yield from go(i + 1, chosen, blocked, excluded | 1 << i)

    yield from go(0, 0, 0, 0)


def all_kernels(g: Digraph, bound: int | None = None) -> list[tuple[int, ...]]:
    _check_bound(g, bound)
    return canonical(bits(m) for m in iter_kernel_masks(g))


def has_kernel(g: Digraph) -> bool:
    return next(iter_kernel_masks(g), None) is not None


def acyclic_kernel(g: Digraph) -> tuple[int, ...]:
    """The unique kernel of an acyclic digraph, built from the sinks upward."""
    if not is_acyclic(g):
        raise NotAcyclic("digraph has a cycle")
    chosen = 0
    for v in reversed(topological_order(g)):
        if not g.out[v] & chosen:
            chosen |= 1 << v
    return tuple(bits(chosen))


def kp_sufficient(g: Digraph) -> bool:
    """Every cycle carries a symmetrical arc, i.e. the asymmetrical arcs form no cycle."""
    return is_acyclic(g.asymmetric_part())


def kernel_of_kp(g: Digraph, bound: int | None = None) -> tuple[int, ...]:
    """Canonically smallest kernel of a digraph whose cycles all have a symmetrical arc."""
    if not kp_sufficient(g):
        raise PreconditionFailed("every cycle has a symmetrical arc")
    kernels = all_kernels(g, bound)
    if not kernels:
        raise TheoremViolation("kernel-perfect digraph without a kernel")
    return kernels[0]
