"""RP-kernel validation and the result record every constructor returns."""
from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

from .digraph import ArcColouredDigraph, bits, to_mask
from .errors import EmptyVertexSet, InvalidDigraph, TheoremViolation
from .kernels import KernelViolation
from .rainbow import RainbowReachability, rainbow_reachability
from .verdict import Verdict

METHODS = (
    "unicyclic",
    "semicomplete",
    "quasi_transitive",
    "bipartite_min1",
    "bipartite_2",
    "bipartite_min3",
    "brute_force",
)
DEFAULT_BRUTE_BOUND = 18


def brute_bound(bound: int | None = None) -> int:
    """Explicit bound, else ``RPK_BRUTE_BOUND`` from the environment, else 18."""
    if bound is not None:
        return bound
    env = os.environ.get("RPK_BRUTE_BOUND")
    return int(env) if env else DEFAULT_BRUTE_BOUND


@dataclass
class SolveResult:
    kernel: tuple[int, ...] | None
    method: str
    validated: bool = False
    status: str = "found"  # found | absent | unknown
    diagnostics: list[str] = field(default_factory=list)
    branch: str | None = None

    def to_json(self, labels: Sequence[str]) -> dict[str, Any]:
        return {
            "status": self.status,
            "method": self.method,
            "branch": self.branch,
            "kernel": None if self.kernel is None else [labels[v] for v in self.kernel],
            "validated": self.validated,
            "diagnostics": list(self.diagnostics),
        }


def is_rp_kernel(
    d: ArcColouredDigraph,
    vertices: Iterable[int],
    reach: RainbowReachability | None = None,
) -> Verdict:
    """No rainbow path joins two members, and every outsider has one into the set."""
    s = to_mask(vertices)
    if not s:
        raise EmptyVertexSet("an RP-kernel candidate must be nonempty")
    if s >> d.n:
        raise InvalidDigraph("candidate contains vertices outside the digraph")
    if reach is None:
        reach = rainbow_reachability(d)
    for u in bits(s):
        inside = reach.row(u) & s
        if inside:
            return Verdict(False, KernelViolation("rainbow_path", (u, next(bits(inside)))))
    for v in bits(d.all_mask & ~s):
        if not reach.reaches(v, s):
            return Verdict(False, KernelViolation("unabsorbed", (v,)))
    return Verdict(True)


def certified(
    d: ArcColouredDigraph,
    kernel: Iterable[int],
    method: str,
    reach: RainbowReachability,
    diagnostics: list[str],
    branch: str | None = None,
) -> SolveResult:
    """Validate a constructor's output; a failure is a bug and raises."""
    kernel = tuple(sorted(kernel))
    verdict = is_rp_kernel(d, kernel, reach)
    if not verdict:
        where = f" at {branch}" if branch else ""
        raise TheoremViolation(
            f"{method}{where} produced {{{', '.join(d.label_set(kernel))}}}, which is not an RP-kernel: "
            f"{verdict.witness.describe(d.labels)}"
        )
    return SolveResult(kernel, method, True, "found", diagnostics, branch)
