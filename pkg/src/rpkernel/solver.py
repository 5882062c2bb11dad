"""RP-kernel constructors for each supported digraph class, plus the dispatcher."""
from __future__ import annotations

from .bipartite import rp_kernel_bipartite
from .conditions import (
    CYCLES3_RAINBOW,
    QT4_RAINBOW,
    UNIQUE_CYCLE_RAINBOW,
    ClassReport,
    check_induced_pattern_rainbow,
    check_small_cycles_rainbow,
    classify,
    is_quasi_transitive,
    is_semicomplete,
    is_unicyclic,
)
from .digraph import QT4, ArcColouredDigraph, bits, strong_components
from .errors import InstanceTooLarge, PreconditionFailed, TheoremViolation
from .kernels import all_kernels, kernel_of_kp, kp_sufficient
from .rainbow import rainbow_closure, rainbow_reachability
from .result import SolveResult, brute_bound, certified

CLI_METHODS = {
    "unicyclic": "unicyclic",
    "semicomplete": "semicomplete",
    "qt": "quasi_transitive",
    "bipartite": "bipartite",
    "brute": "brute_force",
}


def _require(verdict, name: str, d: ArcColouredDigraph) -> None:
    if not verdict:
        raise PreconditionFailed(name, verdict.witness.describe(d.labels))


def brute_force_rp_kernel(d: ArcColouredDigraph, bound: int | None = None) -> list[tuple[int, ...]]:
    """Every RP-kernel of ``d``, as the kernels of its rainbow closure."""
    limit = brute_bound(bound)
    if d.n > limit:
        raise InstanceTooLarge(f"{d.n} vertices exceeds the brute-force bound {limit}")
    return all_kernels(rainbow_closure(d), limit)


def rp_kernel_unicyclic(d: ArcColouredDigraph) -> SolveResult:
    uni = is_unicyclic(d)
    if not uni:
        raise PreconditionFailed("unicyclic", uni.reason)
    cycle = uni.witness
    _require(check_small_cycles_rainbow(d, len(cycle), [cycle]), UNIQUE_CYCLE_RAINBOW, d)
    reach = rainbow_reachability(d)
    comps = strong_components(d)
    diag = [f"{len(comps)} strong components"]
    if len(comps) == 1:
        diag.append("strong: the digraph is its rainbow cycle")
        return certified(d, [min(cycle)], "unicyclic", reach, diag, "strong")
    chosen = 1 << min(comps[-1])
    diag.append(f"seeded with {d.labels[min(comps[-1])]} from the last component")
    for comp in reversed(comps[:-1]):
        loose = [v for v in comp if not reach.reaches(v, chosen)]
        if loose:
            chosen |= 1 << loose[0]
            diag.append(f"added {d.labels[loose[0]]}")
    return certified(d, bits(chosen), "unicyclic", reach, diag, "components")


def rp_kernel_semicomplete(d: ArcColouredDigraph) -> SolveResult:
    if not is_semicomplete(d):
        raise PreconditionFailed("semicomplete")
    _require(check_small_cycles_rainbow(d, 3), CYCLES3_RAINBOW, d)
    v = max(range(d.n), key=lambda u: (d.in_degree(u), -u))
    diag = [f"{d.labels[v]} has maximum in-degree {d.in_degree(v)}"]
    return certified(d, [v], "semicomplete", rainbow_reachability(d), diag, "max_in_degree")


def rp_kernel_quasi_transitive(d: ArcColouredDigraph, bound: int | None = None) -> SolveResult:
    if not is_quasi_transitive(d):
        raise PreconditionFailed("quasi-transitive")
    _require(check_small_cycles_rainbow(d, 3), CYCLES3_RAINBOW, d)
    _require(check_induced_pattern_rainbow(d, QT4), QT4_RAINBOW, d)
    reach = rainbow_reachability(d)
    closure = rainbow_closure(d, reach)
    if not kp_sufficient(closure):
        raise TheoremViolation("closure has a cycle of asymmetrical arcs despite the hypotheses")
    diag = ["closure is kernel-perfect; smallest closure kernel taken"]
    return certified(d, kernel_of_kp(closure, bound), "quasi_transitive", reach, diag, "kp_closure")


def solve_brute(d: ArcColouredDigraph, bound: int | None = None) -> SolveResult:
    kernels = brute_force_rp_kernel(d, bound)
    if not kernels:
        return SolveResult(None, "brute_force", False, "absent", ["closure has no kernel"])
    diag = [f"{len(kernels)} RP-kernels; smallest taken"]
    return certified(d, kernels[0], "brute_force", rainbow_reachability(d), diag, "enumeration")


_CONSTRUCTORS = {
    "unicyclic": lambda d, bound: rp_kernel_unicyclic(d),
    "semicomplete": lambda d, bound: rp_kernel_semicomplete(d),
    "quasi_transitive": rp_kernel_quasi_transitive,
    "bipartite": rp_kernel_bipartite,
    "brute_force": solve_brute,
}


def solve_with(d: ArcColouredDigraph, method: str, bound: int | None = None) -> SolveResult:
    """Run one named constructor; its precondition failures propagate."""
    try:
        constructor = _CONSTRUCTORS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return constructor(d, bound)


def solve(
    d: ArcColouredDigraph, bound: int | None = None, report: ClassReport | None = None
) -> SolveResult:
    """Try each applicable constructor in a fixed order, then fall back to enumeration."""
    if report is None:
        report = classify(d)
    applicable = report.applicable()
    diag: list[str] = []
    for method in ("unicyclic", "semicomplete", "quasi_transitive", "bipartite"):
        if method not in applicable:
            continue
        try:
            result = solve_with(d, method, bound)
        except (PreconditionFailed, InstanceTooLarge) as exc:
            diag.append(f"{method} skipped: {exc}")
            continue
        others = [m for m in applicable if m != method]
        if others:
            diag.append(f"also applicable: {', '.join(others)}")
        result.diagnostics = diag + result.diagnostics
        return result
    if not applicable:
        diag.append("no constructor's hypotheses hold")
    if d.n <= brute_bound(bound):
        result = solve_brute(d, bound)
        result.diagnostics = diag + result.diagnostics
        return result
    diag.append(f"{d.n} vertices exceeds the brute-force bound {brute_bound(bound)}")
    return SolveResult(None, "brute_force", False, "unknown", diag)


__all__ = [
    "CLI_METHODS",
    "brute_force_rp_kernel",
    "rp_kernel_bipartite",
    "rp_kernel_quasi_transitive",
    "rp_kernel_semicomplete",
    "rp_kernel_unicyclic",
    "solve",
    "solve_brute",
    "solve_with",
]
