"""RP-kernels of bipartite tournaments.

When the smaller part has two vertices, the construction is a decision tree
over colour classes of the arcs through ``x1`` and ``x2``. Each leaf names
the set it returns; every returned set is re-validated, and the leaves that
fire are tallied in :data:`LEAF_COVERAGE` so tests can see which branches a
batch of instances exercised.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterable, Sequence

from .conditions import (
    CB5_RAINBOW,
    CYCLES4_MIN3,
    CYCLES4_RAINBOW,
    CYCLES6_RAINBOW,
    TB4_PROPER,
    bipartition,
    check_4cycles_min_colours,
    check_induced_pattern_rainbow,
    check_induced_tb4_properly,
    check_small_cycles_rainbow,
)
from .digraph import CB5, ArcColouredDigraph, cycles_up_to, delete_vertex, to_mask
from .errors import PreconditionFailed, TheoremViolation
from .kernels import acyclic_kernel, all_kernels, kernel_of_kp, kp_sufficient
from .rainbow import RainbowReachability, rainbow_closure, rainbow_reachability, shortest_rainbow_path
from .result import SolveResult, brute_bound, certified, is_rp_kernel

LEAF_COVERAGE: Counter[str] = Counter()


def reset_leaf_coverage() -> None:
    LEAF_COVERAGE.clear()


class _Leaf(Exception):
    """Raised inside the decision tree to carry a leaf name and its set out."""

    def __init__(self, name: str, kernel: Iterable[int]) -> None:
        super().__init__(name)
        self.name = name
        self.kernel = tuple(sorted(set(kernel)))


def _leaf(name: str, kernel: Iterable[int]) -> None:
    raise _Leaf(name, kernel)


def normalized_parts(d: ArcColouredDigraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parts (X, Y) with |X| <= |Y|; on a tie X is the part holding vertex 0."""
    parts = bipartition(d)
    if parts is None:
        raise PreconditionFailed("bipartite tournament")
    xs, ys = parts
    if len(xs) > len(ys):
        xs, ys = ys, xs
    return xs, ys


def rp_kernel_bipartite(d: ArcColouredDigraph, bound: int | None = None) -> SolveResult:
    xs, ys = normalized_parts(d)
    reach = rainbow_reachability(d)
    low = len(xs)
    diag = [f"parts |X|={len(xs)}, |Y|={len(ys)}, colours={d.colour_count}"]
    method = "bipartite_min1" if low <= 1 else "bipartite_2" if low == 2 else "bipartite_min3"

    if d.colour_count <= 1:
        xmask = to_mask(xs)
        if all(d.out[y] & xmask for y in ys):
            diag.append("one colour: X absorbs Y by single arcs")
            return certified(d, xs, method, reach, diag, "one_colour_x")
        diag.append("one colour: X does not absorb Y, so Y is the kernel")
        return certified(d, ys, method, reach, diag, "one_colour_y")

    if low == 1:
        diag.append("one part is a single vertex: the closure is acyclic")
        kernel = acyclic_kernel(rainbow_closure(d, reach))
        return certified(d, kernel, method, reach, diag, "acyclic_closure")

    if low == 2:
        verdict = check_4cycles_min_colours(d, 3)
        if not verdict:
            raise PreconditionFailed(CYCLES4_MIN3, verdict.witness.describe(d.labels))
        return _solve_two(d, xs, ys, reach, diag, bound)

    cycles = cycles_up_to(d, 6)
    checks = [
        (CYCLES4_RAINBOW, check_small_cycles_rainbow(d, 4, cycles)),
        (CYCLES6_RAINBOW, check_small_cycles_rainbow(d, 6, cycles)),
        (CB5_RAINBOW, check_induced_pattern_rainbow(d, CB5)),
        (TB4_PROPER, check_induced_tb4_properly(d)),
    ]
    for name, verdict in checks:
        if not verdict:
            raise PreconditionFailed(name, verdict.witness.describe(d.labels))
    closure = rainbow_closure(d, reach)
    if not kp_sufficient(closure):
        raise TheoremViolation("closure has a cycle of asymmetrical arcs despite the hypotheses")
    diag.append("closure is kernel-perfect; smallest closure kernel taken")
    return certified(d, kernel_of_kp(closure, bound), method, reach, diag, "kp_closure")


def _solve_two(
    d: ArcColouredDigraph,
    xs: Sequence[int],
    ys: Sequence[int],
    reach: RainbowReachability,
    diag: list[str],
    bound: int | None,
) -> SolveResult:
    x1, x2 = xs
    if all(d.has_arc(x, y) for x in xs for y in ys):
        return _finish(d, _Leaf("x_dominates_y", ys), reach, diag)
    if all(d.has_arc(y, x) for x in xs for y in ys):
        return _finish(d, _Leaf("y_dominates_x", xs), reach, diag)

    sources = [y for y in ys if not d.inn[y]]
    if sources:
        return _strip_source(d, sources[0], reach, diag, bound)

    try:
        _TwoVertexPart(d, x1, x2, ys, reach).run()
    except _Leaf as leaf:
        return _finish(d, leaf, reach, diag)
    raise AssertionError("decision tree fell through without a leaf")


def _finish(
    d: ArcColouredDigraph, leaf: _Leaf, reach: RainbowReachability, diag: list[str]
) -> SolveResult:
    LEAF_COVERAGE[leaf.name] += 1
    diag.append(f"leaf {leaf.name}: {{{', '.join(d.label_set(leaf.kernel))}}}")
    return certified(d, leaf.kernel, "bipartite_2", reach, diag, leaf.name)


def _strip_source(
    d: ArcColouredDigraph,
    v: int,
    reach: RainbowReachability,
    diag: list[str],
    bound: int | None,
) -> SolveResult:
    """Solve D - v for a source v of Y, then put v back if nothing absorbs it."""
    sub = delete_vertex(d, v)
    assert isinstance(sub, ArcColouredDigraph)
    inner = rp_kernel_bipartite(sub, bound)
    assert inner.kernel is not None and sub.origin is not None
    kernel = [sub.origin[i] for i in inner.kernel]
    absorbed = reach.reaches(v, to_mask(kernel))
    diag.append(f"source {d.labels[v]} removed")
    diag.extend(f"  {line}" for line in inner.diagnostics)
    if not absorbed:
        kernel.append(v)
        diag.append(f"source {d.labels[v]} reinserted into the kernel")
    else:
        diag.append(f"source {d.labels[v]} absorbed by the kernel of the rest")
    kernel = sorted(kernel)
    if not is_rp_kernel(d, kernel, reach):
        diag.append("source reinsertion failed validation; falling back to brute force")
        found = all_kernels(rainbow_closure(d, reach), brute_bound(bound))
        if not found:
            raise TheoremViolation("no RP-kernel after source removal")
        return certified(d, found[0], "bipartite_2", reach, diag, "source_fallback")
    branch = f"source/{inner.branch}"
    return certified(d, kernel, "bipartite_2", reach, diag, branch)


class _TwoVertexPart:
    """The decision tree for X = {x1, x2}, no Y-sources, and neither part dominating."""

    def __init__(
        self, d: ArcColouredDigraph, x1: int, x2: int, ys: Sequence[int], reach: RainbowReachability
    ) -> None:
        self.d = d
        self.x1, self.x2 = x1, x2
        self.ys = list(ys)
        self.reach = reach

    def c(self, u: int, v: int) -> int:
        return self.d.colour[(u, v)]

    def run(self) -> None:
        d, x1, x2 = self.d, self.x1, self.x2
        y0 = [y for y in self.ys if d.has_arc(x1, y) and d.has_arc(x2, y)]
        if y0:
            self.case_dominated(y0)
        self.case_through()

    # Y0 nonempty: some vertices of Y are dominated by both x1 and x2.
    def case_dominated(self, y0: list[int]) -> None:
        d, reach = self.d, self.reach
        y0m = to_mask(y0)
        rest = [y for y in self.ys if y not in y0]
        y2 = [y for y in rest if not reach.reaches(y, y0m)]
        if not y2:
            _leaf("dom_y2_empty", y0)
        s: list[int] = []
        for y in y2:
            if not any(reach[y, t] or reach[t, y] for t in s):
                s.append(y)
        smask = to_mask(s)
        unreached = [r for r in y2 if r not in s and not reach.reaches(r, smask)]
        if not unreached:
            _leaf("dom_r_empty", y0 + s)
        r = unreached[0]
        x1 = self.x1 if d.has_arc(self.x1, r) else self.x2
        x2 = self.x2 if x1 == self.x1 else self.x1
        path = None
        for t in s:
            if reach[t, r]:
                path = shortest_rainbow_path(d, t, r)
                break
        if path is None:
            raise TheoremViolation("maximal independent S leaves an unreached vertex unjoined")
        if len(path) == 4:
            _leaf("dom_path4", y0 + [r])
        q2 = [y for y in y2 if y != r and d.has_arc(y, x2)]
        if not q2:
            _leaf("dom_path2_q2_empty", y0 + [r])
        if any(reach[q, r] for q in q2):
            _leaf("dom_q2_reaches_r", y0 + [r])
        for q in q2:
            if reach[r, q]:
                _leaf("dom_r_reaches_q2", y0 + [q])
        _leaf("dom_q2_independent", y0 + q2 + [r])

    # Y0 empty: every y has exactly one in- and one out-neighbour in X.
    def case_through(self) -> None:
        d, x1, x2, c = self.d, self.x1, self.x2, self.c
        fwd = [y for y in self.ys if d.has_arc(x1, y)]
        bwd = [y for y in self.ys if d.has_arc(x2, y)]
        if not fwd:
            if self.reach[x2, x1]:
                _leaf("thr_one_side_single", [x1])
            _leaf("thr_one_side_pair", [x1, x2])
        if not bwd:
            if self.reach[x1, x2]:
                _leaf("thr_one_side_single", [x2])
            _leaf("thr_one_side_pair", [x1, x2])
        if all(c(x1, y) == c(y, x2) for y in fwd):
            _leaf("thr_fwd_monochrome", [x1])
        if all(c(x2, y) == c(y, x1) for y in bwd):
            _leaf("thr_bwd_monochrome", [x2])
        if any(c(x1, y) == c(y, x2) for y in fwd):
            self.one_monochrome(x1, x2, fwd, bwd)
        if any(c(x2, y) == c(y, x1) for y in bwd):
            self.one_monochrome(x2, x1, bwd, fwd)
        self.all_two_coloured(fwd, bwd)

    def one_monochrome(self, a: int, b: int, fwd: list[int], bwd: list[int]) -> None:
        """Some a -> y -> b route uses one colour twice; ``a`` plays x1 and ``b`` plays x2."""
        c = self.c

        def c1(y: int) -> int:
            return c(a, y)

        def c2(y: int) -> int:
            return c(y, b)

        def d1(y: int) -> int:
            return c(b, y)

        def d2(y: int) -> int:
            return c(y, a)

        ref = next(y for y in fwd if c1(y) == c2(y))
        alpha = c1(ref)
        beta, gamma = d1(bwd[0]), d2(bwd[0])
        named = {alpha, beta, gamma}

        def om(col: int) -> bool:
            return col not in named

        def fsel(p1: Callable[[int], bool], p2: Callable[[int], bool]) -> list[int]:
            return [y for y in fwd if p1(c1(y)) and p2(c2(y))]

        def bsel(p1: Callable[[int], bool], p2: Callable[[int], bool]) -> list[int]:
            return [y for y in bwd if p1(d1(y)) and p2(d2(y))]

        def eq(col: int) -> Callable[[int], bool]:
            return lambda x: x == col

        def among(*cols: int) -> Callable[[int], bool]:
            return lambda x: x in cols

        if [y for y in bwd if om(d1(y)) and om(d2(y)) and d1(y) != d2(y)]:
            _leaf("mono_bwd_fresh_pair", [a])
        mixed_beta = bsel(om, eq(beta)) + bsel(eq(beta), om)
        mixed_gamma = bsel(om, eq(gamma)) + bsel(eq(gamma), om)
        if mixed_beta and mixed_gamma:
            _leaf("mono_mixed_both", [a])

        fwd_plus = fsel(lambda _: True, om)

        def absorbing_u(base: list[int], forbidden: set[int], prefix: str) -> None:
            # ``base`` is nonempty, its a-arcs avoid alpha/beta/gamma
            cols = {c1(y) for y in base}
            if len(cols) >= 2:
                _leaf(f"{prefix}_multi", base)
            (delta,) = cols
            u_set = [y for y in fwd_plus if c2(y) == delta]
            for u in u_set:
                if c1(u) not in forbidden | {delta}:
                    _leaf(f"{prefix}_u", base + [u])
            _leaf(f"{prefix}_all_u", base + u_set)

        if mixed_beta or mixed_gamma:
            b_col, c_col = (beta, gamma) if mixed_beta else (gamma, beta)
            wb = fsel(om, eq(b_col))
            ab = fsel(eq(alpha), eq(b_col))
            if not wb and not ab:
                _leaf("mono_mixed_one_none", [a])
            if wb and ab:
                _leaf("mono_mixed_one_wb_ab", wb + ab)
            if wb:
                absorbing_u(wb, {b_col}, "mono_mixed_one_wb")
            if fsel(om, eq(alpha)) or fsel(eq(c_col), eq(alpha)):
                _leaf("mono_mixed_one_ab_to_b", [b])
            kernel = fsel(eq(alpha), eq(alpha)) + ab + fsel(eq(b_col), eq(alpha))
            _leaf("mono_mixed_one_ab_set", kernel)

        k1 = fsel(eq(alpha), among(beta, gamma))
        k2 = fsel(om, among(beta, gamma))
        if k1 and k2:
            _leaf("mono_pure_k1_k2", k1 + k2)
        if not k1 and not k2:
            _leaf("mono_pure_none", [a])
        if k1:
            if fsel(om, eq(alpha)):
                _leaf("mono_pure_k1_to_b", [b])
            kernel = (
                fsel(eq(alpha), eq(alpha))
                + fsel(eq(alpha), among(beta, gamma))
                + fsel(among(beta, gamma), eq(alpha))
            )
            _leaf("mono_pure_k1_set", kernel)
        absorbing_u(k2, {beta, gamma}, "mono_pure_k2")

    def all_two_coloured(self, fwd: list[int], bwd: list[int]) -> None:
        """Every route through Y uses two distinct colours."""
        c, x1, x2 = self.c, self.x1, self.x2

        def c1(y: int) -> int:
            return c(x1, y)

        def c2(y: int) -> int:
            return c(y, x2)

        def d1(y: int) -> int:
            return c(x2, y)

        def d2(y: int) -> int:
            return c(y, x1)

        alpha, beta = c1(fwd[0]), c2(fwd[0])

        def om(col: int) -> bool:
            return col not in (alpha, beta)

        fwd_fresh = [y for y in fwd if om(c1(y)) and om(c2(y))]
        into = {col: [y for y in bwd if om(d1(y)) and d2(y) == col] for col in (alpha, beta)}
        if fwd_fresh or not (into[alpha] or into[beta]):
            _leaf("two_fwd_fresh_or_no_entry", [x2])
        if into[alpha] and into[beta]:
            _leaf("two_entry_both", [x1])
        a_col, b_col = (alpha, beta) if into[alpha] else (beta, alpha)
        if [y for y in fwd if (c1(y) == b_col and om(c2(y))) or (om(c1(y)) and c2(y) == b_col)]:
            _leaf("two_entry_one_fwd_b", [x2])
        if [y for y in bwd if d1(y) == b_col and om(d2(y))]:
            _leaf("two_entry_one_bwd_b", [x1])
        if [y for y in bwd if om(d1(y)) and om(d2(y))]:
            _leaf("two_entry_one_bwd_fresh", [x1])
        w = into[a_col]
        cols = {d1(y) for y in w}
        if len(cols) >= 2:
            _leaf("two_entry_one_multi", w)
        (eps,) = cols
        u_set = [y for y in bwd if d1(y) == a_col and om(d2(y)) and d2(y) == eps]
        _leaf("two_entry_one_all_u", w + u_set)
