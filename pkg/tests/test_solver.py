from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rp_kernels
from rpkernel import (
    ArcColouredDigraph,
    EmptyVertexSet,
    GenProfile,
    InstanceTooLarge,
    PreconditionFailed,
    all_kernels,
    brute_force_rp_kernel,
    fixture,
    generate,
    is_rp_kernel,
    rainbow_closure,
    rp_kernel_quasi_transitive,
    rp_kernel_semicomplete,
    rp_kernel_unicyclic,
    solve,
    solve_with,
)
from rpkernel.result import METHODS, brute_bound
from strategies import coloured_digraphs

RAINBOW_TRIANGLE = ArcColouredDigraph(3, [(0, 1, 1), (1, 2, 2), (2, 0, 3)], "abc")


def named(d, vs):
    return {d.labels[v] for v in vs}


# is_rp_kernel


def test_every_vertex_of_a_rainbow_triangle_is_an_rp_kernel():
    assert all(is_rp_kernel(RAINBOW_TRIANGLE, [v]) for v in range(3))


def test_fig4_y1_y2_leaves_x2_unabsorbed():
    d = fixture("FIG4")
    verdict = is_rp_kernel(d, [d.labels.index("y1"), d.labels.index("y2")])
    assert not verdict
    assert verdict.witness.describe(d.labels) == "x2 unabsorbed"


def test_arcless_whole_set_and_empty_set():
    d = ArcColouredDigraph(3)
    assert is_rp_kernel(d, range(3))
    with pytest.raises(EmptyVertexSet):
        is_rp_kernel(d, [])


@given(coloured_digraphs(max_n=6, max_m=4), st.data())
def test_is_rp_kernel_matches_definition(d, data):
    s = tuple(sorted(data.draw(st.sets(st.integers(0, d.n - 1), min_size=1))))
    assert is_rp_kernel(d, s).ok == (s in rp_kernels(d.n, dict(d.colour)))


# brute force


def test_brute_force_examples():
    assert brute_force_rp_kernel(fixture("FIG4")) == []
    assert brute_force_rp_kernel(RAINBOW_TRIANGLE) == [(0,), (1,), (2,)]
    assert brute_force_rp_kernel(ArcColouredDigraph(4)) == [(0, 1, 2, 3)]


def test_brute_force_bound(monkeypatch):
    with pytest.raises(InstanceTooLarge):
        brute_force_rp_kernel(ArcColouredDigraph(5), bound=4)
    monkeypatch.setenv("RPK_BRUTE_BOUND", "3")
    assert brute_bound() == 3
    with pytest.raises(InstanceTooLarge):
        brute_force_rp_kernel(ArcColouredDigraph(4))


@given(coloured_digraphs(max_n=6, max_m=4))
def test_closure_equivalence(d):
    found = brute_force_rp_kernel(d)
    assert found == all_kernels(rainbow_closure(d))
    assert found == rp_kernels(d.n, dict(d.colour))


# constructors


def test_unicyclic_examples():
    result = rp_kernel_unicyclic(RAINBOW_TRIANGLE)
    assert result.kernel == (0,) and result.branch == "strong" and result.validated
    pendant = ArcColouredDigraph(3, [(0, 1, 1), (1, 0, 2), (2, 0, 3)], "abc")
    result = rp_kernel_unicyclic(pendant)
    assert named(pendant, result.kernel) == {"a"}
    assert result.kernel in brute_force_rp_kernel(pendant)
    with pytest.raises(PreconditionFailed):
        rp_kernel_unicyclic(ArcColouredDigraph(3, [(0, 1, 1), (1, 2, 2)]))


def test_unicyclic_needs_a_rainbow_cycle():
    with pytest.raises(PreconditionFailed) as info:
        rp_kernel_unicyclic(ArcColouredDigraph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 2)]))
    assert info.value.condition == "unique cycle rainbow"


def test_unicyclic_adds_vertices_that_cannot_reach():
    # 0 <-> 1 cycle; 2 -> 3 -> 0 with 2->3 and 3->0 both colour 1, so 2 cannot reach {0}
    d = ArcColouredDigraph(4, [(0, 1, 5), (1, 0, 6), (2, 3, 1), (3, 0, 1)])
    result = rp_kernel_unicyclic(d)
    assert result.kernel in brute_force_rp_kernel(d)
    assert result.branch == "components" and 2 in result.kernel


def test_semicomplete_examples():
    assert rp_kernel_semicomplete(RAINBOW_TRIANGLE).kernel == (0,)
    transitive = ArcColouredDigraph(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)], "abc")
    assert named(transitive, rp_kernel_semicomplete(transitive).kernel) == {"c"}
    with pytest.raises(PreconditionFailed):
        rp_kernel_semicomplete(ArcColouredDigraph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]))


def test_quasi_transitive_examples():
    qt4 = fixture("QT4")
    result = rp_kernel_quasi_transitive(qt4)
    assert result.kernel in brute_force_rp_kernel(qt4)
    transitive = ArcColouredDigraph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)], "abc")
    assert named(transitive, rp_kernel_quasi_transitive(transitive).kernel) == {"c"}
    with pytest.raises(PreconditionFailed):
        rp_kernel_quasi_transitive(ArcColouredDigraph(3, [(0, 1, 1), (1, 2, 2)]))


@pytest.mark.parametrize("kind", ["unicyclic", "semicomplete", "quasi_transitive"])
@pytest.mark.parametrize("seed", range(15))
def test_constructor_output_is_among_enumerated_kernels(kind, seed):
    d = generate(GenProfile(kind, n=3 + seed % 6, seed=seed, m=2 + seed % 3))
    result = solve_with(d, kind)
    assert result.method == kind and result.validated
    assert result.kernel in brute_force_rp_kernel(d)


# dispatcher


def test_solve_examples():
    result = solve(RAINBOW_TRIANGLE)
    assert result.method == "unicyclic" and len(result.kernel) == 1
    assert any("also applicable" in line for line in result.diagnostics)
    fig4 = solve(fixture("FIG4"))
    assert fig4.method == "brute_force" and fig4.kernel is None and fig4.status == "absent"
    # no arcs means no 2-arc walks, so the quasi-transitive constructor applies first
    arcless = solve(ArcColouredDigraph(3))
    assert arcless.method == "quasi_transitive" and arcless.kernel == (0, 1, 2)
    assert solve_with(ArcColouredDigraph(3), "brute_force").kernel == (0, 1, 2)


def test_solve_reports_unknown_beyond_the_bound():
    fig4 = fixture("FIG4")
    result = solve(fig4, bound=4)
    assert result.status == "unknown" and result.kernel is None


def test_solve_with_rejects_unknown_method():
    with pytest.raises(ValueError):
        solve_with(RAINBOW_TRIANGLE, "magic")


@settings(max_examples=40)
@given(coloured_digraphs(max_n=6, max_m=3))
def test_solve_is_sound_and_complete_at_desk_scale(d):
    result = solve(d)
    assert result.method in METHODS
    expected = rp_kernels(d.n, dict(d.colour))
    if result.kernel is None:
        assert result.status == "absent" and expected == []
    else:
        assert result.validated and result.kernel in expected
