from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import has_cycle, kernels, random_acyclic, random_kp_candidate, subsets
from rpkernel import (
    Digraph,
    InstanceTooLarge,
    NotAcyclic,
    PreconditionFailed,
    acyclic_kernel,
    all_kernels,
    is_kernel,
    kernel_of_kp,
    kp_sufficient,
)
from rpkernel.digraph import induced_subdigraph
from strategies import coloured_digraphs

PATH = Digraph(3, [(0, 1), (1, 2)], ["a", "b", "c"])
TRIANGLE = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def uncoloured(d) -> Digraph:
    return Digraph(d.n, d.arcs())


# is_kernel


def test_single_vertex_is_its_own_kernel():
    assert is_kernel(Digraph(1), [0])


def test_path_kernels():
    assert is_kernel(PATH, [0, 2])
    verdict = is_kernel(PATH, [2])
    assert not verdict
    assert verdict.witness.kind == "unabsorbed" and verdict.witness.vertices == (0,)
    assert verdict.witness.describe(PATH.labels) == "a unabsorbed"


def test_two_cycle_pair_is_not_independent():
    verdict = is_kernel(Digraph(2, [(0, 1), (1, 0)]), [0, 1])
    assert not verdict and verdict.witness.kind == "adjacent"


@given(coloured_digraphs(max_n=6), st.data())
def test_is_kernel_matches_definition(d, data):
    g = uncoloured(d)
    s = data.draw(st.sets(st.integers(0, d.n - 1), min_size=1))
    assert is_kernel(g, s).ok == (tuple(sorted(s)) in kernels(g.n, g.arcs()))


# all_kernels


def test_all_kernels_examples():
    assert all_kernels(PATH) == [(0, 2)]
    assert all_kernels(TRIANGLE) == []
    assert all_kernels(Digraph(4)) == [(0, 1, 2, 3)]


def test_all_kernels_respects_bound():
    with pytest.raises(InstanceTooLarge):
        all_kernels(Digraph(5), bound=4)


@given(coloured_digraphs(max_n=7))
def test_all_kernels_matches_subset_oracle(d):
    g = uncoloured(d)
    found = all_kernels(g)
    assert found == kernels(g.n, g.arcs())
    assert all(is_kernel(g, s) for s in found)


# acyclic_kernel


def test_acyclic_kernel_examples():
    assert acyclic_kernel(Digraph(1)) == (0,)
    assert acyclic_kernel(PATH) == (0, 2)
    assert acyclic_kernel(Digraph(2)) == (0, 1)
    with pytest.raises(NotAcyclic):
        acyclic_kernel(TRIANGLE)


@pytest.mark.parametrize("seed", range(40))
def test_acyclic_digraphs_have_exactly_one_kernel(seed):
    rng = random.Random(seed)
    g = random_acyclic(rng, rng.randint(1, 9), rng.random())
    assert kernels(g.n, g.arcs()) == [acyclic_kernel(g)]


# kernel-perfect sufficient condition


def test_kp_sufficient_examples():
    assert kp_sufficient(PATH)
    assert kp_sufficient(Digraph(2, [(0, 1), (1, 0)]))
    assert not kp_sufficient(TRIANGLE)


def test_kernel_of_kp_examples():
    assert kernel_of_kp(PATH) == acyclic_kernel(PATH)
    assert kernel_of_kp(Digraph(2, [(0, 1), (1, 0)])) == (0,)
    complete = Digraph(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    assert kernel_of_kp(complete) == (0,)
    with pytest.raises(PreconditionFailed):
        kernel_of_kp(TRIANGLE)


@given(coloured_digraphs(max_n=7))
def test_kp_sufficient_agrees_with_cycle_inspection(d):
    g = uncoloured(d)
    arcs = set(g.arcs())
    asymmetric = [(u, v) for u, v in arcs if (v, u) not in arcs]
    assert kp_sufficient(g) == (not has_cycle(g.n, asymmetric))


@pytest.mark.parametrize("seed", range(30))
def test_kp_digraphs_are_kernel_perfect(seed):
    rng = random.Random(1000 + seed)
    g = random_kp_candidate(rng, rng.randint(1, 7), rng.random(), rng.random() * 0.5)
    assert kp_sufficient(g)
    for s in subsets(g.n):
        sub = induced_subdigraph(g, s)
        assert kernels(sub.n, sub.arcs()), s
    assert is_kernel(g, kernel_of_kp(g))
