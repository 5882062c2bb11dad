from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rpkernel import GenProfile, UnknownFixture, brute_force_rp_kernel, classify, fixture, generate
from rpkernel.conditions import CYCLES4_MIN3, CYCLES4_RAINBOW, check_small_cycles_rainbow
from rpkernel.digraph import iter_cycles

CLASS_FLAG = {
    "unicyclic": "is_unicyclic",
    "semicomplete": "is_semicomplete",
    "quasi_transitive": "is_quasi_transitive",
    "bipartite": "is_bipartite_tournament",
}


def profiles():
    return st.one_of(
        st.builds(
            GenProfile,
            kind=st.sampled_from(["unicyclic", "semicomplete", "quasi_transitive"]),
            n=st.integers(2, 8),
            colouring=st.sampled_from(["random", "injective"]),
            m=st.integers(1, 4),
            seed=st.integers(0, 2**32),
            p=st.floats(0, 1),
        ),
        st.builds(
            GenProfile,
            kind=st.just("bipartite"),
            parts=st.tuples(st.integers(1, 3), st.integers(1, 4)),
            colouring=st.sampled_from(["random", "injective"]),
            m=st.integers(1, 4),
            seed=st.integers(0, 2**32),
        ),
    )


# fixtures


def test_fixture_lookup_is_case_insensitive():
    assert fixture("qt4") == fixture("QT4")
    with pytest.raises(UnknownFixture):
        fixture("K5")


def test_fig4_certifies():
    d = fixture("FIG4")
    report = classify(d)
    assert report.is_bipartite_tournament
    assert [len(p) for p in report.parts] == [2, 3]
    cycles = [c for c in iter_cycles(d, 4) if len(c) == 4]
    assert cycles and all(len({d.colour[a] for a in zip(c, c[1:] + c[:1])}) == 2 for c in cycles)
    assert brute_force_rp_kernel(d) == []


def test_pattern_fixtures_are_injective_and_in_class():
    for name in ("QT4", "CB5", "TB4"):
        d = fixture(name)
        assert d.colour_count == d.arc_count
    assert classify(fixture("QT4")).is_quasi_transitive


# generators


def test_generator_examples():
    d = generate(GenProfile("semicomplete", n=6, colouring="injective", seed=1))
    assert check_small_cycles_rainbow(d, 3)
    b = generate(GenProfile("bipartite", parts=(2, 5), m=4, seed=7))
    assert classify(b).conditions[CYCLES4_MIN3]


@pytest.mark.parametrize(
    "kwargs",
    [
        {"kind": "unicyclic", "n": 1},
        {"kind": "semicomplete"},
        {"kind": "bipartite", "parts": (0, 3)},
        {"kind": "bipartite"},
        {"kind": "tree", "n": 3},
        {"kind": "semicomplete", "n": 3, "colouring": "greedy"},
        {"kind": "semicomplete", "n": 3, "m": 0},
        {"kind": "semicomplete", "n": 65},
    ],
)
def test_bad_profiles_are_rejected(kwargs):
    with pytest.raises(ValueError):
        GenProfile(**kwargs)


@given(profiles())
def test_generation_is_deterministic(profile):
    assert generate(profile) == generate(profile)


@given(profiles())
def test_generated_instances_certify_themselves(profile):
    d = generate(profile)
    report = classify(d)
    assert getattr(report, CLASS_FLAG[profile.kind])
    assert profile.kind in report.applicable()
    assert d.labels == tuple(f"v{i}" for i in range(d.n))
    assert sorted(set(d.colour.values())) == list(range(1, d.colour_count + 1))


@given(profiles())
def test_injective_colouring_uses_one_colour_per_arc(profile):
    if profile.colouring == "injective":
        d = generate(profile)
        assert d.colour_count == d.arc_count


def test_min3_bipartite_meets_the_rainbow_four_cycle_condition():
    d = generate(GenProfile("bipartite", parts=(3, 4), m=2, seed=3))
    assert classify(d).conditions[CYCLES4_RAINBOW]
