"""Pullback composition of spans and span squares against brute force."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dblcat import span as sp
from dblcat.errors import NonComposable


def pullback_oracle(s, t):
    return {(x, y) for x in s.apex for y in t.apex if s.right_leg(x) == t.left_leg(y)}


def _set(tag, n):
    return frozenset(f"{tag}{i}" for i in range(n))


@st.composite
def composable_pair(draw):
    A, B, C = (_set(t, draw(st.integers(1, 3))) for t in "abc")
    L1, M, R = sorted(A), sorted(B), sorted(C)
    n = draw(st.integers(0, 4))
    m = draw(st.integers(0, 4))
    s = sp.make_span(A, B, {f"y{i}": (draw(st.sampled_from(L1)), draw(st.sampled_from(M))) for i in range(n)})
    t = sp.make_span(B, C, {f"z{i}": (draw(st.sampled_from(M)), draw(st.sampled_from(R))) for i in range(m)})
    return s, t


@given(composable_pair())
def test_composite_apex_is_the_pullback(pair):
    s, t = pair
    u = sp.compose_spans(s, t)
    assert u.apex == pullback_oracle(s, t)
    assert u.well_formed()
    for x, y in u.apex:
        assert u.left_leg((x, y)) == s.left_leg(x)
        assert u.right_leg((x, y)) == t.right_leg(y)


@given(composable_pair())
def test_identity_spans_are_strict_units(pair):
    s, _ = pair
    assert sp.compose_spans(sp.identity_span(s.left), s) is s
    assert sp.compose_spans(s, sp.identity_span(s.right)) is s


def test_mismatched_feet():
    s = sp.identity_span(_set("a", 2))
    t = sp.identity_span(_set("b", 2))
    with pytest.raises(NonComposable):
        sp.compose_spans(s, t)


def test_sweep_counts_multisets():
    # spans 1 -> 2 with apex <= 2 up to relabelling: multisets of size <= 2 from 2 pairs
    spans = list(sp.sweep_spans(_set("a", 1), _set("b", 2), 2))
    assert len(spans) == 1 + 2 + 3


@pytest.mark.parametrize("seed", range(20))
def test_interchange_on_random_grids(seed):
    rng = random.Random(seed)
    (a, b), (c, d) = sp.random_grid(rng, 2, 2, tag="g")
    h = sp.compose_span_squares
    assert h("v", h("h", a, b), h("h", c, d)) == h("h", h("v", a, c), h("v", b, d))


@pytest.mark.parametrize("seed", range(20))
def test_associator_is_invertible(seed):
    rng = random.Random(seed)
    s, t, u = sp.random_composable_spans(rng, 3)
    a, b = sp.associator(s, t, u), sp.associator_inverse(s, t, u)
    assert a.well_formed() and b.well_formed()
    assert sp.compose_span_squares("v", a, b) == sp.iv(a.top)
    assert sp.compose_span_squares("v", b, a) == sp.iv(b.top)


@pytest.mark.parametrize("seed", range(10))
def test_random_squares_are_well_formed(seed):
    rng = random.Random(seed)
    for row in sp.random_grid(rng, 2, 3, tag="w"):
        for sq in row:
            assert sq.well_formed()


def test_span_json_round_trip():
    rng = random.Random(3)
    s = sp.random_span(rng, _set("a", 2), _set("b", 3))
    assert sp.span_from_json(sp.span_to_json(s)) == s


def test_fn_composition():
    f = sp.FinFn(_set("a", 2), _set("b", 1), {"a0": "b0", "a1": "b0"})
    g = sp.FinFn(_set("b", 1), _set("c", 2), {"b0": "c1"})
    assert f.then(g).table == {"a0": "c1", "a1": "c1"}
    with pytest.raises(NonComposable):
        g.then(f)
