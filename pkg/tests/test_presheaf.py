"""Lax presheaves, transformations between them, and the double Yoneda bijection."""

import itertools
import json

import pytest

from dblcat import fixtures as fx
from dblcat.core import ordered, terminal, view
from dblcat.folding import quintet
from dblcat.presheaf import (LaxPresheaf, compose_presheaf_hornat, empty_presheaf, enumerate_hornats,
                             hom_param, identity_presheaf_hornat, is_iso, represented, terminal_presheaf,
                             validate_lax, validate_presheaf_hornat, yoneda_forward, yoneda_inverse)

Q_M = quintet(fx.idempotent_monoid(), "direct")[0]
BASES = {"terminal": terminal(), "two": fx.arrow_and_vertical(), "Q_M": Q_M}


@pytest.mark.parametrize("base", sorted(BASES))
def test_representables_are_lax_presheaves(base):
    D = BASES[base]
    for R in D.objects:
        assert validate_lax(represented(D, R)).ok


@pytest.mark.parametrize("base", sorted(BASES))
def test_terminal_presheaf_is_valid(base):
    assert validate_lax(terminal_presheaf(BASES[base])).ok


def test_represented_sets_are_hom_sets():
    D = fx.arrow_and_vertical()
    for R, A in itertools.product(D.objects, repeat=2):
        assert represented(D, R).on_obj[A] == frozenset(D.hom_h(R, A))


@pytest.mark.parametrize("base", sorted(BASES))
def test_yoneda_counts(base):
    D = BASES[base]
    for R in ordered(D.objects):
        for K in (terminal_presheaf(D), *(represented(D, S) for S in ordered(D.objects))):
            alphas = list(enumerate_hornats(represented(D, R), K))
            assert len(alphas) == len(K.on_obj[R])
            assert {yoneda_forward(a, R) for a in alphas} == set(K.on_obj[R])


def test_yoneda_inverse_round_trip():
    D = Q_M
    R = ordered(D.objects)[0]
    K = represented(D, R)
    for x in ordered(K.on_obj[R]):
        alpha = yoneda_inverse(K, R, x)
        assert validate_presheaf_hornat(alpha).ok
        assert yoneda_forward(alpha, R) == x


def test_no_maps_into_empty():
    D = fx.arrow_and_vertical()
    E = empty_presheaf(D)
    assert validate_lax(E).ok
    assert list(enumerate_hornats(represented(D, "a"), E)) == []


def test_identity_and_composite_transformations():
    K = represented(Q_M, ordered(Q_M.objects)[0])
    one = identity_presheaf_hornat(K)
    assert is_iso(one)
    two = compose_presheaf_hornat(one, one)
    assert validate_presheaf_hornat(two).ok


def test_hom_presheaf_on_product_base():
    D = fx.arrow_and_vertical()
    P = hom_param(D)
    assert validate_lax(P).ok
    for a, b in itertools.product(D.objects, repeat=2):
        assert P.on_obj[(a, b)] == frozenset(D.hom_h(a, b))


def test_presheaf_json_round_trip():
    from dblcat import core
    D = core.from_json(json.loads(json.dumps(core.to_json(Q_M))))
    K = represented(Q_M, ordered(Q_M.objects)[0])
    K2 = LaxPresheaf.from_json(json.loads(json.dumps(K.to_json())), D)
    assert validate_lax(K2).ok
    assert {k: len(v) for k, v in K2.on_obj.items()} == {str(k): len(v) for k, v in K.on_obj.items()}


def test_contravariant_representable_on_horop():
    D = fx.arrow_and_vertical()
    K = represented(view(D, "horop"), "b")
    assert validate_lax(K).ok
