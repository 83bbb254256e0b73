"""Double functors and transformations as tables."""

import pytest

from dblcat import fixtures as fx
from dblcat.core import terminal
from dblcat.folding import quintet, quintet_functor
from dblcat.functors import (DoubleFunctorTable, compose_functors, compose_hornat, horop_functor,
                             identity_functor, identity_hornat, transformations_equal,
                             transpose_functor, validate_functor, validate_hornat, whisker)

CORPUS = fx.corpus()


@pytest.mark.parametrize("name", ["terminal", "Q_Kar", "companion"])
def test_identity_functor_is_valid(name):
    assert validate_functor(identity_functor(CORPUS[name])).ok


def test_functor_into_terminal_and_back():
    Q = CORPUS["Q_Kar"]
    L, J = fx.to_terminal(Q), fx.from_terminal(Q, "r")
    assert validate_functor(L).ok and validate_functor(J).ok
    JL = compose_functors(J, L)
    assert JL.on_obj == identity_functor(terminal()).on_obj


def test_composition_is_associative():
    F, G, _, _ = fx.kar_adjunction("direct")
    a = compose_functors(compose_functors(F, G), F)
    b = compose_functors(F, compose_functors(G, F))
    assert (a.on_obj, a.on_hmor, a.on_vmor, a.on_square) == (b.on_obj, b.on_hmor, b.on_vmor, b.on_square)


def test_derived_functors_are_valid():
    F, *_ = fx.kar_adjunction("inverse")
    assert validate_functor(transpose_functor(F)).ok
    assert validate_functor(horop_functor(F)).ok


def test_broken_functor_is_caught():
    F, *_ = fx.kar_adjunction("direct")
    f = next(x for x in F.dom.hmors if not F.dom.is_id_h(x))
    bad = dict(F.on_hmor)
    bad[f] = F.cod.id_h[F.obj(F.dom.hsrc(f))]
    if bad[f] == F.on_hmor[f]:
        bad[f] = next(g for g in F.cod.hmors if g != F.on_hmor[f])
    G = DoubleFunctorTable(F.dom, F.cod, F.on_obj, bad, F.on_vmor, F.on_square)
    assert not validate_functor(G).ok


def test_missing_image_is_totality():
    F, *_ = fx.kar_adjunction("direct")
    G = DoubleFunctorTable(F.dom, F.cod, F.on_obj, F.on_hmor, F.on_vmor, {})
    assert "totality" in validate_functor(G).by_check()


def test_quintet_functor_of_identity():
    K = fx.karoubi()
    Q, _ = quintet(K, "direct")
    F = quintet_functor(fx._identity_2functor(K), K, K, "direct")
    assert validate_functor(F).ok
    assert F.on_square == {a: a for a in Q.squares}


def test_transformations():
    F, G, unit, counit = fx.kar_adjunction("direct")
    assert validate_hornat(unit).ok and validate_hornat(counit).ok
    one = identity_hornat(F)
    assert validate_hornat(one).ok
    assert transformations_equal(compose_hornat(one, one), one)
    assert validate_hornat(whisker(unit, F, "post")).ok
    assert validate_hornat(whisker(unit, F, "pre")).ok
