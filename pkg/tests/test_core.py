"""Tables, composition, the validator, views and serialization."""

import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dblcat import core
from dblcat import fixtures as fx
from dblcat.core import Boundary, CellRef, Key, compose, validate, view
from dblcat.errors import KindMismatch, MalformedInput, NonComposable, UnknownCell
from dblcat.folding import quintet

CORPUS = fx.corpus()


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_is_valid(name):
    rep = validate(CORPUS[name])
    assert rep.ok, rep.violations[:3]


def test_terminal_sizes():
    assert core.terminal().sizes() == {"objects": 1, "hmors": 1, "vmors": 1, "squares": 1}


@pytest.mark.parametrize("desc,D,check", fx.mutations(CORPUS["Q_Kar"]) + fx.law_breakers(),
                         ids=lambda x: x if isinstance(x, str) else "")
def test_planted_defect_is_caught(desc, D, check):
    found = validate(D).by_check()
    assert check in found


def test_key_hash_matches_tuple():
    k = Key(("a", ("b", 1)))
    assert hash(k) == hash(("a", ("b", 1)))
    assert {k: 1}[("a", ("b", 1))] == 1


def _composable_triples(D):
    for f, g, h in itertools.product(D.hmors, repeat=3):
        if D.htgt(f) == D.hsrc(g) and D.htgt(g) == D.hsrc(h):
            yield f, g, h


def test_horizontal_associativity_brute_force():
    D = CORPUS["Q_Kar"]
    n = 0
    for f, g, h in _composable_triples(D):
        assert D.comp_h(D.comp_h(f, g), h) == D.comp_h(f, D.comp_h(g, h)) == D.comp_h(f, g, h)
        n += 1
    assert n > 0


Q = CORPUS["Q_Kar"]
SQUARES = sorted(Q.squares, key=core.sort_key)


@given(st.sampled_from(SQUARES))
def test_identity_squares_are_units(a):
    bd = Q.boundary(a)
    assert Q.sq_h(Q.ih(bd.left), a) == a == Q.sq_h(a, Q.ih(bd.right))
    assert Q.sq_v(Q.iv(bd.top), a) == a == Q.sq_v(a, Q.iv(bd.bottom))


@given(st.sampled_from(SQUARES), st.sampled_from(SQUARES))
def test_horizontal_composite_frame(a, b):
    ba, bb = Q.boundary(a), Q.boundary(b)
    if ba.right != bb.left:
        with pytest.raises(NonComposable):
            Q.sq_h(a, b)
        return
    c = Q.boundary(Q.sq_h(a, b))
    assert c == Boundary(Q.comp_h(ba.top, bb.top), Q.comp_h(ba.bottom, bb.bottom), ba.left, bb.right)


def test_unknown_cell():
    with pytest.raises(UnknownCell):
        Q.boundary("no such square")


def test_compose_kinds():
    f = next(x for x in Q.hmors if not Q.is_id_h(x))
    A = Q.hsrc(f)
    assert compose(Q, "h", [Q.id_h[A], f], kind="hmor") == f
    assert compose(Q, "h", [CellRef("hmor", Q.id_h[A]), CellRef("hmor", f)]) == f
    with pytest.raises(KindMismatch):
        compose(Q, "v", [f], kind="hmor")
    with pytest.raises(KindMismatch):
        compose(Q, "h", [CellRef("hmor", f), CellRef("vmor", Q.id_v[A])])


@pytest.mark.parametrize("which", ["horop", "transpose", "H", "V1"])
def test_views_are_valid(which):
    assert validate(view(Q, which)).ok


def test_transpose_twice_is_identity():
    T = view(view(Q, "transpose"), "transpose")
    a, b = core.to_json(T), core.to_json(Q)
    a.pop("name"), b.pop("name")
    assert a == b


def test_product_sizes_multiply():
    A, B = fx.companion_pair(), core.embed_2category(fx.idempotent_monoid(), "h")
    P = core.product(A, B)
    sa, sb = A.sizes(), B.sizes()
    assert P.sizes() == {k: sa[k] * sb[k] for k in sa}


@pytest.mark.parametrize("name", ["terminal", "Q_M", "companion_x_H_M"])
def test_json_round_trip_is_isomorphic(name, tmp_path):
    D = CORPUS[name]
    core.dump(D, tmp_path / "d.json")
    E = core.load(tmp_path / "d.json")
    assert validate(E).ok
    assert E.sizes() == D.sizes()
    assert core.to_json(E) == json.loads(json.dumps(core.to_json(D)))
    assert core.find_isomorphism(D, E) is not None


def test_from_json_rejects_garbage():
    with pytest.raises(MalformedInput):
        core.from_json({"objects": []})


def test_find_isomorphism_distinguishes():
    assert core.find_isomorphism(CORPUS["Q_M"], CORPUS["H_M"]) is None
    assert core.find_isomorphism(fx.companion_pair(), fx.arrow_and_vertical()) is None


def test_two_category_round_trip():
    K = fx.karoubi()
    K2 = core.Finite2Category.from_json(json.loads(json.dumps(K.to_json())))
    assert core.validate_2category(K2).ok
    assert len(K2.cells2) == len(K.cells2)


def test_horizontal_2category_of_quintets():
    K = fx.chain_monoid()
    Qk, _ = quintet(K, "inverse")
    H = core.horizontal_2category(Qk)
    assert core.validate_2category(H).ok
    assert set(H.mor1) == set(K.mor1)
