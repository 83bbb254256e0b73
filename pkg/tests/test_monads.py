"""End and Mnd of a double category, inherited cofoldings, free monads, EM objects."""

import pytest

from dblcat import fixtures as fx
from dblcat.core import embed_2category, ordered, validate
from dblcat.errors import BoundaryMismatch, InvalidCofolding, NotUniversal
from dblcat.folding import quintet, validate_folding
from dblcat.functors import validate_functor
from dblcat.monads import endmnd

M = fx.idempotent_monoid()
QM, COF_M = quintet(M, "inverse")
END_M = endmnd.build_end(QM)
MND_M = endmnd.build_mnd(QM, END_M)


def test_monads_of_brute_force():
    # on the posetal monoid 1 <= s with s s = s both endomorphisms carry exactly one monad
    ms = endmnd.monads_of(QM)
    assert sorted(m.P for m in ms) == ["1", "s"]
    for m in ms:
        assert endmnd.validate_monad(QM, m).ok


def test_monad_with_wrong_frame():
    m = endmnd.trivial_monad(QM, "*")
    bad = endmnd.MonadCell("*", "s", m.mu, m.eta)
    assert "frame" in endmnd.validate_monad(QM, bad).by_check()
    H = embed_2category(fx.karoubi(), "h")
    with pytest.raises(BoundaryMismatch):
        endmnd.validate_monad(H, endmnd.MonadCell("*", "p", "x", "y"))


@pytest.mark.parametrize("which", ["end", "mnd"])
def test_tables_are_valid(which):
    em = END_M if which == "end" else MND_M
    assert validate(em.table).ok
    assert validate_functor(em.underlying).ok


def test_forget_is_a_functor():
    assert validate_functor(MND_M.forget).ok
    assert set(MND_M.forget.cod.objects) == set(END_M.table.objects)


@pytest.mark.parametrize("K", [fx.idempotent_monoid(), fx.karoubi()], ids=lambda K: K.name)
@pytest.mark.parametrize("monadic", [False, True], ids=["End", "Mnd"])
def test_horizontal_part_matches_street(K, monadic):
    rep = endmnd.compare_with_street(K, monadic)
    assert rep.ok, rep.violations[:2]


@pytest.mark.parametrize("monadic", [False, True], ids=["End", "Mnd"])
def test_quintet_identity(monadic):
    rep, maps, EQ, target = endmnd.end_quintet_iso(fx.karoubi(), monadic)
    assert rep.ok
    assert len(maps["sq"]) == len(EQ.squares) == len(target.squares)


def test_inherited_cofoldings():
    end_cof, mnd_cof = endmnd.inherit_cofolding(QM, COF_M, END_M, MND_M)
    assert validate_folding(end_cof).ok
    assert validate_folding(mnd_cof).ok


def test_inheritance_needs_a_cofolding():
    lam = dict(COF_M.lam)
    a = next(x for x in ordered(lam) if not QM.is_id_v(QM.boundary(x).left))
    del lam[a]
    broken = type(COF_M)(QM, COF_M.coholonomy, lam)
    with pytest.raises(InvalidCofolding):
        endmnd.inherit_cofolding(QM, broken, END_M, MND_M)


@pytest.mark.parametrize("u", sorted(QM.vmors))
def test_star_bijection(u):
    table, rep = endmnd.star_bijection(QM, COF_M, u, END_M)
    assert rep.ok
    for v, h in table.items():
        assert endmnd.star_inverse(QM, COF_M, h, v[1], v[2]) == v


def test_free_monads_on_idempotent_monoid():
    hfree = endmnd.hfree_from_choice(QM, {"1": "1", "s": "s"}, MND_M)
    w = endmnd.construct_free_monads(QM, COF_M, hfree, END_M, MND_M)
    assert w.report.ok
    assert w.report.checked.get("vertically_trivial") == len(END_M.table.objects)


def test_missing_free_monad_rejected():
    hfree = endmnd.hfree_from_choice(QM, {"1": "1"}, MND_M)
    with pytest.raises(NotUniversal):
        endmnd.construct_free_monads(QM, COF_M, hfree, END_M, MND_M)


def test_ambiguous_choice_rejected():
    Q, _ = quintet(fx.chain_monoid(), "inverse")
    with pytest.raises(NotUniversal):
        endmnd.hfree_from_choice(Q, {"1": "t"})


def test_inclusion_of_trivial_monads():
    inc = endmnd.inclusion(QM, MND_M)
    assert validate_functor(inc).ok
    assert all(inc.obj(X)[1] == QM.id_h[X] for X in QM.objects)


def test_em_objects():
    Q, _ = quintet(fx.karoubi(), "inverse")
    res = endmnd.em_check(Q)
    assert res.found
    G = res.witness[0]
    inc = endmnd.inclusion(Q, endmnd.build_mnd(Q))
    assert all(G.obj(inc.obj(X)) == X for X in Q.objects)


@pytest.mark.parametrize("K", [fx.karoubi(), fx.idempotent_monoid()], ids=lambda K: K.name)
def test_no_em_objects_on_horizontal_embedding(K):
    res = endmnd.em_check(embed_2category(K, "h"))
    assert not res.found
    assert res.transcript
