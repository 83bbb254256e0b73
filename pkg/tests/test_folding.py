"""Foldings and cofoldings: quintets, the span formulas, transfer of adjunctions."""

import random

import pytest

from dblcat import fixtures as fx
from dblcat import folding as fo
from dblcat import span as sp
from dblcat.adjunction import check_phi, phi_from_uc, uc_from_phi
from dblcat.core import validate
from dblcat.errors import NotFullyFaithful
from dblcat.folding import (Folding, folding_from_json, hadj_from_unit, holonomy_ff_check, quintet,
                            quintet_iso, span_fold_axiom, transfer_adjunction, unfold, validate_folding)
from dblcat.functors import validate_functor

BASES = [fx.idempotent_monoid(), fx.chain_monoid(), fx.karoubi(), fx.walking_arrow()]
AXIOMS = ("identity", "unit", "bijection", "horizontal", "vertical")


@pytest.mark.parametrize("variant", ["direct", "inverse"])
@pytest.mark.parametrize("K", BASES, ids=lambda K: K.name)
def test_quintet_folding_axioms(K, variant):
    Q, phi = quintet(K, variant)
    assert validate(Q).ok
    assert validate_folding(phi).ok
    assert phi.kind == ("folding" if variant == "direct" else "cofolding")
    assert holonomy_ff_check(phi).ok


@pytest.mark.parametrize("variant", ["direct", "inverse"])
def test_quintet_iso_is_a_functor(variant):
    _, phi = quintet(fx.karoubi(), variant)
    iso = quintet_iso(phi)
    assert validate_functor(iso).ok


def test_unfold_inverts_lambda():
    Q, phi = quintet(fx.chain_monoid(), "inverse")
    inv = fo.lam_inverse(phi)
    for a, g in phi.lam.items():
        bd = Q.boundary(a)
        assert unfold(phi, g, bd, inv) == a


def test_corrupted_lambda_rejected():
    Q, phi = quintet(fx.chain_monoid(), "direct")
    lam = dict(phi.lam)
    a = next(x for x in sorted(lam, key=str) if lam[x] != x and not Q.is_id_v(Q.boundary(x).left))
    lam[a] = a
    assert not validate_folding(Folding(Q, phi.holonomy, lam)).ok


def test_holonomy_that_is_not_full():
    H = fx.corpus()["H_Kar"]
    lam = {a: a for a in H.squares}
    phi = Folding(H, {j: H.id_h[H.vsrc(j)] for j in H.vmors}, lam)
    assert holonomy_ff_check(phi).ok is False
    with pytest.raises(NotFullyFaithful):
        quintet_iso(phi)
    assert fo.span_holonomy_not_full()["span"] == "empty apex"


def test_folding_json_round_trip():
    from dblcat import core
    Q, phi = quintet(fx.idempotent_monoid(), "direct")
    D = core.from_json(core.to_json(Q))
    phi2 = folding_from_json(phi.to_json(), D)
    assert phi2.kind == "folding"
    assert validate_folding(phi2).ok


def _samples(seed, n):
    rng = random.Random(seed)
    for i in range(n):
        (a, b), (c, _) = sp.random_grid(rng, 2, 2, tag=f"t{i}_")
        top = a.top
        glob = sp.random_square_onto(rng, sp.random_span(rng, top.left, top.right, tag=f"b{i}_"),
                                     sp.FinFn.identity(top.left), sp.FinFn.identity(top.right),
                                     tag=f"y{i}_")
        yield {"identity": (glob,), "unit": (a.left_fn,), "bijection": (a,),
               "horizontal": (a, b), "vertical": (a, c)}


@pytest.mark.parametrize("cofold", [False, True], ids=["folding", "cofolding"])
def test_span_formulas_pass_axioms(cofold):
    for cells in _samples(7, 60):
        for axiom in AXIOMS:
            assert span_fold_axiom(axiom, cells[axiom], cofold) is None, axiom


def _first_in_fiber(a):
    """Right frame, wrong apex map: ignores ``a`` and picks the first element of each fiber."""
    good = fo._span_folding_cell_ref(a)
    top, bottom = good.top, good.bottom
    table = {}
    for e in top.apex:
        fiber = [z for z in bottom.apex
                 if bottom.left_leg(z) == top.left_leg(e) and bottom.right_leg(z) == top.right_leg(e)]
        table[e] = min(fiber, key=str)
    return sp.SpanSquare(top, bottom, good.left_fn, good.right_fn, sp.FinFn(top.apex, bottom.apex, table))


def test_wrong_span_formula_fails(monkeypatch):
    monkeypatch.setattr(fo, "_span_folding_cell_ref", fo.span_folding_cell, raising=False)
    monkeypatch.setattr(fo, "span_folding_cell", _first_in_fiber)
    failures = set()
    for cells in _samples(11, 200):
        for axiom in ("identity", "bijection"):
            if span_fold_axiom(axiom, cells[axiom], False) is not None:
                failures.add(axiom)
    assert failures == {"identity", "bijection"}


@pytest.mark.parametrize("variant", ["direct", "inverse"])
def test_transfer_adjunction(variant):
    F, G, unit, counit = fx.kar_adjunction(variant)
    _, phi_q = quintet(fx.karoubi(), variant)
    hadj = hadj_from_unit(F, G, unit.at_obj)
    phi = transfer_adjunction(F, G, phi_q, phi_q, hadj)
    assert check_phi(phi).ok
    uc = uc_from_phi(phi)
    assert uc.unit.at_vmor == unit.at_vmor
    assert phi_from_uc(F, G, uc.unit, uc.counit).table == phi.table
