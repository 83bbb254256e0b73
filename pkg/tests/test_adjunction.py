"""Adjunctions given by unit and counit, by local bijections, and by representability."""

import pytest

from dblcat import fixtures as fx
from dblcat.adjunction import (LocalBijection, check_param_iso, check_phi, check_unit_counit,
                               extend_left_adjoint, extend_right_adjoint, is_couniversal_square,
                               is_universal_square, left_adjoint_via_representability, phi_from_uc,
                               phi_round_trip, right_adjoint_via_representability, uc_from_phi)
from dblcat.errors import InvalidAdjunction, InvalidLocalBijection
from dblcat.functors import HorNatTable
from dblcat.core import ordered

FIXTURES = {"quintets": fx.kar_adjunction("direct"), "inverse": fx.kar_adjunction("inverse"),
            "embedding": fx.kar_adjunction_h(), "point": fx.pick_adjunction()}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_stored_unit_counit(name):
    F, G, unit, counit = FIXTURES[name]
    assert check_unit_counit(F, G, unit, counit).ok


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_phi_round_trip(name):
    F, G, unit, counit = FIXTURES[name]
    phi = phi_from_uc(F, G, unit, counit)
    assert check_phi(phi).ok
    assert phi_round_trip(phi)
    uc = uc_from_phi(phi)
    assert uc.unit.at_vmor == unit.at_vmor and uc.counit.at_vmor == counit.at_vmor


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_units_universal_counits_couniversal(name):
    F, G, unit, counit = FIXTURES[name]
    for j in ordered(F.dom.vmors):
        assert is_universal_square(G, j, F.vmor(j), unit.at_vmor[j])
    for k in ordered(F.cod.vmors):
        assert is_couniversal_square(F, k, G.vmor(k), counit.at_vmor[k])


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_adjoints_rebuilt_from_objects(name):
    F, G, unit, counit = FIXTURES[name]
    F2, _ = extend_left_adjoint(G, F.on_obj, F.on_vmor, unit.at_vmor)
    G2, _ = extend_right_adjoint(F, G.on_obj, G.on_vmor, counit.at_vmor)
    assert F2.on_square == F.on_square and F2.on_hmor == F.on_hmor
    assert G2.on_square == G.on_square and G2.on_hmor == G.on_hmor


def test_param_iso_middle_maps():
    F, G, unit, counit = FIXTURES["quintets"]
    phi = phi_from_uc(F, G, unit, counit)
    rep, theta = check_param_iso(phi)
    assert rep.ok
    for p, m in phi.table.items():
        assert theta.at_vmor[p].table == m


def test_wrong_counit_rejected():
    F, G, unit, counit = FIXTURES["point"]
    Q = F.cod
    # identity components do not fit the frame of JL => 1 at *
    bad = HorNatTable(counit.source, counit.target, {a: Q.id_h[a] for a in Q.objects},
                      {k: Q.ih(k) for k in Q.vmors})
    with pytest.raises(InvalidAdjunction):
        phi_from_uc(F, G, unit, bad)


def test_tampered_phi_rejected():
    F, G, unit, counit = FIXTURES["quintets"]
    phi = phi_from_uc(F, G, unit, counit)
    table = {p: dict(m) for p, m in phi.table.items()}
    p = next(p for p in sorted(table, key=str) if table[p])
    table[p].popitem()
    bad = LocalBijection(F, G, table)
    assert not check_phi(bad).ok
    with pytest.raises(InvalidLocalBijection):
        uc_from_phi(bad)


def test_right_adjoint_found_by_representability():
    J, L, _, _ = FIXTURES["point"]
    found = right_adjoint_via_representability(J)
    assert found is not None
    assert found[0].on_obj == L.on_obj


def test_left_adjoint_found_by_representability():
    J, L, _, _ = FIXTURES["point"]
    F = left_adjoint_via_representability(L)
    assert F is not None and F.on_obj == J.on_obj


def test_no_right_adjoint_to_terminal():
    D = fx.arrow_and_vertical()
    transcript = []
    assert right_adjoint_via_representability(fx.to_terminal(D), transcript=transcript) is None
    assert transcript and transcript[0]["stage"] == "objects"
