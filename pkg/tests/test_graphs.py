"""Free categories on acyclic graphs, monads in spans, and the free-forgetful bijection."""

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dblcat import fixtures as fx
from dblcat.errors import CyclicGraph
from dblcat.monads import graphs as gr


def brute_paths(G):
    """Every edge sequence of length <= |edges| whose consecutive edges meet."""
    es = sorted(G.edges)
    out = {(x, (), x) for x in G.nodes}
    for n in range(1, len(es) + 1):
        for seq in itertools.product(es, repeat=n):
            if all(G.tgt(a) == G.src(b) for a, b in zip(seq, seq[1:])):
                out.add((G.src(seq[0]), seq, G.tgt(seq[-1])))
    return out


def test_chain_counts():
    C = gr.free_category(gr.chain_graph())
    assert len(C.objects) == 3
    assert len(C.morphisms) == 6
    assert C.validate().ok


@given(st.integers(0, 10_000), st.integers(2, 4))
def test_free_category_against_brute_force(seed, n):
    G = gr.random_acyclic(random.Random(seed), n, 0.4)
    C = gr.free_category(G)
    assert set(C.morphisms) == brute_paths(G)
    assert C.validate().ok


@given(st.integers(0, 10_000))
def test_category_is_a_monad_in_spans(seed):
    C = gr.free_category(gr.random_acyclic(random.Random(seed), 3, 0.5))
    M = gr.category_as_span_monad(C)
    assert gr.validate_span_monad(M).ok
    back = gr.span_monad_as_category(M)
    assert back.comp == C.comp and back.ids == C.ids


def test_broken_span_monad():
    M = gr.category_as_span_monad(gr.idempotent_category())
    table = dict(M.mu.table)
    table[("1", "e")] = "1"  # left unit law broken
    bad = gr.SpanMonad(M.P, gr.FinFn(M.mu.dom, M.mu.cod, table), M.eta)
    assert not gr.validate_span_monad(bad).ok


@pytest.mark.parametrize("G", [gr.loop_graph(), fx.cyclic_graph()], ids=["loop", "two-cycle"])
def test_cycle_witness_is_closed(G):
    with pytest.raises(CyclicGraph) as info:
        gr.free_category(G)
    cyc = info.value.witness
    assert cyc and all(G.tgt(a) == G.src(b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


def test_find_cycle_none_on_acyclic():
    assert gr.find_cycle(gr.chain_graph(5)) is None


@pytest.mark.parametrize("name,U,V,probes", gr.bundled_pairs(), ids=lambda x: x if isinstance(x, str) else "")
def test_bundled_bijections(name, U, V, probes):
    assert gr.validate_span_map(U).ok and gr.validate_span_map(V).ok
    r = gr.phi_UV_bijection(U, V, probes)
    assert r.report.ok, r.report.by_check()
    assert len(r.mnd_squares) == len(r.end_squares) > 0


@pytest.mark.parametrize("seed", range(3))
def test_random_induced_bijection(seed):
    C, D, h = gr.random_induced(random.Random(seed), 2, 3)
    U = gr.induced_map(C, D, h)
    r = gr.phi_UV_bijection(U, gr.span_free_monad_map(U))
    assert r.report.ok


def test_span_map_missing_entry():
    U = gr.identity_map(gr.chain_graph())
    phi = dict(U.phi)
    phi.pop(next(iter(sorted(phi))))
    assert not gr.validate_span_map(gr.EndMap(U.C, U.D, U.U, phi)).ok


def test_unit_is_vertically_trivial():
    G = gr.chain_graph(4)
    u = gr.unit_component(G)
    assert gr.unit_is_vertically_trivial(G)
    assert all(p == (G.src(e), (e,), G.tgt(e)) for e, p in u.on_arrow.items())


def test_graph_and_category_json():
    G = gr.chain_graph()
    assert gr.Graph.from_json(G.to_json()) == G
    C = gr.free_category(G)
    C2 = gr.FinCategory.from_json(C.to_json())
    assert C2.comp == C.comp and C2.validate().ok
