"""Bundled fixtures and the exported example files."""

import json

from dblcat import core
from dblcat import fixtures as fx
from dblcat.criteria import path_count_oracle, pullback_oracle
from dblcat.monads import graphs as gr
from dblcat import span as sp


def test_export_round_trips(tmp_path):
    paths = fx.export_examples(tmp_path)
    assert len(paths) == len(set(paths))
    for name in fx.corpus():
        D = core.load(tmp_path / f"{name}.json")
        assert core.validate(D).ok
    for p in paths:
        json.loads(p.read_text())


def test_law_breakers_differ_from_valid():
    for desc, D, check in fx.law_breakers():
        assert not core.validate(D).ok, desc


def test_every_mutation_changes_the_table():
    base = fx.corpus()["Q_Kar"]
    for desc, D, _ in fx.mutations(base):
        assert core.to_json(D) != core.to_json(base), desc


def test_path_count_oracle_on_chain():
    # a -> b -> c: three identities, two edges, one composite
    assert path_count_oracle(gr.chain_graph()) == 6
    assert path_count_oracle(gr.chain_graph(4)) == 10


def test_pullback_oracle_small():
    A = frozenset({"a"})
    s = sp.make_span(A, A, {"y0": ("a", "a"), "y1": ("a", "a")})
    assert len(pullback_oracle(s, s)) == 4
