"""The acceptance criteria as runnable checks.

Each ``criterion_N(seed)`` does the full computation and returns an
``Outcome`` with one boolean per sub-check and a witness for the first
failure.  The CLI and the acceptance tests both call these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import fixtures as fx
from .adjunction import (check_param_iso, check_phi, extend_left_adjoint, extend_right_adjoint,
                         is_universal_square, phi_from_uc, uc_from_phi)
from .core import embed_2category, jsonable, ordered, terminal, validate
from .errors import CyclicGraph, NotUniversal
from .folding import (hadj_from_unit, quintet, span_fold_axiom, transfer_adjunction,
                      validate_folding)
from .monads import endmnd, graphs
from .presheaf import (enumerate_hornats, represented, terminal_presheaf, validate_presheaf_hornat,
                       yoneda_forward, yoneda_inverse)
from .span import (FinFn, associator, associator_inverse, compose_span_squares, compose_spans,
                   identity_span, iv, random_composable_spans, random_grid, random_span,
                   random_square_onto, sweep_spans)

TIME_LIMITS = {1: 5, 2: 10, 3: 10, 4: 30, 5: 20, 6: 20, 7: 10, 8: 20, 9: 20, 10: 120}

TITLES = {
    1: "law suite on the corpus and planted defects",
    2: "double Yoneda bijections",
    3: "characterizations of adjunctions",
    4: "span kernel",
    5: "folding and cofolding axioms",
    6: "quintet identities for End and Mnd",
    7: "free category and the free-forgetful bijection",
    8: "free monads from horizontal free monads",
    9: "Eilenberg-Moore objects",
    10: "CLI contract",
}


@dataclass
class Outcome:
    number: int
    checks: dict = field(default_factory=dict)
    witness: object = None
    seconds: float = 0.0
    info: dict = field(default_factory=dict)

    @property
    def title(self):
        return TITLES[self.number]

    @property
    def ok(self):
        return bool(self.checks) and all(self.checks.values()) and self.seconds < TIME_LIMITS[self.number]

    def record(self, name, passed, witness=None):
        self.checks[name] = self.checks.get(name, True) and bool(passed)
        if not passed and self.witness is None:
            self.witness = {"check": name, "detail": jsonable(witness)}
        return passed

    def to_json(self):
        return {"check": f"criterion {self.number}: {self.title}",
                "status": "pass" if self.ok else "fail",
                "witness": self.witness if not self.ok else
                {"subchecks": len(self.checks), **jsonable(self.info)}}


def _timed(number):
    def wrap(fn):
        def run(seed=0):
            out = Outcome(number)
            t = time.perf_counter()
            fn(out, seed)
            out.seconds = time.perf_counter() - t
            if out.seconds >= TIME_LIMITS[number] and out.witness is None:
                out.witness = {"check": "time", "detail": {"seconds": out.seconds,
                                                           "limit": TIME_LIMITS[number]}}
            return out
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


def _functors_equal(F, G):
    return (F.on_obj == G.on_obj and F.on_hmor == G.on_hmor and F.on_vmor == G.on_vmor
            and F.on_square == G.on_square)


# --------------------------------------------------------------------------


def law_corpus():
    M, Kar = fx.idempotent_monoid(), fx.karoubi()
    return {
        "terminal": terminal(),
        "two objects": fx.arrow_and_vertical(),
        "HK": embed_2category(Kar, "h"),
        "VK": embed_2category(M, "v"),
        "QK": quintet(Kar, "direct")[0],
        "QbarK": quintet(Kar, "inverse")[0],
        "product": fx.corpus()["companion_x_H_M"],
    }


@_timed(1)
def criterion_1(out, seed):
    """Every corpus entry validates and every planted defect is caught by its check."""
    for name, D in law_corpus().items():
        rep = validate(D)
        out.record(f"valid {name}", rep.ok, rep.violations[:1] and rep.violations[0].to_json())
    planted = fx.mutations(fx.corpus()["Q_Kar"]) + fx.law_breakers()
    out.record("at least ten defects", len(planted) >= 10, len(planted))
    kinds = set()
    for desc, D, check in planted:
        found = validate(D).by_check()
        out.record(f"caught: {desc}", check in found, {"expected": check, "found": found})
        kinds.add(check)
    out.record("defect kinds", {"units", "assoc", "interchange", "boundary"} <= kinds, sorted(kinds))
    out.info["defects"] = len(planted)


def yoneda_cases():
    Q, _ = quintet(fx.idempotent_monoid(), "direct")
    T = terminal()
    two = fx.arrow_and_vertical()
    out = []
    for D in (T, two, Q):
        objs = ordered(D.objects)
        ps = [terminal_presheaf(D), represented(D, objs[-1])]
        if len(objs) > 1:
            ps.append(represented(D, objs[0]))
        out.append((D, ps))
    return out


@_timed(2)
def criterion_2(out, seed):
    """Transformations out of ``D(R, -)`` are exactly the elements of ``K(R)``."""
    n = 0
    for D, presheaves in yoneda_cases():
        for K in presheaves:
            for R in ordered(D.objects):
                src = represented(D, R)
                alphas = list(enumerate_hornats(src, K))
                elems = K.on_obj[R]
                out.record("count equals |K(R)|", len(alphas) == len(elems),
                           {"base": D.name, "presheaf": K.name, "R": R,
                            "transformations": len(alphas), "elements": len(elems)})
                images = [yoneda_forward(a, R) for a in alphas]
                out.record("forward is injective", len(set(images)) == len(images), {"R": R})
                out.record("forward is onto", set(images) == set(elems), {"R": R})
                for a in alphas:
                    back = yoneda_inverse(K, R, yoneda_forward(a, R))
                    out.record("inverse after forward", back.at_obj == a.at_obj and back.at_vmor == a.at_vmor,
                               {"R": R})
                for x in ordered(elems):
                    alpha = yoneda_inverse(K, R, x)
                    out.record("inverse is a transformation", validate_presheaf_hornat(alpha).ok, {"R": R})
                    out.record("forward after inverse", yoneda_forward(alpha, R) == x, {"R": R})
                n += 1
    out.info["cases"] = n


def adjunction_fixtures():
    return {"quintets": fx.kar_adjunction("direct"), "inverse quintets": fx.kar_adjunction("inverse"),
            "horizontal embedding": fx.kar_adjunction_h(), "point": fx.pick_adjunction()}


@_timed(3)
def criterion_3(out, seed):
    """From stored unit and counit back to unit and counit, functors and the presheaf iso."""
    for name, (F, G, unit, counit) in adjunction_fixtures().items():
        phi = phi_from_uc(F, G, unit, counit)
        rep = check_phi(phi)
        out.record("phi passes check_phi", rep.ok, {"fixture": name, "found": rep.by_check()})
        uc = uc_from_phi(phi)
        out.record("unit reproduced", uc.unit.at_obj == unit.at_obj and uc.unit.at_vmor == unit.at_vmor,
                   name)
        out.record("counit reproduced",
                   uc.counit.at_obj == counit.at_obj and uc.counit.at_vmor == counit.at_vmor, name)
        X = F.dom
        for j in ordered(X.vmors):
            out.record("unit squares universal",
                       is_universal_square(G, j, F.vmor(j), unit.at_vmor[j]), {"fixture": name, "j": j})
        prep, theta = check_param_iso(phi)
        out.record("parameterized iso", prep.ok, {"fixture": name, "found": prep.by_check()})
        same = all(theta.at_vmor[p].table == phi.table[p] for p in phi.table)
        out.record("iso middle maps are phi", same, name)
        F2, _ = extend_left_adjoint(G, F.on_obj, F.on_vmor, unit.at_vmor)
        out.record("left adjoint reconstructed", _functors_equal(F2, F), name)
        G2, _ = extend_right_adjoint(F, G.on_obj, G.on_vmor, counit.at_vmor)
        out.record("right adjoint reconstructed", _functors_equal(G2, G), name)
    out.info["fixtures"] = len(adjunction_fixtures())


def pullback_oracle(s, t):
    """Brute-force pair filter: every pair whose middle images agree."""
    return {(x, y) for x in s.apex for y in t.apex if s.right_leg(x) == t.left_leg(y)}


def sweep_pairs(max_obj=3, max_apex=4):
    """Every composable pair of spans with feet of 1 to ``max_obj`` elements, up to apex relabelling."""
    feet = [frozenset(f"{tag}{i}" for i in range(n)) for tag in "abc" for n in range(1, max_obj + 1)]
    A, B, C = feet[:max_obj], feet[max_obj:2 * max_obj], feet[2 * max_obj:]
    for b in B:
        S = [s for a in A for s in sweep_spans(a, b, max_apex)]
        T = [t for c in C for t in sweep_spans(b, c, max_apex)]
        for s in S:
            for t in T:
                yield s, t


@_timed(4)
def criterion_4(out, seed):
    """Pullback composition, strict units, interchange and associators."""
    n = 0
    for s, t in sweep_pairs():
        u = compose_spans(s, t)
        want = pullback_oracle(s, t)
        if u.apex != want or any(u.left_leg(p) != s.left_leg(p[0]) or u.right_leg(p) != t.right_leg(p[1])
                                 for p in want):
            out.record("sweep agrees with the pair filter", False, {"left": str(s), "right": str(t)})
            break
        n += 1
    else:
        out.record("sweep agrees with the pair filter", True)
    out.info["sweep pairs"] = n

    rng = random.Random(seed)
    for i in range(200):
        s = random_span(rng, frozenset(f"x{k}" for k in range(rng.randint(1, 3))),
                        frozenset(f"z{k}" for k in range(rng.randint(1, 3))))
        out.record("normality", compose_spans(identity_span(s.left), s) is s
                   and compose_spans(s, identity_span(s.right)) is s, i)
        a = iv(s)
        out.record("normality", compose_span_squares("v", a, a) == a, i)

    for i in range(1000):
        g = random_grid(rng, 2, 2, tag=f"g{i}_")
        (a, b), (c, d) = g
        rows = compose_span_squares("v", compose_span_squares("h", a, b), compose_span_squares("h", c, d))
        cols = compose_span_squares("h", compose_span_squares("v", a, c), compose_span_squares("v", b, d))
        if not out.record("interchange", rows == cols, {"grid": i}):
            break

    for i in range(500):
        s, t, u = random_composable_spans(rng, 3, tag=f"t{i}_")
        a, b = associator(s, t, u), associator_inverse(s, t, u)
        ok = (a.well_formed() and b.well_formed()
              and compose_span_squares("v", a, b) == iv(a.top)
              and compose_span_squares("v", b, a) == iv(b.top))
        if not out.record("associator invertible", ok, {"triple": i}):
            break


def quintet_bases():
    return [fx.idempotent_monoid(), fx.chain_monoid(), fx.karoubi(), fx.walking_arrow()]


def _span_samples(rng, n, cofold):
    """``n`` random grids; every axiom is checked on cells cut from each."""
    for i in range(n):
        g = random_grid(rng, 2, 2, tag=f"f{i}_")
        a, b, c = g[0][0], g[0][1], g[1][0]
        top = a.top
        glob = random_square_onto(rng, random_span(rng, top.left, top.right, tag=f"gb{i}_"),
                                  FinFn.identity(top.left), FinFn.identity(top.right), tag=f"gy{i}_")
        for axiom, cells in (("identity", (glob,)), ("unit", (a.left_fn,)), ("bijection", (a,)),
                             ("horizontal", (a, b)), ("vertical", (a, c))):
            yield i, axiom, span_fold_axiom(axiom, cells, cofold)


@_timed(5)
def criterion_5(out, seed):
    """Canonical quintet (co)foldings exhaustively, span (co)foldings on samples, transfer."""
    for K in quintet_bases():
        for variant in ("direct", "inverse"):
            _, phi = quintet(K, variant)
            rep = validate_folding(phi)
            out.record(f"quintet {variant}", rep.ok, {"base": K.name, "found": rep.by_check()})
    rng = random.Random(seed)
    for cofold in (False, True):
        tag = "span cofolding" if cofold else "span folding"
        for i, axiom, reason in _span_samples(rng, 500, cofold):
            if not out.record(f"{tag} {axiom}", reason is None, {"sample": i, "reason": reason}):
                break
    for variant in ("direct", "inverse"):
        F, G, unit, counit = fx.kar_adjunction(variant)
        _, phi_q = quintet(fx.karoubi(), variant)
        hadj = hadj_from_unit(F, G, unit.at_obj)
        phi = transfer_adjunction(F, G, phi_q, phi_q, hadj)
        out.record("transfer passes check_phi", check_phi(phi).ok, variant)
        uc = uc_from_phi(phi)
        out.record("transfer round trip",
                   uc.unit.at_vmor == unit.at_vmor and uc.counit.at_vmor == counit.at_vmor
                   and phi_from_uc(F, G, uc.unit, uc.counit).table == phi.table, variant)


@_timed(6)
def criterion_6(out, seed):
    """End and Mnd of inverse quintets against inverse quintets of Street's End and Mnd."""
    K = fx.chain_monoid()
    for monadic in (False, True):
        rep, maps, EQ, _ = endmnd.end_quintet_iso(K, monadic)
        name = "Mnd" if monadic else "End"
        out.record(f"{name} isomorphism", rep.ok, {"found": rep.by_check()})
        out.info[f"{name} squares"] = len(EQ.squares)


def path_count_oracle(G):
    """Sum of all entries of ``I + A + A^2 + ...`` for the adjacency matrix ``A``."""
    nodes = ordered(G.nodes)
    idx = {x: i for i, x in enumerate(nodes)}
    n = len(nodes)
    A = [[0] * n for _ in range(n)]
    for s, t in G.edges.values():
        A[idx[s]][idx[t]] += 1
    power = [[int(i == j) for j in range(n)] for i in range(n)]
    total = 0
    for _ in range(n + 1):
        total += sum(map(sum, power))
        power = [[sum(power[i][k] * A[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return total


@_timed(7)
def criterion_7(out, seed):
    """Free category counts, the bijection on bundled pairs, and the cyclic rejection."""
    G = graphs.chain_graph()
    C = graphs.free_category(G)
    out.record("chain objects", len(C.objects) == 3, len(C.objects))
    out.record("chain morphisms", len(C.morphisms) == 6 == path_count_oracle(G), len(C.morphisms))
    out.record("chain category valid", C.validate().ok)
    for name, U, V, probes in graphs.bundled_pairs():
        r = graphs.phi_UV_bijection(U, V, probes)
        out.record(f"bijection {name}", r.report.ok, r.report.by_check())
        out.record(f"bijection {name} non-empty", len(r.mnd_squares) > 0, name)
    out.record("unit vertically trivial", graphs.unit_is_vertically_trivial(G))
    try:
        graphs.free_category(fx.cyclic_graph())
        out.record("cycle rejected", False, "no error")
    except CyclicGraph as exc:
        cyc = exc.witness
        H = fx.cyclic_graph()
        closed = bool(cyc) and all(H.tgt(a) == H.src(b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))
        out.record("cycle rejected", closed, cyc)


def free_monad_setting():
    K = fx.chain_monoid()
    Q, cof = quintet(K, "inverse")
    end = endmnd.build_end(Q)
    mnd = endmnd.build_mnd(Q, end)
    hfree = endmnd.hfree_from_choice(Q, {"1": "1", "t": "s", "s": "s"}, mnd)
    return Q, cof, end, mnd, hfree


@_timed(8)
def criterion_8(out, seed):
    """Free monads on the inverse quintets of the chain monoid, and a planted bad iota."""
    Q, cof, end, mnd, hfree = free_monad_setting()
    w = endmnd.construct_free_monads(Q, cof, hfree, end, mnd)
    out.record("transposed unit-counit check", w.report.ok, w.report.by_check())
    out.record("units vertically trivial",
               w.report.checked.get("vertically_trivial", 0) == len(end.table.objects)
               and "vertically_trivial" not in w.report.by_check())
    bad = dict(hfree)
    bad["1"] = endmnd.hfree_from_choice(Q, {"1": "s"}, mnd)["1"]
    try:
        endmnd.construct_free_monads(Q, cof, bad, end, mnd)
        out.record("non-universal iota rejected", False, "accepted")
    except NotUniversal as exc:
        out.record("non-universal iota rejected", exc.witness is not None, str(exc))


@_timed(9)
def criterion_9(out, seed):
    """The inclusion of trivial monads has a right adjoint on inverse quintets of Kar, not on H(Kar)."""
    K = fx.karoubi()
    Q, _ = quintet(K, "inverse")
    mnd = endmnd.build_mnd(Q)
    res = endmnd.em_check(Q, mnd=mnd)
    out.record("found on inverse quintets", res.found)
    if res.found:
        G = res.witness[0]
        inc = endmnd.inclusion(Q, mnd)
        for I in Q.objects:
            out.record("trivial monad recovers its object", G.obj(inc.obj(I)) == I, I)
        out.info["objects"] = {str(M[1]): G.obj(M) for M in mnd.table.objects}
    neg = endmnd.em_check(embed_2category(K, "h"))
    out.record("none on the horizontal embedding", not neg.found)
    out.record("transcript recorded", len(neg.transcript) > 0)


def run_cli(argv, directory):
    """In-process CLI run from ``directory``; returns ``(exit code, report records)``."""
    import json
    import os
    import tempfile

    from .cli import main

    fd, report = tempfile.mkstemp(suffix=".jsonl")
    os.close(fd)
    here = os.getcwd()
    try:
        os.chdir(directory)
        try:
            code = main(["--out", report, *argv])
        except SystemExit as exc:
            code = exc.code
        with open(report) as fh:
            return code, [json.loads(line) for line in fh]
    finally:
        os.chdir(here)
        os.unlink(report)


# verb runs on exported files: argv and the exit status they must give
CLI_CASES = [
    (["validate", "terminal.json"], 0),
    (["validate", "Q_Kar.json", "companion_x_H_M.json"], 0),
    (["validate", "missing.json"], 2),
    (["freecat", "chain_abc.json"], 0),
    (["freecat", "loop.json"], 1),
    (["freecat", "cycle.json"], 1),
    (["adjoint", "--f", "adj_F.json", "--g", "adj_G.json", "--unit", "adj_unit.json",
      "--counit", "adj_counit.json", "--mode", "phi"], 0),
    (["adjoint", "--f", "adj_F.json", "--mode", "repr"], 0),
    (["yoneda", "--base", "Q_M.json", "--object", "*", "--presheaf", "Q_M_represented.json"], 0),
    (["quintet", "--k", "2cat_Kar.json", "--variant", "direct"], 0),
    (["fold", "--base", "Q_M.json", "--folding", "Q_M_folding.json"], 0),
    (["fold", "--base", "Q_M.json", "--folding", "Q_M_folding.json", "--cofolding"], 2),
    (["em", "--base", "Qbar_Kar.json"], 0),
    (["em", "--base", "H_Kar.json"], 1),
    (["freemonads", "--base", "Qbar_Kt.json", "--cofolding", "Qbar_Kt_cofolding.json",
      "--hfree", "Qbar_Kt_bad_hfree.json"], 1),
    (["accept", "4"], 2),
    (["transmogrify"], 2),
]


@_timed(10)
def criterion_10(out, seed):
    """Each criterion through the ``accept`` verb, verbs on exported files, repeat runs identical."""
    import tempfile

    with tempfile.TemporaryDirectory() as d:
        fx.export_examples(d)
        code, recs = run_cli(["--seed", str(seed), "accept"], d)
        out.record("accept exits 0", code == 0, [r for r in recs if r["status"] != "pass"])
        out.record("one record per criterion", len(recs) == 9, len(recs))
        for argv, want in CLI_CASES:
            code, recs = run_cli(argv, d)
            out.record(f"exit {want}: {' '.join(argv[:2])}", code == want, {"argv": argv, "exit": code})
            if want == 1:
                out.record("failures carry witnesses",
                           any(r["status"] == "fail" and r.get("witness") for r in recs), argv)
            again = run_cli(argv, d)
            out.record("deterministic", again == (code, recs), argv)
        _, recs = run_cli(["freecat", "chain_abc.json"], d)
        sizes = [r["witness"] for r in recs if r["check"] == "category"]
        out.record("chain counts", sizes == [{"objects": 3, "morphisms": 6}], sizes)
        _, recs = run_cli(["freecat", "loop.json"], d)
        out.record("cycle witness", recs[0]["witness"] == {"cycle": ["l"]}, recs)
        for n in (4, 5):
            first = run_cli(["--seed", str(seed), "accept", str(n)], d)
            out.record("seeded criterion repeatable", first == run_cli(["--seed", str(seed), "accept", str(n)], d), n)


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9}
ALL_CRITERIA = {**CRITERIA, 10: criterion_10}
