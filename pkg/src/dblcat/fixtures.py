"""Small named examples used by tests, the CLI and the exported corpus."""

from __future__ import annotations

import json
from pathlib import Path

from .core import (
    Boundary,
    Finite2Category,
    TableDoubleCategory,
    _fields,
    embed_2category,
    product,
    terminal,
    to_json,
)
from .folding import quintet, quintet_functor, quintet_transformation
from .functors import DoubleFunctorTable, HorNatTable, compose_functors, identity_functor
from .monads import graphs as _graphs


def idempotent_monoid():
    """One object, 1-cells ``1 <= s`` with ``s s = s``."""
    mor1 = {"1": ("*", "*"), "s": ("*", "*")}
    comp1 = {("1", "1"): "1", ("1", "s"): "s", ("s", "1"): "s", ("s", "s"): "s"}
    return Finite2Category.locally_posetal(["*"], mor1, comp1, {"*": "1"}, [("1", "s")], name="M")


def chain_monoid():
    """One object, 1-cells ``1 <= t <= s`` with ``t t = s`` and ``s`` absorbing."""
    mor1 = {x: ("*", "*") for x in ("1", "t", "s")}
    comp1 = {}
    for a in mor1:
        for b in mor1:
            if a == "1":
                comp1[(a, b)] = b
            elif b == "1":
                comp1[(a, b)] = a
            else:
                comp1[(a, b)] = "s"
    return Finite2Category.locally_posetal(["*"], mor1, comp1, {"*": "1"},
                                           [("1", "t"), ("t", "s")], name="Kt")


def karoubi():
    """An idempotent ``e`` on ``*`` split through ``r``: ``i p = e``, ``p i = 1r``, ``1 <= e``.

    Composition is diagrammatic: ``(p, i)`` is ``p`` then ``i``.
    """
    mor1 = {"1*": ("*", "*"), "e": ("*", "*"), "p": ("*", "r"), "i": ("r", "*"), "1r": ("r", "r")}
    comp1 = {
        ("1*", "1*"): "1*", ("1*", "e"): "e", ("1*", "p"): "p",
        ("e", "1*"): "e", ("e", "e"): "e", ("e", "p"): "p",
        ("p", "1r"): "p", ("p", "i"): "e",
        ("i", "1*"): "i", ("i", "e"): "i", ("i", "p"): "1r",
        ("1r", "1r"): "1r", ("1r", "i"): "i",
    }
    return Finite2Category.locally_posetal(["*", "r"], mor1, comp1, {"*": "1*", "r": "1r"},
                                           [("1*", "e")], name="Kar")


def walking_arrow():
    mor1 = {"1a": ("a", "a"), "u": ("a", "b"), "1b": ("b", "b")}
    comp1 = {("1a", "1a"): "1a", ("1a", "u"): "u", ("u", "1b"): "u", ("1b", "1b"): "1b"}
    return Finite2Category.locally_posetal(["a", "b"], mor1, comp1, {"a": "1a", "b": "1b"}, [],
                                           name="Arrow")


def companion_pair():
    """Two objects with a horizontal ``u`` and vertical ``v`` bound as companions.

    ``sigma`` has top ``u``, left ``v``; ``tau`` has bottom ``u``, right ``v``;
    ``[tau sigma]`` is the vertical identity on ``u`` and ``[tau; sigma]`` the
    horizontal identity on ``v``.
    """
    squares = {
        "1a": Boundary("1a", "1a", "1a", "1a"),
        "1b": Boundary("1b", "1b", "1b", "1b"),
        "iv_u": Boundary("u", "u", "1a", "1b"),
        "ih_v": Boundary("1a", "1b", "v", "v"),
        "sigma": Boundary("u", "1b", "v", "1b"),
        "tau": Boundary("1a", "u", "1a", "v"),
    }
    hcomp = {}
    for b in ("1a", "iv_u", "tau"):
        hcomp[("1a", b)] = b
    for a in ("1b", "iv_u", "sigma"):
        hcomp[(a, "1b")] = a
    hcomp.update({("ih_v", "ih_v"): "ih_v", ("ih_v", "sigma"): "sigma",
                  ("tau", "ih_v"): "tau", ("tau", "sigma"): "iv_u"})
    vcomp = {}
    for b in ("1a", "ih_v", "tau"):
        vcomp[("1a", b)] = b
    for a in ("1b", "ih_v", "sigma"):
        vcomp[(a, "1b")] = a
    vcomp.update({("iv_u", "iv_u"): "iv_u", ("iv_u", "sigma"): "sigma",
                  ("tau", "iv_u"): "tau", ("tau", "sigma"): "ih_v"})
    return TableDoubleCategory(
        objects=["a", "b"],
        hmors={"1a": ("a", "a"), "1b": ("b", "b"), "u": ("a", "b")},
        vmors={"1a": ("a", "a"), "1b": ("b", "b"), "v": ("a", "b")},
        squares=squares,
        hcomp_h={("1a", "1a"): "1a", ("1a", "u"): "u", ("u", "1b"): "u", ("1b", "1b"): "1b"},
        vcomp_v={("1a", "1a"): "1a", ("1a", "v"): "v", ("v", "1b"): "v", ("1b", "1b"): "1b"},
        hcomp_sq=hcomp, vcomp_sq=vcomp,
        id_h={"a": "1a", "b": "1b"}, id_v={"a": "1a", "b": "1b"},
        id_sq_h={"1a": "1a", "1b": "1b", "v": "ih_v"},
        id_sq_v={"1a": "1a", "1b": "1b", "u": "iv_u"},
        name="Companion",
    )


def arrow_and_vertical():
    """Objects ``a, b``, a horizontal ``u`` and a vertical ``v``, identity squares only.

    The functor to the terminal double category has no right adjoint.
    """
    return TableDoubleCategory(
        objects=["a", "b"],
        hmors={"1a": ("a", "a"), "1b": ("b", "b"), "u": ("a", "b")},
        vmors={"1a": ("a", "a"), "1b": ("b", "b"), "v": ("a", "b")},
        squares={"1a": Boundary("1a", "1a", "1a", "1a"), "1b": Boundary("1b", "1b", "1b", "1b"),
                 "iv_u": Boundary("u", "u", "1a", "1b"), "ih_v": Boundary("1a", "1b", "v", "v")},
        hcomp_h={("1a", "1a"): "1a", ("1a", "u"): "u", ("u", "1b"): "u", ("1b", "1b"): "1b"},
        vcomp_v={("1a", "1a"): "1a", ("1a", "v"): "v", ("v", "1b"): "v", ("1b", "1b"): "1b"},
        hcomp_sq={("1a", "1a"): "1a", ("1b", "1b"): "1b", ("1a", "iv_u"): "iv_u",
                  ("iv_u", "1b"): "iv_u", ("ih_v", "ih_v"): "ih_v"},
        vcomp_sq={("1a", "1a"): "1a", ("1b", "1b"): "1b", ("1a", "ih_v"): "ih_v",
                  ("ih_v", "1b"): "ih_v", ("iv_u", "iv_u"): "iv_u"},
        id_h={"a": "1a", "b": "1b"}, id_v={"a": "1a", "b": "1b"},
        id_sq_h={"1a": "1a", "1b": "1b", "v": "ih_v"},
        id_sq_v={"1a": "1a", "1b": "1b", "u": "iv_u"},
        name="ArrowVertical",
    )


def to_terminal(D):
    T = terminal()
    o, = T.objects
    h, = T.hmors
    v, = T.vmors
    s, = T.squares
    return DoubleFunctorTable(D, T, {x: o for x in D.objects}, {f: h for f in D.hmors},
                              {j: v for j in D.vmors}, {a: s for a in D.squares}, name="!")


def from_terminal(D, x):
    T = terminal()
    o, = T.objects
    h, = T.hmors
    v, = T.vmors
    s, = T.squares
    return DoubleFunctorTable(T, D, {o: x}, {h: D.id_h[x]}, {v: D.id_v[x]},
                              {s: D.ih(D.id_v[x])}, name=f"pick {x}")


# --------------------------------------------------------------------------
# adjunctions


def _kar_collapse():
    """The 2-functor ``Kar -> Kar`` sending everything to ``r``."""
    K = karoubi()
    H = embed_2category(K, "h")
    on_obj = {"*": "r", "r": "r"}
    on_h = {f: "1r" for f in K.mor1}
    on_sq = {a: K.id2["1r"] for a in K.cells2}
    return K, DoubleFunctorTable(H, H, on_obj, on_h, {"1*": "1r", "1r": "1r"}, on_sq, name="JL")


def kar_adjunction(variant="direct"):
    """``JL -| JL`` on the quintets of ``Kar``: unit ``p, 1r``, counit ``i, 1r``.

    Returns ``(F, G, unit, counit)`` as tables on the quintet double category.
    """
    K, JL = _kar_collapse()
    F = quintet_functor(JL, K, K, variant)
    unit_obj = {"*": "p", "r": "1r"}
    counit_obj = {"*": "i", "r": "1r"}
    idF = quintet_functor(_identity_2functor(K), K, K, variant)
    unit = quintet_transformation(unit_obj, idF, F, K, variant)
    counit = quintet_transformation(counit_obj, F, idF, K, variant)
    return F, F, unit, counit


def kar_adjunction_h():
    """The same adjunction on the horizontal embedding of ``Kar``."""
    K, JL = _kar_collapse()
    D = JL.dom
    ident = DoubleFunctorTable(D, D, {x: x for x in D.objects}, {f: f for f in D.hmors},
                               {j: j for j in D.vmors}, {a: a for a in D.squares}, name="1")
    unit = HorNatTable(ident, JL, {"*": "p", "r": "1r"},
                       {"1*": K.id2["p"], "1r": K.id2["1r"]})
    counit = HorNatTable(JL, ident, {"*": "i", "r": "1r"},
                         {"1*": K.id2["i"], "1r": K.id2["1r"]})
    return JL, JL, unit, counit


def _identity_2functor(K):
    H = embed_2category(K, "h")
    return DoubleFunctorTable(H, H, {x: x for x in H.objects}, {f: f for f in H.hmors},
                              {j: j for j in H.vmors}, {a: a for a in H.squares}, name="1")


def pick_adjunction():
    """``J -| L`` between the terminal double category and the quintets of ``Kar``.

    ``J`` picks ``r`` and ``L`` collapses.  The unit is an identity; the
    counit has components ``i`` and ``1r``.
    """
    K = karoubi()
    Q, _ = quintet(K, "direct")
    T = terminal()
    J, L = from_terminal(Q, "r"), to_terminal(Q)
    o, = T.objects
    v, = T.vmors
    unit = HorNatTable(identity_functor(T), compose_functors(J, L), {o: T.id_h[o]}, {v: T.ih(v)})
    counit_obj = {"*": "i", "r": "1r"}
    JL = compose_functors(L, J)
    counit = {}
    for j, (A, C) in Q.vmors.items():
        counit[j] = ("q", counit_obj[A], "1r", j, counit_obj[C], K.id2[counit_obj[C]])
    return J, L, unit, HorNatTable(JL, identity_functor(Q), counit_obj, counit)


# --------------------------------------------------------------------------
# planted failures for the validator


def _mutate(D, **changes):
    return TableDoubleCategory(**{**_fields(D), **changes})


def mutations(D):
    """Planted defects of ``D``, each paired with the check expected to catch it.

    ``D`` must have a non-identity horizontal morphism, a non-identity
    vertical morphism and a non-identity square.
    """
    out = []
    f = next(x for x in D.hmors if not D.is_id_h(x))
    j = next(x for x in D.vmors if not D.is_id_v(x))
    A = D.hsrc(f)
    unit = D.id_h[A]

    hc = dict(D.hcomp_h)
    hc[(unit, f)] = unit
    out.append(("wrong unit composite", _mutate(D, hcomp_h=hc), "boundary"))

    hc = dict(D.hcomp_h)
    del hc[(unit, f)]
    out.append(("missing horizontal composite", _mutate(D, hcomp_h=hc), "totality"))

    vc = dict(D.vcomp_v)
    del vc[(D.id_v[D.vsrc(j)], j)]
    out.append(("missing vertical composite", _mutate(D, vcomp_v=vc), "totality"))

    ih = dict(D.id_sq_h)
    ih[j] = D.id_sq_v[f]
    out.append(("horizontal identity square with wrong frame", _mutate(D, id_sq_h=ih), "boundary"))

    iv = dict(D.id_sq_v)
    del iv[f]
    out.append(("missing vertical identity square", _mutate(D, id_sq_v=iv), "totality"))

    idh = dict(D.id_h)
    idh[A] = f if D.hmors[f] == (A, A) else next(iter(D.hom_h(A, A)))
    if idh[A] != D.id_h[A]:
        out.append(("identity replaced by another endomorphism", _mutate(D, id_h=idh), "boundary"))

    sq = dict(D.squares)
    x = D.id_sq_v[f]
    bd = sq[x]
    sq[x] = Boundary(bd.top, bd.bottom, bd.right, bd.left) if bd.left != bd.right else \
        Boundary(bd.bottom, bd.top, bd.left, bd.right)
    if sq[x] != bd:
        out.append(("square with corrupted boundary", _mutate(D, squares=sq), "boundary"))

    hs = dict(D.hcomp_sq)
    key = next(k for k in hs if not (k[0] in D.id_sq_v.values() and k[1] in D.id_sq_v.values()))
    del hs[key]
    out.append(("missing square composite", _mutate(D, hcomp_sq=hs), "totality"))

    hs = dict(D.hcomp_sq)
    hs[("ghost", "ghost")] = "ghost"
    out.append(("composite of unknown squares", _mutate(D, hcomp_sq=hs), "boundary"))

    vs = dict(D.vcomp_sq)
    x = D.id_sq_v[f]
    vs[(x, x)] = D.id_sq_v[D.id_h[A]] if D.hsrc(f) != D.htgt(f) else vs[(x, x)]
    if vs[(x, x)] != D.vcomp_sq[(x, x)]:
        out.append(("vertical composite with wrong frame", _mutate(D, vcomp_sq=vs), "boundary"))

    out.append(("object missing", _mutate(D, objects=[o for o in D.objects if o != A]), "boundary"))

    hm = dict(D.hmors)
    hm[f] = (D.htgt(f), D.hsrc(f)) if D.htgt(f) != D.hsrc(f) else (A, "elsewhere")
    out.append(("horizontal morphism with wrong ends", _mutate(D, hmors=hm), "boundary"))
    return out


def non_associative():
    """``H`` of the monoid ``{1, a, b}`` with ``a a = b``, ``b`` absorbing, then ``a b`` set to ``a``."""
    mor1 = {x: ("*", "*") for x in ("1", "a", "b")}
    comp1 = {(x, y): (y if x == "1" else x if y == "1" else "b") for x in mor1 for y in mor1}
    D = embed_2category(Finite2Category.locally_posetal(["*"], mor1, comp1, {"*": "1"}, [], name="N"), "h")
    hc, hs = dict(D.hcomp_h), dict(D.hcomp_sq)
    hc[("a", "b")] = "a"
    hs[(D.iv("a"), D.iv("b"))] = D.iv("a")
    return _mutate(D, hcomp_h=hc, hcomp_sq=hs, name="non-associative")


def non_interchanging():
    """One object, one arrow each way, squares ``e, x``: vertically ``x x = e``, horizontally ``x x = x``."""
    sq = {s: Boundary("1", "1", "1", "1") for s in ("e", "x")}
    vert = {("e", "e"): "e", ("e", "x"): "x", ("x", "e"): "x", ("x", "x"): "e"}
    horiz = {("e", "e"): "e", ("e", "x"): "x", ("x", "e"): "x", ("x", "x"): "x"}
    return TableDoubleCategory(
        objects=["*"], hmors={"1": ("*", "*")}, vmors={"1": ("*", "*")}, squares=sq,
        hcomp_h={("1", "1"): "1"}, vcomp_v={("1", "1"): "1"}, hcomp_sq=horiz, vcomp_sq=vert,
        id_h={"*": "1"}, id_v={"*": "1"}, id_sq_h={"1": "e"}, id_sq_v={"1": "e"},
        name="non-interchanging")


def non_unital():
    """``H`` of the discrete monoid ``{1, a}`` with ``a a = a``, then ``1 a`` set to ``1``."""
    mor1 = {"1": ("*", "*"), "a": ("*", "*")}
    comp1 = {(x, y): ("a" if "a" in (x, y) else "1") for x in mor1 for y in mor1}
    D = embed_2category(Finite2Category.locally_posetal(["*"], mor1, comp1, {"*": "1"}, [], name="U"), "h")
    hc, hs = dict(D.hcomp_h), dict(D.hcomp_sq)
    hc[("1", "a")] = "1"
    hs[(D.iv("1"), D.iv("a"))] = D.iv("1")
    return _mutate(D, hcomp_h=hc, hcomp_sq=hs, name="non-unital")


def law_breakers():
    """Single-law defects that the frame and totality checks cannot see."""
    return [("unit law of horizontal composition", non_unital(), "units"),
            ("associativity of horizontal composition", non_associative(), "assoc"),
            ("interchange", non_interchanging(), "interchange")]


# --------------------------------------------------------------------------
# graphs


def chain_graph():
    return _graphs.chain_graph()


def cyclic_graph():
    return _graphs.Graph({"a", "b"}, {"x": ("a", "b"), "y": ("b", "a")}, name="cycle")


# --------------------------------------------------------------------------
# corpus


def corpus():
    """Named valid double categories for round trips and validation."""
    M, Kt, Kar = idempotent_monoid(), chain_monoid(), karoubi()
    out = {
        "terminal": terminal(),
        "companion": companion_pair(),
        "arrow_vertical": arrow_and_vertical(),
        "H_M": embed_2category(M, "h"),
        "V_M": embed_2category(M, "v"),
        "H_Kar": embed_2category(Kar, "h"),
        "Q_M": quintet(M, "direct")[0],
        "Q_Kar": quintet(Kar, "direct")[0],
        "Qbar_Kar": quintet(Kar, "inverse")[0],
        "Qbar_Kt": quintet(Kt, "inverse")[0],
        "Q_Arrow": quintet(walking_arrow(), "direct")[0],
        "companion_x_H_M": product(companion_pair(), embed_2category(M, "h")),
    }
    return out


def export_corpus(directory):
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    names = []
    for name, D in corpus().items():
        (path / f"{name}.json").write_text(json.dumps(to_json(D), indent=1, sort_keys=True))
        names.append(name)
    return names


def export_examples(directory):
    """Write the corpus plus input files for every CLI verb; returns the written paths."""
    from .presheaf import represented

    path = Path(directory)
    written = [path / f"{n}.json" for n in export_corpus(path)]

    def put(name, data):
        p = path / name
        p.write_text(json.dumps(data, indent=1, sort_keys=True))
        written.append(p)

    for K in (idempotent_monoid(), chain_monoid(), karoubi(), walking_arrow()):
        put(f"2cat_{K.name}.json", K.to_json())
    put("chain_abc.json", chain_graph().to_json())
    put("loop.json", _graphs.loop_graph().to_json())
    put("cycle.json", cyclic_graph().to_json())
    F, G, unit, counit = kar_adjunction("direct")
    put("adj_F.json", F.to_json())
    put("adj_G.json", G.to_json())
    put("adj_unit.json", unit.to_json())
    put("adj_counit.json", counit.to_json())
    Q, phi = quintet(idempotent_monoid(), "direct")
    put("Q_M_folding.json", phi.to_json())
    put("Q_M_represented.json", represented(Q, sorted(Q.objects)[0]).to_json())
    Qt, cof = quintet(chain_monoid(), "inverse")
    put("Qbar_Kt_cofolding.json", cof.to_json())
    put("Qbar_Kt_hfree.json", {"1": "1", "t": "s", "s": "s"})
    put("Qbar_Kt_bad_hfree.json", {"1": "s", "t": "s", "s": "s"})
    return written


if __name__ == "__main__":
    import sys

    for p in export_examples(sys.argv[1] if len(sys.argv) > 1 else "dblcat-examples"):
        print(p)
