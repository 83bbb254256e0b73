"""Foldings and cofoldings: turning squares into globular squares.

A folding sends each vertical morphism ``j: A -> C`` to a horizontal one
``hol(j): A -> C`` and each square ``(f; j, k; g)`` to a globular square from
``[f hol(k)]`` to ``[hol(j) g]``.  A cofolding sends ``j: A -> C`` to
``cohol(j): C -> A`` and a square to a globular one from ``[cohol(j) f]`` to
``[g cohol(k)]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    Boundary,
    TableDoubleCategory,
    ValidationReport,
    check_isomorphism,
    horizontal_2category,
    id_to_str,
    ordered,
    view,
)
from .errors import (
    IncompatibleFunctors,
    InvalidHAdjunction,
    KindMismatch,
    MalformedInput,
    NotFullyFaithful,
)
from .functors import DoubleFunctorTable, HorNatTable
from .span import (
    FinFn,
    SpanSquare,
    compose_span_squares,
    compose_spans,
    fn_span,
    ih as span_ih,
    iv as span_iv,
    join,
    make_span,
    split,
)


@dataclass
class Folding:
    base: TableDoubleCategory
    holonomy: dict
    lam: dict
    name: str = field(default="", compare=False)

    kind = "folding"

    def assoc(self, j):
        return self.holonomy[j]

    def folded_frame(self, bd):
        D = self.base
        s = D.hsrc(bd.top)
        t = D.htgt(bd.bottom)
        return Boundary(D.comp_h(bd.top, self.holonomy[bd.right]),
                        D.comp_h(self.holonomy[bd.left], bd.bottom), D.id_v[s], D.id_v[t])

    def to_json(self):
        s = id_to_str
        return {"holonomy": {s(k): s(v) for k, v in self.holonomy.items()},
                "lambda": [[s(k), s(v)] for k, v in self.lam.items()]}


@dataclass
class Cofolding:
    base: TableDoubleCategory
    coholonomy: dict
    lam: dict
    name: str = field(default="", compare=False)

    kind = "cofolding"

    def assoc(self, j):
        return self.coholonomy[j]

    def folded_frame(self, bd):
        D = self.base
        s = D.vtgt(bd.left)
        t = D.htgt(bd.top)
        return Boundary(D.comp_h(self.coholonomy[bd.left], bd.top),
                        D.comp_h(bd.bottom, self.coholonomy[bd.right]), D.id_v[s], D.id_v[t])

    def to_json(self):
        s = id_to_str
        return {"coholonomy": {s(k): s(v) for k, v in self.coholonomy.items()},
                "lambda": [[s(k), s(v)] for k, v in self.lam.items()]}


def folding_from_json(data, base):
    try:
        lam = {a: b for a, b in data["lambda"]}
        if "holonomy" in data:
            return Folding(base, dict(data["holonomy"]), lam)
        return Cofolding(base, dict(data["coholonomy"]), lam)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad folding data: {exc}")


def lam_inverse(phi):
    """``(frame, globular square) -> square``; the folding is only injective per frame."""
    D = phi.base
    return {(D.boundary(a), b): a for a, b in phi.lam.items()}


def unfold(phi, globular, frame, inverse=None):
    inv = inverse if inverse is not None else lam_inverse(phi)
    return inv.get((Boundary(*frame), globular))


# --------------------------------------------------------------------------
# quintets


def quintet(K, variant="direct"):
    """Quintets of a 2-category with their canonical (co)folding.

    ``direct``: vertical morphisms are 1-cells, a square ``(f; j, k; g)`` is a
    2-cell ``[f k] => [j g]``.  ``inverse``: a vertical morphism ``A -> C`` is a
    1-cell ``C -> A`` and a square ``(f; j, k; g)`` is a 2-cell ``[j f] => [g k]``.
    """
    if variant == "direct":
        return _direct_quintet(K)
    if variant == "inverse":
        return _inverse_quintet(K)
    raise KindMismatch(f"unknown quintet variant {variant!r}")


def _direct_quintet(K):
    h2, v2, i2, c1 = K.h2, K.v2, K.id2, K.c1
    squares = {}
    for f, (A, B) in K.mor1.items():
        for j, (A2, C) in K.mor1.items():
            if A2 != A:
                continue
            for k, (B2, Dd) in K.mor1.items():
                if B2 != B:
                    continue
                for g in K.hom(C, Dd):
                    for a in K.cells(c1(f, k), c1(j, g)):
                        squares[("q", f, j, k, g, a)] = Boundary(f, g, j, k)
    hcomp = {}
    by_left = {}
    for x in squares:
        by_left.setdefault(x[2], []).append(x)
    for x in squares:
        _, f1, j, k, g1, a = x
        for y in by_left.get(k, ()):
            _, f2, _, l, g2, b = y
            cell = v2(h2(i2[f1], b), h2(a, i2[g2]))
            hcomp[(x, y)] = ("q", c1(f1, f2), j, l, c1(g1, g2), cell)
    vcomp = {}
    by_top = {}
    for x in squares:
        by_top.setdefault(x[1], []).append(x)
    for x in squares:
        _, f, j1, k1, g, a = x
        for y in by_top.get(g, ()):
            _, _, j2, k2, h, b = y
            cell = v2(h2(a, i2[k2]), h2(i2[j1], b))
            vcomp[(x, y)] = ("q", f, c1(j1, j2), c1(k1, k2), h, cell)
    unit = K.id1
    D = TableDoubleCategory(
        objects=K.objects, hmors=dict(K.mor1), vmors=dict(K.mor1), squares=squares,
        hcomp_h=dict(K.comp1), vcomp_v=dict(K.comp1), hcomp_sq=hcomp, vcomp_sq=vcomp,
        id_h=dict(unit), id_v=dict(unit),
        id_sq_h={j: ("q", unit[s], j, j, unit[t], i2[j]) for j, (s, t) in K.mor1.items()},
        id_sq_v={f: ("q", f, unit[s], unit[t], f, i2[f]) for f, (s, t) in K.mor1.items()},
        name=f"Q{K.name}",
    )
    lam = {}
    for x in squares:
        _, f, j, k, g, a = x
        s, t = K.mor1[f][0], K.mor1[g][1]
        lam[x] = ("q", c1(f, k), unit[s], unit[t], c1(j, g), a)
    return D, Folding(D, {j: j for j in K.mor1}, lam, name="canonical")


def _inverse_quintet(K):
    h2, v2, i2, c1 = K.h2, K.v2, K.id2, K.c1
    squares = {}
    vmors = {j: (t, s) for j, (s, t) in K.mor1.items()}
    for f, (A, B) in K.mor1.items():
        for j, (C, A2) in K.mor1.items():
            if A2 != A:
                continue
            for k, (Dd, B2) in K.mor1.items():
                if B2 != B:
                    continue
                for g in K.hom(C, Dd):
                    for a in K.cells(c1(j, f), c1(g, k)):
                        squares[("qi", f, j, k, g, a)] = Boundary(f, g, j, k)
    by_left, by_top = {}, {}
    for x in squares:
        by_left.setdefault(x[2], []).append(x)
        by_top.setdefault(x[1], []).append(x)
    hcomp = {}
    for x in squares:
        _, f1, j, k, g1, a = x
        for y in by_left.get(k, ()):
            _, f2, _, l, g2, b = y
            cell = v2(h2(a, i2[f2]), h2(i2[g1], b))
            hcomp[(x, y)] = ("qi", c1(f1, f2), j, l, c1(g1, g2), cell)
    vcomp = {}
    for x in squares:
        _, f, j1, k1, g, a = x
        for y in by_top.get(g, ()):
            _, _, j2, k2, h, b = y
            cell = v2(h2(i2[j2], a), h2(b, i2[k1]))
            vcomp[(x, y)] = ("qi", f, c1(j2, j1), c1(k2, k1), h, cell)
    vcomp_v = {(j1, j2): c1(j2, j1) for (j2, j1) in K.comp1}
    unit = K.id1
    D = TableDoubleCategory(
        objects=K.objects, hmors=dict(K.mor1), vmors=vmors, squares=squares,
        hcomp_h=dict(K.comp1), vcomp_v=vcomp_v, hcomp_sq=hcomp, vcomp_sq=vcomp,
        id_h=dict(unit), id_v=dict(unit),
        id_sq_h={j: ("qi", unit[vmors[j][0]], j, j, unit[vmors[j][1]], i2[j]) for j in vmors},
        id_sq_v={f: ("qi", f, unit[s], unit[t], f, i2[f]) for f, (s, t) in K.mor1.items()},
        name=f"Qbar{K.name}",
    )
    lam = {}
    for x in squares:
        _, f, j, k, g, a = x
        s, t = K.mor1[j][0], K.mor1[f][1]
        lam[x] = ("qi", c1(j, f), unit[s], unit[t], c1(g, k), a)
    return D, Cofolding(D, {j: j for j in K.mor1}, lam, name="canonical")


def quintet_functor(F2, K1, K2, variant="direct"):
    """Lift a 2-functor (a double functor between horizontal embeddings) to quintets."""
    D1, _ = quintet(K1, variant)
    D2, _ = quintet(K2, variant)
    tag = "q" if variant == "direct" else "qi"
    on_sq = {}
    for x in D1.squares:
        _, f, j, k, g, a = x
        h = F2.hmor
        on_sq[x] = (tag, h(f), h(j), h(k), h(g), F2.sq(a))
    return DoubleFunctorTable(D1, D2, dict(F2.on_obj), dict(F2.on_hmor), dict(F2.on_hmor),
                              on_sq, name=F2.name)


def quintet_transformation(theta, F, G, K, variant="direct"):
    """Lift a strictly 2-natural transformation (1-cell components in ``K``) to quintets.

    ``F`` and ``G`` are the lifted functors; naturality squares are identity 2-cells.
    """
    D = F.dom
    tag = "q" if variant == "direct" else "qi"
    out = {}
    for j, (A, C) in D.vmors.items():
        if variant == "direct":
            path, other = K.c1(theta[A], G.vmor(j)), K.c1(F.vmor(j), theta[C])
        else:
            path, other = K.c1(F.vmor(j), theta[A]), K.c1(theta[C], G.vmor(j))
        if path != other:
            raise KindMismatch(f"components are not natural at {j!r}")
        out[j] = (tag, theta[A], F.vmor(j), G.vmor(j), theta[C], K.id2[path])
    return HorNatTable(F, G, dict(theta), out)


# --------------------------------------------------------------------------
# validation of (co)foldings on tables


def _validate_assignment(phi, rep):
    D = phi.base
    cof = phi.kind == "cofolding"
    for j, (A, C) in D.vmors.items():
        rep.count("assignment")
        h = phi.assoc(j) if j in (phi.coholonomy if cof else phi.holonomy) else None
        want = (C, A) if cof else (A, C)
        if h is None or D.hmors.get(h) != want:
            rep.add("assignment", {"vmor": j, "image": h})
    if not rep.ok:
        return
    for A in D.objects:
        rep.count("assignment")
        if phi.assoc(D.id_v[A]) != D.id_h[A]:
            rep.add("assignment", {"identity": A})
    for (j, k), jk in D.vcomp_v.items():
        rep.count("assignment")
        want = (D.comp_h(phi.assoc(k), phi.assoc(j)) if cof
                else D.comp_h(phi.assoc(j), phi.assoc(k)))
        if phi.assoc(jk) != want:
            rep.add("assignment", {"pair": [j, k]})


def validate_folding(phi):
    """Exhaustive check of the folding axioms (or cofolding axioms) on a table."""
    D = phi.base
    cof = phi.kind == "cofolding"
    rep = ValidationReport()
    _validate_assignment(phi, rep)
    if not rep.ok:
        return rep
    L = phi.lam
    for x, bd in D.squares.items():
        rep.count("frame")
        if x not in L or L[x] not in D.squares or D.squares[L[x]] != phi.folded_frame(bd):
            rep.add("frame", {"sq": x, "image": L.get(x)})
    if not rep.ok:
        return rep
    seen = {}
    for x, bd in D.squares.items():
        seen.setdefault(bd, {}).setdefault(L[x], []).append(x)
    for bd, images in seen.items():
        rep.count("bijection")
        target = set(D.squares_framed(*phi.folded_frame(bd)))
        if any(len(v) > 1 for v in images.values()) or set(images) != target:
            rep.add("bijection", {"frame": list(bd)})
    for bd in set(_all_frames(D)) - set(seen):
        if D.squares_framed(*phi.folded_frame(bd)):
            rep.count("bijection")
            rep.add("bijection", {"frame": list(bd), "reason": "globular squares with no preimage"})
    for x, bd in D.squares.items():
        if D.is_id_v(bd.left) and D.is_id_v(bd.right):
            rep.count("identity")
            if L[x] != x:
                rep.add("identity", {"sq": x})
    for (a, b), ab in D.hcomp_sq.items():
        rep.count("horizontal")
        A, B = D.squares[a], D.squares[b]
        if cof:
            rhs = D.sq_v(D.sq_h(L[a], D.iv(B.top)), D.sq_h(D.iv(A.bottom), L[b]))
        else:
            rhs = D.sq_v(D.sq_h(D.iv(A.top), L[b]), D.sq_h(L[a], D.iv(B.bottom)))
        if L[ab] != rhs:
            rep.add("horizontal", {"pair": [a, b]})
    for (a, b), ab in D.vcomp_sq.items():
        rep.count("vertical")
        A, B = D.squares[a], D.squares[b]
        if cof:
            rhs = D.sq_v(D.sq_h(D.iv(phi.assoc(B.left)), L[a]), D.sq_h(L[b], D.iv(phi.assoc(A.right))))
        else:
            rhs = D.sq_v(D.sq_h(L[a], D.iv(phi.assoc(B.right))), D.sq_h(D.iv(phi.assoc(A.left)), L[b]))
        if L[ab] != rhs:
            rep.add("vertical", {"pair": [a, b]})
    for j, x in D.id_sq_h.items():
        rep.count("unit")
        if L[x] != D.iv(phi.assoc(j)):
            rep.add("unit", {"vmor": j})
    return rep


def _all_frames(D):
    for f, (A, B) in D.hmors.items():
        for j in D.vmors:
            if D.vsrc(j) != A:
                continue
            for k in D.vmors:
                if D.vsrc(k) != B:
                    continue
                for g in D.hom_h(D.vtgt(j), D.vtgt(k)):
                    yield Boundary(f, g, j, k)


validate_cofolding = validate_folding


# --------------------------------------------------------------------------
# functors and transformations compatible with (co)foldings


def check_compat(F, phi_dom, phi_cod):
    """Does ``F`` commute with the (co)holonomy and with the folding of squares?"""
    rep = ValidationReport()
    if phi_dom.kind != phi_cod.kind:
        raise KindMismatch("cannot compare a folding with a cofolding")
    for j in F.dom.vmors:
        rep.count("holonomy")
        if F.hmor(phi_dom.assoc(j)) != phi_cod.assoc(F.vmor(j)):
            rep.add("holonomy", {"vmor": j})
    for x in F.dom.squares:
        rep.count("lambda")
        if F.sq(phi_dom.lam[x]) != phi_cod.lam[F.sq(x)]:
            rep.add("lambda", {"sq": x})
    return rep


def check_hornat_compat(theta, phi_dom, phi_cod):
    F, G = theta.source, theta.target
    E = F.cod
    rep = ValidationReport()
    for j, (A, C) in F.dom.vmors.items():
        rep.count("component")
        if phi_cod.kind == "folding":
            path = E.comp_h(theta.at_obj[A], G.hmor(phi_dom.assoc(j)))
        else:
            path = E.comp_h(phi_cod.assoc(F.vmor(j)), theta.at_obj[A])
        if phi_cod.lam[theta.at_vmor[j]] != E.iv(path):
            rep.add("component", {"vmor": j})
    return rep


def extend_2nat(theta_obj, F, G, phi_dom, phi_cod):
    """Extend object components of a 2-natural transformation to vertical morphisms."""
    E = F.cod
    inv = lam_inverse(phi_cod)
    at_vmor = {}
    for j, (A, C) in F.dom.vmors.items():
        if phi_cod.kind == "folding":
            path = E.comp_h(theta_obj[A], G.hmor(phi_dom.assoc(j)))
            other = E.comp_h(F.hmor(phi_dom.assoc(j)), theta_obj[C])
        else:
            path = E.comp_h(phi_cod.assoc(F.vmor(j)), theta_obj[A])
            other = E.comp_h(theta_obj[C], G.hmor(phi_dom.assoc(j)))
        if path != other:
            raise IncompatibleFunctors(f"components are not natural at {j!r}", witness=j)
        frame = (theta_obj[A], theta_obj[C], F.vmor(j), G.vmor(j))
        sq = unfold(phi_cod, E.iv(path), frame, inv)
        if sq is None:
            raise IncompatibleFunctors(f"no square unfolds to the identity at {j!r}", witness=j)
        at_vmor[j] = sq
    return HorNatTable(F, G, dict(theta_obj), at_vmor)


def transfer_adjunction(F, G, phi_x, phi_a, hadj):
    """Local bijection of a double adjunction from a 2-adjunction on globular squares.

    ``hadj[(x, s)]`` is the transpose of a globular square ``s`` with sides
    ``1_{Fx}, 1_a``: a globular square with sides ``1_x, 1_{Ga}``.  The
    result sends ``a`` in ``A(Fj, k)`` to the unique square of ``X(j, Gk)``
    folding onto the transpose of the folding of ``a``.
    """
    from .adjunction import LocalBijection

    for name, H, pd, pc in (("F", F, phi_x, phi_a), ("G", G, phi_a, phi_x)):
        rep = check_compat(H, pd, pc)
        if not rep.ok:
            raise IncompatibleFunctors(f"{name} does not preserve the foldings",
                                       witness=[v.to_json() for v in rep.violations[:5]])
    X, A = F.dom, F.cod
    _check_hadj(F, G, hadj)
    inv_x = lam_inverse(phi_x)

    def dag(x, f):
        return X.boundary(hadj[(x, A.iv(f))]).top

    table = {}
    for j, (x, x2) in X.vmors.items():
        for k in A.vmors:
            m = {}
            for a in A.hom_sq(F.vmor(j), k):
                bd = A.boundary(a)
                # a folded square starts at Fx, a cofolded one at Fx2
                start = x2 if phi_a.kind == "cofolding" else x
                image = hadj[(start, phi_a.lam[a])]
                frame = (dag(x, bd.top), dag(x2, bd.bottom), j, G.vmor(k))
                b = unfold(phi_x, image, frame, inv_x)
                if b is None:
                    raise InvalidHAdjunction(f"no square of X(j, Gk) folds onto the image of {a!r}",
                                             witness=a)
                m[a] = b
            table[(j, k)] = m
    return LocalBijection(F, G, table)


def _check_hadj(F, G, hadj):
    from .adjunction import LocalBijection, check_phi

    X, A = F.dom, F.cod
    HX, HA = view(X, "H"), view(A, "H")
    FH = _restrict_functor(F, HX, HA)
    GH = _restrict_functor(G, HA, HX)
    table = {}
    for x in HX.objects:
        for a in HA.objects:
            j, k = HX.id_v[x], HA.id_v[a]
            try:
                table[(j, k)] = {s: hadj[(x, s)] for s in HA.hom_sq(FH.vmor(j), k)}
            except KeyError as exc:
                raise InvalidHAdjunction(f"transpose undefined on {exc}")
    rep = check_phi(LocalBijection(FH, GH, table))
    if not rep.ok:
        raise InvalidHAdjunction("globular data is not a 2-adjunction",
                                 witness=[v.to_json() for v in rep.violations[:5]])


def _restrict_functor(F, dom, cod):
    return DoubleFunctorTable(dom, cod, dict(F.on_obj),
                              {f: F.on_hmor[f] for f in dom.hmors},
                              {j: F.on_vmor[j] for j in dom.vmors},
                              {a: F.on_square[a] for a in dom.squares}, name=F.name)


def hadj_from_unit(F, G, unit_obj):
    """Globular transposition ``(x, s) -> [iv(unit_x) G(s)]`` for a 2-adjunction."""
    X, A = F.dom, F.cod
    HA = view(A, "H")
    out = {}
    for x in X.objects:
        for a in A.objects:
            for s in HA.hom_sq(A.id_v[F.obj(x)], A.id_v[a]):
                out[(x, s)] = X.sq_h(X.iv(unit_obj[x]), G.sq(s))
    return out


# --------------------------------------------------------------------------
# full faithfulness of the holonomy


def holonomy_ff_check(phi):
    """Is the (co)holonomy a bijection on each hom of vertical morphisms?"""
    D = phi.base
    rep = ValidationReport()
    cof = phi.kind == "cofolding"
    for A in D.objects:
        for C in D.objects:
            rep.count("fully_faithful")
            vs = D.hom_v(A, C)
            hs = D.hom_h(C, A) if cof else D.hom_h(A, C)
            image = [phi.assoc(j) for j in vs]
            if len(set(image)) != len(image) or set(image) != set(hs):
                rep.add("fully_faithful", {"from": A, "to": C,
                                           "vertical": vs, "horizontal": hs})
    return rep


def quintet_iso(phi):
    """Explicit isomorphism from the base to the (inverse) quintets of its globular part."""
    rep = holonomy_ff_check(phi)
    if not rep.ok:
        raise NotFullyFaithful("holonomy is not a bijection on vertical homs",
                               witness=[v.to_json() for v in rep.violations[:5]])
    D = phi.base
    K = horizontal_2category(D)
    variant = "inverse" if phi.kind == "cofolding" else "direct"
    Q, _ = quintet(K, variant)
    tag = "qi" if variant == "inverse" else "q"
    h = phi.assoc
    sq = {}
    for x, bd in D.squares.items():
        sq[x] = (tag, bd.top, h(bd.left), h(bd.right), bd.bottom, phi.lam[x])
    maps = {"obj": {A: A for A in D.objects}, "hmor": {f: f for f in D.hmors},
            "vmor": {j: h(j) for j in D.vmors}, "sq": sq}
    iso = check_isomorphism(D, Q, maps)
    if not iso.ok:
        raise NotFullyFaithful("the identification is not an isomorphism",
                               witness=[v.to_json() for v in iso.violations[:5]])
    return DoubleFunctorTable(D, Q, maps["obj"], maps["hmor"], maps["vmor"], sq, name="iso")


# --------------------------------------------------------------------------
# the span folding and cofolding


def span_holonomy(j):
    return fn_span(j)


def span_coholonomy(j):
    return fn_span(j, backward=True)


def span_folding_cell(a):
    """Fold a span square: apex map ``y -> (f0(y), a(y))`` into ``A x_C Z``."""
    hk, hj = span_holonomy(a.right_fn), span_holonomy(a.left_fn)
    top = compose_spans(a.top, hk)
    bottom = compose_spans(hj, a.bottom)
    table = {}
    for e in top.apex:
        y, _ = split(a.top, hk, e)
        table[e] = join(hj, a.bottom, a.top.left_leg(y), a.apex_fn(y))
    return SpanSquare(top, bottom, FinFn.identity(top.left), FinFn.identity(top.right),
                      FinFn(top.apex, bottom.apex, table))


def span_cofolding_cell(a):
    """Cofold a span square: apex map ``y -> (a(y), f1(y))`` into ``Z x_D B``."""
    cj, ck = span_coholonomy(a.left_fn), span_coholonomy(a.right_fn)
    top = compose_spans(cj, a.top)
    bottom = compose_spans(a.bottom, ck)
    table = {}
    for e in top.apex:
        _, y = split(cj, a.top, e)
        table[e] = join(a.bottom, ck, a.apex_fn(y), a.top.right_leg(y))
    return SpanSquare(top, bottom, FinFn.identity(top.left), FinFn.identity(top.right),
                      FinFn(top.apex, bottom.apex, table))


class _Composite:
    """Holonomy of ``first`` then ``second``, read as the composite of the two holonomies."""

    def __init__(self, first, second, cofold):
        self.first, self.second, self.cofold = first, second, cofold
        hol = span_coholonomy if cofold else span_holonomy
        self.span = hol(first.then(second))

    def leaves(self, x):
        return (self.first(x), x) if self.cofold else (x, self.first(x))


def _espan(expr):
    if isinstance(expr, _Composite):
        return expr.span
    if isinstance(expr, tuple):
        return compose_spans(_espan(expr[0]), _espan(expr[1]))
    return expr


def _leaves(expr, e):
    if isinstance(expr, _Composite):
        return expr.leaves(e)
    if isinstance(expr, tuple):
        x, y = split(_espan(expr[0]), _espan(expr[1]), e)
        return _leaves(expr[0], x) + _leaves(expr[1], y)
    return (e,)


def _flat(sq, frame):
    top, bottom = frame
    if _espan(top) != sq.top or _espan(bottom) != sq.bottom:
        raise KindMismatch("bracketing does not describe the square's frame")
    return {_leaves(top, e): _leaves(bottom, sq.apex_fn(e)) for e in sq.top.apex}


def _compare_pasting(lhs, lhs_frame, parts):
    """Compare ``lhs`` with the vertical pasting of globular ``parts`` on flattened elements."""
    if lhs.left_fn != parts[0][0].left_fn or lhs.right_fn != parts[-1][0].right_fn:
        return "vertical sides differ"
    composite = None
    for sq, frame in parts:
        m = _flat(sq, frame)
        if composite is None:
            composite = m
        else:
            try:
                composite = {x: m[y] for x, y in composite.items()}
            except KeyError:
                return "pasting does not line up"
    return None if _flat(lhs, lhs_frame) == composite else "pasted sides differ"


def span_fold_axiom(axiom, cells, cofold=False):
    """Check one axiom on concrete span squares, up to canonical re-nesting.

    ``cells`` is ``(a,)`` for ``identity`` and ``bijection``, ``(a, b)`` for
    ``horizontal`` / ``vertical`` (composable), ``(j,)`` for ``unit``.
    Returns ``None`` when the axiom holds, else a short reason.
    """
    lam = span_cofolding_cell if cofold else span_folding_cell
    hol = span_coholonomy if cofold else span_holonomy
    if axiom == "identity":
        (a,) = cells
        if not (a.left_fn.is_identity() and a.right_fn.is_identity()):
            return "sides are not identities"
        return None if lam(a) == a else "folding changed a globular square"
    if axiom == "unit":
        (j,) = cells
        return None if lam(span_ih(j)) == span_iv(hol(j)) else "identity square not sent to identity"
    if axiom == "bijection":
        (a,) = cells
        return _span_fold_bijection(a, cofold)
    a, b = cells
    if axiom == "horizontal":
        f1, f2, g1, g2 = a.top, b.top, a.bottom, b.bottom
        j, k, l = hol(a.left_fn), hol(a.right_fn), hol(b.right_fn)
        lhs = lam(compose_span_squares("h", a, b))
        if cofold:
            return _compare_pasting(lhs, ((j, (f1, f2)), ((g1, g2), l)), [
                (compose_span_squares("h", lam(a), span_iv(f2)), (((j, f1), f2), ((g1, k), f2))),
                (compose_span_squares("h", span_iv(g1), lam(b)), ((g1, (k, f2)), (g1, (g2, l))))])
        return _compare_pasting(lhs, (((f1, f2), l), (j, (g1, g2))), [
            (compose_span_squares("h", span_iv(f1), lam(b)), ((f1, (f2, l)), (f1, (k, g2)))),
            (compose_span_squares("h", lam(a), span_iv(g2)), (((f1, k), g2), ((j, g1), g2)))])
    if axiom == "vertical":
        f, g, h = a.top, a.bottom, b.bottom
        j1, k1, j2, k2 = hol(a.left_fn), hol(a.right_fn), hol(b.left_fn), hol(b.right_fn)
        jj = _Composite(a.left_fn, b.left_fn, cofold)
        kk = _Composite(a.right_fn, b.right_fn, cofold)
        lhs = lam(compose_span_squares("v", a, b))
        if cofold:
            return _compare_pasting(lhs, ((jj, f), (h, kk)), [
                (compose_span_squares("h", span_iv(j2), lam(a)), ((j2, (j1, f)), (j2, (g, k1)))),
                (compose_span_squares("h", lam(b), span_iv(k1)), (((j2, g), k1), ((h, k2), k1)))])
        return _compare_pasting(lhs, ((f, kk), (jj, h)), [
            (compose_span_squares("h", lam(a), span_iv(k2)), (((f, k1), k2), ((j1, g), k2))),
            (compose_span_squares("h", span_iv(j1), lam(b)), ((j1, (g, k2)), (j1, (j2, h))))])
    raise KindMismatch(f"unknown axiom {axiom!r}")


def _span_fold_bijection(a, cofold):
    """Every globular square on the folded frame comes from exactly one square."""
    import itertools

    folded = span_cofolding_cell(a) if cofold else span_folding_cell(a)
    top, bottom = a.top, a.bottom
    fibers = []
    for y in ordered(top.apex):
        want_l = a.left_fn(top.left_leg(y))
        want_r = a.right_fn(top.right_leg(y))
        fibers.append([z for z in ordered(bottom.apex)
                       if bottom.left_leg(z) == want_l and bottom.right_leg(z) == want_r])
    ftop, fbot = folded.top, folded.bottom
    gfibers = []
    for e in ordered(ftop.apex):
        gfibers.append([z for z in ordered(fbot.apex)
                        if fbot.left_leg(z) == ftop.left_leg(e) and fbot.right_leg(z) == ftop.right_leg(e)])
    n_sq = 1
    for f in fibers:
        n_sq *= len(f)
    n_glob = 1
    for f in gfibers:
        n_glob *= len(f)
    if n_sq != n_glob:
        return f"{n_sq} squares but {n_glob} globular squares"
    if n_sq > 4096:
        return None
    images = set()
    lam = span_cofolding_cell if cofold else span_folding_cell
    ys = ordered(top.apex)
    for choice in itertools.product(*fibers):
        sq = SpanSquare(top, bottom, a.left_fn, a.right_fn, FinFn(top.apex, bottom.apex, dict(zip(ys, choice))))
        images.add(lam(sq).apex_fn)
    return None if len(images) == n_sq else "two squares fold to the same globular square"


def span_holonomy_not_full():
    """A span between one-element sets that is not the holonomy of any function."""
    A, C = frozenset({"a"}), frozenset({"c"})
    empty = make_span(A, C, {})
    only = FinFn(A, C, {"a": "c"})
    assert span_holonomy(only) != empty
    return {"left": "a", "right": "c", "span": "empty apex", "holonomies": 1}
