"""Endomorphisms and monads of a table double category, as double categories.

Conventions (fixed throughout):

* an endomorphism ``("e", P)`` is a horizontal ``P: X -> X``;
* a monad ``("m", P, mu, eta)`` adds globular squares ``mu: [P P] => P`` and
  ``eta: 1_X => P``;
* a horizontal map ``("h", S, T, F, phi)`` has ``F: X -> Y`` and a globular
  square ``phi: [F Q] => [P F]``;
* a vertical map ``("v", S, T, ubar)`` has ``ubar`` with top ``P``, bottom
  ``P'`` and both sides ``u``;
* a square ``("s", top, bottom, left, right, a)`` is a square ``a`` of the base
  with ``[phi; [ubar a]] = [[a vbar]; phi']``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

from ..adjunction import check_vertical_unit_counit, inclusion_V1, is_couniversal_square, \
    right_adjoint_via_representability
from ..core import Boundary, Key, TableDoubleCategory, ValidationReport, check_isomorphism, embed_2category, \
    horizontal_2category, ordered, view
from ..errors import BoundaryMismatch, InvalidCofolding, NotEnumerable, NotUniversal
from ..folding import Cofolding, lam_inverse, quintet, unfold, validate_folding
from ..functors import DoubleFunctorTable, VertNatTable, compose_functors, identity_functor
from ..presheaf import hom_presheaf


# --------------------------------------------------------------------------
# single monads


@dataclass(frozen=True)
class MonadCell:
    X: object
    P: object
    mu: object
    eta: object

    @property
    def id(self):
        return ("m", self.P, self.mu, self.eta)


def validate_monad(D, M):
    """Associativity and both unit laws, by pasting in ``D``."""
    rep = ValidationReport()
    X, P = M.X, M.P
    if D.hmors.get(P) != (X, X):
        raise BoundaryMismatch(f"{P!r} is not an endomorphism of {X!r}")
    pp = D.comp_h(P, P)
    one_v = D.id_v[X]
    rep.count("frame")
    if D.boundary(M.mu) != Boundary(pp, P, one_v, one_v):
        rep.add("frame", {"cell": "mu"})
    rep.count("frame")
    if D.boundary(M.eta) != Boundary(D.id_h[X], P, one_v, one_v):
        rep.add("frame", {"cell": "eta"})
    if not rep.ok:
        return rep
    iP = D.iv(P)
    rep.count("assoc")
    if D.sq_v(D.sq_h(M.mu, iP), M.mu) != D.sq_v(D.sq_h(iP, M.mu), M.mu):
        rep.add("assoc", {"monad": M.id})
    rep.count("units")
    if D.sq_v(D.sq_h(M.eta, iP), M.mu) != iP:
        rep.add("units", {"monad": M.id, "side": "left"})
    rep.count("units")
    if D.sq_v(D.sq_h(iP, M.eta), M.mu) != iP:
        rep.add("units", {"monad": M.id, "side": "right"})
    return rep


def monads_of(D):
    """Every monad structure on every endomorphism, in a fixed order."""
    out = []
    for P in ordered(D.hmors):
        X, Y = D.hmors[P]
        if X != Y:
            continue
        one_v = D.id_v[X]
        for mu in D.squares_framed(D.comp_h(P, P), P, one_v, one_v):
            for eta in D.squares_framed(D.id_h[X], P, one_v, one_v):
                M = MonadCell(X, P, mu, eta)
                if validate_monad(D, M).ok:
                    out.append(M)
    return out


def trivial_monad(D, X):
    u = D.id_h[X]
    return MonadCell(X, u, D.iv(u), D.iv(u))


# --------------------------------------------------------------------------
# End and Mnd as tables


def _endo(obj):
    return obj[1]


def _is_monad_map(D, S, T, F, phi):
    _, P, muP, etaP = S
    _, Q, muQ, etaQ = T
    iF = D.iv(F)
    if D.sq_v(D.sq_h(iF, etaQ), phi) != D.sq_h(etaP, iF):
        return False
    lhs = D.sq_v(D.sq_h(iF, muQ), phi)
    rhs = D.sq_v(D.sq_h(phi, D.iv(Q)), D.sq_h(D.iv(P), phi), D.sq_h(muP, iF))
    return lhs == rhs


def _is_monad_vmap(D, S, T, ubar):
    _, P, muP, etaP = S
    _, Q, muQ, etaQ = T
    u = D.boundary(ubar).left
    if D.sq_v(etaP, ubar) != D.sq_v(D.ih(u), etaQ):
        return False
    return D.sq_v(muP, ubar) == D.sq_v(D.sq_h(ubar, ubar), muQ)


@dataclass
class EndMnd:
    """A built ``End`` or ``Mnd`` table with its forgetful functors."""

    base: TableDoubleCategory
    table: TableDoubleCategory
    flavor: str
    underlying: DoubleFunctorTable = None
    forget: DoubleFunctorTable = None
    name: str = field(default="", compare=False)


def _build(D, objects, monadic):
    hmors, vmors = {}, {}
    for S in objects:
        P = _endo(S)
        X = D.hsrc(P)
        for T in objects:
            Q = _endo(T)
            Y = D.hsrc(Q)
            for F in D.hom_h(X, Y):
                for phi in D.squares_framed(D.comp_h(F, Q), D.comp_h(P, F), D.id_v[X], D.id_v[Y]):
                    if monadic and not _is_monad_map(D, S, T, F, phi):
                        continue
                    hmors[Key(("h", S, T, F, phi))] = (S, T)
            for u in D.hom_v(X, Y):
                for ubar in D.squares_framed(P, Q, u, u):
                    if monadic and not _is_monad_vmap(D, S, T, ubar):
                        continue
                    vmors[Key(("v", S, T, ubar))] = (S, T)
    h_by_ends = defaultdict(list)
    for h, ends in hmors.items():
        h_by_ends[ends].append(h)
    v_by_src = defaultdict(list)
    for v, (S, T) in vmors.items():
        v_by_src[S].append(v)

    squares = {}
    for top, (S, T) in hmors.items():
        F, phi = top[3], top[4]
        for left in v_by_src[S]:
            ubar, S2 = left[3], left[2]
            u = D.boundary(ubar).left
            for right in v_by_src[T]:
                vbar, T2 = right[3], right[2]
                v = D.boundary(vbar).left
                for bottom in h_by_ends[(S2, T2)]:
                    F2, phi2 = bottom[3], bottom[4]
                    for a in D.squares_framed(F, F2, u, v):
                        if D.sq_v(phi, D.sq_h(ubar, a)) == D.sq_v(D.sq_h(a, vbar), phi2):
                            squares[Key(("s", top, bottom, left, right, a))] = Boundary(top, bottom, left, right)

    canon = {x: x for x in itertools.chain(hmors, vmors, squares)}

    def sq(*parts):
        x = ("s",) + parts
        return canon.get(x, x)

    def hcomp_h(h1, h2):
        F, phi, G, psi = h1[3], h1[4], h2[3], h2[4]
        comp = D.sq_v(D.sq_h(D.iv(F), psi), D.sq_h(phi, D.iv(G)))
        h = ("h", h1[1], h2[2], D.comp_h(F, G), comp)
        return canon.get(h, h)

    def vcomp_v(v1, v2):
        v = ("v", v1[1], v2[2], D.sq_v(v1[3], v2[3]))
        return canon.get(v, v)

    hc = {(h1, h2): hcomp_h(h1, h2) for h1, (S, T) in hmors.items() for h2 in hmors
          if hmors[h2][0] == T}
    vc = {(v1, v2): vcomp_v(v1, v2) for v1, (S, T) in vmors.items() for v2 in v_by_src[T]}
    sq_left = defaultdict(list)
    sq_top = defaultdict(list)
    for x, bd in squares.items():
        sq_left[bd.left].append(x)
        sq_top[bd.top].append(x)
    hcs, vcs = {}, {}
    for x, bd in squares.items():
        for y in sq_left[bd.right]:
            by = squares[y]
            hcs[(x, y)] = sq(hc[(bd.top, by.top)], hc[(bd.bottom, by.bottom)], bd.left, by.right,
                        D.sq_h(x[5], y[5]))
        for y in sq_top[bd.bottom]:
            by = squares[y]
            vcs[(x, y)] = sq(bd.top, by.bottom, vc[(bd.left, by.left)], vc[(bd.right, by.right)],
                        D.sq_v(x[5], y[5]))
    id_h = {S: canon[("h", S, S, D.id_h[D.hsrc(_endo(S))], D.iv(_endo(S)))] for S in objects}
    id_v = {S: canon[("v", S, S, D.iv(_endo(S)))] for S in objects}
    id_sq_h = {}
    for v, (S, T) in vmors.items():
        u = D.boundary(v[3]).left
        id_sq_h[v] = sq(id_h[S], id_h[T], v, v, D.ih(u))
    id_sq_v = {h: sq(h, h, id_v[S], id_v[T], D.iv(h[3])) for h, (S, T) in hmors.items()}
    return TableDoubleCategory(
        objects=list(objects), hmors=hmors, vmors=vmors, squares=squares,
        hcomp_h=hc, vcomp_v=vc, hcomp_sq=hcs, vcomp_sq=vcs,
        id_h=id_h, id_v=id_v, id_sq_h=id_sq_h, id_sq_v=id_sq_v,
        name=("Mnd" if monadic else "End") + f"({D.name})",
    )


def _underlying(E, D):
    return DoubleFunctorTable(
        E, D, {S: D.hsrc(_endo(S)) for S in E.objects},
        {h: h[3] for h in E.hmors}, {v: D.boundary(v[3]).left for v in E.vmors},
        {x: x[5] for x in E.squares}, name="Und")


def build_end(D):
    if not isinstance(D, TableDoubleCategory):
        raise NotEnumerable("End needs a table double category")
    objects = [Key(("e", P)) for P in ordered(D.hmors) if D.hsrc(P) == D.htgt(P)]
    E = _build(D, objects, monadic=False)
    return EndMnd(D, E, "end", underlying=_underlying(E, D))


def build_mnd(D, end=None):
    """``Mnd(D)`` with ``Und: Mnd -> D`` and the forgetful ``U: Mnd -> End``."""
    if not isinstance(D, TableDoubleCategory):
        raise NotEnumerable("Mnd needs a table double category")
    objects = [Key(M.id) for M in monads_of(D)]
    Mn = _build(D, objects, monadic=True)
    end = end or build_end(D)
    E = end.table

    def o(S):
        return ("e", S[1])

    def h(x):
        return ("h", o(x[1]), o(x[2]), x[3], x[4])

    def v(x):
        return ("v", o(x[1]), o(x[2]), x[3])

    U = DoubleFunctorTable(
        Mn, E, {S: o(S) for S in Mn.objects}, {x: h(x) for x in Mn.hmors},
        {x: v(x) for x in Mn.vmors},
        {x: ("s", h(x[1]), h(x[2]), v(x[3]), v(x[4]), x[5]) for x in Mn.squares}, name="U")
    return EndMnd(D, Mn, "mnd", underlying=_underlying(Mn, D), forget=U)


# --------------------------------------------------------------------------
# Street's 2-categories, computed directly from a 2-category


def street_2category(K, monadic=False):
    """Endomorphisms (or monads) of ``K`` with lax maps ``phi: F Q => P F``.

    Returns plain dictionaries keyed like the double-category tables so the
    two constructions can be compared cell by cell.
    """
    objs = []
    for P, (X, Y) in K.mor1.items():
        if X != Y:
            continue
        if not monadic:
            objs.append(("e", P))
            continue
        unit = K.id1[X]
        for mu in K.cells(K.c1(P, P), P):
            for eta in K.cells(unit, P):
                iP = K.id2[P]
                if K.v2(K.h2(mu, iP), mu) != K.v2(K.h2(iP, mu), mu):
                    continue
                if K.v2(K.h2(eta, iP), mu) != iP or K.v2(K.h2(iP, eta), mu) != iP:
                    continue
                objs.append(("m", P, mu, eta))
    one = {}
    for S in objs:
        P = S[1]
        X = K.mor1[P][0]
        for T in objs:
            Q = T[1]
            Y = K.mor1[Q][0]
            for F in K.hom(X, Y):
                for phi in K.cells(K.c1(F, Q), K.c1(P, F)):
                    if monadic:
                        iF = K.id2[F]
                        if K.v2(K.h2(iF, T[3]), phi) != K.h2(S[3], iF):
                            continue
                        lhs = K.v2(K.h2(iF, T[2]), phi)
                        rhs = K.v2(K.h2(phi, K.id2[Q]), K.h2(K.id2[P], phi), K.h2(S[2], iF))
                        if lhs != rhs:
                            continue
                    one[("h", S, T, F, phi)] = (S, T)
    two = {}
    for f, (S, T) in one.items():
        for g, ends in one.items():
            if ends != (S, T):
                continue
            for s in K.cells(f[3], g[3]):
                lhs = K.v2(f[4], K.h2(K.id2[S[1]], s))
                rhs = K.v2(K.h2(s, K.id2[T[1]]), g[4])
                if lhs == rhs:
                    two[(f, g, s)] = (f, g)
    return objs, one, two


def compare_with_street(K, monadic=False):
    """``H`` of the double-category construction on ``HK`` equals Street's, cell by cell."""
    H = embed_2category(K, "h")
    built = (build_mnd(H) if monadic else build_end(H)).table
    Hb = view(built, "H")
    objs, one, two = street_2category(K, monadic)
    rep = ValidationReport()
    rep.count("objects")
    if set(objs) != set(Hb.objects):
        rep.add("objects", {"street": len(objs), "built": len(Hb.objects)})
    rep.count("1-cells")
    if set(one) != set(Hb.hmors):
        rep.add("1-cells", {"street": len(one), "built": len(Hb.hmors)})
    rep.count("2-cells")
    mine = {(b.top, b.bottom, x[5]) for x, b in Hb.squares.items()}
    if mine != set(two):
        rep.add("2-cells", {"street": len(two), "built": len(mine)})
    return rep


# --------------------------------------------------------------------------
# inherited cofoldings and the star bijection


def _coholonomy_map(D, lam, coh, v):
    S, T, ubar = v[1], v[2], v[3]
    u = D.boundary(ubar).left
    return ("h", T, S, coh[u], lam[ubar])


def inherit_cofolding(D, cof, end=None, mnd=None):
    """Cofoldings on ``End(D)`` and ``Mnd(D)``: ``(u, ubar)* = (u*, L(ubar))``."""
    rep = validate_folding(cof)
    if not rep.ok:
        raise InvalidCofolding("base cofolding is invalid",
                               witness=[x.to_json() for x in rep.violations[:5]])
    end = end or build_end(D)
    mnd = mnd or build_mnd(D, end)
    out = []
    for em in (end, mnd):
        E = em.table
        coh = {}
        for v in E.vmors:
            h = _coholonomy_map(D, cof.lam, cof.coholonomy, v)
            if h not in E.hmors:
                raise InvalidCofolding(f"coholonomy of {v!r} is not a map of {em.flavor}", witness=v)
            coh[v] = h
        lam = {}
        for x, bd in E.squares.items():
            top = E.comp_h(coh[bd.left], bd.top)
            bottom = E.comp_h(bd.bottom, coh[bd.right])
            y = ("s", top, bottom, E.id_v[E.vtgt(bd.left)], E.id_v[E.htgt(bd.top)], cof.lam[x[5]])
            if y not in E.squares:
                raise InvalidCofolding(f"cofolded square of {x!r} is missing", witness=x)
            lam[x] = y
        out.append(Cofolding(E, coh, lam, name=f"inherited {em.flavor}"))
    return out[0], out[1]


def star_bijection(D, cof, u, em):
    """``(u, ubar) -> (u*, L(ubar))`` from vertical maps over ``u`` to horizontal maps over ``u*``.

    Returns ``(table, report)``; the report checks bijectivity by enumeration
    and that the inverse through the unfolding recovers each vertical map.
    """
    E = em.table
    dom = [v for v in ordered(E.vmors) if D.boundary(v[3]).left == u]
    ustar = cof.coholonomy[u]
    cod = {h for h in E.hmors if h[3] == ustar}
    table = {v: _coholonomy_map(D, cof.lam, cof.coholonomy, v) for v in dom}
    rep = ValidationReport()
    rep.count("well_defined")
    if not set(table.values()) <= cod:
        rep.add("well_defined", {"outside": [v for v, h in table.items() if h not in cod][:3]})
    rep.count("bijection")
    if len(set(table.values())) != len(dom) or set(table.values()) != cod:
        rep.add("bijection", {"vertical": len(dom), "horizontal": len(cod)})
    inv = lam_inverse(cof)
    for v, h in table.items():
        rep.count("inverse")
        S, T = v[1], v[2]
        P, Q = _endo(S), _endo(T)
        back = unfold(cof, h[4], (P, Q, u, u), inv)
        if back != v[3]:
            rep.add("inverse", {"vmor": v})
    return table, rep


def star_inverse(D, cof, h, source, target, inv=None):
    """Vertical map ``source -> target`` whose coholonomy is the horizontal map ``h``."""
    inv = inv if inv is not None else lam_inverse(cof)
    for u in ordered(D.hom_v(D.hsrc(_endo(source)), D.hsrc(_endo(target)))):
        if cof.coholonomy[u] != h[3]:
            continue
        ubar = unfold(cof, h[4], (_endo(source), _endo(target), u, u), inv)
        if ubar is not None:
            return ("v", source, target, ubar)
    return None


# --------------------------------------------------------------------------
# quintet identities


def end_quintet_iso(K, monadic=False):
    """Explicit identification of ``End(Qbar K)`` with ``Qbar`` of Street's ``End K`` (or ``Mnd``).

    A horizontal map ``(F, phi)`` keeps its 2-cell; a vertical map with
    square ``ubar`` becomes the Street 1-cell ``(u, ubar)``; a square becomes
    the quintet whose 2-cell is the square's own 2-cell.
    """
    Qb, _ = quintet(K, "inverse")
    EQ = (build_mnd(Qb) if monadic else build_end(Qb)).table
    H = embed_2category(K, "h")
    EK_tab = (build_mnd(H) if monadic else build_end(H)).table
    EK = horizontal_2category(EK_tab)
    target, _ = quintet(EK, "inverse")

    def obj(S):
        if S[0] == "e":
            return S
        return ("m", S[1], S[2][5], S[3][5])

    def hmor(h):
        return ("h", obj(h[1]), obj(h[2]), h[3], h[4][5])

    def vmor(v):
        # (u, ubar) with ubar: [u P] => [P' u] is the Street 1-cell from P' to P
        return ("h", obj(v[2]), obj(v[1]), v[3][2], v[3][5])

    def square(x):
        top, bottom, left, right, a = x[1:]
        f, g, j, k = hmor(top), hmor(bottom), vmor(left), vmor(right)
        up, down = EK.c1(j, f), EK.c1(g, k)
        s = EK_tab.id_v
        cell = ("s", up, down, s[EK_tab.hsrc(up)], s[EK_tab.htgt(up)], a[5])
        return ("qi", f, j, k, g, cell)

    maps = {"obj": {S: obj(S) for S in EQ.objects}, "hmor": {h: hmor(h) for h in EQ.hmors},
            "vmor": {v: vmor(v) for v in EQ.vmors}, "sq": {x: square(x) for x in EQ.squares}}
    rep = check_isomorphism(EQ, target, maps)
    return rep, maps, EQ, target


# --------------------------------------------------------------------------
# free monads from horizontal free monads


@dataclass
class FreeMonadWitness:
    R: DoubleFunctorTable
    U: DoubleFunctorTable
    unit: VertNatTable
    counit: VertNatTable
    report: ValidationReport


def _universal_h(U, Mobj, Q, iota_h):
    """Is the horizontal map ``iota_h: U(M) -> Q`` couniversal on globular squares?"""
    Mn, E = U.dom, U.cod
    HM, HE = view(Mn, "H"), view(E, "H")
    UH = DoubleFunctorTable(HM, HE, dict(U.on_obj), {h: U.on_hmor[h] for h in HM.hmors},
                            {v: U.on_vmor[v] for v in HM.vmors},
                            {x: U.on_square[x] for x in HM.squares}, name="U")
    return is_couniversal_square(UH, HE.id_v[Q], HM.id_v[Mobj], HE.iv(iota_h))


def construct_free_monads(D, cof, hfree, end=None, mnd=None):
    """Vertical left adjoint ``R`` of ``U: Mnd(D) -> End(D)`` from horizontal free monads.

    ``hfree[P] = (monad id, iota)`` with ``iota`` a globular square
    ``P => P_free``; the horizontal map ``(1, iota): U(M) -> (X, P)`` must be
    couniversal.  The unit at ``(X, P)`` is ``(1_X, unfold(iota))``.
    """
    end = end or build_end(D)
    mnd = mnd or build_mnd(D, end)
    E, Mn, U = end.table, mnd.table, mnd.forget
    end_cof, mnd_cof = inherit_cofolding(D, cof, end, mnd)
    inv_m = lam_inverse(mnd_cof)

    counit_h = {}
    for S in E.objects:
        P = _endo(S)
        if P not in hfree:
            raise NotUniversal(f"no free monad given for {P!r}", witness=P)
        Mobj, iota = hfree[P]
        X = D.hsrc(P)
        h = ("h", U.obj(Mobj), S, D.id_h[X], iota)
        if Mobj not in Mn.objects or h not in E.hmors:
            raise NotUniversal(f"free monad data for {P!r} is not a map of endomorphisms", witness=P)
        if not _universal_h(U, Mobj, S, h):
            raise NotUniversal(f"horizontal map for {P!r} is not couniversal",
                               witness={"endo": P, "iota": iota})
        counit_h[S] = h

    def factor(target_obj, h_into, source_monad):
        """Unique monad map ``source_monad -> R(target)`` over ``h_into: U(source) -> target``."""
        hits = [g for g in Mn.hmors if Mn.hsrc(g) == source_monad and Mn.htgt(g) == hfree[_endo(target_obj)][0]
                and E.comp_h(U.hmor(g), counit_h[target_obj]) == h_into]
        if len(hits) != 1:
            raise NotUniversal(f"{len(hits)} factorizations through the free monad",
                               witness={"target": target_obj})
        return hits[0]

    R_obj = {S: hfree[_endo(S)][0] for S in E.objects}
    R_h = {}
    for h in E.hmors:
        S, T = E.hmors[h]
        R_h[h] = factor(T, E.comp_h(counit_h[S], h), R_obj[S])
    R_v = {}
    for v in E.vmors:
        S, T = E.vmors[v]
        ustar = end_cof.coholonomy[v]
        g = factor(S, E.comp_h(counit_h[T], ustar), R_obj[T])
        back = star_inverse(D, cof, g, R_obj[S], R_obj[T], inv=lam_inverse(cof))
        if back is None or back not in Mn.vmors:
            raise NotUniversal("no vertical monad map behind a factorization", witness=v)
        R_v[v] = back

    def R_globular(s):
        bd = E.boundary(s)
        S, T = E.hsrc(bd.top), E.htgt(bd.top)
        want = E.sq_h(E.iv(counit_h[S]), s)
        hits = [b for b in Mn.squares_framed(R_h[bd.top], R_h[bd.bottom], Mn.id_v[R_obj[S]],
                                             Mn.id_v[R_obj[T]])
                if E.sq_h(U.sq(b), E.iv(counit_h[T])) == want]
        if len(hits) != 1:
            raise NotUniversal(f"{len(hits)} globular factorizations", witness=s)
        return hits[0]

    R_sq = {}
    for x, bd in E.squares.items():
        g = R_globular(end_cof.lam[x])
        frame = (R_h[bd.top], R_h[bd.bottom], R_v[bd.left], R_v[bd.right])
        y = unfold(mnd_cof, g, frame, inv_m)
        if y is None:
            raise NotUniversal("no square of Mnd unfolds to the factorization", witness=x)
        R_sq[x] = y
    R = DoubleFunctorTable(E, Mn, R_obj, R_h, R_v, R_sq, name="R")

    unit_obj, unit_h = {}, {}
    for S in E.objects:
        P = _endo(S)
        X = D.hsrc(P)
        iota = hfree[P][1]
        ubar = unfold(cof, iota, (P, _endo(R_obj[S]), D.id_v[X], D.id_v[X]))
        unit_obj[S] = ("v", S, U.obj(R_obj[S]), ubar)
    for h in E.hmors:
        S, T = E.hmors[h]
        unit_h[h] = ("s", h, U.hmor(R_h[h]), unit_obj[S], unit_obj[T], D.iv(h[3]))
    counit_obj, counit_h2 = {}, {}
    for M in Mn.objects:
        S = U.obj(M)
        g = factor(S, E.id_h[S], M)
        back = star_inverse(D, cof, g, R_obj[S], M, inv=lam_inverse(cof))
        counit_obj[M] = back
    for g in Mn.hmors:
        M1, M2 = Mn.hmors[g]
        counit_h2[g] = ("s", R_h[U.hmor(g)], g, counit_obj[M1], counit_obj[M2], D.iv(g[3]))
    unit = VertNatTable(identity_functor(E), compose_functors(R, U), unit_obj, unit_h, name="unit")
    counit = VertNatTable(compose_functors(U, R), identity_functor(Mn), counit_obj, counit_h2,
                          name="counit")
    rep = check_vertical_unit_counit(R, U, unit, counit)
    for S, v in unit_obj.items():
        rep.count("vertically_trivial")
        if D.boundary(v[3]).left != D.id_v[D.hsrc(_endo(S))]:
            rep.add("vertically_trivial", {"endo": S})
    return FreeMonadWitness(R, U, unit, counit, rep)


# --------------------------------------------------------------------------
# Eilenberg-Moore objects


def inclusion(D, mnd):
    """``X -> (X, 1, i, i)``: every object as its trivial monad."""
    Mn = mnd.table
    tm = {X: trivial_monad(D, X).id for X in D.objects}
    for X, M in tm.items():
        if M not in Mn.objects:
            raise BoundaryMismatch(f"trivial monad on {X!r} missing from Mnd")
    on_h = {f: ("h", tm[a], tm[b], f, D.iv(f)) for f, (a, b) in D.hmors.items()}
    on_v = {j: ("v", tm[a], tm[b], D.ih(j)) for j, (a, b) in D.vmors.items()}
    on_sq = {x: ("s", on_h[bd.top], on_h[bd.bottom], on_v[bd.left], on_v[bd.right], x)
             for x, bd in D.squares.items()}
    return DoubleFunctorTable(D, Mn, tm, on_h, on_v, on_sq, name="Inc")


def alg_presheaf(D, mnd=None):
    """``Mnd(D)(Inc -, J -)`` on ``D^horop x V1(Mnd(D))``: algebra structures."""
    mnd = mnd or build_mnd(D)
    return hom_presheaf(mnd.table, inclusion(D, mnd), inclusion_V1(mnd.table), name="Alg")


@dataclass
class EMResult:
    witness: object
    transcript: list

    @property
    def found(self):
        return self.witness is not None


def em_check(D, budget=100000, mnd=None):
    """Search for a right adjoint of the trivial-monad inclusion; ``witness`` is ``(G, counit, iso)``."""
    mnd = mnd or build_mnd(D)
    inc = inclusion(D, mnd)
    transcript = []
    found = right_adjoint_via_representability(inc, budget=budget, transcript=transcript)
    return EMResult(found, transcript)


def hfree_from_choice(D, choice, mnd=None):
    """``{P: P_free}`` to ``{P: (monad, iota)}`` when the monad on ``P_free`` and ``iota`` are unique."""
    mnd = mnd or build_mnd(D)
    out = {}
    for P, Pf in choice.items():
        X = D.hsrc(P)
        ms = [M for M in mnd.table.objects if M[1] == Pf]
        iotas = D.squares_framed(P, Pf, D.id_v[X], D.id_v[X])
        if len(ms) != 1 or len(iotas) != 1:
            raise NotUniversal(f"{len(ms)} monads and {len(iotas)} comparison squares for {P!r}",
                               witness={"endo": P, "free": Pf})
        out[P] = (ms[0], iotas[0])
    return out
