"""Double adjunctions in four equivalent presentations.

* unit and counit horizontal transformations with the triangle identities,
* a local bijection ``A(Fj, k) ~ X(j, Gk)`` natural in squares on both sides,
* universal squares ``j -> G(Fj)`` for each vertical morphism ``j``,
* an invertible transformation of hom presheaves ``A(F-, -) => X(-, G-)``.

``F: X -> A`` is the left adjoint throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import ValidationReport, ordered, view
from .errors import InvalidAdjunction, InvalidLocalBijection, NotUniversal
from .functors import (
    DoubleFunctorTable,
    HorNatTable,
    compose_functors,
    identity_functor,
    transpose_functor,
    validate_functor,
    validate_hornat,
    vertnat_as_hornat,
)
from .presheaf import PresheafHorNat, find_iso, hom_presheaf, is_iso, validate_presheaf_hornat
from .span import FinFn


@dataclass
class LocalBijection:
    """``table[(j, k)]`` maps each square of ``A(Fj, k)`` to one of ``X(j, Gk)``."""

    F: DoubleFunctorTable
    G: DoubleFunctorTable
    table: dict
    name: str = field(default="", compare=False)

    def __call__(self, j, k, a):
        return self.table[(j, k)][a]

    def inverse(self, j, k):
        return {b: a for a, b in self.table[(j, k)].items()}


@dataclass
class UniversalSquare:
    """``square`` lies in ``X(j, G target)`` and is universal from ``j`` to ``G``."""

    j: object
    target: object
    square: object


@dataclass
class AdjunctionUC:
    F: DoubleFunctorTable
    G: DoubleFunctorTable
    unit: HorNatTable
    counit: HorNatTable


# --------------------------------------------------------------------------
# unit and counit


def check_unit_counit(F, G, unit, counit):
    """Both transformations valid and both triangle identities, on objects and vertical morphisms."""
    X, A = F.dom, F.cod
    rep = ValidationReport()
    for name, H in (("F", F), ("G", G)):
        sub = validate_functor(H)
        rep.extend(sub, prefix=f"{name}.")
    rep.extend(validate_hornat(unit), prefix="unit.")
    rep.extend(validate_hornat(counit), prefix="counit.")
    if not rep.ok:
        return rep
    for a in A.objects:
        rep.count("triangle_G")
        if X.comp_h(unit.at_obj[G.obj(a)], G.hmor(counit.at_obj[a])) != X.id_h[G.obj(a)]:
            rep.add("triangle_G", {"obj": a})
    for k in A.vmors:
        rep.count("triangle_G")
        if X.sq_h(unit.at_vmor[G.vmor(k)], G.sq(counit.at_vmor[k])) != X.ih(G.vmor(k)):
            rep.add("triangle_G", {"vmor": k})
    for x in X.objects:
        rep.count("triangle_F")
        if A.comp_h(F.hmor(unit.at_obj[x]), counit.at_obj[F.obj(x)]) != A.id_h[F.obj(x)]:
            rep.add("triangle_F", {"obj": x})
    for j in X.vmors:
        rep.count("triangle_F")
        if A.sq_h(F.sq(unit.at_vmor[j]), counit.at_vmor[F.vmor(j)]) != A.ih(F.vmor(j)):
            rep.add("triangle_F", {"vmor": j})
    return rep


def check_vertical_unit_counit(F, G, unit, counit):
    """The transposed notion: unit and counit are vertical transformations."""
    return check_unit_counit(transpose_functor(F), transpose_functor(G),
                             vertnat_as_hornat(unit), vertnat_as_hornat(counit))


def phi_from_unit(F, G, unit):
    """``a -> [unit_j G(a)]`` on every ``A(Fj, k)``."""
    X, A = F.dom, F.cod
    table = {}
    for j in X.vmors:
        Fj = F.vmor(j)
        for k in A.vmors:
            table[(j, k)] = {a: X.sq_h(unit.at_vmor[j], G.sq(a)) for a in A.hom_sq(Fj, k)}
    return LocalBijection(F, G, table, name="from unit")


def phi_from_uc(F, G, unit, counit):
    """Local bijection from unit and counit; raises if the triangles fail."""
    rep = check_unit_counit(F, G, unit, counit)
    if not rep.ok:
        raise InvalidAdjunction("unit and counit do not form an adjunction",
                                witness=[v.to_json() for v in rep.violations[:5]])
    return phi_from_unit(F, G, unit)


def phi_inverse_from_counit(F, G, counit):
    """``b -> [F(b) counit_k]`` on every ``X(j, Gk)``."""
    X, A = F.dom, F.cod
    table = {}
    for j in X.vmors:
        for k in A.vmors:
            table[(j, k)] = {b: A.sq_h(F.sq(b), counit.at_vmor[k]) for b in X.hom_sq(j, G.vmor(k))}
    return table


# --------------------------------------------------------------------------
# local bijections


def check_phi(phi):
    """Bijective on every ``(j, k)`` and natural in squares of ``X`` and ``A``."""
    F, G = phi.F, phi.G
    X, A = F.dom, F.cod
    rep = ValidationReport()
    for j in X.vmors:
        for k in A.vmors:
            rep.count("bijection")
            m = phi.table.get((j, k))
            dom, cod = set(A.hom_sq(F.vmor(j), k)), set(X.hom_sq(j, G.vmor(k)))
            if m is None or set(m) != dom or set(m.values()) != cod or len(dom) != len(cod):
                rep.add("bijection", {"pair": [j, k], "sizes": [len(dom), len(cod)]})
    if not rep.ok:
        return rep
    T = phi.table
    # precomposition with F(s) on the left
    for s, bd in X.squares.items():
        Fs = F.sq(s)
        for k in A.vmors:
            for a in A.hom_sq(F.vmor(bd.right), k):
                rep.count("natural_left")
                if T[(bd.left, k)][A.sq_h(Fs, a)] != X.sq_h(s, T[(bd.right, k)][a]):
                    rep.add("natural_left", {"sq": s, "square": a})
    # postcomposition with t on the right
    for t, bd in A.squares.items():
        Gt = G.sq(t)
        for j in X.vmors:
            for a in A.hom_sq(F.vmor(j), bd.left):
                rep.count("natural_right")
                if T[(j, bd.right)][A.sq_h(a, t)] != X.sq_h(T[(j, bd.left)][a], Gt):
                    rep.add("natural_right", {"sq": t, "square": a})
    # vertical pasting
    for (j1, j2), j in X.vcomp_v.items():
        for (k1, k2), k in A.vcomp_v.items():
            for a in A.hom_sq(F.vmor(j1), k1):
                for b in A.hom_sq(F.vmor(j2), k2):
                    if A.boundary(a).bottom != A.boundary(b).top:
                        continue
                    rep.count("vertical")
                    lhs = T[(j, k)][A.sq_v(a, b)]
                    ta, tb = T[(j1, k1)][a], T[(j2, k2)][b]
                    if X.boundary(ta).bottom != X.boundary(tb).top or lhs != X.sq_v(ta, tb):
                        rep.add("vertical", {"pair": [a, b]})
    return rep


def uc_from_phi(phi):
    """Unit ``phi(ih(Fj))`` and counit ``phi^-1(ih(Gk))``."""
    rep = check_phi(phi)
    if not rep.ok:
        raise InvalidLocalBijection("not a natural family of bijections",
                                    witness=[v.to_json() for v in rep.violations[:5]])
    F, G = phi.F, phi.G
    X, A = F.dom, F.cod
    unit_v = {j: phi(j, F.vmor(j), A.ih(F.vmor(j))) for j in X.vmors}
    unit_o = {x: X.boundary(unit_v[X.id_v[x]]).top for x in X.objects}
    counit_v = {k: phi.inverse(G.vmor(k), k)[X.ih(G.vmor(k))] for k in A.vmors}
    counit_o = {a: A.boundary(counit_v[A.id_v[a]]).top for a in A.objects}
    unit = HorNatTable(identity_functor(X), compose_functors(F, G), unit_o, unit_v, name="unit")
    counit = HorNatTable(compose_functors(G, F), identity_functor(A), counit_o, counit_v, name="counit")
    return AdjunctionUC(F, G, unit, counit)


def phi_round_trip(phi):
    """``phi -> (unit, counit) -> phi`` gives back the same table."""
    uc = uc_from_phi(phi)
    return phi_from_unit(uc.F, uc.G, uc.unit).table == phi.table


# --------------------------------------------------------------------------
# universal squares


def is_universal_square(G, j, target, square):
    """Is ``b -> [square G(b)]`` a bijection ``A(target, l) -> X(j, G l)`` for every ``l``?"""
    X, A = G.cod, G.dom
    if X.boundary(square).left != j or X.boundary(square).right != G.vmor(target):
        return False
    for l in A.vmors:
        src = A.hom_sq(target, l)
        dst = set(X.hom_sq(j, G.vmor(l)))
        img = {X.sq_h(square, G.sq(b)) for b in src}
        if len(img) != len(src) or img != dst:
            return False
    return True


def is_couniversal_square(F, k, source, square):
    """Is ``b -> [F(b) square]`` a bijection ``X(l, source) -> A(F l, k)`` for every ``l``?"""
    X, A = F.dom, F.cod
    if A.boundary(square).left != F.vmor(source) or A.boundary(square).right != k:
        return False
    for l in X.vmors:
        src = X.hom_sq(l, source)
        dst = set(A.hom_sq(F.vmor(l), k))
        img = {A.sq_h(F.sq(b), square) for b in src}
        if len(img) != len(src) or img != dst:
            return False
    return True


def extend_left_adjoint(G, F0_obj, F0_vmor, unit_v):
    """Left adjoint of ``G: A -> X`` from its values on objects and vertical morphisms.

    ``unit_v[j]`` is a universal square from ``j`` to ``G(F0_vmor[j])``.  A
    square ``s`` of ``X`` goes to the unique ``b`` with
    ``[unit_j G(b)] = [s unit_j']``.  Returns ``(F, unit)``.
    """
    A, X = G.dom, G.cod
    for j, u in unit_v.items():
        if not is_universal_square(G, j, F0_vmor[j], u):
            raise NotUniversal(f"square at {j!r} is not universal", witness=u)
    on_sq = {}
    for s, bd in X.squares.items():
        want = X.sq_h(s, unit_v[bd.right])
        hits = [b for b in A.hom_sq(F0_vmor[bd.left], F0_vmor[bd.right])
                if X.sq_h(unit_v[bd.left], G.sq(b)) == want]
        if len(hits) != 1:
            raise NotUniversal(f"{len(hits)} factorizations of {s!r}", witness=s)
        on_sq[s] = hits[0]
    on_h = {f: A.boundary(on_sq[X.iv(f)]).top for f in X.hmors}
    F = DoubleFunctorTable(X, A, dict(F0_obj), on_h, dict(F0_vmor), on_sq, name="F")
    rep = validate_functor(F)
    if not rep.ok:
        raise InvalidAdjunction("extension is not a double functor",
                                witness=[v.to_json() for v in rep.violations[:5]])
    unit_o = {x: X.boundary(unit_v[X.id_v[x]]).top for x in X.objects}
    unit = HorNatTable(identity_functor(X), compose_functors(F, G), unit_o, dict(unit_v), name="unit")
    return F, unit


def extend_right_adjoint(F, G0_obj, G0_vmor, counit_v):
    """Right adjoint of ``F: X -> A`` from its values on objects and vertical morphisms.

    ``counit_v[k]`` is a couniversal square from ``F(G0_vmor[k])`` to ``k``.
    A square ``t`` of ``A`` goes to the unique ``b`` with
    ``[F(b) counit_k'] = [counit_k t]``.  Returns ``(G, counit)``.
    """
    X, A = F.dom, F.cod
    for k, c in counit_v.items():
        if not is_couniversal_square(F, k, G0_vmor[k], c):
            raise NotUniversal(f"square at {k!r} is not couniversal", witness=c)
    on_sq = {}
    for t, bd in A.squares.items():
        want = A.sq_h(counit_v[bd.left], t)
        hits = [b for b in X.hom_sq(G0_vmor[bd.left], G0_vmor[bd.right])
                if A.sq_h(F.sq(b), counit_v[bd.right]) == want]
        if len(hits) != 1:
            raise NotUniversal(f"{len(hits)} factorizations of {t!r}", witness=t)
        on_sq[t] = hits[0]
    on_h = {f: X.boundary(on_sq[A.iv(f)]).top for f in A.hmors}
    G = DoubleFunctorTable(A, X, dict(G0_obj), on_h, dict(G0_vmor), on_sq, name="G")
    rep = validate_functor(G)
    if not rep.ok:
        raise InvalidAdjunction("extension is not a double functor",
                                witness=[v.to_json() for v in rep.violations[:5]])
    counit_o = {a: A.boundary(counit_v[A.id_v[a]]).top for a in A.objects}
    counit = HorNatTable(compose_functors(G, F), identity_functor(A), counit_o, dict(counit_v),
                         name="counit")
    return G, counit


# --------------------------------------------------------------------------
# hom presheaves


def phi_as_presheaf_map(phi):
    """The local bijection as a transformation ``A(F-, -) => X(-, G-)``."""
    F, G = phi.F, phi.G
    X, A = F.dom, F.cod
    P = hom_presheaf(A, F, identity_functor(A), name="A(F-,-)")
    Q = hom_presheaf(X, identity_functor(X), G, name="X(-,G-)")
    at_obj = {}
    for (x, a) in P.domain.objects:
        src = P.on_obj[(x, a)]
        j, k = X.id_v[x], A.id_v[a]
        at_obj[(x, a)] = FinFn(src, Q.on_obj[(x, a)],
                               {f: X.boundary(phi(j, k, A.iv(f))).top for f in src})
    at_vmor = {}
    for (j, k) in P.domain.vmors:
        src = P.on_vmor[(j, k)].apex
        at_vmor[(j, k)] = FinFn(src, Q.on_vmor[(j, k)].apex, {a: phi(j, k, a) for a in src})
    return PresheafHorNat(P, Q, at_obj, at_vmor)


def check_param_iso(phi):
    """The local bijection as an invertible map of parameterized hom presheaves.

    Returns ``(report, theta)``; the middle maps of ``theta`` are ``phi`` itself.
    """
    theta = phi_as_presheaf_map(phi)
    rep = validate_presheaf_hornat(theta)
    rep.count("invertible")
    if rep.ok and not is_iso(theta):
        rep.add("invertible", {"reason": "a component is not bijective"})
    return rep, theta


def inclusion_V1(A):
    V = view(A, "V1")
    return DoubleFunctorTable(V, A, {x: x for x in V.objects}, {f: f for f in V.hmors},
                              {j: j for j in V.vmors}, {a: a for a in V.squares}, name="J")


def _vertical_candidates(F, budget, transcript=None):
    """Functors ``V1(A) -> X`` whose hom sizes match ``A(F-, -)``."""
    X, A = F.dom, F.cod
    V = view(A, "V1")
    objs = {}
    for a in V.objects:
        objs[a] = [y for y in X.objects
                   if all(len(A.hom_h(F.obj(x), a)) == len(X.hom_h(x, y)) for x in X.objects)]
    if transcript is not None:
        transcript.append({"stage": "objects", "candidates": {a: objs[a] for a in ordered(objs)}})
    count = 0
    names = ordered(V.objects)
    for choice in itertools.product(*(objs[a] for a in names)):
        o = dict(zip(names, choice))
        vopts = []
        vnames = ordered(V.vmors)
        for k in vnames:
            a, b = V.vmors[k]
            vopts.append([v for v in X.hom_v(o[a], o[b])
                          if all(len(A.hom_sq(F.vmor(j), k)) == len(X.hom_sq(j, v)) for j in X.vmors)])
        if transcript is not None:
            transcript.append({"stage": "vertical", "objects": o,
                               "candidates": dict(zip(vnames, vopts))})
        for vch in itertools.product(*vopts):
            count += 1
            if count > budget:
                from .errors import SearchBudgetExceeded
                raise SearchBudgetExceeded(f"more than {budget} candidate functors")
            v = dict(zip(vnames, vch))
            if any(X.id_v[o[a]] != v[V.id_v[a]] for a in V.objects):
                continue
            if any(X.vcomp_v.get((v[p], v[q])) != v[r] for (p, q), r in V.vcomp_v.items()):
                continue
            yield DoubleFunctorTable(V, X, o, {V.id_h[a]: X.id_h[o[a]] for a in V.objects}, v,
                                     {V.id_sq_h[k]: X.ih(v[k]) for k in V.vmors}, name="G0")


def right_adjoint_via_representability(F, budget=100000, transcript=None):
    """Find ``G0: V1(A) -> X`` with ``A(F-, J-) ~ X(-, G0-)``, then extend it.

    Returns ``(G, counit, iso)`` or ``None`` when no candidate represents.
    Each candidate tried is appended to ``transcript`` when one is given.
    """
    X, A = F.dom, F.cod
    J = inclusion_V1(A)
    P = hom_presheaf(A, F, J, name="A(F-,J-)")
    for G0 in _vertical_candidates(F, budget, transcript):
        Q = hom_presheaf(X, identity_functor(X), G0, name="X(-,G0-)")
        iso = find_iso(P, Q, budget=budget)
        if transcript is not None:
            transcript.append({"stage": "candidate", "objects": dict(G0.on_obj),
                               "vertical": dict(G0.on_vmor),
                               "represents": iso is not None})
        if iso is None:
            continue
        counit_v = {}
        for k in A.vmors:
            g = G0.vmor(k)
            inv = {b: a for a, b in iso.at_vmor[(g, k)].table.items()}
            counit_v[k] = inv[X.ih(g)]
        G, counit = extend_right_adjoint(F, G0.on_obj, G0.on_vmor, counit_v)
        return G, counit, iso
    return None


def left_adjoint_via_representability(G, budget=100000):
    """Left adjoint of ``G`` found as a right adjoint on horizontal opposites, or ``None``."""
    from .functors import horop_functor

    found = right_adjoint_via_representability(horop_functor(G), budget)
    if found is None:
        return None
    return horop_functor(found[0])
