"""Vertically lax double functors into transposed spans, and the double Yoneda maps.

A presheaf ``K`` on a double category assigns

* a finite set ``K(A)`` to each object,
* a function ``K(f): K(A) -> K(B)`` to each horizontal morphism,
* a span ``K(A) <- K(j) -> K(C)`` to each vertical morphism ``j: A -> C``,
* a map of apexes ``K(a): K(j) -> K(k)`` to each square with sides ``j, k``,

together with comparison maps ``delta[j, k]`` from the pullback of
``K(j)`` and ``K(k)`` into ``K([j; k])`` and ``iota[A]: K(A) -> K(1_A)``.
Contravariant presheaves are stored on the horizontal opposite.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .core import ValidationReport, id_to_str, ordered, product, view
from .errors import (
    ElementNotFound,
    MalformedInput,
    SearchBudgetExceeded,
    ShapeMismatch,
    VarianceMismatch,
)
from .functors import identity_functor
from .span import FinFn, compose_spans, join, make_span, span_from_json, span_to_json, split


@dataclass
class LaxPresheaf:
    base: object
    variance: str
    on_obj: dict
    on_hmor: dict
    on_vmor: dict
    on_square: dict
    delta: dict
    iota: dict
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.variance not in ("covariant", "contravariant"):
            raise VarianceMismatch(f"unknown variance {self.variance!r}")
        self.domain = self.base if self.variance == "covariant" else view(self.base, "horop")

    def to_json(self):
        from .span import fn_to_json
        s = id_to_str
        return {
            "variance": self.variance,
            "on_obj": {s(k): sorted(map(s, v)) for k, v in self.on_obj.items()},
            "on_hmor": {s(k): fn_to_json(v) for k, v in self.on_hmor.items()},
            "on_vmor": {s(k): span_to_json(v) for k, v in self.on_vmor.items()},
            "on_square": {s(k): fn_to_json(v) for k, v in self.on_square.items()},
            "delta": [[s(j), s(k), fn_to_json(v)] for (j, k), v in self.delta.items()],
            "iota": {s(k): fn_to_json(v) for k, v in self.iota.items()},
        }

    @classmethod
    def from_json(cls, data, base):
        """Parse the JSON form against an already loaded base (string ids)."""
        from .span import _elem_from_json, fn_from_json
        try:
            variance = data.get("variance", "covariant")
            on_obj = {k: frozenset(_elem_from_json(x) for x in v) for k, v in data["on_obj"].items()}
            on_vmor = {k: span_from_json(v) for k, v in data["on_vmor"].items()}
            dom = base if variance == "covariant" else view(base, "horop")
            on_hmor = {f: fn_from_json(v, on_obj[dom.hsrc(f)], on_obj[dom.htgt(f)])
                       for f, v in data["on_hmor"].items()}
            on_square = {}
            for a, v in data["on_square"].items():
                b = dom.boundary(a)
                on_square[a] = fn_from_json(v, on_vmor[b.left].apex, on_vmor[b.right].apex)
            delta = {}
            for j, k, v in data["delta"]:
                src = compose_spans(on_vmor[j], on_vmor[k]).apex
                delta[(j, k)] = fn_from_json(v, src, on_vmor[dom.comp_v(j, k)].apex)
            iota = {A: fn_from_json(v, on_obj[A], on_vmor[dom.id_v[A]].apex)
                    for A, v in data["iota"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad presheaf data: {exc}")
        return cls(base, variance, on_obj, on_hmor, on_vmor, on_square, delta, iota,
                   data.get("name", ""))


# A parameterized presheaf is a presheaf on a product base; the alias keeps
# call sites readable.
ParamPresheaf = LaxPresheaf


@dataclass
class PresheafHorNat:
    source: LaxPresheaf
    target: LaxPresheaf
    at_obj: dict
    at_vmor: dict


def validate_lax(K):
    """Exhaustive check of every lax-presheaf law; returns a report."""
    D = K.domain
    rep = ValidationReport()
    for A in D.objects:
        rep.count("shape")
        if A not in K.on_obj:
            rep.add("shape", {"missing obj": A})
    for f, (a, b) in D.hmors.items():
        rep.count("shape")
        m = K.on_hmor.get(f)
        if m is None or m.dom != K.on_obj.get(a) or m.cod != K.on_obj.get(b) or not m.well_formed():
            rep.add("shape", {"hmor": f})
    for j, (a, c) in D.vmors.items():
        rep.count("shape")
        s = K.on_vmor.get(j)
        if s is None or s.left != K.on_obj.get(a) or s.right != K.on_obj.get(c) or not s.well_formed():
            rep.add("shape", {"vmor": j})
    if not rep.ok:
        return rep
    for x, bd in D.squares.items():
        rep.count("shape")
        m = K.on_square.get(x)
        sj, sk = K.on_vmor[bd.left], K.on_vmor[bd.right]
        if m is None or m.dom != sj.apex or m.cod != sk.apex or not m.well_formed():
            rep.add("shape", {"sq": x, "reason": "apex map ends"})
            continue
        top, bot = K.on_hmor[bd.top], K.on_hmor[bd.bottom]
        for y in sj.apex:
            z = m(y)
            if sk.left_leg(z) != top(sj.left_leg(y)) or sk.right_leg(z) != bot(sj.right_leg(y)):
                rep.add("shape", {"sq": x, "reason": "legs do not commute", "element": y})
                break
    for (j, k), jk in D.vcomp_v.items():
        rep.count("shape")
        d = K.delta.get((j, k))
        src = compose_spans(K.on_vmor[j], K.on_vmor[k])
        tgt = K.on_vmor[jk]
        if d is None or d.dom != src.apex or d.cod != tgt.apex or not d.well_formed():
            rep.add("shape", {"delta": [j, k], "reason": "ends"})
            continue
        for e in src.apex:
            if tgt.left_leg(d(e)) != src.left_leg(e) or tgt.right_leg(d(e)) != src.right_leg(e):
                rep.add("shape", {"delta": [j, k], "reason": "legs", "element": e})
                break
    for A in D.objects:
        rep.count("shape")
        i = K.iota.get(A)
        unit = K.on_vmor[D.id_v[A]]
        if i is None or i.dom != K.on_obj[A] or i.cod != unit.apex or not i.well_formed():
            rep.add("shape", {"iota": A, "reason": "ends"})
            continue
        for a in K.on_obj[A]:
            if unit.left_leg(i(a)) != a or unit.right_leg(i(a)) != a:
                rep.add("shape", {"iota": A, "reason": "legs", "element": a})
                break
    if not rep.ok:
        return rep

    # strict horizontal functoriality
    for A in D.objects:
        rep.count("horizontal")
        if K.on_hmor[D.id_h[A]] != FinFn.identity(K.on_obj[A]):
            rep.add("horizontal", {"identity of": A})
    for (f, g), fg in D.hcomp_h.items():
        rep.count("horizontal")
        if K.on_hmor[f].then(K.on_hmor[g]) != K.on_hmor[fg]:
            rep.add("horizontal", {"pair": [f, g]})
    for j, x in D.id_sq_h.items():
        rep.count("horizontal")
        if K.on_square[x] != FinFn.identity(K.on_vmor[j].apex):
            rep.add("horizontal", {"identity square of": j})
    for (a, b), ab in D.hcomp_sq.items():
        rep.count("horizontal")
        if K.on_square[a].then(K.on_square[b]) != K.on_square[ab]:
            rep.add("horizontal", {"square pair": [a, b]})

    # naturality of the comparisons
    for (a, b), ab in D.vcomp_sq.items():
        A, B = D.squares[a], D.squares[b]
        sj, sk = K.on_vmor[A.left], K.on_vmor[B.left]
        tj, tk = K.on_vmor[A.right], K.on_vmor[B.right]
        d_src = K.delta[(A.left, B.left)]
        d_tgt = K.delta[(A.right, B.right)]
        ma, mb, mab = K.on_square[a], K.on_square[b], K.on_square[ab]
        rep.count("delta_natural")
        for e in compose_spans(sj, sk).apex:
            x, y = split(sj, sk, e)
            lhs = mab(d_src(e))
            rhs = d_tgt(join(tj, tk, ma(x), mb(y)))
            if lhs != rhs:
                rep.add("delta_natural", {"squares": [a, b], "element": e})
                break
    for f, (a, b) in D.hmors.items():
        rep.count("iota_natural")
        m = K.on_square[D.iv(f)]
        for x in K.on_obj[a]:
            if m(K.iota[a](x)) != K.iota[b](K.on_hmor[f](x)):
                rep.add("iota_natural", {"hmor": f, "element": x})
                break

    # coherence
    nexts = defaultdict(list)
    for j, (s, t) in D.vmors.items():
        nexts[s].append(j)
    for (j, k), jk in D.vcomp_v.items():
        for l in nexts[D.vtgt(k)]:
            rep.count("delta_assoc")
            kl = D.comp_v(k, l)
            Sj, Sk, Sl = K.on_vmor[j], K.on_vmor[k], K.on_vmor[l]
            Sjk, Skl = K.on_vmor[jk], K.on_vmor[kl]
            outer_l = K.delta[(jk, l)]
            outer_r = K.delta[(j, kl)]
            inner_l, inner_r = K.delta[(j, k)], K.delta[(k, l)]
            for e in compose_spans(compose_spans(Sj, Sk), Sl).apex:
                w, z = split(compose_spans(Sj, Sk), Sl, e)
                x, y = split(Sj, Sk, w)
                lhs = outer_l(join(Sjk, Sl, inner_l(w), z))
                rhs = outer_r(join(Sj, Skl, x, inner_r(join(Sk, Sl, y, z))))
                if lhs != rhs:
                    rep.add("delta_assoc", {"triple": [j, k, l], "element": e})
                    break
    for j, (a, c) in D.vmors.items():
        rep.count("unit")
        Sj = K.on_vmor[j]
        ua, uc = D.id_v[a], D.id_v[c]
        Ua, Uc = K.on_vmor[ua], K.on_vmor[uc]
        for x in Sj.apex:
            left = K.delta[(ua, j)](join(Ua, Sj, K.iota[a](Sj.left_leg(x)), x))
            right = K.delta[(j, uc)](join(Sj, Uc, x, K.iota[c](Sj.right_leg(x))))
            if left != x or right != x:
                rep.add("unit", {"vmor": j, "element": x})
                break
    return rep


# --------------------------------------------------------------------------
# constructions


def represented(D, R):
    """The presheaf ``D(R, -)`` (covariant on ``D``)."""
    unit = D.id_v[R]
    on_obj = {X: frozenset(D.hom_h(R, X)) for X in D.objects}
    on_hmor = {g: FinFn(on_obj[a], on_obj[b], {f: D.comp_h(f, g) for f in on_obj[a]})
               for g, (a, b) in D.hmors.items()}
    on_vmor = {}
    for j in D.vmors:
        legs = {x: (D.boundary(x).top, D.boundary(x).bottom) for x in D.hom_sq(unit, j)}
        on_vmor[j] = make_span(on_obj[D.vsrc(j)], on_obj[D.vtgt(j)], legs)
    on_square = {}
    for b, bd in D.squares.items():
        src = on_vmor[bd.left].apex
        on_square[b] = FinFn(src, on_vmor[bd.right].apex, {a: D.sq_h(a, b) for a in src})
    delta, iota = _vertical_comparisons(D, D, on_obj, on_vmor)
    return LaxPresheaf(D, "covariant", on_obj, on_hmor, on_vmor, on_square, delta, iota,
                       name=f"{D.name}({R},-)")


def _vertical_comparisons(dom, C, on_obj, on_vmor):
    """Comparisons given by vertical pasting and vertical identity squares in ``C``."""
    delta = {}
    for (j, k), jk in dom.vcomp_v.items():
        Sj, Sk = on_vmor[j], on_vmor[k]
        src = compose_spans(Sj, Sk)
        table = {}
        for e in src.apex:
            x, y = split(Sj, Sk, e)
            table[e] = C.sq_v(x, y)
        delta[(j, k)] = FinFn(src.apex, on_vmor[jk].apex, table)
    iota = {A: FinFn(on_obj[A], on_vmor[dom.id_v[A]].apex, {h: C.iv(h) for h in on_obj[A]})
            for A in dom.objects}
    return delta, iota


def hom_presheaf(C, left, right, name=""):
    """``C(left -, right -)`` on ``dom(left)^horop x dom(right)``.

    ``left`` and ``right`` are double functors into ``C``; a pair of squares
    ``(s, t)`` acts on a square ``g`` by ``[left(s) g right(t)]``.
    """
    D1, D2 = left.dom, right.dom
    base = product(view(D1, "horop"), D2)
    on_obj = {(X, Y): frozenset(C.hom_h(left.obj(X), right.obj(Y))) for X, Y in base.objects}
    on_hmor = {}
    for (f, g), (a, b) in base.hmors.items():
        lf, rg = left.hmor(f), right.hmor(g)
        on_hmor[(f, g)] = FinFn(on_obj[a], on_obj[b], {h: C.comp_h(lf, h, rg) for h in on_obj[a]})
    on_vmor = {}
    for (j, k), (a, c) in base.vmors.items():
        legs = {x: (C.boundary(x).top, C.boundary(x).bottom)
                for x in C.hom_sq(left.vmor(j), right.vmor(k))}
        on_vmor[(j, k)] = make_span(on_obj[a], on_obj[c], legs)
    on_square = {}
    for (s, t), bd in base.squares.items():
        ls, rt = left.sq(s), right.sq(t)
        src = on_vmor[bd.left].apex
        on_square[(s, t)] = FinFn(src, on_vmor[bd.right].apex, {g: C.sq_h(ls, g, rt) for g in src})
    delta, iota = _vertical_comparisons(base, C, on_obj, on_vmor)
    return LaxPresheaf(base, "covariant", on_obj, on_hmor, on_vmor, on_square, delta, iota, name=name)


def hom_param(D):
    """``D(-, -)`` on ``D^horop x D``."""
    one = identity_functor(D)
    return hom_presheaf(D, one, one, name=f"{D.name}(-,-)")


def terminal_presheaf(D, variance="covariant"):
    """Every set, and every span apex, a singleton."""
    dom = D if variance == "covariant" else view(D, "horop")
    pt = frozenset({"*"})
    one = FinFn(pt, pt, {"*": "*"})
    span = make_span(pt, pt, {"*": ("*", "*")})
    p2 = compose_spans(span, span).apex
    return LaxPresheaf(
        D, variance,
        {A: pt for A in dom.objects}, {f: one for f in dom.hmors},
        {j: span for j in dom.vmors}, {a: one for a in dom.squares},
        {jk: FinFn(p2, pt, {e: "*" for e in p2}) for jk in dom.vcomp_v},
        {A: one for A in dom.objects}, name="1")


def empty_presheaf(D, variance="covariant"):
    dom = D if variance == "covariant" else view(D, "horop")
    e = frozenset()
    none = FinFn(e, e, {})
    span = make_span(e, e, {})
    return LaxPresheaf(D, variance, {A: e for A in dom.objects}, {f: none for f in dom.hmors},
                       {j: span for j in dom.vmors}, {a: none for a in dom.squares},
                       {jk: none for jk in dom.vcomp_v}, {A: none for A in dom.objects}, name="0")


# --------------------------------------------------------------------------
# transformations


def _same_domain(F, G):
    if F.variance != G.variance:
        raise VarianceMismatch("presheaves have different variance")
    if F.domain is not G.domain and F.domain != G.domain:
        raise ShapeMismatch("presheaves live on different double categories")


def validate_presheaf_hornat(theta):
    F, G = theta.source, theta.target
    _same_domain(F, G)
    D = F.domain
    rep = ValidationReport()
    for A in D.objects:
        rep.count("frame")
        m = theta.at_obj.get(A)
        if m is None or m.dom != F.on_obj[A] or m.cod != G.on_obj[A] or not m.well_formed():
            rep.add("frame", {"obj": A})
    for j, (a, c) in D.vmors.items():
        rep.count("frame")
        m = theta.at_vmor.get(j)
        Fj, Gj = F.on_vmor[j], G.on_vmor[j]
        if m is None or m.dom != Fj.apex or m.cod != Gj.apex or not m.well_formed():
            rep.add("frame", {"vmor": j})
            continue
        if not rep.ok:
            continue
        for x in Fj.apex:
            if (Gj.left_leg(m(x)) != theta.at_obj[a](Fj.left_leg(x))
                    or Gj.right_leg(m(x)) != theta.at_obj[c](Fj.right_leg(x))):
                rep.add("frame", {"vmor": j, "element": x})
                break
    if not rep.ok:
        return rep
    for f, (a, b) in D.hmors.items():
        rep.count("naturality")
        if F.on_hmor[f].then(theta.at_obj[b]) != theta.at_obj[a].then(G.on_hmor[f]):
            rep.add("naturality", {"hmor": f})
    for x, bd in D.squares.items():
        rep.count("naturality")
        if F.on_square[x].then(theta.at_vmor[bd.right]) != theta.at_vmor[bd.left].then(G.on_square[x]):
            rep.add("naturality", {"sq": x})
    for (j, k), jk in D.vcomp_v.items():
        rep.count("delta")
        Fj, Fk, Gj, Gk = F.on_vmor[j], F.on_vmor[k], G.on_vmor[j], G.on_vmor[k]
        for e in compose_spans(Fj, Fk).apex:
            x, y = split(Fj, Fk, e)
            lhs = theta.at_vmor[jk](F.delta[(j, k)](e))
            rhs = G.delta[(j, k)](join(Gj, Gk, theta.at_vmor[j](x), theta.at_vmor[k](y)))
            if lhs != rhs:
                rep.add("delta", {"pair": [j, k], "element": e})
                break
    for A in D.objects:
        rep.count("iota")
        u = D.id_v[A]
        if F.iota[A].then(theta.at_vmor[u]) != theta.at_obj[A].then(G.iota[A]):
            rep.add("iota", {"obj": A})
    return rep


def is_iso(theta):
    return all(len(set(m.table.values())) == len(m.cod) == len(m.dom)
               for m in list(theta.at_obj.values()) + list(theta.at_vmor.values()))


def compose_presheaf_hornat(theta, psi):
    return PresheafHorNat(theta.source, psi.target,
                          {A: m.then(psi.at_obj[A]) for A, m in theta.at_obj.items()},
                          {j: m.then(psi.at_vmor[j]) for j, m in theta.at_vmor.items()})


def identity_presheaf_hornat(K):
    return PresheafHorNat(K, K, {A: FinFn.identity(s) for A, s in K.on_obj.items()},
                          {j: FinFn.identity(s.apex) for j, s in K.on_vmor.items()})


def yoneda_forward(alpha, R):
    """Evaluate a transformation out of ``D(R, -)`` at the identity of ``R``."""
    D = alpha.source.domain
    one = D.id_h[R]
    return alpha.at_obj[R](one)


def yoneda_inverse(K, R, a):
    """The transformation ``D(R, -) => K`` determined by ``a`` in ``K(R)``."""
    D = K.domain
    if a not in K.on_obj[R]:
        raise ElementNotFound(f"{a!r} is not an element of K({R!r})", witness=a)
    src = represented(D, R)
    start = K.iota[R](a)
    at_obj = {X: FinFn(src.on_obj[X], K.on_obj[X], {f: K.on_hmor[f](a) for f in src.on_obj[X]})
              for X in D.objects}
    at_vmor = {j: FinFn(src.on_vmor[j].apex, K.on_vmor[j].apex,
                        {x: K.on_square[x](start) for x in src.on_vmor[j].apex})
               for j in D.vmors}
    return PresheafHorNat(src, K, at_obj, at_vmor)


def enumerate_hornats(F, G, budget=100000, injective=False, limit=None):
    """All transformations ``F => G`` in a deterministic order.

    The unknowns are the values of every component on every element.  Each
    law determines one unknown from others, so after each choice the forced
    values are propagated; branching only happens on unconstrained unknowns.
    With ``injective`` only componentwise injective transformations are kept.
    """
    _same_domain(F, G)
    D = F.domain
    domains = {}
    order = []
    for A in D.objects:
        for x in ordered(F.on_obj[A]):
            v = ("obj", A, x)
            domains[v] = ordered(G.on_obj[A])
            order.append(v)
    for j in ordered(D.vmors):
        for x in ordered(F.on_vmor[j].apex):
            v = ("vmor", j, x)
            domains[v] = ordered(G.on_vmor[j].apex)
            order.append(v)

    cons = []  # (output var, input vars, function of input values -> value or None)
    for f, (a, b) in D.hmors.items():
        Ff, Gf = F.on_hmor[f], G.on_hmor[f]
        for x in F.on_obj[a]:
            cons.append((("obj", b, Ff(x)), (("obj", a, x),), lambda v, Gf=Gf: Gf.table.get(v)))
    for s, bd in D.squares.items():
        Fs, Gs = F.on_square[s], G.on_square[s]
        for x in F.on_vmor[bd.left].apex:
            cons.append((("vmor", bd.right, Fs(x)), (("vmor", bd.left, x),),
                         lambda v, Gs=Gs: Gs.table.get(v)))
    for j, (a, c) in D.vmors.items():
        Fj, Gj = F.on_vmor[j], G.on_vmor[j]
        for x in Fj.apex:
            cons.append((("obj", a, Fj.left_leg(x)), (("vmor", j, x),),
                         lambda v, Gj=Gj: Gj.left_leg.table.get(v)))
            cons.append((("obj", c, Fj.right_leg(x)), (("vmor", j, x),),
                         lambda v, Gj=Gj: Gj.right_leg.table.get(v)))
    for (j, k), jk in D.vcomp_v.items():
        Fj, Fk, Gj, Gk = F.on_vmor[j], F.on_vmor[k], G.on_vmor[j], G.on_vmor[k]
        dF, dG = F.delta[(j, k)], G.delta[(j, k)]
        for e in compose_spans(Fj, Fk).apex:
            x, y = split(Fj, Fk, e)

            def fn(u, w, Gj=Gj, Gk=Gk, dG=dG):
                if Gj.right_leg(u) != Gk.left_leg(w):
                    return None
                return dG.table.get(join(Gj, Gk, u, w))

            cons.append((("vmor", jk, dF(e)), (("vmor", j, x), ("vmor", k, y)), fn))
    for A in D.objects:
        u = D.id_v[A]
        iF, iG = F.iota[A], G.iota[A]
        for x in F.on_obj[A]:
            cons.append((("vmor", u, iF(x)), (("obj", A, x),), lambda v, iG=iG: iG.table.get(v)))

    watch = defaultdict(list)
    for c in cons:
        for v in c[1]:
            watch[v].append(c)

    value = {}
    used = defaultdict(set)
    nodes = [0]

    def assign(v, val, trail):
        # returns False on conflict; records assignments on the trail
        queue = [(v, val)]
        while queue:
            var, x = queue.pop()
            if var in value:
                if value[var] != x:
                    return False
                continue
            comp = var[:2]
            if injective:
                if x in used[comp]:
                    return False
                used[comp].add(x)
            value[var] = x
            trail.append(var)
            for out, ins, fn in watch[var]:
                if all(i in value for i in ins):
                    y = fn(*[value[i] for i in ins])
                    if y is None:
                        return False
                    if out in value:
                        if value[out] != y:
                            return False
                    else:
                        queue.append((out, y))
        return True

    def undo(trail):
        for var in trail:
            if injective:
                used[var[:2]].discard(value[var])
            del value[var]

    def build():
        at_obj = {A: FinFn(F.on_obj[A], G.on_obj[A],
                           {x: value[("obj", A, x)] for x in F.on_obj[A]}) for A in D.objects}
        at_vmor = {j: FinFn(F.on_vmor[j].apex, G.on_vmor[j].apex,
                            {x: value[("vmor", j, x)] for x in F.on_vmor[j].apex}) for j in D.vmors}
        return PresheafHorNat(F, G, at_obj, at_vmor)

    found = []

    def search(i):
        while i < len(order) and order[i] in value:
            i += 1
        if i == len(order):
            found.append(build())
            return limit is not None and len(found) >= limit
        nodes[0] += 1
        if nodes[0] > budget:
            raise SearchBudgetExceeded(f"more than {budget} search nodes",
                                       witness={"found_so_far": len(found)})
        v = order[i]
        for val in domains[v]:
            trail = []
            if assign(v, val, trail):
                if search(i + 1):
                    undo(trail)
                    return True
            undo(trail)
        return False

    search(0)
    return found


def hom_into(D, G0):
    """``D(-, G0 -)`` on ``D^horop x dom(G0)``."""
    return hom_presheaf(D, identity_functor(D), G0, name=f"{D.name}(-,G-)")


def find_iso(P, Q, budget=100000):
    """An invertible transformation ``P => Q`` or ``None``."""
    _same_domain(P, Q)
    D = P.domain
    if any(len(P.on_obj[A]) != len(Q.on_obj[A]) for A in D.objects):
        return None
    if any(len(P.on_vmor[j].apex) != len(Q.on_vmor[j].apex) for j in D.vmors):
        return None
    found = enumerate_hornats(P, Q, budget=budget, injective=True, limit=1)
    return found[0] if found else None


def check_representable(P, G0, budget=100000):
    """Invertible transformation ``P => D(-, G0 -)`` if one exists, else ``None``.

    ``P`` lives on ``D^horop x E`` and ``G0`` is a double functor ``E -> D``.
    """
    return find_iso(P, hom_into(G0.cod, G0), budget=budget)
