"""Endomorphisms and monads in spans: graphs, categories and the free category.

An endomorphism of a set ``C0`` in spans is a graph and a monad is a
category.  A horizontal map ``(U, phi)`` from ``C`` to ``D`` is a span
``C0 <- U1 -> D0`` with ``phi(u, d) = (c, u')``: moving ``u`` across an arrow
``d`` out of ``t(u)`` gives an arrow ``c`` out of ``s(u)`` and a new ``u'``.
Squares between such maps are graph morphisms (resp. functors) on both sides
and a middle function on ``U1``.  Everything here is computed on demand.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from ..core import ValidationReport, jsonable, ordered
from ..errors import BoundaryMismatch, CyclicGraph, MalformedInput
from ..span import FinFn, FinSpan, compose_spans, make_span


def _tup(x):
    return tuple(_tup(y) for y in x) if isinstance(x, list) else x


# --------------------------------------------------------------------------
# graphs and categories


@dataclass
class Graph:
    nodes: frozenset
    edges: dict
    name: str = field(default="", compare=False)

    def __post_init__(self):
        self.nodes = frozenset(self.nodes)
        self.edges = {e: tuple(st) for e, st in self.edges.items()}

    def src(self, e):
        return self.edges[e][0]

    def tgt(self, e):
        return self.edges[e][1]

    def out(self, x):
        return [e for e in ordered(self.edges) if self.edges[e][0] == x]

    def validate(self):
        rep = ValidationReport()
        for e, (s, t) in self.edges.items():
            rep.count("boundary")
            if s not in self.nodes or t not in self.nodes:
                rep.add("boundary", {"edge": e})
        return rep

    def to_json(self):
        es = ordered(self.edges)
        return {"nodes": jsonable(ordered(self.nodes)), "edges": jsonable(es),
                "src": [jsonable(self.edges[e][0]) for e in es],
                "tgt": [jsonable(self.edges[e][1]) for e in es]}

    @classmethod
    def from_json(cls, data):
        try:
            es = [_tup(e) for e in data["edges"]]
            src, tgt = data["src"], data["tgt"]
            if isinstance(src, dict):
                src = [src[str(e)] for e in data["edges"]]
                tgt = [tgt[str(e)] for e in data["edges"]]
            g = cls({_tup(x) for x in data["nodes"]},
                    {e: (_tup(s), _tup(t)) for e, s, t in zip(es, src, tgt, strict=True)})
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad graph: {exc}")
        rep = g.validate()
        if not rep.ok:
            raise MalformedInput("edge endpoint is not a node", witness=rep.violations[0].witness)
        return g


@dataclass
class FinCategory:
    """A finite category; ``comp[(f, g)]`` is ``f`` then ``g``."""

    objects: frozenset
    morphisms: dict
    ids: dict
    comp: dict
    name: str = field(default="", compare=False)

    def __post_init__(self):
        self.objects = frozenset(self.objects)
        self.morphisms = {m: tuple(st) for m, st in self.morphisms.items()}

    def src(self, m):
        return self.morphisms[m][0]

    def tgt(self, m):
        return self.morphisms[m][1]

    def hom(self, x, y):
        return [m for m in ordered(self.morphisms) if self.morphisms[m] == (x, y)]

    def validate(self):
        rep = ValidationReport()
        for x in self.objects:
            rep.count("identities")
            i = self.ids.get(x)
            if i is None or self.morphisms.get(i) != (x, x):
                rep.add("identities", {"object": x})
        if not rep.ok:
            return rep
        for f, (a, b) in self.morphisms.items():
            if a not in self.objects or b not in self.objects:
                rep.add("boundary", {"morphism": f})
                continue
            rep.count("units")
            if self.comp.get((self.ids[a], f)) != f or self.comp.get((f, self.ids[b])) != f:
                rep.add("units", {"morphism": f})
            for g in self.morphisms:
                if self.morphisms[g][0] != b:
                    continue
                rep.count("composition")
                h = self.comp.get((f, g))
                if h is None or self.morphisms.get(h) != (a, self.morphisms[g][1]):
                    rep.add("composition", {"pair": [f, g], "got": h})
        if not rep.ok:
            return rep
        for (f, g), fg in self.comp.items():
            for k in self.morphisms:
                if self.morphisms[k][0] != self.morphisms[g][1]:
                    continue
                rep.count("assoc")
                if self.comp[(fg, k)] != self.comp[(f, self.comp[(g, k)])]:
                    rep.add("assoc", {"triple": [f, g, k]})
        return rep

    def underlying(self):
        return Graph(self.objects, dict(self.morphisms), name=f"U{self.name}")

    def to_json(self):
        ms = ordered(self.morphisms)
        return {"objects": jsonable(ordered(self.objects)), "morphisms": jsonable(ms),
                "src": [jsonable(self.src(m)) for m in ms], "tgt": [jsonable(self.tgt(m)) for m in ms],
                "ids": [[jsonable(x), jsonable(self.ids[x])] for x in ordered(self.objects)],
                "comp": [jsonable([f, g, self.comp[(f, g)]]) for f, g in ordered(self.comp)]}

    @classmethod
    def from_json(cls, data):
        try:
            ms = [_tup(m) for m in data["morphisms"]]
            C = cls({_tup(x) for x in data["objects"]},
                    {m: (_tup(s), _tup(t)) for m, s, t in zip(ms, data["src"], data["tgt"], strict=True)},
                    {_tup(x): _tup(i) for x, i in data["ids"]},
                    {(_tup(f), _tup(g)): _tup(h) for f, g, h in data["comp"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad category: {exc}")
        return C


def find_cycle(G):
    """A directed cycle as a list of edges, or ``None``."""
    colour = {x: 0 for x in G.nodes}
    out = {x: G.out(x) for x in G.nodes}

    for root in ordered(G.nodes):
        if colour[root]:
            continue
        colour[root] = 1
        stack = [(root, iter(out[root]))]
        trail = []
        while stack:
            x, it = stack[-1]
            e = next(it, None)
            if e is None:
                colour[x] = 2
                stack.pop()
                if trail:
                    trail.pop()
                continue
            y = G.tgt(e)
            if colour[y] == 1:
                start = next(i for i, (z, _) in enumerate(stack) if z == y)
                return trail[start:] + [e]
            if colour[y] == 0:
                colour[y] = 1
                trail.append(e)
                stack.append((y, iter(out[y])))
    return None


def free_category(G):
    """Paths ``(x, edges, y)``; the empty path at ``x`` is the identity."""
    cyc = find_cycle(G)
    if cyc is not None:
        raise CyclicGraph("free category of a graph with a cycle is infinite", witness=cyc)
    paths = [(x, (), x) for x in ordered(G.nodes)]
    frontier = list(paths)
    while frontier:
        nxt = []
        for (x, es, y) in frontier:
            for e in G.out(y):
                nxt.append((x, es + (e,), G.tgt(e)))
        paths += nxt
        frontier = nxt
    morphisms = {p: (p[0], p[2]) for p in paths}
    by_src = {}
    for p in paths:
        by_src.setdefault(p[0], []).append(p)
    comp = {(p, q): (p[0], p[1] + q[1], q[2]) for p in paths for q in by_src.get(p[2], ())}
    return FinCategory(G.nodes, morphisms, {x: (x, (), x) for x in G.nodes}, comp,
                       name=f"F{G.name}")


def edge_path(G, e):
    return (G.src(e), (e,), G.tgt(e))


# --------------------------------------------------------------------------
# monads in spans are categories


@dataclass
class SpanMonad:
    P: FinSpan
    mu: FinFn
    eta: FinFn


def category_as_span_monad(C):
    P = make_span(C.objects, C.objects, {m: C.morphisms[m] for m in C.morphisms})
    PP = compose_spans(P, P)
    mu = FinFn(PP.apex, P.apex, {(f, g): C.comp[(f, g)] for (f, g) in PP.apex})
    eta = FinFn(C.objects, P.apex, dict(C.ids))
    return SpanMonad(P, mu, eta)


def span_monad_as_category(M):
    P = M.P
    morphisms = {m: (P.left_leg(m), P.right_leg(m)) for m in P.apex}
    return FinCategory(P.left, morphisms, dict(M.eta.table), dict(M.mu.table))


def validate_span_monad(M):
    """Frames, associativity and units of a monad in spans, element by element."""
    rep = ValidationReport()
    P, mu, eta = M.P, M.mu, M.eta
    rep.count("frame")
    if P.left != P.right or eta.dom != P.left or eta.cod != P.apex or mu.cod != P.apex:
        rep.add("frame", {"reason": "structure maps have the wrong ends"})
        return rep
    s, t = P.left_leg, P.right_leg
    for x in P.left:
        rep.count("frame")
        if s(eta(x)) != x or t(eta(x)) != x:
            rep.add("frame", {"unit at": x})
    for (f, g) in mu.dom:
        rep.count("frame")
        if s(mu((f, g))) != s(f) or t(mu((f, g))) != t(g):
            rep.add("frame", {"pair": [f, g]})
    if not rep.ok:
        return rep
    by_src = {}
    for m in P.apex:
        by_src.setdefault(s(m), []).append(m)
    for f in P.apex:
        rep.count("units")
        if mu((eta(s(f)), f)) != f or mu((f, eta(t(f)))) != f:
            rep.add("units", {"arrow": f})
        for g in by_src.get(t(f), ()):
            for h in by_src.get(t(g), ()):
                rep.count("assoc")
                if mu((mu((f, g)), h)) != mu((f, mu((g, h)))):
                    rep.add("assoc", {"triple": [f, g, h]})
    return rep


# --------------------------------------------------------------------------
# horizontal maps


@dataclass
class SpanMap:
    """``(U, phi)`` between two graphs (``flavor="end"``) or categories (``"mnd"``)."""

    C: object
    D: object
    U: FinSpan
    phi: dict
    flavor: str = "end"
    name: str = field(default="", compare=False)

    def arrows(self, side):
        X = self.C if side == "C" else self.D
        return X.edges if self.flavor == "end" else X.morphisms

    def domain_pairs(self):
        tgt = self.arrows("D")
        return [(u, d) for u in ordered(self.U.apex) for d in ordered(tgt)
                if tgt[d][0] == self.U.right_leg(u)]


def EndMap(C, D, U, phi, name=""):
    return SpanMap(C, D, U, phi, "end", name)


def MndMap(C, D, U, phi, name=""):
    return SpanMap(C, D, U, phi, "mnd", name)


def validate_span_map(M):
    """Totality and ends of ``phi``; for categories also the unit and action laws."""
    rep = ValidationReport()
    U, l, r = M.U, M.U.left_leg, M.U.right_leg
    ca, da = M.arrows("C"), M.arrows("D")
    rep.count("frame")
    if U.left != frozenset(M.C.nodes if M.flavor == "end" else M.C.objects) or \
            U.right != frozenset(M.D.nodes if M.flavor == "end" else M.D.objects):
        rep.add("frame", {"reason": "span ends differ from the objects"})
        return rep
    for (u, d) in M.domain_pairs():
        rep.count("totality")
        out = M.phi.get((u, d))
        if out is None:
            rep.add("totality", {"pair": [u, d]})
            continue
        c, u2 = out
        rep.count("frame")
        if c not in ca or u2 not in U.apex or ca[c][0] != l(u) or ca[c][1] != l(u2) \
                or r(u2) != da[d][1]:
            rep.add("frame", {"pair": [u, d], "got": out})
    if M.flavor == "end" or not rep.ok:
        return rep
    C, D = M.C, M.D
    for u in U.apex:
        rep.count("unit")
        if M.phi[(u, D.ids[r(u)])] != (C.ids[l(u)], u):
            rep.add("unit", {"element": u})
    for (u, d1) in M.domain_pairs():
        c1, u1 = M.phi[(u, d1)]
        for d2 in D.morphisms:
            if D.morphisms[d2][0] != D.morphisms[d1][1]:
                continue
            rep.count("action")
            c2, u2 = M.phi[(u1, d2)]
            if M.phi[(u, D.comp[(d1, d2)])] != (C.comp[(c1, c2)], u2):
                rep.add("action", {"element": u, "path": [d1, d2]})
    return rep


def span_free_monad_map(M):
    """Extend ``phi`` from edges to paths by moving ``u`` across one edge at a time."""
    FC, FD = free_category(M.C), free_category(M.D)
    l = M.U.left_leg
    phi = {}
    for u in M.U.apex:
        for p in FD.morphisms:
            if p[0] != M.U.right_leg(u):
                continue
            cur, cs = u, []
            for e in p[1]:
                c, cur = M.phi[(cur, e)]
                cs.append(c)
            phi[(u, p)] = ((l(u), tuple(cs), l(cur)), cur)
    out = MndMap(FC, FD, M.U, phi, name=f"F({M.name})")
    rep = validate_span_map(out)
    if not rep.ok:
        raise BoundaryMismatch("extended map breaks a law", witness=rep.violations[0].to_json())
    return out


def forget_map(V):
    """The underlying map of graphs of a map of categories."""
    return EndMap(V.C.underlying(), V.D.underlying(), V.U, dict(V.phi), name=f"G({V.name})")


def compose_maps(M, N):
    """``M`` then ``N``: ``phi((u, w), e)`` moves ``w`` across ``e`` and then ``u``."""
    if M.flavor != N.flavor or M.D != N.C:
        raise BoundaryMismatch("maps do not compose")
    U = compose_spans(M.U, N.U)
    r = N.U.right_leg
    out_arrows = N.arrows("D")
    phi = {}
    for (u, w) in U.apex:
        for e in out_arrows:
            if out_arrows[e][0] != r(w):
                continue
            d, w2 = N.phi[(w, e)]
            c, u2 = M.phi[(u, d)]
            phi[((u, w), e)] = (c, (u2, w2))
    return SpanMap(M.C, N.D, U, phi, M.flavor, name=f"{M.name};{N.name}")


# --------------------------------------------------------------------------
# vertical maps and squares


@dataclass
class Morph:
    """Graph morphism or functor: ``on_obj`` and ``on_arrow`` tables."""

    on_obj: dict
    on_arrow: dict

    def then(self, other):
        return Morph({x: other.on_obj[y] for x, y in self.on_obj.items()},
                     {a: other.on_arrow[b] for a, b in self.on_arrow.items()})


def identity_morph(X):
    objs = X.nodes if isinstance(X, Graph) else X.objects
    arrows = X.edges if isinstance(X, Graph) else X.morphisms
    return Morph({x: x for x in objs}, {a: a for a in arrows})


@dataclass
class SpanMapSquare:
    top: SpanMap
    bottom: SpanMap
    left: Morph
    right: Morph
    mid: dict


def square_problems(sq):
    top, bot = sq.top, sq.bottom
    out = []
    for u in top.U.apex:
        m = sq.mid.get(u)
        if m not in bot.U.apex:
            out.append(("mid", u))
            continue
        if bot.U.left_leg(m) != sq.left.on_obj[top.U.left_leg(u)] or \
                bot.U.right_leg(m) != sq.right.on_obj[top.U.right_leg(u)]:
            out.append(("legs", u))
    if out:
        return out
    for (u, d), (c, u2) in top.phi.items():
        if bot.phi.get((sq.mid[u], sq.right.on_arrow[d])) != (sq.left.on_arrow[c], sq.mid[u2]):
            out.append(("phi", (u, d)))
    return out


def hcompose_squares(a, b):
    U = compose_spans(a.top.U, b.top.U)
    return SpanMapSquare(compose_maps(a.top, b.top), compose_maps(a.bottom, b.bottom), a.left,
                         b.right, {(u, w): (a.mid[u], b.mid[w]) for (u, w) in U.apex})


def vcompose_squares(a, b):
    return SpanMapSquare(a.top, b.bottom, a.left.then(b.left), a.right.then(b.right),
                         {u: b.mid[m] for u, m in a.mid.items()})


def identity_square(M):
    return SpanMapSquare(M, M, identity_morph(M.C), identity_morph(M.D), {u: u for u in M.U.apex})


def _morphs(X, Y, functor):
    """All graph morphisms (or functors) ``X -> Y`` by brute force over the underlying graphs."""
    xo = ordered(X.nodes if isinstance(X, Graph) else X.objects)
    xa_t = X.edges if isinstance(X, Graph) else X.morphisms
    yo = ordered(Y.nodes if isinstance(Y, Graph) else Y.objects)
    ya_t = Y.edges if isinstance(Y, Graph) else Y.morphisms
    xa = ordered(xa_t)
    by_ends = {}
    for b in ordered(ya_t):
        by_ends.setdefault(ya_t[b], []).append(b)
    for ochoice in itertools.product(yo, repeat=len(xo)):
        o = dict(zip(xo, ochoice))
        opts = [by_ends.get((o[xa_t[a][0]], o[xa_t[a][1]]), []) for a in xa]
        for achoice in itertools.product(*opts):
            m = dict(zip(xa, achoice))
            if functor:
                if any(m[X.ids[x]] != Y.ids[o[x]] for x in xo):
                    continue
                if any(m[h] != Y.comp[(m[f], m[g])] for (f, g), h in X.comp.items()):
                    continue
            yield Morph(o, m)


def _mids(top, bottom, left, right):
    us = ordered(top.U.apex)
    opts = []
    for u in us:
        want = (left.on_obj[top.U.left_leg(u)], right.on_obj[top.U.right_leg(u)])
        opts.append([m for m in ordered(bottom.U.apex)
                     if (bottom.U.left_leg(m), bottom.U.right_leg(m)) == want])
    for choice in itertools.product(*opts):
        yield dict(zip(us, choice))


def squares_between(top, bottom):
    """Every square from ``top`` to ``bottom``, by exhaustive enumeration."""
    functor = top.flavor == "mnd"
    out = []
    for left in _morphs(top.C, bottom.C, functor):
        for right in _morphs(top.D, bottom.D, functor):
            for mid in _mids(top, bottom, left, right):
                sq = SpanMapSquare(top, bottom, left, right, mid)
                if not square_problems(sq):
                    out.append(sq)
    return out


def free_morph(G, H, g):
    """The functor ``F G -> F H`` of a graph morphism."""
    FG = free_category(G)
    return Morph(dict(g.on_obj), {p: (g.on_obj[p[0]], tuple(g.on_arrow[e] for e in p[1]), g.on_obj[p[2]])
                                  for p in FG.morphisms})


def free_square(s):
    top, bot = span_free_monad_map(s.top), span_free_monad_map(s.bottom)
    return SpanMapSquare(top, bot, free_morph(s.top.C, s.bottom.C, s.left),
                         free_morph(s.top.D, s.bottom.D, s.right), dict(s.mid))


def forget_square(s):
    return SpanMapSquare(forget_map(s.top), forget_map(s.bottom), s.left, s.right, dict(s.mid))


def _freeze(sq):
    return (frozenset(sq.left.on_obj.items()), frozenset(sq.left.on_arrow.items()),
            frozenset(sq.right.on_obj.items()), frozenset(sq.right.on_arrow.items()),
            frozenset(sq.mid.items()))


def restrict(sq, U, V):
    """``phi^U_V``: restrict both functors to the generating edges; the middle is unchanged."""
    def r(f, G):
        return Morph(dict(f.on_obj), {e: f.on_arrow[edge_path(G, e)] for e in G.edges})
    return SpanMapSquare(U, forget_map(V), r(sq.left, U.C), r(sq.right, U.D), dict(sq.mid))


def extend(sq, U, V):
    """Inverse of ``restrict``: extend graph morphisms into ``G(V)`` to functors on paths."""
    def e(g, G, C):
        arrows = {}
        for p in free_category(G).morphisms:
            m = C.ids[g.on_obj[p[0]]]
            for edge in p[1]:
                m = C.comp[(m, g.on_arrow[edge])]
            arrows[p] = m
        return Morph(dict(g.on_obj), arrows)
    return SpanMapSquare(span_free_monad_map(U), V, e(sq.left, U.C, V.C), e(sq.right, U.D, V.D),
                         dict(sq.mid))


@dataclass
class PhiUV:
    mnd_squares: list
    end_squares: list
    table: dict
    report: ValidationReport


def phi_UV_bijection(U, V, probes=()):
    """Tabulate ``phi^U_V`` from squares ``F(U) => V`` to squares ``U => G(V)`` and check it.

    ``probes`` holds ``(U2, V2)`` pairs for the horizontal-composition check.
    Naturality is checked against every endo-square of ``U`` and of ``V``.
    """
    FU, GV = span_free_monad_map(U), forget_map(V)
    mnd = squares_between(FU, V)
    end = squares_between(U, GV)
    rep = ValidationReport()
    table = {}
    for a in mnd:
        table[_freeze(a)] = restrict(a, U, V)
    end_keys = {_freeze(b) for b in end}
    img = [_freeze(b) for b in table.values()]
    rep.count("injective")
    if len(set(img)) != len(img):
        rep.add("injective", {"squares": len(img), "distinct images": len(set(img))})
    rep.count("surjective")
    if set(img) != end_keys:
        rep.add("surjective", {"missed": len(end_keys - set(img)), "outside": len(set(img) - end_keys)})
    for b in end:
        rep.count("inverse")
        back = extend(b, U, V)
        if square_problems(back) or _freeze(restrict(back, U, V)) != _freeze(b):
            rep.add("inverse", {"square": _freeze(b)})

    # horizontal composition on probes
    for U2, V2 in probes:
        rep.count("preserves composition")
        if span_free_monad_map(compose_maps(U, U2)) != compose_maps(FU, span_free_monad_map(U2)):
            rep.add("preserves composition", {"probe": U2.name})
            continue
        right = squares_between(span_free_monad_map(U2), V2)
        for a in mnd[:4]:
            for b in right[:4]:
                if a.right != b.left:
                    continue
                rep.count("horizontal")
                UU, VV = compose_maps(U, U2), compose_maps(V, V2)
                lhs = restrict(hcompose_squares(a, b), UU, VV)
                rhs = hcompose_squares(restrict(a, U, V), restrict(b, U2, V2))
                if _freeze(lhs) != _freeze(rhs):
                    rep.add("horizontal", {"probe": U2.name})

    # naturality on both sides
    for s in squares_between(U, U):
        Fs = free_square(s)
        for a in mnd:
            rep.count("natural_end")
            lhs = restrict(vcompose_squares(Fs, a), U, V)
            rhs = vcompose_squares(s, restrict(a, U, V))
            if _freeze(lhs) != _freeze(rhs):
                rep.add("natural_end", {"probe": _freeze(s)})
    for t in squares_between(V, V):
        Gt = forget_square(t)
        for a in mnd:
            rep.count("natural_mnd")
            lhs = restrict(vcompose_squares(a, t), U, V)
            rhs = vcompose_squares(restrict(a, U, V), Gt)
            if _freeze(lhs) != _freeze(rhs):
                rep.add("natural_mnd", {"probe": _freeze(t)})
    return PhiUV(mnd, end, table, rep)


def unit_component(G):
    """The unit ``G -> G F G``: identity on nodes, each edge to its one-edge path."""
    return Morph({x: x for x in G.nodes}, {e: edge_path(G, e) for e in G.edges})


def unit_is_vertically_trivial(G):
    u = unit_component(G)
    return all(x == y for x, y in u.on_obj.items())


# --------------------------------------------------------------------------
# fixtures


def chain_graph(n=3, names="abcdefgh"):
    nodes = list(names[:n])
    return Graph(nodes, {f"e{i + 1}": (nodes[i], nodes[i + 1]) for i in range(n - 1)}, name="chain")


def loop_graph():
    return Graph({"x"}, {"l": ("x", "x")}, name="loop")


def identity_map(G):
    """``U = 1``, ``phi(u, e) = (e, t(e))``."""
    U = make_span(G.nodes, G.nodes, {x: (x, x) for x in G.nodes})
    return EndMap(G, G, U, {(x, e): (e, G.tgt(e)) for e in G.edges for x in [G.src(e)]},
                  name=f"1_{G.name}")


def induced_map(C, D, h):
    """A graph morphism ``h: D -> C`` as ``C0 <- D0 = D0`` with ``phi(u, e) = (h(e), t(e))``."""
    U = make_span(C.nodes, D.nodes, {x: (h.on_obj[x], x) for x in D.nodes})
    return EndMap(C, D, U, {(D.src(e), e): (h.on_arrow[e], D.tgt(e)) for e in D.edges},
                  name="induced")


def identity_category_map(C):
    U = make_span(C.objects, C.objects, {x: (x, x) for x in C.objects})
    return MndMap(C, C, U, {(C.src(m), m): (m, C.tgt(m)) for m in C.morphisms}, name=f"1_{C.name}")


def idempotent_category():
    return FinCategory({"*"}, {"1": ("*", "*"), "e": ("*", "*")}, {"*": "1"},
                       {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "e", ("e", "e"): "e"},
                       name="Idem")


def random_acyclic(rng, n_nodes=3, p=0.5, tag="v"):
    """Edges only go from a lower to a higher node index, so the graph is acyclic."""
    nodes = [f"{tag}{i}" for i in range(n_nodes)]
    edges = {}
    for i, j in itertools.combinations(range(n_nodes), 2):
        for k in range(2):
            if rng.random() < p / (k + 1):
                edges[f"{tag}{i}{j}_{k}"] = (nodes[i], nodes[j])
    return Graph(nodes, edges, name=f"rand{tag}")


def random_induced(rng, n_small=3, n_big=4, p=0.5):
    """``D`` random acyclic, ``h: D -> C`` strictly increasing on nodes, ``C`` containing the image."""
    D = random_acyclic(rng, n_small, p, tag="d")
    picks = sorted(rng.sample(range(n_big), n_small))
    C = random_acyclic(rng, n_big, p / 2, tag="c")
    cn = ordered(C.nodes)
    on_obj = {f"d{i}": cn[picks[i]] for i in range(n_small)}
    edges = dict(C.edges)
    on_arrow = {}
    for e, (s, t) in D.edges.items():
        img = f"h{e}"
        edges[img] = (on_obj[s], on_obj[t])
        on_arrow[e] = img
    C = Graph(C.nodes, edges, name="randc")
    return C, D, Morph(on_obj, on_arrow)


def bundled_pairs():
    """``(U, V, probes)`` triples exercised by the acceptance suite."""
    chain = chain_graph()
    small = chain_graph(2, "ab")
    h = Morph({"a": "a", "b": "c"}, {"e1": "x"})
    wide = Graph(chain.nodes, dict(chain.edges, x=("a", "c")), name="wide")
    ind = induced_map(wide, small, h)
    idc = identity_map(chain)
    return [
        ("identity chain", idc, span_free_monad_map(idc), []),
        ("induced", ind, span_free_monad_map(ind), []),
        ("identity into Idem", identity_map(small),
         MndMap(idempotent_category(), idempotent_category(),
                make_span({"*"}, {"*"}, {"*": ("*", "*")}),
                {("*", "1"): ("1", "*"), ("*", "e"): ("e", "*")}, name="1_Idem"), []),
        ("chain with probe", identity_map(small), span_free_monad_map(identity_map(small)),
         [(identity_map(small), span_free_monad_map(identity_map(small)))]),
    ]


def dump_json(obj, path):
    with open(path, "w") as fh:
        json.dump(obj.to_json(), fh, indent=1)
