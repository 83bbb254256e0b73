"""Spans of finite sets with pullback composition.

Composite apexes are sets of literal pairs ``(a, b)``.  A span carrying the
``identity`` flag is a strict unit: composing with it returns the other span
unchanged.  The flag is structural; a span that merely looks like an identity
is composed by pullback like any other.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass

from .core import jsonable, ordered
from .errors import BoundaryMismatch, MalformedInput, NonComposable


class FinFn:
    """A function between finite sets, stored as a table."""

    __slots__ = ("dom", "cod", "table", "_hash")

    def __init__(self, dom, cod, table):
        self.dom = frozenset(dom)
        self.cod = frozenset(cod)
        self.table = dict(table)
        self._hash = None

    def __call__(self, x):
        return self.table[x]

    def __eq__(self, other):
        return (isinstance(other, FinFn) and self.dom == other.dom
                and self.cod == other.cod and self.table == other.table)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, frozenset(self.table.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{k!r}: {self.table[k]!r}" for k in ordered(self.table))
        return f"FinFn({{{body}}})"

    def then(self, g):
        """``g`` after ``self``."""
        if self.cod != g.dom:
            raise NonComposable("codomain and domain differ")
        return FinFn(self.dom, g.cod, {x: g.table[y] for x, y in self.table.items()})

    def is_identity(self):
        return self.dom == self.cod and all(x == y for x, y in self.table.items())

    def well_formed(self):
        return set(self.table) == set(self.dom) and all(y in self.cod for y in self.table.values())

    @staticmethod
    def identity(X):
        return FinFn(X, X, {x: x for x in X})


@dataclass(frozen=True)
class FinSpan:
    left: frozenset
    apex: frozenset
    right: frozenset
    left_leg: FinFn
    right_leg: FinFn
    identity: bool = False

    def well_formed(self):
        return (self.left_leg.dom == self.apex and self.right_leg.dom == self.apex
                and self.left_leg.cod == self.left and self.right_leg.cod == self.right
                and self.left_leg.well_formed() and self.right_leg.well_formed()
                and (not self.identity or (self.left == self.apex == self.right
                                           and self.left_leg.is_identity()
                                           and self.right_leg.is_identity())))

    def to_json(self):
        return span_to_json(self)


def make_span(left, right, legs, identity=False):
    """Span from ``{apex element: (left image, right image)}``."""
    apex = frozenset(legs)
    return FinSpan(frozenset(left), apex, frozenset(right),
                   FinFn(apex, left, {y: legs[y][0] for y in legs}),
                   FinFn(apex, right, {y: legs[y][1] for y in legs}), identity)


def identity_span(X):
    X = frozenset(X)
    ident = FinFn.identity(X)
    return FinSpan(X, X, X, ident, ident, True)


def fn_span(f, backward=False):
    """The span ``A <-1- A -f-> B`` (or ``B <-f- A -1-> A`` when ``backward``).

    An identity function gives the flagged identity span.
    """
    if f.is_identity():
        return identity_span(f.dom)
    ident = FinFn.identity(f.dom)
    if backward:
        return FinSpan(f.cod, f.dom, f.dom, f, ident)
    return FinSpan(f.dom, f.dom, f.cod, ident, f)


def compose_spans(s, t):
    if s.right != t.left:
        raise NonComposable("right foot of first span differs from left foot of second")
    if s.identity:
        return t
    if t.identity:
        return s
    fiber = defaultdict(list)
    for b, c in t.left_leg.table.items():
        fiber[c].append(b)
    sl, sr, tr = s.left_leg.table, s.right_leg.table, t.right_leg.table
    pairs = [(a, b) for a, c in sr.items() for b in fiber[c]]
    apex = frozenset(pairs)
    return FinSpan(s.left, apex, t.right,
                   FinFn(apex, s.left, {p: sl[p[0]] for p in pairs}),
                   FinFn(apex, t.right, {p: tr[p[1]] for p in pairs}))


def split(s, t, e):
    """Components ``(a, b)`` of an element ``e`` of ``compose_spans(s, t)``."""
    if s.identity:
        return (t.left_leg(e), e)
    if t.identity:
        return (e, s.right_leg(e))
    return e


def join(s, t, a, b):
    """The element of ``compose_spans(s, t)`` with components ``a`` and ``b``."""
    if s.identity:
        return b
    if t.identity:
        return a
    return (a, b)


@dataclass(frozen=True)
class SpanSquare:
    top: FinSpan
    bottom: FinSpan
    left_fn: FinFn
    right_fn: FinFn
    apex_fn: FinFn

    def problems(self):
        out = []
        if self.left_fn.dom != self.top.left or self.left_fn.cod != self.bottom.left:
            out.append("left side has wrong ends")
        if self.right_fn.dom != self.top.right or self.right_fn.cod != self.bottom.right:
            out.append("right side has wrong ends")
        if self.apex_fn.dom != self.top.apex or self.apex_fn.cod != self.bottom.apex:
            out.append("apex map has wrong ends")
        if out:
            return out
        for y in self.top.apex:
            z = self.apex_fn(y)
            if self.bottom.left_leg(z) != self.left_fn(self.top.left_leg(y)):
                out.append(("left leg square fails at", y))
                break
        for y in self.top.apex:
            z = self.apex_fn(y)
            if self.bottom.right_leg(z) != self.right_fn(self.top.right_leg(y)):
                out.append(("right leg square fails at", y))
                break
        return out

    def well_formed(self):
        return not self.problems()


def square(top, bottom, left_fn, right_fn, apex_map):
    return SpanSquare(top, bottom, left_fn, right_fn, FinFn(top.apex, bottom.apex, apex_map))


def ih(j):
    """Horizontal identity square on a function ``j`` (its vertical sides are ``j``)."""
    return SpanSquare(identity_span(j.dom), identity_span(j.cod), j, j, j)


def iv(s):
    """Vertical identity square on a span."""
    return SpanSquare(s, s, FinFn.identity(s.left), FinFn.identity(s.right),
                      FinFn.identity(s.apex))


def compose_span_squares(direction, a, b):
    if direction == "h":
        if a.right_fn != b.left_fn:
            raise NonComposable("shared vertical side differs")
        top = compose_spans(a.top, b.top)
        bottom = compose_spans(a.bottom, b.bottom)
        table = {}
        for e in top.apex:
            x, y = split(a.top, b.top, e)
            table[e] = join(a.bottom, b.bottom, a.apex_fn(x), b.apex_fn(y))
        return SpanSquare(top, bottom, a.left_fn, b.right_fn, FinFn(top.apex, bottom.apex, table))
    if direction == "v":
        if a.bottom != b.top:
            raise NonComposable("bottom of upper square differs from top of lower square")
        return SpanSquare(a.top, b.bottom, a.left_fn.then(b.left_fn),
                          a.right_fn.then(b.right_fn), a.apex_fn.then(b.apex_fn))
    raise ValueError(f"unknown direction {direction!r}")


def paste_h(*sqs):
    out = sqs[0]
    for b in sqs[1:]:
        out = compose_span_squares("h", out, b)
    return out


def paste_v(*sqs):
    out = sqs[0]
    for b in sqs[1:]:
        out = compose_span_squares("v", out, b)
    return out


def associator(s, t, u):
    """Globular square ``[[s t] u] => [s [t u]]`` re-nesting ``((a, b), c)``."""
    st, tu = compose_spans(s, t), compose_spans(t, u)
    src, dst = compose_spans(st, u), compose_spans(s, tu)
    table = {}
    for e in src.apex:
        x, c = split(st, u, e)
        a, b = split(s, t, x)
        table[e] = join(s, tu, a, join(t, u, b, c))
    return SpanSquare(src, dst, FinFn.identity(src.left), FinFn.identity(src.right),
                      FinFn(src.apex, dst.apex, table))


def associator_inverse(s, t, u):
    st, tu = compose_spans(s, t), compose_spans(t, u)
    src, dst = compose_spans(s, tu), compose_spans(st, u)
    table = {}
    for e in src.apex:
        a, y = split(s, tu, e)
        b, c = split(t, u, y)
        table[e] = join(st, u, join(s, t, a, b), c)
    return SpanSquare(src, dst, FinFn.identity(src.left), FinFn.identity(src.right),
                      FinFn(src.apex, dst.apex, table))


# --------------------------------------------------------------------------
# bracketed composites, compared up to the canonical re-nesting


def expr_span(expr):
    """A span expression is a span or a pair ``(left_expr, right_expr)``."""
    if isinstance(expr, FinSpan):
        return expr
    return compose_spans(expr_span(expr[0]), expr_span(expr[1]))


def flatten(expr, e):
    """Tuple of leaf components of an apex element of a bracketed composite."""
    if isinstance(expr, FinSpan):
        return (e,)
    a, b = split(expr_span(expr[0]), expr_span(expr[1]), e)
    return flatten(expr[0], a) + flatten(expr[1], b)


def flat_apex_map(sq, top_expr, bottom_expr):
    """Apex map of ``sq`` read on flattened components of its bracketed frame."""
    if expr_span(top_expr) != sq.top or expr_span(bottom_expr) != sq.bottom:
        raise BoundaryMismatch("bracketing does not describe the square's frame")
    return {flatten(top_expr, e): flatten(bottom_expr, sq.apex_fn(e)) for e in sq.top.apex}


# --------------------------------------------------------------------------
# transposed spans (vertical spans of the transposed double category)


@dataclass(frozen=True)
class VerticalSpan:
    top: frozenset
    apex: frozenset
    bottom: frozenset
    up_leg: FinFn
    down_leg: FinFn
    identity: bool = False


def spt_encode(s):
    return VerticalSpan(s.left, s.apex, s.right, s.left_leg, s.right_leg, s.identity)


def spt_decode(v):
    return FinSpan(v.top, v.apex, v.bottom, v.up_leg, v.down_leg, v.identity)


# --------------------------------------------------------------------------
# JSON


def _elem_from_json(x):
    if isinstance(x, list):
        return tuple(_elem_from_json(y) for y in x)
    return x


def _key(x):
    return x if isinstance(x, str) else json.dumps(jsonable(x))


def fn_to_json(f):
    return {_key(x): jsonable(f(x)) for x in ordered(f.dom)}


def fn_from_json(data, dom, cod):
    by_key = {_key(x): x for x in dom}
    try:
        table = {by_key[k]: _elem_from_json(v) for k, v in data.items()}
    except KeyError as exc:
        raise MalformedInput(f"function mentions unknown element {exc}")
    f = FinFn(dom, cod, table)
    if not f.well_formed():
        raise MalformedInput("function is not total or leaves its codomain")
    return f


def span_to_json(s):
    return {"left": jsonable(frozenset(s.left)), "apex": jsonable(frozenset(s.apex)),
            "right": jsonable(frozenset(s.right)), "left_leg": fn_to_json(s.left_leg),
            "right_leg": fn_to_json(s.right_leg), "identity": s.identity}


def span_from_json(data):
    try:
        left = frozenset(_elem_from_json(x) for x in data["left"])
        apex = frozenset(_elem_from_json(x) for x in data["apex"])
        right = frozenset(_elem_from_json(x) for x in data["right"])
        s = FinSpan(left, apex, right, fn_from_json(data["left_leg"], apex, left),
                    fn_from_json(data["right_leg"], apex, right), bool(data.get("identity", False)))
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad span data: {exc}")
    if not s.well_formed():
        raise MalformedInput("span legs do not match its feet")
    return s


# --------------------------------------------------------------------------
# random generation for sampled checks


def _atoms(tag, n):
    return frozenset(f"{tag}{i}" for i in range(n))


def random_fn(rng, dom, cod):
    cod_l = ordered(cod)
    return FinFn(dom, cod, {x: rng.choice(cod_l) for x in ordered(dom)})


def random_surjection(rng, dom, cod):
    dom_l, cod_l = ordered(dom), ordered(cod)
    if len(dom_l) < len(cod_l):
        raise ValueError("no surjection")
    perm = dom_l[:]
    rng.shuffle(perm)
    table = {x: cod_l[i] for i, x in enumerate(perm[:len(cod_l)])}
    for x in perm[len(cod_l):]:
        table[x] = rng.choice(cod_l)
    return FinFn(dom, cod, table)


def random_span(rng, left, right, max_apex=4, tag="y"):
    if not left or not right:
        return make_span(left, right, {})
    n = rng.randint(0, max_apex)
    L, R = ordered(left), ordered(right)
    return make_span(left, right, {f"{tag}{i}": (rng.choice(L), rng.choice(R)) for i in range(n)})


def random_square_onto(rng, bottom, left_fn, right_fn, max_apex=4, tag="y"):
    """A random square with the given bottom span and vertical sides."""
    top_left, top_right = left_fn.dom, right_fn.dom
    pre_l = defaultdict(list)
    for x in ordered(top_left):
        pre_l[left_fn(x)].append(x)
    pre_r = defaultdict(list)
    for x in ordered(top_right):
        pre_r[right_fn(x)].append(x)
    targets = [z for z in ordered(bottom.apex)
               if pre_l[bottom.left_leg(z)] and pre_r[bottom.right_leg(z)]]
    legs, amap = {}, {}
    if targets:
        for i in range(rng.randint(0, max_apex)):
            z = rng.choice(targets)
            y = f"{tag}{i}"
            legs[y] = (rng.choice(pre_l[bottom.left_leg(z)]), rng.choice(pre_r[bottom.right_leg(z)]))
            amap[y] = z
    top = make_span(top_left, top_right, legs)
    return square(top, bottom, left_fn, right_fn, amap)


def random_grid(rng, rows=2, cols=2, max_obj=3, max_apex=3, identity_rate=0.25, tag="g"):
    """``rows x cols`` squares with matching shared sides (``grid[r][c]``)."""
    sizes = [[0] * (cols + 1) for _ in range(rows + 1)]
    objs = [[None] * (cols + 1) for _ in range(rows + 1)]
    for c in range(cols + 1):
        sizes[rows][c] = rng.randint(1, max_obj)
        for r in range(rows - 1, -1, -1):
            sizes[r][c] = min(max_obj + 2, sizes[r + 1][c] + rng.randint(0, 1))
    for r in range(rows + 1):
        for c in range(cols + 1):
            objs[r][c] = _atoms(f"{tag}o{r}{c}_", sizes[r][c])
    # occasionally let two bottom objects coincide so that identity spans fit
    bottom_spans = []
    for c in range(cols):
        if rng.random() < identity_rate and sizes[rows][c] <= sizes[rows - 1][c + 1]:
            objs[rows][c + 1] = objs[rows][c]
            sizes[rows][c + 1] = sizes[rows][c]
    verts = [[random_surjection(rng, objs[r][c], objs[r + 1][c]) if len(objs[r][c]) >= len(objs[r + 1][c])
              else random_fn(rng, objs[r][c], objs[r + 1][c])
              for c in range(cols + 1)] for r in range(rows)]
    for c in range(cols):
        if objs[rows][c] == objs[rows][c + 1] and rng.random() < 0.6:
            bottom_spans.append(identity_span(objs[rows][c]))
        else:
            bottom_spans.append(random_span(rng, objs[rows][c], objs[rows][c + 1], max_apex, f"{tag}b{c}_"))
    grid = [[None] * cols for _ in range(rows)]
    below = bottom_spans
    for r in range(rows - 1, -1, -1):
        row = []
        for c in range(cols):
            sq = random_square_onto(rng, below[c], verts[r][c], verts[r][c + 1], max_apex,
                                    f"{tag}y{r}{c}_")
            row.append(sq)
        grid[r] = row
        below = [sq.top for sq in row]
    return grid


def random_composable_spans(rng, n=3, max_obj=3, max_apex=4, identity_rate=0.2, tag="s"):
    objs = [_atoms(f"{tag}o{i}_", rng.randint(1, max_obj)) for i in range(n + 1)]
    out = []
    for i in range(n):
        if rng.random() < identity_rate:
            objs[i + 1] = objs[i]
            out.append(identity_span(objs[i]))
        else:
            out.append(random_span(rng, objs[i], objs[i + 1], max_apex, f"{tag}{i}_"))
    # spans were drawn before later feet were replaced; rebuild mismatched ones
    fixed = []
    for i, s in enumerate(out):
        if s.left != objs[i] or s.right != objs[i + 1]:
            s = random_span(rng, objs[i], objs[i + 1], max_apex, f"{tag}{i}_")
        fixed.append(s)
    return fixed


def sweep_spans(left, right, max_apex):
    """All spans between two sets up to relabelling of the apex."""
    pairs = [(a, b) for a in ordered(left) for b in ordered(right)]

    def multisets(start, k):
        if k == 0:
            yield ()
            return
        for i in range(start, len(pairs)):
            for rest in multisets(i, k - 1):
                yield (pairs[i],) + rest

    for n in range(max_apex + 1):
        for ms in multisets(0, n):
            yield make_span(left, right, {f"y{i}": p for i, p in enumerate(ms)})
