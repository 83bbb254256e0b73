"""Finite strict double categories stored as explicit tables.

Conventions used throughout the package:

* ``[f g]`` is horizontal composition read left to right (``g`` after ``f``).
* ``[a; b]`` is vertical composition with ``a`` on top.
* A square has a boundary ``(top, bottom, left, right)``; ``top`` and
  ``bottom`` are horizontal morphisms, ``left`` and ``right`` vertical ones.
* ``id_sq_h[j]`` is the horizontal identity square on a vertical morphism
  ``j`` (left and right side ``j``); ``id_sq_v[f]`` is the vertical identity
  square on a horizontal morphism ``f`` (top and bottom ``f``).

Cell identifiers are arbitrary hashables (strings in JSON, tuples for
products and derived constructions).
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict, namedtuple
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    Invalid2Category,
    KindMismatch,
    MalformedInput,
    NonComposable,
    NotEnumerable,
    UnknownCell,
)

Boundary = namedtuple("Boundary", "top bottom left right")
CellRef = namedtuple("CellRef", "kind id")

KINDS = ("obj", "hmor", "vmor", "sq")


def sort_key(x):
    """Total order on the mixed atoms/tuples used as identifiers."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(sort_key(y) for y in x))
    if isinstance(x, frozenset):
        return (3, tuple(sorted(sort_key(y) for y in x)))
    if x is None:
        return (-1,)
    return (4, repr(x))


class Key(tuple):
    """A tuple identifier that caches its hash; equal to the plain tuple."""

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            self._hash = tuple.__hash__(self)
            return self._hash


def ordered(xs):
    return sorted(xs, key=sort_key)


def id_to_str(x):
    if isinstance(x, tuple):
        return "(" + ",".join(id_to_str(y) for y in x) + ")"
    return str(x)


def jsonable(x):
    """Turn witnesses (tuples, frozensets, dicts with tuple keys) into JSON data."""
    if isinstance(x, dict):
        return {id_to_str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (tuple, list)):
        return [jsonable(y) for y in x]
    if isinstance(x, (set, frozenset)):
        return [jsonable(y) for y in ordered(x)]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if hasattr(x, "to_json"):
        return x.to_json()
    return repr(x)


@dataclass
class Violation:
    check: str
    witness: object

    def to_json(self):
        return {"check": self.check, "witness": jsonable(self.witness)}


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    checked: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.violations

    def add(self, check, witness):
        self.violations.append(Violation(check, witness))

    def count(self, check):
        self.checked[check] = self.checked.get(check, 0) + 1

    def extend(self, other, prefix=""):
        for v in other.violations:
            self.violations.append(Violation(prefix + v.check, v.witness))
        for k, n in other.checked.items():
            self.checked[prefix + k] = self.checked.get(prefix + k, 0) + n

    def by_check(self):
        out = defaultdict(int)
        for v in self.violations:
            out[v.check] += 1
        return dict(out)

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class TableDoubleCategory:
    objects: tuple
    hmors: dict
    vmors: dict
    squares: dict
    hcomp_h: dict
    vcomp_v: dict
    hcomp_sq: dict
    vcomp_sq: dict
    id_h: dict
    id_v: dict
    id_sq_h: dict
    id_sq_v: dict
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(ordered(set(self.objects))))
        object.__setattr__(
            self, "squares", {k: Boundary(*v) for k, v in self.squares.items()}
        )
        object.__setattr__(self, "hmors", {k: tuple(v) for k, v in self.hmors.items()})
        object.__setattr__(self, "vmors", {k: tuple(v) for k, v in self.vmors.items()})

    # boundaries -----------------------------------------------------------
    def _need(self, table, x, kind):
        try:
            return table[x]
        except (KeyError, TypeError):
            raise UnknownCell(f"unknown {kind} {x!r}", witness={"kind": kind, "id": x})

    def hsrc(self, f):
        return self._need(self.hmors, f, "hmor")[0]

    def htgt(self, f):
        return self._need(self.hmors, f, "hmor")[1]

    def vsrc(self, j):
        return self._need(self.vmors, j, "vmor")[0]

    def vtgt(self, j):
        return self._need(self.vmors, j, "vmor")[1]

    def boundary(self, a):
        return self._need(self.squares, a, "sq")

    # composition ----------------------------------------------------------
    def _lookup(self, table, a, b, what):
        try:
            return table[(a, b)]
        except KeyError:
            raise MalformedInput(
                f"{what} table has no entry for composable pair {a!r}, {b!r}",
                witness={"pair": [a, b]},
            )

    def comp_h(self, *fs):
        """Horizontal composite ``[f1 f2 ...]`` of horizontal morphisms."""
        if not fs:
            raise NonComposable("empty composite")
        out = fs[0]
        self.hsrc(out)
        for g in fs[1:]:
            if self.htgt(out) != self.hsrc(g):
                raise NonComposable(
                    f"{out!r} does not end where {g!r} starts", witness={"pair": [out, g]}
                )
            out = self._lookup(self.hcomp_h, out, g, "hcomp_h")
        return out

    def comp_v(self, *js):
        """Vertical composite ``[j1; j2; ...]`` of vertical morphisms."""
        if not js:
            raise NonComposable("empty composite")
        out = js[0]
        self.vsrc(out)
        for k in js[1:]:
            if self.vtgt(out) != self.vsrc(k):
                raise NonComposable(
                    f"{out!r} does not end where {k!r} starts", witness={"pair": [out, k]}
                )
            out = self._lookup(self.vcomp_v, out, k, "vcomp_v")
        return out

    def sq_h(self, *sqs):
        """Horizontal pasting ``[a b ...]`` of squares."""
        if not sqs:
            raise NonComposable("empty composite")
        out = sqs[0]
        self.boundary(out)
        for b in sqs[1:]:
            if self.boundary(out).right != self.boundary(b).left:
                raise NonComposable(
                    f"right side of {out!r} differs from left side of {b!r}",
                    witness={"pair": [out, b]},
                )
            out = self._lookup(self.hcomp_sq, out, b, "hcomp_sq")
        return out

    def sq_v(self, *sqs):
        """Vertical pasting ``[a; b; ...]`` of squares."""
        if not sqs:
            raise NonComposable("empty composite")
        out = sqs[0]
        self.boundary(out)
        for b in sqs[1:]:
            if self.boundary(out).bottom != self.boundary(b).top:
                raise NonComposable(
                    f"bottom of {out!r} differs from top of {b!r}",
                    witness={"pair": [out, b]},
                )
            out = self._lookup(self.vcomp_sq, out, b, "vcomp_sq")
        return out

    def ih(self, j):
        return self._need(self.id_sq_h, j, "vmor")

    def iv(self, f):
        return self._need(self.id_sq_v, f, "hmor")

    # indexes --------------------------------------------------------------
    @cached_property
    def _hom_h(self):
        idx = defaultdict(list)
        for f in ordered(self.hmors):
            idx[self.hmors[f]].append(f)
        return idx

    @cached_property
    def _hom_v(self):
        idx = defaultdict(list)
        for j in ordered(self.vmors):
            idx[self.vmors[j]].append(j)
        return idx

    @cached_property
    def _by_sides(self):
        idx = defaultdict(list)
        for a in ordered(self.squares):
            b = self.squares[a]
            idx[(b.left, b.right)].append(a)
        return idx

    @cached_property
    def _by_frame(self):
        idx = defaultdict(list)
        for a in ordered(self.squares):
            idx[self.squares[a]].append(a)
        return idx

    @cached_property
    def _by_left(self):
        idx = defaultdict(list)
        for a in ordered(self.squares):
            idx[self.squares[a].left].append(a)
        return idx

    @cached_property
    def _by_top(self):
        idx = defaultdict(list)
        for a in ordered(self.squares):
            idx[self.squares[a].top].append(a)
        return idx

    def hom_h(self, a, b):
        return list(self._hom_h.get((a, b), ()))

    def hom_v(self, a, b):
        return list(self._hom_v.get((a, b), ()))

    def hom_sq(self, j, k):
        """Squares with left side ``j`` and right side ``k``."""
        return list(self._by_sides.get((j, k), ()))

    def squares_framed(self, top, bottom, left, right):
        return list(self._by_frame.get(Boundary(top, bottom, left, right), ()))

    def squares_left(self, j):
        return list(self._by_left.get(j, ()))

    def squares_top(self, f):
        return list(self._by_top.get(f, ()))

    def is_id_h(self, f):
        return f in self.hmors and self.id_h.get(self.hsrc(f)) == f

    def is_id_v(self, j):
        return j in self.vmors and self.id_v.get(self.vsrc(j)) == j

    def globular(self):
        """Squares whose vertical sides are identities."""
        return [a for a in ordered(self.squares)
                if self.is_id_v(self.squares[a].left) and self.is_id_v(self.squares[a].right)]

    def cells(self, kind):
        return {"obj": list(self.objects), "hmor": ordered(self.hmors),
                "vmor": ordered(self.vmors), "sq": ordered(self.squares)}[kind]

    def sizes(self):
        return {"objects": len(self.objects), "hmors": len(self.hmors),
                "vmors": len(self.vmors), "squares": len(self.squares)}

    def to_json(self):
        return to_json(self)


def compose(D, direction, cells, kind=None):
    """Compose a list of cells of one kind in direction ``"h"`` or ``"v"``.

    Cells may be given as :class:`CellRef` values or as bare identifiers
    together with ``kind``.
    """
    if not isinstance(D, TableDoubleCategory):
        raise NotEnumerable("compose expects a table double category")
    ids = []
    kinds = set()
    for c in cells:
        if isinstance(c, CellRef):
            kinds.add(c.kind)
            ids.append(c.id)
        else:
            if kind is None:
                raise KindMismatch("bare identifiers need an explicit kind")
            kinds.add(kind)
            ids.append(c)
    if kind is not None:
        kinds.add(kind)
    if len(kinds) != 1:
        raise KindMismatch(f"mixed kinds {sorted(kinds)}", witness=sorted(kinds))
    (k,) = kinds
    if direction not in ("h", "v"):
        raise KindMismatch(f"unknown direction {direction!r}")
    if k == "hmor":
        if direction != "h":
            raise KindMismatch("horizontal morphisms only compose horizontally")
        return D.comp_h(*ids)
    if k == "vmor":
        if direction != "v":
            raise KindMismatch("vertical morphisms only compose vertically")
        return D.comp_v(*ids)
    if k == "sq":
        return D.sq_h(*ids) if direction == "h" else D.sq_v(*ids)
    raise KindMismatch(f"cannot compose cells of kind {k!r}")


# --------------------------------------------------------------------------
# validation


def _check_boundaries(D, rep):
    objs = set(D.objects)
    for f, (s, t) in D.hmors.items():
        rep.count("boundary")
        if s not in objs or t not in objs:
            rep.add("boundary", {"hmor": f, "endpoints": [s, t]})
    for j, (s, t) in D.vmors.items():
        rep.count("boundary")
        if s not in objs or t not in objs:
            rep.add("boundary", {"vmor": j, "endpoints": [s, t]})
    for a, b in D.squares.items():
        rep.count("boundary")
        if not (b.top in D.hmors and b.bottom in D.hmors
                and b.left in D.vmors and b.right in D.vmors):
            rep.add("boundary", {"sq": a, "reason": "unknown side", "frame": list(b)})
            continue
        corners = [
            (D.hmors[b.top][0], D.vmors[b.left][0]),
            (D.hmors[b.top][1], D.vmors[b.right][0]),
            (D.hmors[b.bottom][0], D.vmors[b.left][1]),
            (D.hmors[b.bottom][1], D.vmors[b.right][1]),
        ]
        for x, y in corners:
            if x != y:
                rep.add("boundary", {"sq": a, "reason": "corner mismatch", "frame": list(b)})
                break

    def chk(table, tname, known, ends, expect):
        for (x, y), z in table.items():
            rep.count("boundary")
            if x not in known or y not in known or z not in known:
                rep.add("boundary", {"table": tname, "entry": [x, y, z], "reason": "unknown cell"})
                continue
            problem = ends(x, y)
            if problem:
                rep.add("boundary", {"table": tname, "entry": [x, y, z], "reason": problem})
                continue
            want = expect(x, y)
            if want is not None and known[z] != want:
                rep.add("boundary", {"table": tname, "entry": [x, y, z],
                                     "reason": "result has wrong boundary"})

    chk(D.hcomp_h, "hcomp_h", D.hmors,
        lambda f, g: None if D.hmors[f][1] == D.hmors[g][0] else "not composable",
        lambda f, g: (D.hmors[f][0], D.hmors[g][1]))
    chk(D.vcomp_v, "vcomp_v", D.vmors,
        lambda j, k: None if D.vmors[j][1] == D.vmors[k][0] else "not composable",
        lambda j, k: (D.vmors[j][0], D.vmors[k][1]))

    def sq_h_expect(a, b):
        A, B = D.squares[a], D.squares[b]
        top = D.hcomp_h.get((A.top, B.top))
        bot = D.hcomp_h.get((A.bottom, B.bottom))
        if top is None or bot is None:
            return None
        return Boundary(top, bot, A.left, B.right)

    def sq_v_expect(a, b):
        A, B = D.squares[a], D.squares[b]
        left = D.vcomp_v.get((A.left, B.left))
        right = D.vcomp_v.get((A.right, B.right))
        if left is None or right is None:
            return None
        return Boundary(A.top, B.bottom, left, right)

    chk(D.hcomp_sq, "hcomp_sq", D.squares,
        lambda a, b: None if D.squares[a].right == D.squares[b].left else "not composable",
        sq_h_expect)
    chk(D.vcomp_sq, "vcomp_sq", D.squares,
        lambda a, b: None if D.squares[a].bottom == D.squares[b].top else "not composable",
        sq_v_expect)

    for A, f in D.id_h.items():
        rep.count("boundary")
        if D.hmors.get(f) != (A, A):
            rep.add("boundary", {"id_h": A, "hmor": f})
    for A, j in D.id_v.items():
        rep.count("boundary")
        if D.vmors.get(j) != (A, A):
            rep.add("boundary", {"id_v": A, "vmor": j})
    for j, a in D.id_sq_h.items():
        rep.count("boundary")
        if j not in D.vmors or a not in D.squares:
            rep.add("boundary", {"id_sq_h": j, "sq": a, "reason": "unknown cell"})
            continue
        s, t = D.vmors[j]
        want = Boundary(D.id_h.get(s), D.id_h.get(t), j, j)
        if D.squares[a] != want:
            rep.add("boundary", {"id_sq_h": j, "sq": a, "reason": "wrong frame"})
    for f, a in D.id_sq_v.items():
        rep.count("boundary")
        if f not in D.hmors or a not in D.squares:
            rep.add("boundary", {"id_sq_v": f, "sq": a, "reason": "unknown cell"})
            continue
        s, t = D.hmors[f]
        want = Boundary(f, f, D.id_v.get(s), D.id_v.get(t))
        if D.squares[a] != want:
            rep.add("boundary", {"id_sq_v": f, "sq": a, "reason": "wrong frame"})


def _check_totality(D, rep):
    for A in D.objects:
        rep.count("totality")
        if A not in D.id_h:
            rep.add("totality", {"missing": "id_h", "obj": A})
        if A not in D.id_v:
            rep.add("totality", {"missing": "id_v", "obj": A})
    for j in D.vmors:
        rep.count("totality")
        if j not in D.id_sq_h:
            rep.add("totality", {"missing": "id_sq_h", "vmor": j})
    for f in D.hmors:
        rep.count("totality")
        if f not in D.id_sq_v:
            rep.add("totality", {"missing": "id_sq_v", "hmor": f})
    out_h = defaultdict(list)
    for f, (s, t) in D.hmors.items():
        out_h[s].append(f)
    for f, (s, t) in D.hmors.items():
        for g in out_h[t]:
            rep.count("totality")
            if (f, g) not in D.hcomp_h:
                rep.add("totality", {"missing": "hcomp_h", "pair": [f, g]})
    out_v = defaultdict(list)
    for j, (s, t) in D.vmors.items():
        out_v[s].append(j)
    for j, (s, t) in D.vmors.items():
        for k in out_v[t]:
            rep.count("totality")
            if (j, k) not in D.vcomp_v:
                rep.add("totality", {"missing": "vcomp_v", "pair": [j, k]})
    by_left = defaultdict(list)
    by_top = defaultdict(list)
    for a, b in D.squares.items():
        by_left[b.left].append(a)
        by_top[b.top].append(a)
    for a, b in D.squares.items():
        for c in by_left[b.right]:
            rep.count("totality")
            if (a, c) not in D.hcomp_sq:
                rep.add("totality", {"missing": "hcomp_sq", "pair": [a, c]})
        for c in by_top[b.bottom]:
            rep.count("totality")
            if (a, c) not in D.vcomp_sq:
                rep.add("totality", {"missing": "vcomp_sq", "pair": [a, c]})


def _assoc(rep, name, table, nexts):
    for (x, y), xy in list(table.items()):
        for z in nexts(y):
            rep.count("assoc")
            yz = table.get((y, z))
            l = table.get((xy, z))
            r = table.get((x, yz)) if yz is not None else None
            if l is None or r is None:
                continue
            if l != r:
                rep.add("assoc", {"table": name, "triple": [x, y, z], "left": l, "right": r})


def _check_assoc(D, rep):
    out_h = defaultdict(list)
    for f, (s, t) in D.hmors.items():
        out_h[s].append(f)
    out_v = defaultdict(list)
    for j, (s, t) in D.vmors.items():
        out_v[s].append(j)
    by_left = defaultdict(list)
    by_top = defaultdict(list)
    for a, b in D.squares.items():
        by_left[b.left].append(a)
        by_top[b.top].append(a)
    _assoc(rep, "hcomp_h", D.hcomp_h, lambda g: out_h[D.hmors[g][1]] if g in D.hmors else [])
    _assoc(rep, "vcomp_v", D.vcomp_v, lambda k: out_v[D.vmors[k][1]] if k in D.vmors else [])
    _assoc(rep, "hcomp_sq", D.hcomp_sq,
           lambda b: by_left[D.squares[b].right] if b in D.squares else [])
    _assoc(rep, "vcomp_sq", D.vcomp_sq,
           lambda b: by_top[D.squares[b].bottom] if b in D.squares else [])


def _check_units(D, rep):
    for f, (s, t) in D.hmors.items():
        rep.count("units")
        for side, pair in (("left", (D.id_h.get(s), f)), ("right", (f, D.id_h.get(t)))):
            r = D.hcomp_h.get(pair)
            if r is not None and r != f:
                rep.add("units", {"table": "hcomp_h", "side": side, "cell": f, "got": r})
    for j, (s, t) in D.vmors.items():
        rep.count("units")
        for side, pair in (("top", (D.id_v.get(s), j)), ("bottom", (j, D.id_v.get(t)))):
            r = D.vcomp_v.get(pair)
            if r is not None and r != j:
                rep.add("units", {"table": "vcomp_v", "side": side, "cell": j, "got": r})
    for a, b in D.squares.items():
        rep.count("units")
        for side, pair, table in (
            ("left", (D.id_sq_h.get(b.left), a), D.hcomp_sq),
            ("right", (a, D.id_sq_h.get(b.right)), D.hcomp_sq),
            ("top", (D.id_sq_v.get(b.top), a), D.vcomp_sq),
            ("bottom", (a, D.id_sq_v.get(b.bottom)), D.vcomp_sq),
        ):
            r = table.get(pair)
            if r is not None and r != a:
                rep.add("units", {"sq": a, "side": side, "got": r})


def _check_interchange(D, rep):
    by_top = defaultdict(list)
    for a, b in D.squares.items():
        by_top[b.top].append(a)
    lower = defaultdict(list)
    for (g, d), gd in D.hcomp_sq.items():
        lower[(D.squares[g].top, D.squares[d].top)].append((g, d, gd))
    for (a, b), ab in D.hcomp_sq.items():
        A, B = D.squares[a], D.squares[b]
        for g, d, gd in lower.get((A.bottom, B.bottom), ()):
            rep.count("interchange")
            top_first = D.vcomp_sq.get((ab, gd))
            ag = D.vcomp_sq.get((a, g))
            bd = D.vcomp_sq.get((b, d))
            if top_first is None or ag is None or bd is None:
                continue
            side_first = D.hcomp_sq.get((ag, bd))
            if side_first is None:
                continue
            if top_first != side_first:
                rep.add("interchange", {"grid": [[a, b], [g, d]],
                                        "rows_first": top_first, "columns_first": side_first})


def _check_id_coherence(D, rep):
    for (j, k), jk in D.vcomp_v.items():
        rep.count("id_coherence")
        a, b, c = D.id_sq_h.get(j), D.id_sq_h.get(k), D.id_sq_h.get(jk)
        if None in (a, b, c):
            continue
        got = D.vcomp_sq.get((a, b))
        if got is not None and got != c:
            rep.add("id_coherence", {"rule": "ih of vertical composite", "pair": [j, k],
                                     "expected": c, "got": got})
    for (f, g), fg in D.hcomp_h.items():
        rep.count("id_coherence")
        a, b, c = D.id_sq_v.get(f), D.id_sq_v.get(g), D.id_sq_v.get(fg)
        if None in (a, b, c):
            continue
        got = D.hcomp_sq.get((a, b))
        if got is not None and got != c:
            rep.add("id_coherence", {"rule": "iv of horizontal composite", "pair": [f, g],
                                     "expected": c, "got": got})
    for A in D.objects:
        rep.count("id_coherence")
        j, f = D.id_v.get(A), D.id_h.get(A)
        x, y = D.id_sq_h.get(j), D.id_sq_v.get(f)
        if x is not None and y is not None and x != y:
            rep.add("id_coherence", {"rule": "identity square of object", "obj": A,
                                     "ih": x, "iv": y})


def validate(D):
    """Exhaustively check every double-category axiom; returns a report."""
    if not isinstance(D, TableDoubleCategory):
        raise NotEnumerable("validate expects a table double category")
    rep = ValidationReport()
    _check_boundaries(D, rep)
    if rep.violations:
        # later checks assume well-formed frames
        return rep
    _check_totality(D, rep)
    _check_assoc(D, rep)
    _check_units(D, rep)
    _check_interchange(D, rep)
    _check_id_coherence(D, rep)
    return rep


# --------------------------------------------------------------------------
# views and constructions


def _restrict(table, keep):
    return {k: v for k, v in table.items() if k[0] in keep and k[1] in keep and v in keep}


def view(D, which):
    """Derived double categories: ``horop``, ``transpose``, ``H`` or ``V1``."""
    if not isinstance(D, TableDoubleCategory):
        raise NotEnumerable(f"view {which!r} needs a table double category")
    if which == "horop":
        return TableDoubleCategory(
            objects=D.objects,
            hmors={f: (t, s) for f, (s, t) in D.hmors.items()},
            vmors=dict(D.vmors),
            squares={a: Boundary(b.top, b.bottom, b.right, b.left) for a, b in D.squares.items()},
            hcomp_h={(g, f): h for (f, g), h in D.hcomp_h.items()},
            vcomp_v=dict(D.vcomp_v),
            hcomp_sq={(b, a): c for (a, b), c in D.hcomp_sq.items()},
            vcomp_sq=dict(D.vcomp_sq),
            id_h=dict(D.id_h), id_v=dict(D.id_v),
            id_sq_h=dict(D.id_sq_h), id_sq_v=dict(D.id_sq_v),
            name=f"{D.name}^horop",
        )
    if which == "transpose":
        return TableDoubleCategory(
            objects=D.objects,
            hmors=dict(D.vmors),
            vmors=dict(D.hmors),
            squares={a: Boundary(b.left, b.right, b.top, b.bottom) for a, b in D.squares.items()},
            hcomp_h=dict(D.vcomp_v),
            vcomp_v=dict(D.hcomp_h),
            hcomp_sq=dict(D.vcomp_sq),
            vcomp_sq=dict(D.hcomp_sq),
            id_h=dict(D.id_v), id_v=dict(D.id_h),
            id_sq_h=dict(D.id_sq_v), id_sq_v=dict(D.id_sq_h),
            name=f"{D.name}^t",
        )
    if which == "H":
        vm = set(D.id_v.values())
        sq = {a for a, b in D.squares.items() if b.left in vm and b.right in vm}
        return TableDoubleCategory(
            objects=D.objects,
            hmors=dict(D.hmors),
            vmors={j: D.vmors[j] for j in vm},
            squares={a: D.squares[a] for a in sq},
            hcomp_h=dict(D.hcomp_h),
            vcomp_v=_restrict(D.vcomp_v, vm),
            hcomp_sq=_restrict(D.hcomp_sq, sq),
            vcomp_sq=_restrict(D.vcomp_sq, sq),
            id_h=dict(D.id_h), id_v=dict(D.id_v),
            id_sq_h={j: a for j, a in D.id_sq_h.items() if j in vm},
            id_sq_v=dict(D.id_sq_v),
            name=f"H({D.name})",
        )
    if which == "V1":
        hm = set(D.id_h.values())
        sq = set(D.id_sq_h.values())
        return TableDoubleCategory(
            objects=D.objects,
            hmors={f: D.hmors[f] for f in hm},
            vmors=dict(D.vmors),
            squares={a: D.squares[a] for a in sq},
            hcomp_h=_restrict(D.hcomp_h, hm),
            vcomp_v=dict(D.vcomp_v),
            hcomp_sq=_restrict(D.hcomp_sq, sq),
            vcomp_sq=_restrict(D.vcomp_sq, sq),
            id_h=dict(D.id_h), id_v=dict(D.id_v),
            id_sq_h=dict(D.id_sq_h),
            id_sq_v={f: a for f, a in D.id_sq_v.items() if f in hm},
            name=f"V1({D.name})",
        )
    raise KindMismatch(f"unknown view {which!r}")


def product(D, E):
    """Componentwise product; cells are pairs of identifiers."""
    def pairs(t1, t2):
        return {(x, y): (t1[x], t2[y]) for x in t1 for y in t2}

    def sides(t1, t2):
        return {(x, y): ((t1[x][0], t2[y][0]), (t1[x][1], t2[y][1])) for x in t1 for y in t2}

    def comp(t1, t2):
        return {((a1, b1), (a2, b2)): (c1, c2)
                for (a1, a2), c1 in t1.items() for (b1, b2), c2 in t2.items()}

    def ident(t1, t2):
        return {(x, y): (t1[x], t2[y]) for x in t1 for y in t2}

    return TableDoubleCategory(
        objects=[(a, b) for a in D.objects for b in E.objects],
        hmors=sides(D.hmors, E.hmors),
        vmors=sides(D.vmors, E.vmors),
        squares={(a, b): Boundary(*zip(D.squares[a], E.squares[b]))
                 for a in D.squares for b in E.squares},
        hcomp_h=comp(D.hcomp_h, E.hcomp_h),
        vcomp_v=comp(D.vcomp_v, E.vcomp_v),
        hcomp_sq=comp(D.hcomp_sq, E.hcomp_sq),
        vcomp_sq=comp(D.vcomp_sq, E.vcomp_sq),
        id_h=ident(D.id_h, E.id_h),
        id_v=ident(D.id_v, E.id_v),
        id_sq_h=ident(D.id_sq_h, E.id_sq_h),
        id_sq_v=ident(D.id_sq_v, E.id_sq_v),
        name=f"{D.name}x{E.name}",
    )


def terminal():
    return TableDoubleCategory(
        objects=["*"], hmors={"1": ("*", "*")}, vmors={"1": ("*", "*")},
        squares={"1": ("1", "1", "1", "1")},
        hcomp_h={("1", "1"): "1"}, vcomp_v={("1", "1"): "1"},
        hcomp_sq={("1", "1"): "1"}, vcomp_sq={("1", "1"): "1"},
        id_h={"*": "1"}, id_v={"*": "1"}, id_sq_h={"1": "1"}, id_sq_v={"1": "1"},
        name="1",
    )


# --------------------------------------------------------------------------
# finite 2-categories


@dataclass(frozen=True)
class Finite2Category:
    """A finite strict 2-category.

    ``comp1[(f, g)]`` is ``g`` after ``f``; ``cells2[a] = (f, g)`` for a
    2-cell ``f => g``; ``vcomp2[(a, b)]`` is ``a`` followed by ``b``;
    ``hcomp2[(a, b)]`` composes 2-cells along a shared object.
    """

    objects: tuple
    mor1: dict
    comp1: dict
    id1: dict
    cells2: dict
    vcomp2: dict
    hcomp2: dict
    id2: dict
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(ordered(set(self.objects))))
        object.__setattr__(self, "mor1", {k: tuple(v) for k, v in self.mor1.items()})
        object.__setattr__(self, "cells2", {k: tuple(v) for k, v in self.cells2.items()})

    @cached_property
    def _cells_by_ends(self):
        idx = defaultdict(list)
        for a in ordered(self.cells2):
            idx[self.cells2[a]].append(a)
        return idx

    @cached_property
    def _hom1(self):
        idx = defaultdict(list)
        for f in ordered(self.mor1):
            idx[self.mor1[f]].append(f)
        return idx

    def hom(self, a, b):
        return list(self._hom1.get((a, b), ()))

    def cells(self, f, g):
        """2-cells ``f => g``."""
        return list(self._cells_by_ends.get((f, g), ()))

    def c1(self, *fs):
        out = fs[0]
        for g in fs[1:]:
            if self.mor1[out][1] != self.mor1[g][0]:
                raise NonComposable(f"{out!r} then {g!r}")
            out = self.comp1[(out, g)]
        return out

    def v2(self, *cs):
        out = cs[0]
        for c in cs[1:]:
            out = self.vcomp2[(out, c)]
        return out

    def h2(self, *cs):
        out = cs[0]
        for c in cs[1:]:
            out = self.hcomp2[(out, c)]
        return out

    def whisker(self, *parts):
        """Horizontal composite where 1-cells stand for their identity 2-cells."""
        cs = [p if p in self.cells2 and p not in self.mor1 else self.id2[p] for p in parts]
        return self.h2(*cs)

    @classmethod
    def locally_posetal(cls, objects, mor1, comp1, id1, leq, name=""):
        """Build from 1-cells and an order on each hom (``leq`` holds pairs ``f <= g``).

        The order is closed reflexively and transitively.
        """
        rel = {(f, f) for f in mor1} | {tuple(p) for p in leq}
        changed = True
        while changed:
            changed = False
            for (a, b), (c, d) in itertools.product(list(rel), list(rel)):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
        cid = lambda f, g: f"{f}<={g}"
        cells2 = {cid(f, g): (f, g) for f, g in rel}
        vcomp2 = {(cid(f, g), cid(g, h)): cid(f, h)
                  for (f, g) in rel for (g2, h) in rel if g == g2}
        hcomp2 = {}
        for (f, f2) in rel:
            for (g, g2) in rel:
                if mor1[f][1] != mor1[g][0]:
                    continue
                hcomp2[(cid(f, f2), cid(g, g2))] = cid(comp1[(f, g)], comp1[(f2, g2)])
        return cls(objects=objects, mor1=mor1, comp1=comp1, id1=id1, cells2=cells2,
                   vcomp2=vcomp2, hcomp2=hcomp2, id2={f: cid(f, f) for f in mor1}, name=name)

    def to_json(self):
        return {
            "objects": [id_to_str(x) for x in self.objects],
            "mor1": {id_to_str(k): [id_to_str(x) for x in v] for k, v in self.mor1.items()},
            "comp1": [[id_to_str(a), id_to_str(b), id_to_str(c)] for (a, b), c in self.comp1.items()],
            "id1": {id_to_str(k): id_to_str(v) for k, v in self.id1.items()},
            "cells2": {id_to_str(k): [id_to_str(x) for x in v] for k, v in self.cells2.items()},
            "vcomp2": [[id_to_str(a), id_to_str(b), id_to_str(c)] for (a, b), c in self.vcomp2.items()],
            "hcomp2": [[id_to_str(a), id_to_str(b), id_to_str(c)] for (a, b), c in self.hcomp2.items()],
            "id2": {id_to_str(k): id_to_str(v) for k, v in self.id2.items()},
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(
                objects=list(data["objects"]),
                mor1={k: tuple(v) for k, v in data["mor1"].items()},
                comp1={(a, b): c for a, b, c in data["comp1"]},
                id1=dict(data["id1"]),
                cells2={k: tuple(v) for k, v in data["cells2"].items()},
                vcomp2={(a, b): c for a, b, c in data["vcomp2"]},
                hcomp2={(a, b): c for a, b, c in data["hcomp2"]},
                id2=dict(data["id2"]),
                name=data.get("name", ""),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"bad 2-category data: {exc}")


def _horizontal_embedding(K):
    unit = {A: K.id1[A] for A in K.objects}
    return TableDoubleCategory(
        objects=K.objects,
        hmors=dict(K.mor1),
        vmors={unit[A]: (A, A) for A in K.objects},
        squares={a: Boundary(f, g, unit[K.mor1[f][0]], unit[K.mor1[f][1]])
                 for a, (f, g) in K.cells2.items()},
        hcomp_h=dict(K.comp1),
        vcomp_v={(unit[A], unit[A]): unit[A] for A in K.objects},
        hcomp_sq=dict(K.hcomp2),
        vcomp_sq=dict(K.vcomp2),
        id_h=dict(unit), id_v=dict(unit),
        id_sq_h={unit[A]: K.id2[unit[A]] for A in K.objects},
        id_sq_v=dict(K.id2),
        name=f"H{K.name}",
    )


def validate_2category(K):
    rep = ValidationReport()
    for a, (f, g) in K.cells2.items():
        rep.count("boundary")
        if f not in K.mor1 or g not in K.mor1 or K.mor1[f] != K.mor1[g]:
            rep.add("boundary", {"cell2": a, "reason": "source and target not parallel"})
    if not rep.ok:
        return rep
    rep.extend(validate(_horizontal_embedding(K)))
    return rep


def embed_2category(K, direction="h"):
    """The double category with only identity vertical (``h``) or horizontal (``v``) cells."""
    rep = validate_2category(K)
    if not rep.ok:
        raise Invalid2Category("not a valid 2-category", witness=[v.to_json() for v in rep.violations[:5]])
    D = _horizontal_embedding(K)
    if direction == "h":
        return D
    if direction == "v":
        E = view(D, "transpose")
        return TableDoubleCategory(**{**_fields(E), "name": f"V{K.name}"})
    raise KindMismatch(f"unknown embedding direction {direction!r}")


def _fields(D):
    return {k: getattr(D, k) for k in (
        "objects", "hmors", "vmors", "squares", "hcomp_h", "vcomp_v", "hcomp_sq",
        "vcomp_sq", "id_h", "id_v", "id_sq_h", "id_sq_v", "name")}


def horizontal_2category(D):
    """Read ``H(D)`` back as a 2-category (squares become 2-cells)."""
    H = view(D, "H")
    return Finite2Category(
        objects=H.objects,
        mor1=dict(H.hmors),
        comp1=dict(H.hcomp_h),
        id1=dict(H.id_h),
        cells2={a: (b.top, b.bottom) for a, b in H.squares.items()},
        vcomp2=dict(H.vcomp_sq),
        hcomp2=dict(H.hcomp_sq),
        id2=dict(H.id_sq_v),
        name=f"H({D.name})",
    )


# --------------------------------------------------------------------------
# isomorphisms


def check_isomorphism(D, E, maps):
    """Is ``maps`` (kind -> dict) a structure-preserving bijection ``D -> E``?

    Returns a report; an empty one means the maps form an isomorphism.
    """
    rep = ValidationReport()
    src = {"obj": set(D.objects), "hmor": set(D.hmors), "vmor": set(D.vmors), "sq": set(D.squares)}
    tgt = {"obj": set(E.objects), "hmor": set(E.hmors), "vmor": set(E.vmors), "sq": set(E.squares)}
    for kind in KINDS:
        m = maps.get(kind, {})
        rep.count("bijection")
        if set(m) != src[kind]:
            rep.add("bijection", {"kind": kind, "reason": "domain",
                                  "missing": ordered(src[kind] - set(m))[:5]})
            continue
        image = list(m.values())
        if len(set(image)) != len(image) or set(image) != tgt[kind]:
            rep.add("bijection", {"kind": kind, "reason": "not onto or not injective",
                                  "unhit": ordered(tgt[kind] - set(image))[:5]})
    if not rep.ok:
        return rep
    o, h, v, s = maps["obj"], maps["hmor"], maps["vmor"], maps["sq"]
    for f, (a, b) in D.hmors.items():
        rep.count("frame")
        if E.hmors[h[f]] != (o[a], o[b]):
            rep.add("frame", {"hmor": f})
    for j, (a, b) in D.vmors.items():
        rep.count("frame")
        if E.vmors[v[j]] != (o[a], o[b]):
            rep.add("frame", {"vmor": j})
    for x, b in D.squares.items():
        rep.count("frame")
        if E.squares[s[x]] != Boundary(h[b.top], h[b.bottom], v[b.left], v[b.right]):
            rep.add("frame", {"sq": x})
    for name, m1, m2 in (("hcomp_h", h, h), ("vcomp_v", v, v),
                         ("hcomp_sq", s, s), ("vcomp_sq", s, s)):
        tD, tE = getattr(D, name), getattr(E, name)
        for (x, y), z in tD.items():
            rep.count("composition")
            if tE.get((m1[x], m1[y])) != m2[z]:
                rep.add("composition", {"table": name, "entry": [x, y, z]})
    for name, m1, m2 in (("id_h", o, h), ("id_v", o, v), ("id_sq_h", v, s), ("id_sq_v", h, s)):
        for x, y in getattr(D, name).items():
            rep.count("identities")
            if getattr(E, name).get(m1[x]) != m2[y]:
                rep.add("identities", {"table": name, "cell": x})
    return rep


def find_isomorphism(D, E, budget=200000):
    """Backtracking search for an isomorphism ``D -> E``; ``None`` if there is none."""
    if D.sizes() != E.sizes():
        return None
    nodes = [0]

    def obj_sig(X, A):
        return (len(X.hom_h(A, A)), len(X.hom_v(A, A)),
                sum(1 for s, _ in X.hmors.values() if s == A),
                sum(1 for _, t in X.hmors.values() if t == A),
                sum(1 for s, _ in X.vmors.values() if s == A),
                sum(1 for _, t in X.vmors.values() if t == A))

    def search_objects(i, o, used):
        if i == len(D.objects):
            r = extend(o)
            if r is not None:
                yield r
            return
        A = D.objects[i]
        sig = obj_sig(D, A)
        for B in E.objects:
            if B in used or obj_sig(E, B) != sig:
                continue
            o[A] = B
            used.add(B)
            yield from search_objects(i + 1, o, used)
            used.discard(B)
            del o[A]

    def match_layer(items, candidates, consistent, m, used):
        # assigns items one by one; generator of complete assignments
        def go(i):
            nodes[0] += 1
            if nodes[0] > budget:
                from .errors import SearchBudgetExceeded
                raise SearchBudgetExceeded("isomorphism search budget exhausted")
            if i == len(items):
                yield dict(m)
                return
            x = items[i]
            for y in candidates(x):
                if y in used:
                    continue
                m[x] = y
                used.add(y)
                if consistent(x):
                    yield from go(i + 1)
                used.discard(y)
                del m[x]
        return go(0)

    def extend(o):
        idh = {D.id_h[A]: E.id_h[o[A]] for A in D.objects}
        idv = {D.id_v[A]: E.id_v[o[A]] for A in D.objects}

        def hcands(f):
            if f in idh:
                return [idh[f]]
            a, b = D.hmors[f]
            return [g for g in E.hom_h(o[a], o[b]) if g not in idh.values()]

        def vcands(j):
            if j in idv:
                return [idv[j]]
            a, b = D.vmors[j]
            return [k for k in E.hom_v(o[a], o[b]) if k not in idv.values()]

        hitems = ordered(D.hmors)
        vitems = ordered(D.vmors)

        def table_ok(table_d, table_e, m, x):
            for (p, q), r in table_d.items():
                if x not in (p, q, r):
                    continue
                if p in m and q in m and r in m and table_e.get((m[p], m[q])) != m[r]:
                    return False
            return True

        hcomp_by = defaultdict(dict)
        for k, r in D.hcomp_h.items():
            for c in (k[0], k[1], r):
                hcomp_by[c][k] = r
        vcomp_by = defaultdict(dict)
        for k, r in D.vcomp_v.items():
            for c in (k[0], k[1], r):
                vcomp_by[c][k] = r

        hm_cur, vm_cur = {}, {}
        h_ok = lambda x: table_ok(hcomp_by[x], E.hcomp_h, hm_cur, x)
        v_ok = lambda x: table_ok(vcomp_by[x], E.vcomp_v, vm_cur, x)
        for hm in match_layer(hitems, hcands, h_ok, hm_cur, set()):
            vm_cur.clear()
            for vm in match_layer(vitems, vcands, v_ok, vm_cur, set()):
                sq = match_squares(o, hm, vm)
                if sq is not None:
                    return {"obj": dict(o), "hmor": hm, "vmor": vm, "sq": sq}
        return None

    def match_squares(o, hm, vm):
        items = ordered(D.squares)
        hsq_by = defaultdict(dict)
        for k, r in D.hcomp_sq.items():
            for c in (k[0], k[1], r):
                hsq_by[c][k] = r
        vsq_by = defaultdict(dict)
        for k, r in D.vcomp_sq.items():
            for c in (k[0], k[1], r):
                vsq_by[c][k] = r

        def cands(x):
            b = D.squares[x]
            return E.squares_framed(hm[b.top], hm[b.bottom], vm[b.left], vm[b.right])

        cur = {}

        def ok(x):
            for idx, table in ((hsq_by, E.hcomp_sq), (vsq_by, E.vcomp_sq)):
                for (p, q), r in idx[x].items():
                    if p in cur and q in cur and r in cur and table.get((cur[p], cur[q])) != cur[r]:
                        return False
            return True

        for sq in match_layer(items, cands, ok, cur, set()):
            maps = {"obj": o, "hmor": hm, "vmor": vm, "sq": sq}
            if check_isomorphism(D, E, maps).ok:
                return sq
        return None

    for found in search_objects(0, {}, set()):
        return found
    return None


# --------------------------------------------------------------------------
# JSON


TABLE_KEYS = ("hcomp_h", "vcomp_v", "hcomp_sq", "vcomp_sq")
ID_KEYS = ("id_h", "id_v", "id_sq_h", "id_sq_v")


def to_json(D):
    s = id_to_str
    out = {
        "objects": [s(x) for x in D.objects],
        "hmors": {s(k): [s(a), s(b)] for k, (a, b) in D.hmors.items()},
        "vmors": {s(k): [s(a), s(b)] for k, (a, b) in D.vmors.items()},
        "squares": {s(k): {"top": s(b.top), "bottom": s(b.bottom),
                           "left": s(b.left), "right": s(b.right)}
                    for k, b in D.squares.items()},
    }
    for key in TABLE_KEYS:
        out[key] = [[s(a), s(b), s(c)] for (a, b), c in sorted(
            getattr(D, key).items(), key=lambda kv: sort_key(kv[0]))]
    for key in ID_KEYS:
        out[key] = {s(k): s(v) for k, v in getattr(D, key).items()}
    if D.name:
        out["name"] = D.name
    return out


def from_json(data):
    """Parse the JSON form; raises :class:`MalformedInput` for unparseable data."""
    if not isinstance(data, dict):
        raise MalformedInput("double category JSON must be an object")
    missing = [k for k in ("objects", "hmors", "vmors", "squares") + TABLE_KEYS + ID_KEYS
               if k not in data]
    if missing:
        raise MalformedInput(f"missing keys {missing}", witness=missing)
    try:
        squares = {}
        for k, b in data["squares"].items():
            if isinstance(b, dict):
                squares[k] = Boundary(b["top"], b["bottom"], b["left"], b["right"])
            else:
                squares[k] = Boundary(*b)
        tables = {}
        for key in TABLE_KEYS:
            t = {}
            for entry in data[key]:
                a, b, c = entry
                t[(a, b)] = c
            tables[key] = t
        hm = {k: tuple(v) for k, v in data["hmors"].items()}
        vm = {k: tuple(v) for k, v in data["vmors"].items()}
        if any(len(v) != 2 for v in list(hm.values()) + list(vm.values())):
            raise ValueError("morphisms need exactly two endpoints")
        return TableDoubleCategory(
            objects=list(data["objects"]), hmors=hm, vmors=vm, squares=squares,
            id_h=dict(data["id_h"]), id_v=dict(data["id_v"]),
            id_sq_h=dict(data["id_sq_h"]), id_sq_v=dict(data["id_sq_v"]),
            name=data.get("name", ""), **tables,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad double category data: {exc}")


def load(path):
    try:
        with open(path) as fh:
            return from_json(json.load(fh))
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: not JSON ({exc})")


def dump(D, path):
    with open(path, "w") as fh:
        json.dump(to_json(D), fh, indent=1, sort_keys=True)
