"""Double functors and natural transformations between table double categories."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import (
    Boundary,
    TableDoubleCategory,
    ValidationReport,
    from_json,
    id_to_str,
    to_json,
    view,
)
from .errors import MalformedInput, NotEnumerable, UnknownCell


@dataclass
class DoubleFunctorTable:
    dom: TableDoubleCategory
    cod: TableDoubleCategory
    on_obj: dict
    on_hmor: dict
    on_vmor: dict
    on_square: dict
    name: str = field(default="", compare=False)

    def obj(self, x):
        return self._get(self.on_obj, x, "obj")

    def hmor(self, f):
        return self._get(self.on_hmor, f, "hmor")

    def vmor(self, j):
        return self._get(self.on_vmor, j, "vmor")

    def sq(self, a):
        return self._get(self.on_square, a, "sq")

    def _get(self, m, x, kind):
        try:
            return m[x]
        except KeyError:
            raise UnknownCell(f"functor {self.name!r} undefined on {kind} {x!r}")

    def maps(self):
        return {"obj": self.on_obj, "hmor": self.on_hmor, "vmor": self.on_vmor, "sq": self.on_square}

    def to_json(self, with_categories=True):
        s = id_to_str
        out = {
            "on_obj": {s(k): s(v) for k, v in self.on_obj.items()},
            "on_hmor": {s(k): s(v) for k, v in self.on_hmor.items()},
            "on_vmor": {s(k): s(v) for k, v in self.on_vmor.items()},
            "on_square": {s(k): s(v) for k, v in self.on_square.items()},
        }
        if with_categories:
            out["dom"] = to_json(self.dom)
            out["cod"] = to_json(self.cod)
        return out

    @classmethod
    def from_json(cls, data, dom=None, cod=None):
        try:
            dom = dom if dom is not None else from_json(data["dom"])
            cod = cod if cod is not None else from_json(data["cod"])
            return cls(dom, cod, dict(data["on_obj"]), dict(data["on_hmor"]),
                       dict(data["on_vmor"]), dict(data["on_square"]), data.get("name", ""))
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad functor data: {exc}")


def identity_functor(D):
    return DoubleFunctorTable(D, D, {x: x for x in D.objects}, {f: f for f in D.hmors},
                              {j: j for j in D.vmors}, {a: a for a in D.squares}, name="1")


def compose_functors(F, G):
    """``G`` after ``F``."""
    return DoubleFunctorTable(
        F.dom, G.cod,
        {x: G.obj(y) for x, y in F.on_obj.items()},
        {x: G.hmor(y) for x, y in F.on_hmor.items()},
        {x: G.vmor(y) for x, y in F.on_vmor.items()},
        {x: G.sq(y) for x, y in F.on_square.items()},
        name=f"{G.name}{F.name}",
    )


def transpose_functor(F):
    return DoubleFunctorTable(view(F.dom, "transpose"), view(F.cod, "transpose"),
                              dict(F.on_obj), dict(F.on_vmor), dict(F.on_hmor),
                              dict(F.on_square), name=f"{F.name}^t")


def horop_functor(F):
    return DoubleFunctorTable(view(F.dom, "horop"), view(F.cod, "horop"),
                              dict(F.on_obj), dict(F.on_hmor), dict(F.on_vmor),
                              dict(F.on_square), name=f"{F.name}^horop")


def validate_functor(F):
    """Exhaustive check that ``F`` preserves frames, identities and composition."""
    D, E = F.dom, F.cod
    rep = ValidationReport()
    for kind, m, cells, target in (
        ("obj", F.on_obj, D.objects, set(E.objects)),
        ("hmor", F.on_hmor, D.hmors, E.hmors),
        ("vmor", F.on_vmor, D.vmors, E.vmors),
        ("sq", F.on_square, D.squares, E.squares),
    ):
        for x in cells:
            rep.count("totality")
            if x not in m:
                rep.add("totality", {"kind": kind, "cell": x})
            elif m[x] not in target:
                rep.add("totality", {"kind": kind, "cell": x, "image": m[x], "reason": "unknown image"})
    if not rep.ok:
        return rep
    o, h, v, s = F.on_obj, F.on_hmor, F.on_vmor, F.on_square
    for f, (a, b) in D.hmors.items():
        rep.count("boundary")
        if E.hmors[h[f]] != (o[a], o[b]):
            rep.add("boundary", {"hmor": f})
    for j, (a, b) in D.vmors.items():
        rep.count("boundary")
        if E.vmors[v[j]] != (o[a], o[b]):
            rep.add("boundary", {"vmor": j})
    for x, b in D.squares.items():
        rep.count("boundary")
        if E.squares[s[x]] != Boundary(h[b.top], h[b.bottom], v[b.left], v[b.right]):
            rep.add("boundary", {"sq": x, "image": s[x]})
    for table, m in (("id_h", h), ("id_v", v)):
        for a, c in getattr(D, table).items():
            rep.count("identities")
            if getattr(E, table)[o[a]] != m[c]:
                rep.add("identities", {"table": table, "obj": a})
    for table, m in (("id_sq_h", v), ("id_sq_v", h)):
        for c, x in getattr(D, table).items():
            rep.count("identities")
            if getattr(E, table)[m[c]] != s[x]:
                rep.add("identities", {"table": table, "cell": c})
    for table, m in (("hcomp_h", h), ("vcomp_v", v), ("hcomp_sq", s), ("vcomp_sq", s)):
        tE = getattr(E, table)
        for (x, y), z in getattr(D, table).items():
            rep.count("composition")
            if tE.get((m[x], m[y])) != m[z]:
                rep.add("composition", {"table": table, "entry": [x, y, z]})
    return rep


@dataclass
class HorNatTable:
    """Horizontal transformation ``source => target``.

    ``at_obj[A]`` is a horizontal morphism ``FA -> GA``; ``at_vmor[j]`` is a
    square with left side ``Fj`` and right side ``Gj``.
    """

    source: DoubleFunctorTable
    target: DoubleFunctorTable
    at_obj: dict
    at_vmor: dict
    name: str = field(default="", compare=False)

    def to_json(self):
        s = id_to_str
        return {"at_obj": {s(k): s(v) for k, v in self.at_obj.items()},
                "at_vmor": {s(k): s(v) for k, v in self.at_vmor.items()}}

    @classmethod
    def from_json(cls, data, source, target):
        try:
            return cls(source, target, dict(data["at_obj"]), dict(data["at_vmor"]))
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"bad transformation data: {exc}")


@dataclass
class VertNatTable:
    """Vertical transformation: ``at_obj[A]`` is a vertical morphism and
    ``at_hmor[f]`` a square with top ``Ff`` and bottom ``Gf``."""

    source: DoubleFunctorTable
    target: DoubleFunctorTable
    at_obj: dict
    at_hmor: dict
    name: str = field(default="", compare=False)


def validate_hornat(theta):
    F, G = theta.source, theta.target
    D, E = F.dom, F.cod
    rep = ValidationReport()
    if G.dom is not D and G.dom != D or G.cod is not E and G.cod != E:
        rep.add("BoundaryMismatch", {"reason": "source and target functors are not parallel"})
        return rep
    bad = set()
    for A in D.objects:
        rep.count("BoundaryMismatch")
        t = theta.at_obj.get(A)
        if t not in E.hmors or E.hmors[t] != (F.obj(A), G.obj(A)):
            rep.add("BoundaryMismatch", {"obj": A, "component": t})
            bad.add(("obj", A))
    for j, (a, c) in D.vmors.items():
        rep.count("BoundaryMismatch")
        t = theta.at_vmor.get(j)
        if ("obj", a) in bad or ("obj", c) in bad:
            bad.add(("vmor", j))
            continue
        want = Boundary(theta.at_obj[a], theta.at_obj[c], F.vmor(j), G.vmor(j))
        if t not in E.squares or E.squares[t] != want:
            rep.add("BoundaryMismatch", {"vmor": j, "component": t})
            bad.add(("vmor", j))
    good_v = lambda j: ("vmor", j) not in bad
    for A in D.objects:
        j = D.id_v[A]
        if not good_v(j):
            continue
        rep.count("identity")
        if theta.at_vmor[j] != E.iv(theta.at_obj[A]):
            rep.add("identity", {"obj": A})
    for (j, k), jk in D.vcomp_v.items():
        if not (good_v(j) and good_v(k) and good_v(jk)):
            continue
        rep.count("vertical")
        if E.sq_v(theta.at_vmor[j], theta.at_vmor[k]) != theta.at_vmor[jk]:
            rep.add("vertical", {"pair": [j, k]})
    for f, (a, b) in D.hmors.items():
        if ("obj", a) in bad or ("obj", b) in bad:
            continue
        rep.count("naturality")
        if E.comp_h(F.hmor(f), theta.at_obj[b]) != E.comp_h(theta.at_obj[a], G.hmor(f)):
            rep.add("naturality", {"hmor": f})
    for x, bd in D.squares.items():
        if not (good_v(bd.left) and good_v(bd.right)):
            continue
        rep.count("naturality")
        lhs = E.sq_h(F.sq(x), theta.at_vmor[bd.right])
        rhs = E.sq_h(theta.at_vmor[bd.left], G.sq(x))
        if lhs != rhs:
            rep.add("naturality", {"sq": x, "lhs": lhs, "rhs": rhs})
    return rep


def vertnat_as_hornat(theta):
    """Read a vertical transformation as a horizontal one between transposes."""
    return HorNatTable(transpose_functor(theta.source), transpose_functor(theta.target),
                       dict(theta.at_obj), dict(theta.at_hmor), name=f"{theta.name}^t")


def validate_vertnat(theta):
    return validate_hornat(vertnat_as_hornat(theta))


def identity_hornat(F):
    E = F.cod
    return HorNatTable(F, F, {A: E.id_h[F.obj(A)] for A in F.dom.objects},
                       {j: E.ih(F.vmor(j)) for j in F.dom.vmors}, name=f"1_{F.name}")


def compose_hornat(theta, psi):
    """``theta`` then ``psi`` (components composed left to right)."""
    E = theta.source.cod
    return HorNatTable(
        theta.source, psi.target,
        {A: E.comp_h(theta.at_obj[A], psi.at_obj[A]) for A in theta.at_obj},
        {j: E.sq_h(theta.at_vmor[j], psi.at_vmor[j]) for j in theta.at_vmor},
        name=f"{theta.name}.{psi.name}",
    )


def whisker(theta, H, side):
    """``post``: apply ``H`` after ``theta``; ``pre``: precompose ``theta`` with ``H``."""
    if side == "post":
        return HorNatTable(
            compose_functors(theta.source, H), compose_functors(theta.target, H),
            {A: H.hmor(t) for A, t in theta.at_obj.items()},
            {j: H.sq(t) for j, t in theta.at_vmor.items()},
            name=f"{H.name}{theta.name}",
        )
    if side == "pre":
        return HorNatTable(
            compose_functors(H, theta.source), compose_functors(H, theta.target),
            {A: theta.at_obj[H.obj(A)] for A in H.dom.objects},
            {j: theta.at_vmor[H.vmor(j)] for j in H.dom.vmors},
            name=f"{theta.name}{H.name}",
        )
    raise ValueError(f"unknown whisker side {side!r}")


def transformations_equal(a, b):
    return a.at_obj == b.at_obj and a.at_vmor == b.at_vmor


# --------------------------------------------------------------------------
# procedural backends


class ProceduralFunctor:
    """A double functor given by callables, for backends that cannot be enumerated."""

    def __init__(self, obj, hmor, vmor, sq, name=""):
        self.obj, self.hmor, self.vmor, self.sq, self.name = obj, hmor, vmor, sq, name


def validate_functor_sampled(F, dom, cod, sampler, budget=200, seed=0):
    """Check functoriality on ``budget`` random composable configurations.

    ``dom`` and ``cod`` are backends exposing ``comp_h``, ``comp_v``,
    ``sq_h``, ``sq_v``, ``id_h``, ``id_v``, ``ih``, ``iv`` and ``boundary``.
    ``sampler(rng)`` returns one of ``("comp_h", f, g)``, ``("comp_v", j, k)``,
    ``("sq_h", a, b)``, ``("sq_v", a, b)``, ``("id_h", A)``, ``("id_v", A)``,
    ``("ih", j)``, ``("iv", f)`` or ``("frame", a)``.
    """
    if not callable(sampler):
        raise NotEnumerable("sampled validation needs a sampler")
    rng = random.Random(seed)
    rep = ValidationReport()
    image = {"comp_h": F.hmor, "comp_v": F.vmor, "sq_h": F.sq, "sq_v": F.sq,
             "id_h": F.hmor, "id_v": F.vmor, "ih": F.sq, "iv": F.sq}
    arg_image = {"comp_h": F.hmor, "comp_v": F.vmor, "sq_h": F.sq, "sq_v": F.sq,
                 "id_h": F.obj, "id_v": F.obj, "ih": F.vmor, "iv": F.hmor}
    for n in range(budget):
        case = sampler(rng)
        op, args = case[0], case[1:]
        rep.count(op)
        if op == "frame":
            (a,) = args
            b = dom.boundary(a)
            want = (F.hmor(b[0]), F.hmor(b[1]), F.vmor(b[2]), F.vmor(b[3]))
            if tuple(cod.boundary(F.sq(a))) != want:
                rep.add("frame", {"sample": n})
            continue
        lhs = image[op](getattr(dom, op)(*args))
        rhs = getattr(cod, op)(*[arg_image[op](x) for x in args])
        if lhs != rhs:
            rep.add(op, {"sample": n})
    return rep
