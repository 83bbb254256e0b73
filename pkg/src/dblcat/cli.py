"""Command line front end: one verb per command, JSON-lines reports on stdout.

Exit status 0 means every check passed, 1 that checks ran and some failed,
2 a usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core
from .adjunction import (check_param_iso, check_phi, check_unit_counit, is_universal_square,
                         phi_from_uc, phi_round_trip, right_adjoint_via_representability)
from .errors import CyclicGraph, DblCatError, MalformedInput, NotUniversal
from .folding import folding_from_json, holonomy_ff_check, quintet, validate_folding
from .functors import DoubleFunctorTable, HorNatTable, validate_functor
from .monads import endmnd, graphs
from .presheaf import LaxPresheaf, enumerate_hornats, represented, validate_lax, yoneda_forward

DEFAULT_BUDGET = 100000
# criteria that draw random samples and so need an explicit seed
SAMPLED = {4, 5}


class Reporter:
    def __init__(self, stream):
        self.stream = stream
        self.failed = False

    def emit(self, check, passed, witness=None):
        rec = {"check": check, "status": "pass" if passed else "fail"}
        if witness is not None:
            rec["witness"] = core.jsonable(witness)
        self.stream.write(json.dumps(rec, sort_keys=True) + "\n")
        self.failed |= not passed
        return passed

    def report(self, prefix, rep):
        """One record per check family of a ValidationReport."""
        bad = rep.by_check()
        names = sorted(set(rep.checked) | set(bad))
        if not names:
            self.emit(prefix, True)
        for name in names:
            if name in bad:
                first = next(v for v in rep.violations if v.check == name)
                self.emit(f"{prefix}.{name}", False, {"violations": bad[name], "first": first.witness})
            else:
                self.emit(f"{prefix}.{name}", True, {"checked": rep.checked.get(name, 0)})
        return rep.ok


def _read(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path} is not JSON: {exc}")


def _load_dbl(path):
    return core.from_json(_read(path))


def _reuse(D, *known):
    """Share an already loaded category when the file repeats it."""
    for E in known:
        if E is not None and core.to_json(E) == core.to_json(D):
            return E
    return D


def _load_functor(path, dom=None, cod=None):
    data = _read(path)
    d = _reuse(core.from_json(data["dom"]), dom, cod) if "dom" in data else dom
    c = _reuse(core.from_json(data["cod"]), cod, dom) if "cod" in data else cod
    if d is None or c is None:
        raise MalformedInput(f"{path}: functor without dom/cod")
    return DoubleFunctorTable.from_json(data, d, c)


# --------------------------------------------------------------------------
# verbs


def cmd_validate(args, out):
    for path in args.files:
        D = _load_dbl(path)
        out.report(f"validate[{path}]", core.validate(D))


def _adjunction_parts(args):
    F = _load_functor(args.f)
    G = _load_functor(args.g, F.cod, F.dom) if args.g else None
    unit = counit = None
    if G is not None and args.unit and args.counit:
        from .functors import compose_functors, identity_functor
        unit = HorNatTable.from_json(_read(args.unit), identity_functor(F.dom), compose_functors(F, G))
        counit = HorNatTable.from_json(_read(args.counit), compose_functors(G, F), identity_functor(F.cod))
    return F, G, unit, counit


def cmd_adjoint(args, out):
    F, G, unit, counit = _adjunction_parts(args)
    out.report("functor.F", validate_functor(F))
    if args.mode == "repr":
        transcript = []
        found = right_adjoint_via_representability(F, budget=args.budget, transcript=transcript)
        if found is None:
            out.emit("right adjoint", False, {"transcript": transcript})
            return
        R = found[0]
        out.emit("right adjoint", True, {"on_obj": R.on_obj, "on_vmor": R.on_vmor})
        if G is not None:
            out.emit("agrees with G", R.on_obj == G.on_obj and R.on_vmor == G.on_vmor,
                     {"found": R.on_vmor, "given": G.on_vmor})
        return
    if G is None or unit is None:
        raise MalformedInput(f"mode {args.mode} needs --g, --unit and --counit")
    rep = check_unit_counit(F, G, unit, counit)
    if not out.report("unit_counit", rep) or args.mode == "uc":
        if args.mode == "uc":
            for j in core.ordered(F.dom.vmors):
                out.emit("unit universal", is_universal_square(G, j, F.vmor(j), unit.at_vmor[j]), {"j": j})
        return
    phi = phi_from_uc(F, G, unit, counit)
    if args.mode == "phi":
        out.report("phi", check_phi(phi))
        out.emit("phi round trip", phi_round_trip(phi))
    else:
        rep, theta = check_param_iso(phi)
        out.report("param_iso", rep)
        out.emit("middle maps equal phi", all(theta.at_vmor[p].table == phi.table[p] for p in phi.table))


def cmd_yoneda(args, out):
    D = _load_dbl(args.base)
    K = LaxPresheaf.from_json(_read(args.presheaf), D)
    out.report("presheaf", validate_lax(K))
    R = args.object
    if R not in D.objects:
        raise MalformedInput(f"unknown object {R!r}")
    alphas = list(enumerate_hornats(represented(D, R), K, budget=args.budget))
    elems = K.on_obj[R]
    images = [yoneda_forward(a, R) for a in alphas]
    out.emit("count equals |K(R)|", len(alphas) == len(elems),
             {"transformations": len(alphas), "elements": len(elems)})
    out.emit("forward bijective", len(set(images)) == len(images) and set(images) == set(elems))


def cmd_freecat(args, out):
    G = graphs.Graph.from_json(_read(args.graph))
    try:
        C = graphs.free_category(G)
    except CyclicGraph as exc:
        out.emit("acyclic", False, {"cycle": exc.witness})
        return
    out.emit("acyclic", True)
    out.report("category", C.validate())
    out.emit("category", True, {"objects": len(C.objects), "morphisms": len(C.morphisms)})
    if args.out_category:
        with open(args.out_category, "w") as fh:
            json.dump(C.to_json(), fh, indent=1, sort_keys=True)


def cmd_quintet(args, out):
    K = core.Finite2Category.from_json(_read(args.k))
    out.report("2-category", core.validate_2category(K))
    Q, phi = quintet(K, args.variant)
    out.report("double category", core.validate(Q))
    out.report(phi.kind, validate_folding(phi))
    out.report("holonomy", holonomy_ff_check(phi))
    if args.endmnd:
        for monadic in (False, True):
            rep, _, EQ, _ = endmnd.end_quintet_iso(K, monadic)
            out.report("Mnd iso" if monadic else "End iso", rep)
    out.emit("quintet", True, {"sizes": Q.sizes()})
    if args.out_dblcat:
        core.dump(Q, args.out_dblcat)


def cmd_fold(args, out):
    D = _load_dbl(args.base)
    phi = folding_from_json(_read(args.folding), D)
    want = "cofolding" if args.cofolding else "folding"
    if phi.kind != want:
        raise MalformedInput(f"{args.folding} holds a {phi.kind}, expected a {want}")
    out.report(want, validate_folding(phi))


def cmd_em(args, out):
    D = _load_dbl(args.base)
    res = endmnd.em_check(D, budget=args.budget)
    if not res.found:
        out.emit("eilenberg-moore", False, {"transcript": res.transcript})
        return
    G = res.witness[0]
    out.emit("eilenberg-moore", True, {"objects": {str(M[1]): G.obj(M) for M in G.dom.objects}})


def _hfree(data, D, mnd):
    out = {}
    for P, v in data.items():
        if isinstance(v, str):
            out.update(endmnd.hfree_from_choice(D, {P: v}, mnd))
        else:
            out[P] = (core.Key(("m", v["free"], v["mu"], v["eta"])), v["iota"])
    return out


def cmd_freemonads(args, out):
    D = _load_dbl(args.base)
    cof = folding_from_json(_read(args.cofolding), D)
    if cof.kind != "cofolding":
        raise MalformedInput(f"{args.cofolding} holds a {cof.kind}")
    end = endmnd.build_end(D)
    mnd = endmnd.build_mnd(D, end)
    try:
        hfree = _hfree(_read(args.hfree), D, mnd)
        w = endmnd.construct_free_monads(D, cof, hfree, end, mnd)
    except NotUniversal as exc:
        out.emit("free monads", False, {"error": str(exc), "witness": exc.witness})
        return
    out.report("free monads", w.report)


def cmd_accept(args, out):
    from .criteria import CRITERIA, TITLES
    numbers = args.numbers or sorted(CRITERIA)
    for n in numbers:
        if n not in CRITERIA:
            raise MalformedInput(f"no criterion {n}")
    if args.seed is None and SAMPLED & set(numbers):
        raise MalformedInput(f"criteria {sorted(SAMPLED & set(numbers))} sample at random; pass --seed")
    for n in numbers:
        o = CRITERIA[n](seed=args.seed or 0)
        out.emit(f"criterion {n}: {TITLES[n]}", o.ok, o.to_json()["witness"])


# --------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="dblcat", description="Finite double categories: checks and constructions.")
    p.add_argument("--seed", type=int, help="seed for sampled checks (required when any are run)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search budget")
    p.add_argument("--out", help="write the report here instead of stdout")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("validate", help="law checks on double category files")
    s.add_argument("files", nargs="+")
    s.set_defaults(run=cmd_validate)

    s = sub.add_parser("adjoint", help="adjunction checks")
    s.add_argument("--f", required=True)
    s.add_argument("--g")
    s.add_argument("--unit")
    s.add_argument("--counit")
    s.add_argument("--mode", choices=["uc", "phi", "repr", "param"], default="uc")
    s.set_defaults(run=cmd_adjoint)

    s = sub.add_parser("yoneda", help="transformations out of a representable")
    s.add_argument("--base", required=True)
    s.add_argument("--object", required=True)
    s.add_argument("--presheaf", required=True)
    s.set_defaults(run=cmd_yoneda)

    s = sub.add_parser("freecat", help="free category on an acyclic graph")
    s.add_argument("graph")
    s.add_argument("--out-category")
    s.set_defaults(run=cmd_freecat)

    s = sub.add_parser("quintet", help="quintets of a 2-category and their folding")
    s.add_argument("--k", required=True)
    s.add_argument("--variant", choices=["direct", "inverse"], default="direct")
    s.add_argument("--endmnd", action="store_true", help="also compare End and Mnd with quintets")
    s.add_argument("--out-dblcat")
    s.set_defaults(run=cmd_quintet)

    s = sub.add_parser("fold", help="folding or cofolding axioms")
    s.add_argument("--base", required=True)
    s.add_argument("--folding", required=True)
    s.add_argument("--cofolding", action="store_true")
    s.set_defaults(run=cmd_fold)

    s = sub.add_parser("em", help="Eilenberg-Moore objects via representability")
    s.add_argument("--base", required=True)
    s.set_defaults(run=cmd_em)

    s = sub.add_parser("freemonads", help="free monads from horizontal free monads")
    s.add_argument("--base", required=True)
    s.add_argument("--cofolding", required=True)
    s.add_argument("--hfree", required=True)
    s.set_defaults(run=cmd_freemonads)

    s = sub.add_parser("accept", help="run acceptance criteria on the bundled fixtures")
    s.add_argument("numbers", nargs="*", type=int)
    s.set_defaults(run=cmd_accept)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    stream = open(args.out, "w") if args.out else sys.stdout
    out = Reporter(stream)
    try:
        args.run(args, out)
    except (DblCatError, KeyError, ValueError) as exc:
        witness = getattr(exc, "witness", None)
        out.emit("input", False, {"error": type(exc).__name__, "message": str(exc), "witness": witness})
        return 2
    finally:
        if args.out:
            stream.close()
    return 1 if out.failed else 0


if __name__ == "__main__":
    sys.exit(main())
