"""Command-line workbench.

Exit codes: 0 pass or informational, 1 a check failed (with witnesses),
2 usage, parse or validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import errors as E
from .algebra import (
    GradedAlgebra,
    GradedHom,
    check_grading,
    find_unit,
    finite_inverse_limit,
    homogeneous_inverse,
    identity_hom,
    inverse_feasibility,
    validate_algebra,
)
from .enveloping import check_ideal_graded, ideal_truncation, pbw_verify, universal_property_check
from .files import Diagram, Loader, algebra_to_json, dumps, scalar_to_json, vector_to_json
from .functors import (
    DeformationData,
    adjunction_phi_roundtrip,
    adjunction_psi_roundtrip,
    coarsen,
    deform,
    group_ring_lift,
    induce,
    opposite,
    restrict,
)
from .groups import GroupHom, GroupTable, NormalSubgroup, normal_subgroup, quotient_group
from .linear import Vector
from .tensor import DEFAULT_DEPTH, GradedLieAlgebra, commutator_lie, validate_lie

PASS, FAIL, INFO = "pass", "fail", "informational"


@dataclass
class WorkspaceConfig:
    """Named definition files plus run defaults."""

    paths: dict = field(default_factory=dict)
    depth: int = DEFAULT_DEPTH
    output_format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.depth < 1:
            raise E.ValidationError("depth must be at least 1", witness=self.depth)
        if self.output_format not in ("text", "json"):
            raise E.ValidationError("output_format must be text or json", witness=self.output_format)
        for name, p in self.paths.items():
            if not os.path.exists(p):
                raise E.ValidationError(f"workspace file for {name!r} does not exist", file=p)

    @classmethod
    def load(cls, path: str) -> "WorkspaceConfig":
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        root = os.path.dirname(path)
        paths = {k: os.path.join(root, v) for k, v in raw.get("paths", {}).items()}
        return cls(paths, raw.get("depth", default_depth()), raw.get("output_format", "text"),
                   raw.get("seed", 0))


def default_depth() -> int:
    env = os.environ.get("GRADEKIT_DEPTH")
    if env:
        try:
            return int(env)
        except ValueError:
            raise E.ValidationError("GRADEKIT_DEPTH must be an integer", witness=env) from None
    return DEFAULT_DEPTH


@dataclass
class CheckReport:
    command: str
    verdict: str
    witnesses: list = field(default_factory=list)
    timing: float = 0.0
    details: dict = field(default_factory=dict)
    output: Optional[dict] = None

    @property
    def exit_code(self) -> int:
        return 1 if self.verdict == FAIL else 0

    def to_json(self) -> dict:
        out = {"command": self.command, "verdict": self.verdict,
               "witnesses": _jsonable(self.witnesses), "timing_ms": round(self.timing, 3)}
        for k, v in self.details.items():
            out[k] = _jsonable(v)
        if self.output is not None:
            out["output"] = self.output
        return out

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.verdict.upper()}"]
        for k, v in self.details.items():
            lines.append(f"  {k}: {_jsonable(v)}")
        for w in self.witnesses[:20]:
            lines.append(f"  witness: {_jsonable(w)}")
        if len(self.witnesses) > 20:
            lines.append(f"  ... {len(self.witnesses) - 20} more witnesses")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, Vector):
        return vector_to_json(x)
    if isinstance(x, Fraction):
        return scalar_to_json(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if hasattr(x, "member"):
        return {"member": x.member, "witness": x.witness}
    return repr(x)


# -- helpers -------------------------------------------------------------

class _Ctx:
    def __init__(self, config: WorkspaceConfig):
        self.config = config
        self.loader = Loader()

    def path(self, p):
        if p in self.config.paths:
            return self.config.paths[p]
        return p

    def load(self, p, expect=None, what="definition"):
        obj = self.loader.load(self.path(p))
        if expect is not None and not isinstance(obj, expect):
            raise E.ValidationError(f"{p} is not a {what}", file=p)
        return obj

    def group_of(self, p) -> GroupTable:
        return self.load(p, GroupTable, "group")

    def subgroup(self, p, G: GroupTable) -> NormalSubgroup:
        N = self.load(p)
        if isinstance(N, list):
            return normal_subgroup(G, N)
        if not isinstance(N, NormalSubgroup):
            raise E.ValidationError(f"{p} is not a subgroup", file=p)
        if N.parent != G:
            raise E.ValidationError("subgroup belongs to a different group", file=p)
        return N


def _emit(args, obj) -> dict:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(obj))
    return obj


def _grading_witnesses(A, rep):
    G = A.group
    return [{"g": G.label(g), "h": G.label(h), "left": i, "right": j, "product": v}
            for g, h, i, j, v in rep.witnesses]


def _depth(args, ctx) -> int:
    d = args.depth if args.depth is not None else ctx.config.depth
    if d < 1:
        raise E.ValidationError("depth must be at least 1", witness=d)
    return d


# -- commands ------------------------------------------------------------

def cmd_check_group(args, ctx):
    G = ctx.group_of(args.group)
    details = {"name": G.name, "order": G.order, "identity": G.identity, "abelian": G.is_abelian()}
    if args.subgroup:
        N = ctx.subgroup(args.subgroup, G)
        Q, _ = quotient_group(G, N)
        details["subgroup"] = list(N.members)
        details["quotient_order"] = Q.order
    return CheckReport("check-group", PASS, details=details)


def cmd_check_graded(args, ctx):
    A = ctx.load(args.algebra, (GradedAlgebra, GradedLieAlgebra), "algebra")
    rep = check_grading(A, args.mode)
    return CheckReport("check-graded", PASS if rep.holds else FAIL, _grading_witnesses(A, rep),
                       details={"mode": rep.mode, "holds": rep.holds})


def cmd_check_lie(args, ctx):
    L = ctx.load(args.lie, GradedLieAlgebra, "Lie algebra")
    rep = validate_lie(L)
    return CheckReport("check-lie", PASS if rep.holds else FAIL, rep.witnesses,
                       details={"lie_valid": rep.lie_valid, "nc_graded": rep.nc_graded})


def cmd_find_unit(args, ctx):
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    validate_algebra(A)
    u = find_unit(A)
    details = {"associative": A.flags["associative"], "unit": u}
    if u is not None:
        details["unit_degrees"] = [A.group.label(g) for g in sorted(u.support_degrees())]
    return CheckReport("find-unit", INFO, details=details)


def cmd_inverse(args, ctx):
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    a = A.e(args.index, Fraction(args.coeff))
    x = homogeneous_inverse(A, a, args.side)
    unconstrained, constrained = inverse_feasibility(A, a, args.side)
    G = A.group
    details = {"element": a, "degree": G.label(a.degree()), "side": args.side, "inverse": x,
               "unconstrained_feasible": unconstrained, "constrained_feasible": constrained}
    witnesses = []
    if unconstrained != constrained:
        witnesses.append("feasibility of constrained and unconstrained systems differs")
    if x is not None:
        details["inverse_degree"] = G.label(x.degree())
        if x.degree() != G.inv(a.degree()):
            witnesses.append("inverse is not of degree g^-1")
    verdict = FAIL if witnesses else (PASS if x is not None else INFO)
    return CheckReport("inverse", verdict, witnesses, details=details)


def _deformation(args, ctx, G):
    if args.deformation:
        d = ctx.load(args.deformation, DeformationData, "deformation")
        if d.group != G:
            raise E.ValidationError("deformation is for a different group")
        return d
    return DeformationData.constant(G, Fraction(args.lam), Fraction(args.mu))


def cmd_deform(args, ctx):
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    D = deform(A, _deformation(args, ctx, A.group))
    return CheckReport("deform", INFO, output=_emit(args, algebra_to_json(D)))


def cmd_opposite(args, ctx):
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    return CheckReport("opposite", INFO, output=_emit(args, algebra_to_json(opposite(A))))


def cmd_restrict(args, ctx):
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    theta = ctx.load(args.hom, GroupHom, "group hom")
    return CheckReport("restrict", INFO, output=_emit(args, algebra_to_json(restrict(A, theta))))


def cmd_induce(args, ctx):
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    theta = ctx.load(args.hom, GroupHom, "group hom")
    return CheckReport("induce", INFO, output=_emit(args, algebra_to_json(induce(A, theta))))


def cmd_coarsen(args, ctx):
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    if args.hom:
        pi = ctx.load(args.hom, GroupHom, "group hom")
    elif args.subgroup:
        _, pi = quotient_group(A.group, ctx.subgroup(args.subgroup, A.group))
    else:
        raise E.ValidationError("coarsen needs --hom or --subgroup")
    return CheckReport("coarsen", INFO, output=_emit(args, algebra_to_json(coarsen(A, pi))))


def cmd_lift(args, ctx):
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    G = ctx.group_of(args.group)
    N = ctx.subgroup(args.subgroup, G)
    d = _deformation(args, ctx, G)
    F = group_ring_lift(A, G, N, d)
    out = F.algebra if args.deformed else F.base
    return CheckReport("lift", INFO, details={"dimension": out.dim},
                       output=_emit(args, algebra_to_json(out)))


def _adjunction_report(name, rep):
    witnesses = list(rep.witnesses)
    details = {"roundtrip": rep.roundtrip, "reverse_roundtrip": rep.reverse_roundtrip,
               "multiplicative": rep.multiplicative,
               "naturality": [{"sample": s, "commutes": ok} for s, ok in rep.naturality]}
    return CheckReport(name, PASS if rep.holds else FAIL, witnesses, details=details)


def _rebase(f: GradedHom, source, target) -> GradedHom:
    return GradedHom(source, target, [v.coeffs for v in f.images])


def cmd_adjunction_phi(args, ctx):
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    theta = ctx.load(args.hom, GroupHom, "group hom")
    A_bar = induce(A, theta)
    B = ctx.load(args.target, GradedAlgebra, "algebra") if args.target else A_bar
    if args.map:
        f = _rebase(ctx.load(args.map, GradedHom, "hom"), A_bar, B)
    elif B is A_bar:
        f = identity_hom(A_bar)
    else:
        raise E.ValidationError("adjunction-phi needs --map when --target is given")
    return _adjunction_report("adjunction-phi", adjunction_phi_roundtrip(A, B, theta, f))


def cmd_adjunction_psi(args, ctx):
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    G = A.group
    N = ctx.subgroup(args.subgroup, G)
    _, pi = quotient_group(G, N)
    A_c = coarsen(A, pi)
    B = ctx.load(args.target, GradedAlgebra, "algebra") if args.target else A_c
    if args.map:
        f = _rebase(ctx.load(args.map, GradedHom, "hom"), A_c, B)
    elif B is A_c:
        f = identity_hom(A_c)
    else:
        raise E.ValidationError("adjunction-psi needs --map when --target is given")
    d = _deformation(args, ctx, G)
    return _adjunction_report("adjunction-psi", adjunction_psi_roundtrip(A, B, N, f, d))


def cmd_inverse_limit(args, ctx):
    D = ctx.load(args.diagram, Diagram, "diagram")
    lim = finite_inverse_limit(D.indices, D.algebras, D.maps)
    witnesses = []
    for (a, b), f in D.maps.items():
        for k in range(lim.algebra.dim):
            if f(lim.projections[b].images[k]) != lim.projections[a].images[k]:
                witnesses.append({"relation": [a, b], "basis": k})
    return CheckReport("inverse-limit", FAIL if witnesses else PASS, witnesses,
                       details={"dimension": lim.algebra.dim},
                       output=_emit(args, algebra_to_json(lim.algebra)))


def _ideal_witnesses(L, rep):
    G = L.group
    return [{"degree": G.label(w["degree"]), "component": w["component"],
             "row": w["row"], "witness_coordinate": w["membership"].witness}
            for w in rep.witnesses]


def cmd_pbw(args, ctx):
    L = ctx.load(args.lie, GradedLieAlgebra, "Lie algebra")
    depth = _depth(args, ctx)
    I = ideal_truncation(L, depth, args.order)
    rep = pbw_verify(L, depth, args.order, ideal=I)
    graded = check_ideal_graded(L, depth, args.order, ideal=I)
    details = {"pbw_count": rep.pbw_count, "expected_count": rep.expected_count,
               "independent": rep.independent, "spanning": rep.spanning,
               "quotient_dim": rep.quotient_dim, "ideal_graded": rep.ideal_graded,
               "depth": depth, "notes": rep.notes}
    verdict = PASS if rep.holds else FAIL
    witnesses = _ideal_witnesses(L, graded) if rep.holds else rep.witnesses
    return CheckReport("pbw", verdict, witnesses, details=details)


def cmd_ideal_graded(args, ctx):
    L = ctx.load(args.lie, GradedLieAlgebra, "Lie algebra")
    depth = _depth(args, ctx)
    rep = check_ideal_graded(L, depth, args.order)
    # a computed finding about the construction, not an axiom check
    return CheckReport("ideal-graded", INFO, _ideal_witnesses(L, rep),
                       details={"ideal_graded": rep.verdict, "depth": depth})


def cmd_universal_property(args, ctx):
    L = ctx.load(args.lie, GradedLieAlgebra, "Lie algebra")
    A = ctx.load(args.algebra, GradedAlgebra, "algebra")
    depth = _depth(args, ctx)
    LA = commutator_lie(A)
    if args.map:
        j = _rebase(ctx.load(args.map, GradedHom, "hom"), L, LA)
    elif L.basis == LA.basis:
        j = GradedHom(L, LA, [LA.basis.e(i) for i in range(L.dim)])
    else:
        raise E.ValidationError("universal-property needs --map unless L is Lie(A)")
    rep = universal_property_check(L, A, j, depth, args.order)
    details = {"factorizes": rep.factorizes, "kills_ideal": rep.kills_ideal,
               "graded": rep.graded, "consistent": rep.consistent, "depth": depth}
    return CheckReport("universal-property", PASS if rep.holds else FAIL, rep.witnesses,
                       details=details)


COMMANDS = {
    "check-group": cmd_check_group,
    "check-graded": cmd_check_graded,
    "check-lie": cmd_check_lie,
    "find-unit": cmd_find_unit,
    "inverse": cmd_inverse,
    "deform": cmd_deform,
    "opposite": cmd_opposite,
    "restrict": cmd_restrict,
    "induce": cmd_induce,
    "coarsen": cmd_coarsen,
    "lift": cmd_lift,
    "adjunction-phi": cmd_adjunction_phi,
    "adjunction-psi": cmd_adjunction_psi,
    "inverse-limit": cmd_inverse_limit,
    "pbw": cmd_pbw,
    "ideal-graded": cmd_ideal_graded,
    "universal-property": cmd_universal_property,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gradekit", description="Workbench for group-graded algebras.")
    p.add_argument("--format", choices=("text", "json"), default=None)
    p.add_argument("--workspace", help="workspace JSON with named paths and defaults")
    p.add_argument("--seed", type=int, default=None)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, *flags):
        sp = sub.add_parser(name)
        for f in flags:
            f(sp)
        return sp

    alg = lambda sp: sp.add_argument("--algebra", required=True)
    out = lambda sp: sp.add_argument("--out")
    depth = lambda sp: sp.add_argument("--depth", type=int, default=None)
    order = lambda sp: sp.add_argument("--order", choices=("degree-major", "index"),
                                       default="degree-major")

    def deformation(sp):
        sp.add_argument("--deformation")
        sp.add_argument("--lambda", dest="lam", default="1")
        sp.add_argument("--mu", default="0")

    add("check-group", lambda sp: sp.add_argument("--group", required=True),
        lambda sp: sp.add_argument("--subgroup"))
    add("check-graded", alg, lambda sp: sp.add_argument(
        "--mode", choices=("nc", "noncommutative", "classical"), default="nc"))
    add("check-lie", lambda sp: sp.add_argument("--lie", required=True))
    add("find-unit", alg)
    add("inverse", alg, lambda sp: sp.add_argument("--index", type=int, required=True),
        lambda sp: sp.add_argument("--coeff", default="1"),
        lambda sp: sp.add_argument("--side", choices=("left", "right"), default="right"))
    add("deform", alg, deformation, out)
    add("opposite", alg, out)
    add("restrict", alg, lambda sp: sp.add_argument("--hom", required=True), out)
    add("induce", alg, lambda sp: sp.add_argument("--hom", required=True), out)
    add("coarsen", alg, lambda sp: sp.add_argument("--hom"), lambda sp: sp.add_argument("--subgroup"), out)
    add("lift", alg, lambda sp: sp.add_argument("--group", required=True),
        lambda sp: sp.add_argument("--subgroup", required=True), deformation,
        lambda sp: sp.add_argument("--deformed", action="store_true"), out)
    add("adjunction-phi", alg, lambda sp: sp.add_argument("--hom", required=True),
        lambda sp: sp.add_argument("--target"), lambda sp: sp.add_argument("--map"))
    add("adjunction-psi", alg, lambda sp: sp.add_argument("--subgroup", required=True),
        lambda sp: sp.add_argument("--target"), lambda sp: sp.add_argument("--map"), deformation)
    add("inverse-limit", lambda sp: sp.add_argument("--diagram", required=True), out)
    add("pbw", lambda sp: sp.add_argument("--lie", required=True), depth, order)
    add("ideal-graded", lambda sp: sp.add_argument("--lie", required=True), depth, order)
    add("universal-property", lambda sp: sp.add_argument("--lie", required=True), alg,
        lambda sp: sp.add_argument("--map"), depth, order)
    return p


def execute(args, config: Optional[WorkspaceConfig] = None):
    """Run a parsed command; returns ``(CheckReport, exit_code)``."""
    config = config if config is not None else WorkspaceConfig(depth=default_depth())
    fn = COMMANDS.get(args.command)
    if fn is None:
        raise E.UnknownCommand(f"unknown command {args.command!r}", witness=args.command)
    t0 = time.perf_counter()
    rep = fn(args, _Ctx(config))
    rep.timing = (time.perf_counter() - t0) * 1000
    return rep, rep.exit_code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = WorkspaceConfig.load(args.workspace) if args.workspace else \
            WorkspaceConfig(depth=default_depth())
        if args.format:
            config.output_format = args.format
        if args.seed is not None:
            config.seed = args.seed
        rep, code = execute(args, config)
    except (E.ParseError, E.ValidationError, E.UnknownCommand) as exc:
        _print_error(exc, args)
        return 2
    except E.GradekitError as exc:
        _print_error(exc, args)
        return 2
    if config.output_format == "json":
        sys.stdout.write(dumps(rep.to_json()))
    else:
        print(rep.to_text())
        if rep.output is not None and not getattr(args, "out", None):
            sys.stdout.write(dumps(rep.output))
    return code


def _print_error(exc, args):
    err = {"error": type(exc).__name__, "message": str(exc),
           "file": getattr(exc, "file", None), "path": getattr(exc, "path", None),
           "witness": _jsonable(getattr(exc, "witness", None))}
    if getattr(args, "format", None) == "json":
        sys.stdout.write(dumps(err))
    else:
        print(f"error: {err['error']}: {err['message']}", file=sys.stderr)
        if err["file"]:
            print(f"  at {err['file']} {err['path'] or ''}", file=sys.stderr)
        if err["witness"] is not None:
            print(f"  witness: {err['witness']}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
