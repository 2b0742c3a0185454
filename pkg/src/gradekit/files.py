"""JSON definition files: parsing with located errors, and emission.

File kinds are recognised by their keys:

* group: ``{"name", "order", "identity", "table"}``
* subgroup: ``{"members": [...]}`` (optional ``"group"``)
* group hom: ``{"domain", "codomain", "images": [int]}``
* algebra: ``{"group", "basis": [{"label", "degree"}], "products": [...]}``
* Lie algebra: as an algebra with ``"brackets"`` instead of ``"products"``
* deformation: ``{"group", "lambda", "mu"}``
* algebra / Lie hom: ``{"source", "target", "images": [sparse vector]}``
* inverse-limit diagram: ``{"objects": {name: ref}, "maps": [...]}``

A reference (``"group"``, ``"domain"``, ...) is either a path relative
to the referring file or an inline object.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from . import errors as E
from .algebra import GradedAlgebra, GradedHom
from .functors import DeformationData
from .groups import GroupHom, GroupTable, NormalSubgroup, build_group, build_hom, normal_subgroup
from .linear import GradedBasis, Vector
from .tensor import GradedLieAlgebra

# -- scalars and vectors -------------------------------------------------


def scalar_to_json(c) -> dict:
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def _int_field(x, what, file, path):
    if isinstance(x, bool):
        raise E.ParseError(f"{what} must be an integer", file, path, witness=x)
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        s = x.strip()
        body = s[1:] if s[:1] in "+-" else s
        if body.isdigit():
            return int(s)
    raise E.ParseError(f"{what} must be a decimal integer string", file, path, witness=x)


def scalar_from_json(obj, file=None, path="") -> Fraction:
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Fraction(obj)
    if not isinstance(obj, dict) or "num" not in obj:
        raise E.ParseError("scalar must be {'num': str, 'den': str}", file, path, witness=obj)
    num = _int_field(obj["num"], "numerator", file, path + "/num")
    den = _int_field(obj.get("den", "1"), "denominator", file, path + "/den")
    if den == 0:
        raise E.ParseError("zero denominator", file, path + "/den", witness=obj)
    return Fraction(num, den)


def vector_to_json(v: Vector) -> list:
    return [{"basis": i, **scalar_to_json(c)} for i, c in v.items()]


def vector_from_json(entries, basis: GradedBasis, file=None, path="") -> Vector:
    if not isinstance(entries, list):
        raise E.ParseError("sparse vector must be a list", file, path, witness=entries)
    coeffs = {}
    for k, ent in enumerate(entries):
        p = f"{path}/{k}"
        if not isinstance(ent, dict) or "basis" not in ent:
            raise E.ParseError("vector entry needs 'basis'", file, p, witness=ent)
        i = _int_field(ent["basis"], "basis index", file, p + "/basis")
        if not 0 <= i < basis.size:
            raise E.ValidationError(
                f"basis index {i} out of range for size {basis.size}", file, p + "/basis", witness=i
            )
        coeffs[i] = coeffs.get(i, 0) + scalar_from_json(ent, file, p)
    return Vector(basis, coeffs)


# -- emission ------------------------------------------------------------


def group_to_json(G: GroupTable) -> dict:
    out = {"name": G.name, "order": G.order, "identity": G.identity,
           "table": [list(r) for r in G.table]}
    if G.elements is not None:
        out["elements"] = list(G.elements)
    return out


def subgroup_to_json(N: NormalSubgroup, group_ref=None) -> dict:
    out = {"members": list(N.members)}
    out["group"] = group_ref if group_ref is not None else group_to_json(N.parent)
    return out


def group_hom_to_json(f: GroupHom, domain_ref=None, codomain_ref=None) -> dict:
    return {
        "domain": domain_ref if domain_ref is not None else group_to_json(f.domain),
        "codomain": codomain_ref if codomain_ref is not None else group_to_json(f.codomain),
        "images": list(f.images),
    }


def _basis_json(basis: GradedBasis) -> list:
    return [{"label": basis.label(i), "degree": d} for i, d in enumerate(basis.degrees)]


def algebra_to_json(A, group_ref=None) -> dict:
    key = "brackets" if isinstance(A, GradedLieAlgebra) else "products"
    return {
        "group": group_ref if group_ref is not None else group_to_json(A.group),
        "basis": _basis_json(A.basis),
        key: [{"left": i, "right": j, "value": vector_to_json(v)} for (i, j), v in A._table.items()],
    }


def deformation_to_json(d: DeformationData, group_ref=None) -> dict:
    return {
        "group": group_ref if group_ref is not None else group_to_json(d.group),
        "lambda": [[scalar_to_json(x) for x in r] for r in d.lam],
        "mu": [[scalar_to_json(x) for x in r] for r in d.mu],
    }


def hom_to_json(f: GradedHom, source_ref=None, target_ref=None) -> dict:
    return {
        "source": source_ref if source_ref is not None else algebra_to_json(f.source),
        "target": target_ref if target_ref is not None else algebra_to_json(f.target),
        "images": [vector_to_json(v) for v in f.images],
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(path, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


# -- parsing -------------------------------------------------------------


def kind_of(obj) -> str:
    if not isinstance(obj, dict):
        return "unknown"
    if "table" in obj:
        return "group"
    if "products" in obj:
        return "algebra"
    if "brackets" in obj:
        return "lie"
    if "lambda" in obj or "mu" in obj:
        return "deformation"
    if "objects" in obj:
        return "diagram"
    if "members" in obj:
        return "subgroup"
    if "domain" in obj and "images" in obj:
        return "group_hom"
    if "images" in obj:
        return "hom"
    return "unknown"


class Loader:
    """Parses definition files, caching each resolved file once."""

    def __init__(self):
        self._cache = {}

    def read(self, file):
        try:
            with open(file, encoding="utf-8") as fh:
                return json.load(fh)
        except FileNotFoundError:
            raise E.ParseError("file not found", file, "") from None
        except json.JSONDecodeError as exc:
            raise E.ParseError(f"invalid JSON: {exc.msg}", file, f"line {exc.lineno}") from None

    def load(self, file):
        """Load any definition file, dispatching on its keys."""
        file = os.path.normpath(file)
        if file in self._cache:
            return self._cache[file]
        obj = self.read(file)
        out = self.parse(obj, file)
        self._cache[file] = out
        return out

    def parse(self, obj, file=None, path=""):
        kind = kind_of(obj)
        method = getattr(self, f"_parse_{kind}", None)
        if method is None:
            raise E.ParseError("unrecognised definition file", file, path or "/")
        return method(obj, file, path)

    def _ref(self, obj, key, file, path, expect):
        if key not in obj:
            raise E.ParseError(f"missing '{key}'", file, path or "/")
        ref = obj[key]
        if isinstance(ref, str):
            root = os.path.dirname(file) if file else "."
            target = self.load(os.path.join(root, ref))
        else:
            target = self.parse(ref, file, f"{path}/{key}")
        if not isinstance(target, expect):
            name = getattr(expect, "__name__", "definition")
            raise E.ValidationError(f"'{key}' does not name a {name}", file, f"{path}/{key}")
        return target

    def _wrap(self, fn, file, path):
        try:
            return fn()
        except (E.ParseError, E.ValidationError):
            raise
        except (E.GradekitError, ValueError, IndexError) as exc:
            raise E.ValidationError(str(exc), file, path or "/", getattr(exc, "witness", None), exc) from exc

    # kinds ---------------------------------------------------------------
    def _parse_group(self, obj, file, path):
        table = obj["table"]
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise E.ParseError("table must be a list of lists", file, path + "/table")
        G = self._wrap(lambda: build_group(table, obj.get("name", ""), obj.get("elements")),
                       file, path + "/table")
        if "order" in obj and obj["order"] != G.order:
            raise E.ValidationError("declared order does not match table", file, path + "/order",
                                    witness=obj["order"])
        if "identity" in obj and obj["identity"] != G.identity:
            raise E.ValidationError("declared identity is not the table identity", file,
                                    path + "/identity", witness=obj["identity"])
        return G

    def _parse_subgroup(self, obj, file, path):
        if "group" not in obj:
            return list(obj["members"])
        G = self._ref(obj, "group", file, path, GroupTable)
        return self._wrap(lambda: normal_subgroup(G, obj["members"]), file, path + "/members")

    def _parse_group_hom(self, obj, file, path):
        dom = self._ref(obj, "domain", file, path, GroupTable)
        cod = self._ref(obj, "codomain", file, path, GroupTable)
        return self._wrap(lambda: build_hom(dom, cod, obj["images"]), file, path + "/images")

    def _basis(self, obj, G, file, path):
        entries = obj.get("basis")
        if not isinstance(entries, list):
            raise E.ParseError("'basis' must be a list", file, path + "/basis")
        degrees, labels = [], []
        for k, ent in enumerate(entries):
            p = f"{path}/basis/{k}"
            if not isinstance(ent, dict) or "degree" not in ent:
                raise E.ParseError("basis entry needs 'degree'", file, p)
            d = _int_field(ent["degree"], "degree", file, p + "/degree")
            if not 0 <= d < G.order:
                raise E.ValidationError(f"degree {d} is not an element of the group", file,
                                        p + "/degree", witness=d)
            degrees.append(d)
            labels.append(str(ent.get("label", f"b{k}")))
        return GradedBasis(G, tuple(degrees), tuple(labels))

    def _table(self, obj, key, basis, file, path):
        table = {}
        entries = obj.get(key)
        if not isinstance(entries, list):
            raise E.ParseError(f"'{key}' must be a list", file, f"{path}/{key}")
        for k, ent in enumerate(entries):
            p = f"{path}/{key}/{k}"
            if not isinstance(ent, dict):
                raise E.ParseError("product entry must be an object", file, p)
            i = _int_field(ent.get("left"), "left index", file, p + "/left")
            j = _int_field(ent.get("right"), "right index", file, p + "/right")
            for side, x in (("left", i), ("right", j)):
                if not 0 <= x < basis.size:
                    raise E.ValidationError(f"{side} index {x} out of range for size {basis.size}",
                                            file, f"{p}/{side}", witness=x)
            if (i, j) in table:
                raise E.ValidationError("duplicate product entry", file, p, witness=(i, j))
            table[(i, j)] = vector_from_json(ent.get("value", []), basis, file, p + "/value")
        return table

    def _parse_algebra(self, obj, file, path):
        G = self._ref(obj, "group", file, path, GroupTable)
        basis = self._basis(obj, G, file, path)
        return GradedAlgebra(basis, self._table(obj, "products", basis, file, path))

    def _parse_lie(self, obj, file, path):
        G = self._ref(obj, "group", file, path, GroupTable)
        basis = self._basis(obj, G, file, path)
        return GradedLieAlgebra(basis, self._table(obj, "brackets", basis, file, path))

    def _parse_deformation(self, obj, file, path):
        G = self._ref(obj, "group", file, path, GroupTable)
        rows = {}
        for key in ("lambda", "mu"):
            m = obj.get(key)
            if not isinstance(m, list) or len(m) != G.order or any(
                    not isinstance(r, list) or len(r) != G.order for r in m):
                raise E.ValidationError(f"'{key}' must be a {G.order}x{G.order} array", file,
                                        f"{path}/{key}")
            rows[key] = [[scalar_from_json(x, file, f"{path}/{key}/{a}/{b}") for b, x in enumerate(r)]
                         for a, r in enumerate(m)]
        return DeformationData(G, rows["lambda"], rows["mu"])

    def _parse_hom(self, obj, file, path):
        src = self._ref(obj, "source", file, path, (GradedAlgebra, GradedLieAlgebra))
        tgt = self._ref(obj, "target", file, path, (GradedAlgebra, GradedLieAlgebra))
        imgs = obj["images"]
        if not isinstance(imgs, list) or len(imgs) != src.dim:
            raise E.ValidationError(f"need {src.dim} images", file, path + "/images",
                                    witness=len(imgs) if isinstance(imgs, list) else None)
        images = [vector_from_json(v, tgt.basis, file, f"{path}/images/{k}") for k, v in enumerate(imgs)]
        return GradedHom(src, tgt, images)

    def _parse_diagram(self, obj, file, path):
        objects = {}
        for name, ref in obj["objects"].items():
            objects[name] = self._ref({"x": ref}, "x", file, f"{path}/objects/{name}", GradedAlgebra)
        maps = {}
        for k, ent in enumerate(obj.get("maps", [])):
            p = f"{path}/maps/{k}"
            lo, hi = ent.get("lower"), ent.get("upper")
            if lo not in objects or hi not in objects:
                raise E.ValidationError("map names an unknown object", file, p, witness=(lo, hi))
            f = self._ref(ent, "map", file, p, GradedHom)
            maps[(lo, hi)] = GradedHom(objects[hi], objects[lo], f.images)
        return Diagram(list(objects), objects, maps)


class Diagram:
    """A finite inverse system: ``maps[(a, b)]`` goes ``A_b -> A_a`` for ``a <= b``."""

    def __init__(self, indices, algebras, maps):
        self.indices, self.algebras, self.maps = indices, algebras, maps


def parse_definitions(paths):
    """Load and validate every file in ``paths`` (a mapping name -> path or a list)."""
    loader = Loader()
    items = paths.items() if isinstance(paths, dict) else ((p, p) for p in paths)
    return {name: loader.load(p) for name, p in items}


def load(path):
    return Loader().load(path)
