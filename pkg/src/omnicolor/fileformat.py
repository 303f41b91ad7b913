"""JSON algebra files: structural parsing and serialization.

Parsing validates shapes, index ranges and scalar literals but makes no
mathematical judgement; a file whose bicharacter is not skew still parses,
and the corresponding check reports the failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .coloralg import ColorAlgebra, QuadraticForm, Representation
from .errors import DimensionMismatch, ParseError, SchemaError
from .grading import Bicharacter, GradingGroup
from .gvs import GradedMap, GradedSpace, MultilinearMap, Vec
from .linf2 import CrossedModule, TwoTermAlgebra
from .scalars import Scalar, format_literal, parse_literal


@dataclass
class LieSubspace:
    """A graded subspace W of V given by a basis, with a bracket in W-coordinates."""

    basis: list[Vec]
    algebra: ColorAlgebra


@dataclass
class AlgebraFile:
    order: int
    group: GradingGroup
    bicharacter: Bicharacter
    space: GradedSpace | None = None
    algebra: ColorAlgebra | None = None
    representation: Representation | None = None
    quadratic: QuadraticForm | None = None
    two_term: TwoTermAlgebra | None = None
    crossed_module: CrossedModule | None = None
    subspaces: dict[str, tuple[str, list[list[Scalar]]]] = field(default_factory=dict)
    lie_subspace: LieSubspace | None = None
    description: str = ""


# parsing ---------------------------------------------------------------------


def _req(obj: dict, key: str, where: str):
    if not isinstance(obj, dict):
        raise SchemaError(where, "expected an object")
    if key not in obj:
        raise SchemaError(f"{where}.{key}" if where else key, "missing required field")
    return obj[key]


def _int(value, where: str, lo: int | None = None, hi: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(where, f"expected an integer, got {value!r}")
    if lo is not None and value < lo or hi is not None and value >= hi:
        raise SchemaError(where, f"index {value} out of range [{lo}, {hi})")
    return value


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(where, "expected a list")
    return value


def _scalar(value, order: int, where: str) -> Scalar:
    if isinstance(value, bool):
        raise SchemaError(where, "booleans are not scalars")
    if isinstance(value, int):
        return Scalar.rational(order, value)
    if not isinstance(value, str):
        raise SchemaError(where, f"expected a scalar literal string, got {value!r}")
    try:
        return parse_literal(value, order)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _space(obj, group: GradingGroup, order: int, where: str) -> GradedSpace:
    basis = _list(_req(obj, "basis", where), f"{where}.basis")
    names, degrees = [], []
    for n, entry in enumerate(basis):
        w = f"{where}.basis[{n}]"
        name = _req(entry, "name", w)
        if not isinstance(name, str):
            raise SchemaError(f"{w}.name", "expected a string")
        deg = _list(_req(entry, "degree", w), f"{w}.degree")
        if len(deg) != group.rank:
            raise SchemaError(f"{w}.degree", f"expected {group.rank} residues")
        names.append(name)
        degrees.append(group.degree(*[_int(r, f"{w}.degree") for r in deg]))
    if len(set(names)) != len(names):
        raise SchemaError(f"{where}.basis", "basis names must be distinct")
    return GradedSpace.from_degrees(group, order, degrees, names)


def _matrix(rows, nrows: int, ncols: int, order: int, where: str) -> list[list[Scalar]]:
    rows = _list(rows, where)
    if len(rows) != nrows or any(not isinstance(r, list) or len(r) != ncols for r in rows):
        raise SchemaError(where, f"expected a {nrows}x{ncols} matrix")
    return [[_scalar(x, order, f"{where}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(rows)]


def _entries(items, dims: tuple[int, ...], out_dim: int, keys: tuple[str, ...], order: int,
             where: str) -> list[tuple]:
    out = []
    for n, e in enumerate(_list(items, where)):
        w = f"{where}[{n}]"
        idx = tuple(_int(_req(e, k, w), f"{w}.{k}", 0, dim) for k, dim in zip(keys, dims))
        o = _int(_req(e, keys[-1], w), f"{w}.{keys[-1]}", 0, out_dim)
        out.append((*idx, o, _scalar(_req(e, "coeff", w), order, f"{w}.coeff")))
    return out


def _bracket(obj, space: GradedSpace, b: Bicharacter, where: str) -> ColorAlgebra:
    entries = _entries(_req(obj, "entries", where), (space.dim, space.dim), space.dim,
                       ("i", "j", "k"), space.order, f"{where}.entries")
    return ColorAlgebra.from_constants(space, b, entries)


def parse_algebra_file(text: str) -> AlgebraFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    return load_document(doc)


def load_document(doc: Any) -> AlgebraFile:
    if not isinstance(doc, dict):
        raise SchemaError("<root>", "expected a JSON object")
    order = _int(_req(doc, "cyclotomic_order", ""), "cyclotomic_order", 1)
    orders = _list(_req(_req(doc, "group", ""), "cyclic_orders", "group"), "group.cyclic_orders")
    if not orders:
        raise SchemaError("group.cyclic_orders", "need at least one cyclic factor")
    group = GradingGroup(tuple(_int(n, "group.cyclic_orders", 1) for n in orders))
    exps = _list(_req(_req(doc, "bicharacter", ""), "exponents", "bicharacter"), "bicharacter.exponents")
    try:
        b = Bicharacter(group, order, tuple(tuple(_int(e, "bicharacter.exponents") for e in _list(r, "bicharacter.exponents"))
                                            for r in exps))
    except DimensionMismatch as exc:
        raise SchemaError("bicharacter.exponents", str(exc)) from None
    f = AlgebraFile(order, group, b, description=str(doc.get("description", "")))

    if "space" in doc:
        f.space = _space(doc["space"], group, order, "space")
    V = f.space

    def need_space(section):
        if V is None:
            raise SchemaError(section, "requires a 'space' section")

    if "bracket" in doc:
        need_space("bracket")
        f.algebra = _bracket(doc["bracket"], V, b, "bracket")
    if "representation" in doc:
        need_space("representation")
        rep = doc["representation"]
        alg = f.algebra or ColorAlgebra.abelian(V, b)
        module = _space(_req(rep, "module", "representation"), group, order, "representation.module")
        maps = _list(_req(rep, "maps", "representation"), "representation.maps")
        if len(maps) != V.dim:
            raise SchemaError("representation.maps", f"expected {V.dim} matrices")
        mats = [GradedMap.from_matrix(module, module,
                                      _matrix(m, module.dim, module.dim, order, f"representation.maps[{i}]"))
                for i, m in enumerate(maps)]
        f.representation = Representation(alg, module, mats)
    if "quadratic" in doc:
        need_space("quadratic")
        gram = _matrix(_req(doc["quadratic"], "gram", "quadratic"), V.dim, V.dim, order, "quadratic.gram")
        f.quadratic = QuadraticForm(f.algebra or ColorAlgebra.abelian(V, b), gram)
    if "subspaces" in doc:
        subs = doc["subspaces"]
        if not isinstance(subs, dict):
            raise SchemaError("subspaces", "expected an object")
        need_space("subspaces")
        for name, s in subs.items():
            w = f"subspaces.{name}"
            amb = s.get("ambient", "omni") if isinstance(s, dict) else None
            if amb not in ("omni", "space"):
                raise SchemaError(f"{w}.ambient", "must be 'omni' or 'space'")
            dim = V.dim * V.dim + V.dim if amb == "omni" else V.dim
            vecs = _list(_req(s, "vectors", w), f"{w}.vectors")
            f.subspaces[name] = (amb, [
                [_scalar(x, order, f"{w}.vectors[{i}]") for x in _coords(v, dim, f"{w}.vectors[{i}]")]
                for i, v in enumerate(vecs)
            ])
    if "lie_subspace" in doc:
        need_space("lie_subspace")
        ls = doc["lie_subspace"]
        vecs = _list(_req(ls, "basis", "lie_subspace"), "lie_subspace.basis")
        basis = [Vec.from_coords(V, [_scalar(x, order, f"lie_subspace.basis[{i}]")
                                     for x in _coords(v, V.dim, f"lie_subspace.basis[{i}]")])
                 for i, v in enumerate(vecs)]
        degs = []
        for i, v in enumerate(basis):
            if not v or not v.is_homogeneous():
                raise SchemaError(f"lie_subspace.basis[{i}]", "basis vectors must be nonzero and homogeneous")
            degs.append(v.degree)
        W = GradedSpace.from_degrees(group, order, degs, prefix="w")
        f.lie_subspace = LieSubspace(basis, _bracket(ls, W, b, "lie_subspace"))
    if "two_term" in doc:
        f.two_term = _two_term(doc["two_term"], group, order, b)
    if "crossed_module" in doc:
        f.crossed_module = _crossed(doc["crossed_module"], group, order, b)
    return f


def _coords(v, dim: int, where: str) -> list:
    v = _list(v, where)
    if len(v) != dim:
        raise SchemaError(where, f"expected {dim} coordinates")
    return v


def _two_term(obj, group, order, b) -> TwoTermAlgebra:
    w = "two_term"
    V0 = _space(_req(obj, "v0", w), group, order, f"{w}.v0")
    V1 = _space(_req(obj, "v1", w), group, order, f"{w}.v1")
    d_rows = _matrix(obj.get("d", [[0] * V1.dim for _ in range(V0.dim)]), V0.dim, V1.dim, order, f"{w}.d")
    d = GradedMap.from_matrix(V1, V0, d_rows)
    l2_00 = _entries(obj.get("l2_00", []), (V0.dim, V0.dim), V0.dim, ("i", "j", "k"), order, f"{w}.l2_00")
    l2_01 = _entries(obj.get("l2_01", []), (V0.dim, V1.dim), V1.dim, ("i", "j", "k"), order, f"{w}.l2_01")
    l3 = _entries(obj.get("l3", []), (V0.dim,) * 3, V1.dim, ("i", "j", "k", "out"), order, f"{w}.l3")
    return TwoTermAlgebra(V0, V1, b, d,
                          MultilinearMap.from_entries((V0, V0), V0, l2_00),
                          MultilinearMap.from_entries((V0, V1), V1, l2_01),
                          MultilinearMap.from_entries((V0, V0, V0), V1, l3))


def _crossed(obj, group, order, b) -> CrossedModule:
    w = "crossed_module"
    gobj, hobj = _req(obj, "g", w), _req(obj, "h", w)
    G = _space(gobj, group, order, f"{w}.g")
    H = _space(hobj, group, order, f"{w}.h")
    g = _bracket(gobj, G, b, f"{w}.g")
    h = _bracket(hobj, H, b, f"{w}.h")
    phi = GradedMap.from_matrix(H, G, _matrix(_req(obj, "phi", w), G.dim, H.dim, order, f"{w}.phi"))
    act = _entries(obj.get("action", []), (G.dim, H.dim), H.dim, ("i", "j", "k"), order, f"{w}.action")
    return CrossedModule(g, h, phi, MultilinearMap.from_entries((G, H), H, act))


# serialization ---------------------------------------------------------------


def _lit(s: Scalar) -> str:
    return format_literal(s)


def _dump_space(S: GradedSpace) -> dict:
    return {"basis": [{"name": n, "degree": list(d.residues)} for n, d in S.basis]}


def _dump_matrix(rows) -> list:
    return [[_lit(x) for x in r] for r in rows]


def _dump_entries(m: MultilinearMap, keys: tuple[str, ...]) -> list:
    out = []
    for entry in m.entries():
        *idx, o, c = entry
        row = dict(zip(keys, (*idx, o)))
        row["coeff"] = _lit(c)
        out.append(row)
    return out


def dump_document(f: AlgebraFile) -> dict:
    doc: dict = {}
    if f.description:
        doc["description"] = f.description
    doc["cyclotomic_order"] = f.order
    doc["group"] = {"cyclic_orders": list(f.group.cyclic_orders)}
    doc["bicharacter"] = {"exponents": [list(r) for r in f.bicharacter.exponents]}
    if f.space is not None:
        doc["space"] = _dump_space(f.space)
    if f.algebra is not None:
        doc["bracket"] = {"entries": _dump_entries(f.algebra.bracket, ("i", "j", "k"))}
    if f.representation is not None:
        r = f.representation
        doc["representation"] = {"module": _dump_space(r.module),
                                 "maps": [_dump_matrix(m.matrix) for m in r.maps]}
    if f.quadratic is not None:
        doc["quadratic"] = {"gram": _dump_matrix(f.quadratic.gram)}
    if f.subspaces:
        doc["subspaces"] = {name: {"ambient": amb, "vectors": [[_lit(x) for x in v] for v in vecs]}
                            for name, (amb, vecs) in f.subspaces.items()}
    if f.lie_subspace is not None:
        ls = f.lie_subspace
        doc["lie_subspace"] = {"basis": [[_lit(x) for x in v.coords] for v in ls.basis],
                               "entries": _dump_entries(ls.algebra.bracket, ("i", "j", "k"))}
    if f.two_term is not None:
        t = f.two_term
        doc["two_term"] = {
            "v0": _dump_space(t.V0), "v1": _dump_space(t.V1), "d": _dump_matrix(t.d.matrix),
            "l2_00": _dump_entries(t.l2_00, ("i", "j", "k")),
            "l2_01": _dump_entries(t.l2_01, ("i", "j", "k")),
            "l3": _dump_entries(t.l3, ("i", "j", "k", "out")),
        }
    if f.crossed_module is not None:
        c = f.crossed_module
        doc["crossed_module"] = {
            "g": {**_dump_space(c.g.space), "entries": _dump_entries(c.g.bracket, ("i", "j", "k"))},
            "h": {**_dump_space(c.h.space), "entries": _dump_entries(c.h.bracket, ("i", "j", "k"))},
            "phi": _dump_matrix(c.phi.matrix),
            "action": _dump_entries(c.action, ("i", "j", "k")),
        }
    return doc


def dump_algebra_file(f: AlgebraFile) -> str:
    return json.dumps(dump_document(f), indent=2) + "\n"
