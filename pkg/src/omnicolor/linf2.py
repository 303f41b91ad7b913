"""2-term color L-infinity algebras V1 -> V0 and their constructions.

The data is (d, l2, l3) with l2 stored on V0 x V0 and V0 x V1.  On V1 x V0
the bracket is determined by skew symmetry, [h, x] = -eps(h, x)[x, h], and
on V1 x V1 it vanishes; both are derived rather than stored, so axioms (b)
and (c) hold by construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .coloralg import (ColorAlgebra, QuadraticForm, Representation, _add, _neg, _scaled,
                       check_lie_color, check_quadratic, check_representation, eps)
from .errors import (CrossedAxiomFailure, NotQuadratic, NotSkeletal, NotStrict, ShapeMismatch,
                     UnboundSymbol)
from .grading import Bicharacter, Degree
from .gvs import GradedMap, GradedSpace, MultilinearMap, Vec
from .omni import OmniAlgebra
from .scalars import Scalar
from .verdicts import Check, Sweep, Verdict

H_FORMS = ("corrected", "as-printed")
I_FORMS = ("corrected", "as-printed")
L3_SIGNS = ("corrected", "as-printed")


@dataclass(eq=False)
class TwoTermAlgebra:
    V0: GradedSpace
    V1: GradedSpace
    bicharacter: Bicharacter
    d: GradedMap
    l2_00: MultilinearMap
    l2_01: MultilinearMap
    l3: MultilinearMap

    def __post_init__(self):
        V0, V1 = self.V0, self.V1
        b = self.bicharacter
        for S in (V0, V1):
            if S.group != b.group or S.order != b.order:
                raise ShapeMismatch("spaces and bicharacter disagree on group or field")
        if self.d.domain != V1 or self.d.codomain != V0:
            raise ShapeMismatch("d must map V1 to V0")
        if self.l2_00.domains != (V0, V0) or self.l2_00.codomain != V0:
            raise ShapeMismatch("l2 on V0 x V0 must land in V0")
        if self.l2_01.domains != (V0, V1) or self.l2_01.codomain != V1:
            raise ShapeMismatch("l2 on V0 x V1 must land in V1")
        if self.l3.domains != (V0, V0, V0) or self.l3.codomain != V1:
            raise ShapeMismatch("l3 must map V0 x V0 x V0 to V1")

    @property
    def order(self) -> int:
        return self.V0.order

    def is_skeletal(self) -> bool:
        return self.d.is_zero()

    def is_strict(self) -> bool:
        return not self.l3.table

    def replace(self, **kw) -> TwoTermAlgebra:
        data = dict(V0=self.V0, V1=self.V1, bicharacter=self.bicharacter, d=self.d,
                    l2_00=self.l2_00, l2_01=self.l2_01, l3=self.l3)
        data.update(kw)
        return TwoTermAlgebra(**data)

    def scaled_l3(self, c) -> TwoTermAlgebra:
        c = self.V0.scalar(c)
        table = {k: _scaled(c, v) for k, v in self.l3.table.items()}
        table = {k: v for k, v in table.items() if v}
        return self.replace(l3=MultilinearMap(self.l3.domains, self.V1, table))

    def __eq__(self, other):
        if not isinstance(other, TwoTermAlgebra):
            return NotImplemented
        return (self.V0 == other.V0 and self.V1 == other.V1 and self.bicharacter == other.bicharacter
                and self.d == other.d and self.l2_00 == other.l2_00
                and self.l2_01 == other.l2_01 and self.l3 == other.l3)

    __hash__ = None

    # bracket evaluation on sparse coordinate dicts --------------------------
    def eps(self, a: Degree, c: Degree) -> Scalar:
        return eps(self.bicharacter, a, c)

    def dmap(self, h: dict) -> dict:
        out: dict = {}
        cols = self.d.columns
        for j, c in h.items():
            col = cols.get(j)
            if col:
                out = _add(out, _scaled(c, col))
        return out

    def br00(self, x: dict, y: dict) -> dict:
        return self.l2_00.apply_data(x, y)

    def br01(self, x: dict, h: dict) -> dict:
        return self.l2_01.apply_data(x, h)

    @cached_property
    def l2_10(self) -> MultilinearMap:
        """[h, x] = -eps(h, x)[x, h] on basis pairs."""
        table = {}
        for (i, j), out in self.l2_01.table.items():
            e = self.eps(self.V1.degree(j), self.V0.degree(i))
            table[(j, i)] = _scaled(-e, out)
        return MultilinearMap((self.V1, self.V0), self.V1, table)

    def br10(self, h: dict, x: dict) -> dict:
        return self.l2_10.apply_data(h, x)

    def L3(self, x: dict, y: dict, z: dict) -> dict:
        return self.l3.apply_data(x, y, z)


def _unit(order: int, i: int) -> dict:
    return {i: Scalar.one(order)}


def graded_check(t: TwoTermAlgebra) -> Check:
    """d has degree 0 and l2, l3 are degree additive."""
    sw = Sweep("graded")
    for (r, c) in t.d.entries:
        if t.V0.degree(r) != t.V1.degree(c):
            sw.fail(("d", t.V1.names[c]), None, None, "d does not preserve degree")
    for name, m in (("l2_00", t.l2_00), ("l2_01", t.l2_01), ("l3", t.l3)):
        bad = m.degree_violations()
        for entry in bad:
            *idx, out = entry
            sw.fail((name, *map(str, idx)), None, None, f"{name} is not degree additive")
        sw.count += len(m.table) - len(bad)
    sw.count += len(t.d.entries)
    return sw.check()


def check_axioms(t: TwoTermAlgebra, h_form: str = "corrected", i_form: str = "corrected") -> Verdict:
    """Per-axiom verdicts (a)..(i) from exhaustive sweeps over basis tuples.

    ``h_form="as-printed"`` raises :class:`UnboundSymbol`: that form of (h)
    has a right-hand side mentioning a variable that is not quantified.
    ``i_form`` selects the tested form of (i): ``corrected`` is the expanded
    Jacobiator identity; ``as-printed`` keeps the alternative signs.
    """
    if h_form not in H_FORMS:
        raise ValueError(f"h_form must be one of {H_FORMS}")
    if i_form not in I_FORMS:
        raise ValueError(f"i_form must be one of {I_FORMS}")
    if h_form == "as-printed":
        raise UnboundSymbol(
            "the as-printed form of axiom (h) ends with eps(y,h)[[x,z],h]; z is not bound on the left-hand side"
        )
    g = graded_check(t)
    checks = [g]
    if not g.passed:
        for name in "abcdefghi":
            checks.append(Check.skipped(f"({name})", "data is not graded"))
        return Verdict("two-term", checks)
    checks += [_axiom_a(t), _axiom_b(t), _axiom_c(t), _axiom_d(t), _axiom_e(t), _axiom_f(t),
               _axiom_g(t), _axiom_h(t), axiom_i_sweep(t, i_form).check()]
    return Verdict("two-term", checks)


def _vec(S: GradedSpace, data: dict) -> Vec:
    return Vec(S, data)


def _axiom_a(t: TwoTermAlgebra) -> Check:
    V0, o = t.V0, t.order
    sw = Sweep("(a)")
    for i, j in itertools.product(range(V0.dim), repeat=2):
        x, y = _unit(o, i), _unit(o, j)
        e = t.eps(V0.degree(i), V0.degree(j))
        sw.record((V0.names[i], V0.names[j]), _vec(V0, _add(t.br00(x, y), _scaled(e, t.br00(y, x)))),
                  _vec(V0, {}))
    return sw.check()


def _axiom_b(t: TwoTermAlgebra) -> Check:
    V0, V1, o = t.V0, t.V1, t.order
    sw = Sweep("(b)")
    for i, j in itertools.product(range(V0.dim), range(V1.dim)):
        x, h = _unit(o, i), _unit(o, j)
        e = t.eps(V0.degree(i), V1.degree(j))
        sw.record((V0.names[i], V1.names[j]), _vec(V1, _add(t.br01(x, h), _scaled(e, t.br10(h, x)))),
                  _vec(V1, {}))
    return sw.check("[h, x] is defined through this identity")


def _axiom_c(t: TwoTermAlgebra) -> Check:
    return Check("(c)", True, count=t.V1.dim ** 2, note="l2 vanishes on V1 x V1 by construction")


def _axiom_d(t: TwoTermAlgebra) -> Check:
    """Adjacent transpositions multiply l3 by -eps of the swapped degrees."""
    V0, V1, o = t.V0, t.V1, t.order
    sw = Sweep("(d)")
    deg = V0.degrees
    for i, j, k in itertools.product(range(V0.dim), repeat=3):
        x, y, z = _unit(o, i), _unit(o, j), _unit(o, k)
        base = t.L3(x, y, z)
        args = (V0.names[i], V0.names[j], V0.names[k])
        sw.record(args, _vec(V1, base), _vec(V1, _scaled(-t.eps(deg[i], deg[j]), t.L3(y, x, z))))
        sw.record(args, _vec(V1, base), _vec(V1, _scaled(-t.eps(deg[j], deg[k]), t.L3(x, z, y))))
    return sw.check()


def _axiom_e(t: TwoTermAlgebra) -> Check:
    V0, V1, o = t.V0, t.V1, t.order
    sw = Sweep("(e)")
    for i, j in itertools.product(range(V0.dim), range(V1.dim)):
        x, h = _unit(o, i), _unit(o, j)
        sw.record((V0.names[i], V1.names[j]), _vec(V0, t.dmap(t.br01(x, h))),
                  _vec(V0, t.br00(x, t.dmap(h))))
    return sw.check()


def _axiom_f(t: TwoTermAlgebra) -> Check:
    V1, o = t.V1, t.order
    sw = Sweep("(f)")
    for i, j in itertools.product(range(V1.dim), repeat=2):
        h, k = _unit(o, i), _unit(o, j)
        sw.record((V1.names[i], V1.names[j]), _vec(V1, t.br01(t.dmap(h), k)),
                  _vec(V1, t.br10(h, t.dmap(k))))
    return sw.check()


def _axiom_g(t: TwoTermAlgebra) -> Check:
    V0, o = t.V0, t.order
    deg = V0.degrees
    sw = Sweep("(g)")
    br = t.br00
    for i, j, k in itertools.product(range(V0.dim), repeat=3):
        x, y, z = _unit(o, i), _unit(o, j), _unit(o, k)
        lhs = t.dmap(t.L3(x, y, z))
        rhs = _add(_neg(br(br(x, y), z)), br(x, br(y, z)),
                   _scaled(t.eps(deg[j], deg[k]), br(br(x, z), y)))
        sw.record((V0.names[i], V0.names[j], V0.names[k]), _vec(V0, lhs), _vec(V0, rhs))
    return sw.check()


def _axiom_h(t: TwoTermAlgebra) -> Check:
    """l3(x,y,dh) = -[[x,y],h] + [x,[y,h]] + eps(y,h)[[x,h],y]."""
    V0, V1, o = t.V0, t.V1, t.order
    sw = Sweep("(h)")
    for i, j, k in itertools.product(range(V0.dim), range(V0.dim), range(V1.dim)):
        x, y, h = _unit(o, i), _unit(o, j), _unit(o, k)
        lhs = t.L3(x, y, t.dmap(h))
        rhs = _add(_neg(t.br01(t.br00(x, y), h)), t.br01(x, t.br01(y, h)),
                   _scaled(t.eps(V0.degree(j), V1.degree(k)), t.br10(t.br01(x, h), y)))
        sw.record((V0.names[i], V0.names[j], V1.names[k]), _vec(V1, lhs), _vec(V1, rhs))
    return sw.check("corrected form")


def delta_l3(t: TwoTermAlgebra, x: dict, y: dict, z: dict, w: dict,
             dx: Degree, dy: Degree, dz: Degree, dw: Degree, form: str = "corrected") -> dict:
    """The quartic expression of axiom (i); it must vanish."""
    e, br, L3 = t.eps, t.br00, t.L3
    a, ha = t.br01, t.br10
    if form == "corrected":
        rhs = _add(
            ha(L3(x, y, z), w),
            L3(x, br(y, z), w),
            _scaled(e(dy, dz), L3(br(x, z), y, w)),
            a(x, L3(y, z, w)),
            _scaled(e(dy, dz + dw), ha(L3(x, z, w), y)),
        )
        lhs = _add(
            L3(br(x, y), z, w),
            _scaled(e(dz, dw), ha(L3(x, y, w), z)),
            L3(x, y, br(z, w)),
            _scaled(e(dz, dw), L3(x, br(y, w), z)),
            _scaled(e(dy + dz, dw), L3(br(x, w), y, z)),
        )
        return _add(rhs, _neg(lhs))
    if form == "as-printed":
        return _add(
            a(x, L3(y, z, w)),
            _scaled(-e(dx, dy), a(y, L3(x, z, w))),
            _scaled(e(dy + dz, dz), a(z, L3(x, y, w))),
            _neg(ha(L3(x, y, z), w)),
            _neg(L3(br(x, y), z, w)),
            _scaled(e(dy, dz), L3(br(x, z), y, w)),
            _scaled(-e(dy + dz, dw), L3(br(x, w), y, z)),
            _neg(L3(x, br(y, z), w)),
            _scaled(e(dz, dw), L3(x, br(y, w), z)),
            _neg(L3(x, y, br(z, w))),
        )
    raise ValueError(f"unknown form {form!r}")


def axiom_i_sweep(t: TwoTermAlgebra, form: str = "corrected") -> Sweep:
    V0, V1, o = t.V0, t.V1, t.order
    deg = V0.degrees
    sw = Sweep("(i)")
    zero = _vec(V1, {})
    names = V0.names
    for i, j, k, l in itertools.product(range(V0.dim), repeat=4):
        val = delta_l3(t, _unit(o, i), _unit(o, j), _unit(o, k), _unit(o, l),
                       deg[i], deg[j], deg[k], deg[l], form)
        sw.record((names[i], names[j], names[k], names[l]), _vec(V1, val), zero)
    return sw


# construction from the omni-Lie color algebra -------------------------------


def two_term_from_omni(om: OmniAlgebra, l3_sign: str = "corrected") -> TwoTermAlgebra:
    """V1 = V -> V0 = gl(V) + V with l2 the skew bracket and l3 a multiple of T.

    ``l3_sign="as-printed"`` uses l3(e1,e2,e3) = -eps(e3,e1) T(e1,e2,e3);
    ``corrected`` uses -eps(e1,e3) T(e1,e2,e3).  The two coincide whenever
    eps only takes the values 1 and -1.
    """
    if l3_sign not in L3_SIGNS:
        raise ValueError(f"l3_sign must be one of {L3_SIGNS}")
    E, V = om.E, om.V
    n2 = om.n * om.n
    d = GradedMap(V, E, {(n2 + k, k): Scalar.one(E.order) for k in range(V.dim)},
                  V.group.zero())
    # l2(e, h) = [[e, 0 + h]] projected onto V
    l2_01 = {}
    for p, k in itertools.product(range(E.dim), range(V.dim)):
        out = {i - n2: v for i, v in om.bracket_table.on_basis(p, n2 + k).items() if i >= n2}
        if out:
            l2_01[(p, k)] = out
    deg = E.degrees
    l3 = {}
    for (i, j, k), val in om.T_table.table.items():
        if l3_sign == "corrected":
            c = -eps(om.bicharacter, deg[i], deg[k])
        else:
            c = -eps(om.bicharacter, deg[k], deg[i])
        l3[(i, j, k)] = _scaled(c, val)
    return TwoTermAlgebra(E, V, om.bicharacter, d, om.bracket_table,
                          MultilinearMap((E, V), V, l2_01), MultilinearMap((E, E, E), V, l3))


# skeletal algebras ------------------------------------------------------------


def ce_differential(g: ColorAlgebra, rep: Representation, f: MultilinearMap) -> MultilinearMap:
    """Chevalley-Eilenberg differential of a degree-0, eps-alternating n-cochain.

    Each term brings the distinguished argument(s) to the front with the
    eps-sign of the transpositions used, then applies the ungraded formula.
    """
    n = len(f.domains)
    S, M = g.space, rep.module
    o = S.order
    deg = S.degrees
    b = g.bicharacter
    zero_deg = S.group.zero()
    table = {}
    for idx in itertools.product(range(S.dim), repeat=n + 1):
        out: dict = {}
        for i in range(n + 1):
            before = sum((deg[a] for a in idx[:i]), zero_deg)
            c = eps(b, before, deg[idx[i]])
            if i % 2:
                c = -c
            rest = idx[:i] + idx[i + 1:]
            out = _add(out, _scaled(c, rep.act_data(idx[i], f.on_basis(*rest))))
        for i, j in itertools.combinations(range(n + 1), 2):
            di, dj = deg[idx[i]], deg[idx[j]]
            before_i = sum((deg[a] for a in idx[:i]), zero_deg)
            before_j = sum((deg[a] for a in idx[:j]), zero_deg) - di
            c = eps(b, before_i, di) * eps(b, before_j, dj)
            if (i + j) % 2:
                c = -c
            bracket = g.bracket.on_basis(idx[i], idx[j])
            rest = [_unit(o, a) for k, a in enumerate(idx) if k not in (i, j)]
            out = _add(out, _scaled(c, f.apply_data(bracket, *rest)))
        if out:
            table[idx] = out
    return MultilinearMap((S,) * (n + 1), M, table)


def alternating_check(S: GradedSpace, b: Bicharacter, f: MultilinearMap, name: str = "alternating") -> Check:
    """Adjacent transpositions multiply f by -eps of the swapped degrees."""
    n = len(f.domains)
    deg = S.degrees
    sw = Sweep(name)
    M = f.codomain
    for idx in itertools.product(range(S.dim), repeat=n):
        base = f.on_basis(*idx)
        for p in range(n - 1):
            sw_idx = idx[:p] + (idx[p + 1], idx[p]) + idx[p + 2:]
            other = _scaled(-eps(b, deg[idx[p]], deg[idx[p + 1]]), f.on_basis(*sw_idx))
            sw.record(tuple(S.names[a] for a in idx), Vec(M, dict(base)), Vec(M, other))
    return sw.check()


def _transposition_factor(b: Bicharacter, degs: Sequence[Degree], perm: Sequence[int]) -> Scalar:
    """f(x_1..x_n) = factor * f(x_perm[0]..x_perm[n-1]) for an eps-alternating f."""
    cur = list(range(len(degs)))
    key = {o: perm.index(o) for o in cur}
    c = Scalar.one(b.order)
    for a in range(len(cur)):
        for j in range(len(cur) - 1 - a):
            if key[cur[j]] > key[cur[j + 1]]:
                c = c * -eps(b, degs[cur[j]], degs[cur[j + 1]])
                cur[j], cur[j + 1] = cur[j + 1], cur[j]
    return c


def antisymmetrize(b: Bicharacter, f: MultilinearMap) -> MultilinearMap:
    """Sum over permutations with eps-signs; the result is eps-alternating."""
    S = f.domains[0]
    n = len(f.domains)
    deg = S.degrees
    perms = list(itertools.permutations(range(n)))
    table = {}
    for idx in itertools.product(range(S.dim), repeat=n):
        acc: dict = {}
        degs = [deg[a] for a in idx]
        for perm in perms:
            val = f.on_basis(*(idx[k] for k in perm))
            if val:
                acc = _add(acc, _scaled(_transposition_factor(b, degs, perm), val))
        if acc:
            table[idx] = acc
    return MultilinearMap(f.domains, f.codomain, table)


@dataclass(eq=False)
class SkeletalQuadruple:
    """(g, module, rho, cocycle) with cocycle : g x g x g -> module."""

    algebra: ColorAlgebra
    representation: Representation
    cocycle: MultilinearMap

    def check(self) -> Verdict:
        g, rep, f = self.algebra, self.representation, self.cocycle
        lie = check_lie_color(g)
        rv = check_representation(rep)
        alt = alternating_check(g.space, g.bicharacter, f, "cocycle alternating")
        zero = Vec(rep.module, {})
        sw = Sweep("cocycle")
        delta = ce_differential(g, rep, f)
        names = g.space.names
        for idx in itertools.product(range(g.dim), repeat=4):
            sw.record(tuple(names[a] for a in idx), Vec(rep.module, dict(delta.on_basis(*idx))), zero)
        return Verdict("skeletal-quadruple", [
            Check("lie", lie.passed, lie.first_witness()),
            Check("representation", rv.passed, rv.first_witness()),
            alt, sw.check(),
        ])

    def __eq__(self, other):
        if not isinstance(other, SkeletalQuadruple):
            return NotImplemented
        return (self.algebra == other.algebra and self.cocycle == other.cocycle
                and self.representation.module == other.representation.module
                and self.representation.maps == other.representation.maps)

    __hash__ = None


def skeletal_to_quadruple(t: TwoTermAlgebra) -> SkeletalQuadruple:
    if not t.is_skeletal():
        raise NotSkeletal("d is not zero")
    g = ColorAlgebra(t.V0, t.bicharacter, t.l2_00)
    maps = []
    for i in range(t.V0.dim):
        cols = [Vec(t.V1, dict(t.l2_01.on_basis(i, j))) for j in range(t.V1.dim)]
        maps.append(GradedMap.from_columns(t.V1, t.V1, cols))
    return SkeletalQuadruple(g, Representation(g, t.V1, maps), t.l3)


def quadruple_to_skeletal(q: SkeletalQuadruple) -> TwoTermAlgebra:
    g, rep = q.algebra, q.representation
    V0, V1 = g.space, rep.module
    table = {}
    for i, m in enumerate(rep.maps):
        for (r, c), v in m.entries.items():
            table.setdefault((i, c), {})[r] = v
    return TwoTermAlgebra(V0, V1, g.bicharacter, GradedMap.zero(V1, V0, V0.group.zero()),
                          g.bracket, MultilinearMap((V0, V1), V1, table), q.cocycle)


# string algebra ----------------------------------------------------------------


def string_from_quadratic(q: QuadraticForm) -> TwoTermAlgebra:
    """V1 = 1-dimensional (degree 0), d = 0, l2(x, h) = 0, l3(x,y,z) = B([x,y],z)."""
    v = check_quadratic(q)
    if not v.passed:
        bad = v.failures()[0]
        raise NotQuadratic(f"form is not quadratic ({bad.name} fails)")
    g = q.algebra
    S = g.space
    V1 = GradedSpace((("c", S.group.zero()),), S.group, S.order)
    table = {}
    for i, j, k in itertools.product(range(S.dim), repeat=3):
        val = q.pair(g.bracket.on_basis(i, j), _unit(S.order, k))
        if val:
            table[(i, j, k)] = {0: val}
    return TwoTermAlgebra(S, V1, g.bicharacter, GradedMap.zero(V1, S, S.group.zero()), g.bracket,
                          MultilinearMap((S, V1), V1, {}), MultilinearMap((S, S, S), V1, table))


# strict algebras and crossed modules ----------------------------------------------


@dataclass(eq=False)
class CrossedModule:
    """phi : h -> g with an action g x h -> h."""

    g: ColorAlgebra
    h: ColorAlgebra
    phi: GradedMap
    action: MultilinearMap

    def __post_init__(self):
        if self.phi.domain != self.h.space or self.phi.codomain != self.g.space:
            raise ShapeMismatch("phi must map h to g")
        if self.action.domains != (self.g.space, self.h.space) or self.action.codomain != self.h.space:
            raise ShapeMismatch("action must map g x h to h")
        if self.g.bicharacter != self.h.bicharacter:
            raise ShapeMismatch("g and h use different bicharacters")

    def act(self, x: dict, h: dict) -> dict:
        return self.action.apply_data(x, h)

    def representation(self) -> Representation:
        maps = []
        H = self.h.space
        for i in range(self.g.dim):
            cols = [Vec(H, dict(self.action.on_basis(i, j))) for j in range(H.dim)]
            maps.append(GradedMap.from_columns(H, H, cols))
        return Representation(self.g, H, maps)

    def __eq__(self, other):
        if not isinstance(other, CrossedModule):
            return NotImplemented
        return (self.g == other.g and self.h == other.h and self.phi == other.phi
                and self.action == other.action)

    __hash__ = None


def check_crossed_module(c: CrossedModule) -> Verdict:
    """Both algebras Lie, the action a representation, phi a homomorphism,
    phi(x > h) = [x, phi(h)] and phi(h) > k = [h, k]."""
    g, h = c.g, c.h
    G, H = g.space, h.space
    o = G.order
    checks = []
    for name, alg in (("g lie", g), ("h lie", h)):
        v = check_lie_color(alg)
        checks.append(Check(name, v.passed, v.first_witness()))
    try:
        rep = c.representation()
        rv = check_representation(rep)
        checks.append(Check("action", rv.passed, rv.first_witness()))
    except Exception as exc:  # ShiftMismatch: action not graded
        checks.append(Check("action", False, note=str(exc)))
    phi_cols = c.phi.columns

    def phi(v: dict) -> dict:
        out: dict = {}
        for j, a in v.items():
            if j in phi_cols:
                out = _add(out, _scaled(a, phi_cols[j]))
        return out

    hom, equi, peif = Sweep("phi homomorphism"), Sweep("equivariance"), Sweep("peiffer")
    for i, j in itertools.product(range(H.dim), repeat=2):
        a, b = _unit(o, i), _unit(o, j)
        args = (H.names[i], H.names[j])
        hom.record(args, Vec(G, phi(h.br(a, b))), Vec(G, g.br(phi(a), phi(b))))
        peif.record(args, Vec(H, c.act(phi(a), b)), Vec(H, h.br(a, b)))
    for i, j in itertools.product(range(G.dim), range(H.dim)):
        x, a = _unit(o, i), _unit(o, j)
        equi.record((G.names[i], H.names[j]), Vec(G, phi(c.act(x, a))), Vec(G, g.br(x, phi(a))))
    checks += [hom.check(), equi.check(), peif.check()]
    return Verdict("crossed-module", checks)


def crossed_to_strict(c: CrossedModule, check: bool = True) -> TwoTermAlgebra:
    """d = phi, l2 = [.,.]_g on V0, l2(x, h) = x > h, l3 = 0."""
    if check:
        v = check_crossed_module(c)
        if not v.passed:
            raise CrossedAxiomFailure("not a crossed module", v)
    G, H = c.g.space, c.h.space
    return TwoTermAlgebra(G, H, c.g.bicharacter, c.phi.with_shift(G.group.zero()), c.g.bracket,
                          c.action, MultilinearMap((G, G, G), H, {}))


def strict_to_crossed(t: TwoTermAlgebra) -> CrossedModule:
    """g = V0, h = V1 with [h, k] := l2(dh, k), phi = d, x > h := l2(x, h)."""
    if not t.is_strict():
        raise NotStrict("l3 is not zero")
    V0, V1 = t.V0, t.V1
    o = t.order
    table = {}
    for i, j in itertools.product(range(V1.dim), repeat=2):
        out = t.br01(t.dmap(_unit(o, i)), _unit(o, j))
        if out:
            table[(i, j)] = out
    c = CrossedModule(ColorAlgebra(V0, t.bicharacter, t.l2_00),
                      ColorAlgebra(V1, t.bicharacter, MultilinearMap((V1, V1), V1, table)),
                      t.d, t.l2_01)
    v = check_crossed_module(c)
    if not v.passed:
        raise CrossedAxiomFailure("the strict algebra does not give a crossed module", v)
    return c


def inner_derivation_crossed_module(g: ColorAlgebra) -> CrossedModule:
    """Inn(g) -> Der(g), the inclusion, with D > ad_x = [D, ad_x] = ad_{Dx}."""
    from .coloralg import gl_bracket, subalgebra
    from .gvs import Subspace, end_space, solve_linear

    S = g.space
    om = OmniAlgebra(S, g.bicharacter)
    der_space = om.derivations(g).derivations
    gl = gl_bracket(S, g.bicharacter)
    end = end_space(S)
    inn_space = Subspace(end, [g.ad(S.basis_vec(i)).to_vec(end) for i in range(S.dim)])
    der_basis = list(der_space.homogeneous_basis)
    inn_basis = list(inn_space.homogeneous_basis)
    der = subalgebra(gl, der_basis, [f"D{i}" for i in range(len(der_basis))])
    inn = subalgebra(gl, inn_basis, [f"I{i}" for i in range(len(inn_basis))])
    cols = [Vec.from_coords(der.space, solve_linear(der_basis, v)) for v in inn_basis]
    phi = GradedMap.from_columns(inn.space, der.space, cols, S.group.zero())
    table = {}
    for i, D in enumerate(der_basis):
        for j, A in enumerate(inn_basis):
            out = Vec(end, gl.br(D.data, A.data))
            if out:
                coords = solve_linear(inn_basis, out)
                table[(i, j)] = {k: c for k, c in enumerate(coords) if c}
    return CrossedModule(der, inn, phi, MultilinearMap((der.space, inn.space), inn.space, table))
