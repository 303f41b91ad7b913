"""Color 2-vector spaces, the bracket functor, the Jacobiator and its identity.

A 2-term complex V1 -d-> V0 gives a category with objects V0 and morphisms
V0 + V1: the morphism (x, h) goes from x to x + dh, and composing (x, h)
with (x + dh, k) gives (x, h + k).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .coloralg import _add, _scaled
from .errors import NonComposable, NotHomogeneous, SpaceMismatch
from .grading import Degree
from .gvs import GradedMap, GradedSpace, MultilinearMap, Vec
from .linf2 import TwoTermAlgebra, _unit
from .verdicts import Sweep, Verdict


@dataclass(frozen=True)
class Color2VectorSpace:
    V1: GradedSpace
    d: GradedMap
    V0: GradedSpace

    def __post_init__(self):
        if self.d.domain != self.V1 or self.d.codomain != self.V0:
            raise SpaceMismatch("d must map V1 to V0")

    @cached_property
    def morphisms(self) -> GradedSpace:
        """L1 = V0 + V1; basis: that of V0 followed by that of V1."""
        return self.V0.direct_sum(self.V1)

    def s(self, f: Morphism2) -> Vec:
        return f.src

    def t(self, f: Morphism2) -> Vec:
        return f.src + self.d.apply(f.lift)

    def identity(self, x: Vec) -> Morphism2:
        self._check_obj(x)
        return Morphism2(self, x, Vec.zero(self.V1))

    def morphism(self, x: Vec, h: Vec) -> Morphism2:
        self._check_obj(x)
        if h.space != self.V1:
            raise SpaceMismatch("lift must lie in V1")
        return Morphism2(self, x, h)

    def _check_obj(self, x: Vec):
        if x.space != self.V0:
            raise SpaceMismatch("object must lie in V0")

    def to_vec(self, f: Morphism2) -> Vec:
        n = self.V0.dim
        data = dict(f.src.data)
        data.update({n + k: v for k, v in f.lift.data.items()})
        return Vec(self.morphisms, data)

    def from_vec(self, v: Vec) -> Morphism2:
        n = self.V0.dim
        return Morphism2(self, Vec(self.V0, {i: x for i, x in v.data.items() if i < n}),
                         Vec(self.V1, {i - n: x for i, x in v.data.items() if i >= n}))


@dataclass(frozen=True, eq=False)
class Morphism2:
    space: Color2VectorSpace
    src: Vec
    lift: Vec

    @property
    def source(self) -> Vec:
        return self.src

    @property
    def target(self) -> Vec:
        return self.space.t(self)

    @property
    def degree(self) -> Degree | None:
        degs = set(self.src.homogeneous_parts()) | set(self.lift.homogeneous_parts())
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.degree is not None or (self.src.is_zero() and self.lift.is_zero())

    def then(self, g: Morphism2) -> Morphism2:
        """The composite 'self, then g'; needs t(self) = s(g)."""
        if self.target != g.src:
            raise NonComposable(
                f"target {self.target.to_literal()} differs from source {g.src.to_literal()}"
            )
        return Morphism2(self.space, self.src, self.lift + g.lift)

    def inverse(self) -> Morphism2:
        return Morphism2(self.space, self.target, -self.lift)

    def __add__(self, other: Morphism2) -> Morphism2:
        return Morphism2(self.space, self.src + other.src, self.lift + other.lift)

    def __sub__(self, other: Morphism2) -> Morphism2:
        return Morphism2(self.space, self.src - other.src, self.lift - other.lift)

    def __neg__(self) -> Morphism2:
        return Morphism2(self.space, -self.src, -self.lift)

    def __mul__(self, c) -> Morphism2:
        return Morphism2(self.space, self.src * c, self.lift * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Morphism2):
            return NotImplemented
        return self.src == other.src and self.lift == other.lift

    def __hash__(self):
        return hash((self.src, self.lift))

    def to_literal(self):
        return {"src": self.src.to_literal(), "lift": self.lift.to_literal()}


def compose(f: Morphism2, g: Morphism2) -> Morphism2:
    """g o f: first f, then g."""
    return f.then(g)


class BracketFunctor:
    """[(x,h),(y,k)] = (l2(x,y), l2(x,k) + l2(h,y) + l2(dh,k))."""

    def __init__(self, t: TwoTermAlgebra):
        self.algebra = t
        self.space = Color2VectorSpace(t.V1, t.d, t.V0)

    def __call__(self, f: Morphism2, g: Morphism2) -> Morphism2:
        t = self.algebra
        if f.space != self.space or g.space != self.space:
            raise SpaceMismatch("morphisms do not belong to this 2-vector space")
        x, h, y, k = f.src.data, f.lift.data, g.src.data, g.lift.data
        src = t.br00(x, y)
        lift = _add(t.br01(x, k), t.br10(h, y), t.br01(t.dmap(h), k))
        return Morphism2(self.space, Vec(t.V0, src), Vec(t.V1, lift))

    def on_objects(self, x: Vec, y: Vec) -> Vec:
        return Vec(self.algebra.V0, self.algebra.br00(x.data, y.data))

    @cached_property
    def table(self) -> MultilinearMap:
        """The functor on morphisms as a bilinear map L1 x L1 -> L1."""
        sp = self.space
        L1 = sp.morphisms
        basis = [sp.from_vec(L1.basis_vec(p)) for p in range(L1.dim)]
        return MultilinearMap.from_function(
            (L1, L1), L1, lambda p, q: sp.to_vec(self(basis[p], basis[q]))
        )


def _sum(space: Color2VectorSpace, terms) -> Morphism2:
    out = Morphism2(space, Vec.zero(space.V0), Vec.zero(space.V1))
    for c, m in terms:
        out = out + m * c
    return out


class Jacobiator:
    """J_{x,y,z} = ([[x,y],z], l3(x,y,z))."""

    def __init__(self, t: TwoTermAlgebra):
        self.algebra = t
        self.functor = BracketFunctor(t)
        self.space = self.functor.space

    def __call__(self, x: Vec, y: Vec, z: Vec) -> Morphism2:
        for v in (x, y, z):
            if not v.is_zero() and not v.is_homogeneous():
                raise NotHomogeneous("the Jacobiator is evaluated on homogeneous elements")
        t = self.algebra
        src = t.br00(t.br00(x.data, y.data), z.data)
        return Morphism2(self.space, Vec(t.V0, src), Vec(t.V1, t.L3(x.data, y.data, z.data)))

    def expected_target(self, x: Vec, y: Vec, z: Vec, dy: Degree, dz: Degree) -> Vec:
        """[x,[y,z]] + eps(y,z)[[x,z],y]."""
        t = self.algebra
        br = t.br00
        return Vec(t.V0, _add(br(x.data, br(y.data, z.data)),
                              _scaled(t.eps(dy, dz), br(br(x.data, z.data), y.data))))


def jacobiator(x: Vec, y: Vec, z: Vec, t: TwoTermAlgebra) -> Morphism2:
    return Jacobiator(t)(x, y, z)


def jacobiator_sides(t: TwoTermAlgebra, w: Vec, x: Vec, y: Vec, z: Vec
                     ) -> tuple[Morphism2, Morphism2, Vec, Vec]:
    """Both composites of the Jacobiator identity, and P, Q, for homogeneous w, x, y, z.

    Left:  J_{[w,x],y,z}, then 1 + eps(y,z)[J_{w,x,z}, 1_y], then
           J_{w,x,[y,z]} + eps(y,z) J_{w,[x,z],y} + eps(x+y,z) J_{[w,z],x,y}.
    Right: [J_{w,x,y}, 1_z], then J_{w,[x,y],z} + eps(x,y) J_{[w,y],x,z}, then
           [1_w, J_{x,y,z}] + 1 + 1 + eps(x,y+z)[J_{w,y,z}, 1_x].
    """
    J = Jacobiator(t)
    F = J.functor
    sp = J.space
    e = t.eps
    one = sp.identity
    ob = F.on_objects
    dx, dy, dz = (v.degree for v in (x, y, z))

    wx, yz, xz, wz, xy, wy = ob(w, x), ob(y, z), ob(x, z), ob(w, z), ob(x, y), ob(w, y)

    left1 = J(wx, y, z)
    left2 = _sum(sp, [(1, one(ob(wx, yz))), (e(dy, dz), F(J(w, x, z), one(y)))])
    left3 = _sum(sp, [(1, J(w, x, yz)), (e(dy, dz), J(w, xz, y)), (e(dx + dy, dz), J(wz, x, y))])
    left = left1.then(left2).then(left3)

    right1 = F(J(w, x, y), one(z))
    right2 = _sum(sp, [(1, J(w, xy, z)), (e(dx, dy), J(wy, x, z))])
    right3 = _sum(sp, [
        (1, F(one(w), J(x, y, z))),
        (e(dx + dy, dz), one(ob(wz, xy))),
        (e(dx, dy), one(ob(wy, xz))),
        (e(dx, dy + dz), F(J(w, y, z), one(x))),
    ])
    right = right1.then(right2).then(right3)

    P = (ob(w, ob(x, yz)) + ob(w, ob(xz, y)) * e(dy, dz) + ob(wz, xy) * e(dx + dy, dz)
         + ob(wy, xz) * e(dx, dy) + ob(ob(w, yz), x) * (e(dx, dy) * e(dx, dz))
         + ob(ob(wz, y), x) * (e(dx, dy) * e(dx, dz) * e(dy, dz)))
    Q = (ob(w, ob(x, yz)) + ob(ob(w, yz), x) * e(dx, dy + dz) + ob(w, ob(xz, y)) * e(dy, dz)
         + ob(wy, xz) * (e(dy, dz) * e(dx + dz, dy)) + ob(wz, xy) * (e(dy, dz) * e(dx, dz))
         + ob(ob(wz, y), x) * (e(dy, dz) * e(dx, dz) * e(dx, dy)))
    return left, right, P, Q


def check_jacobiator_identity(t: TwoTermAlgebra) -> Verdict:
    """Compose both sides of the Jacobiator identity on every basis quadruple (w, x, y, z).

    Composites are formed with :meth:`Morphism2.then`, so a failure of the
    source/target bookkeeping surfaces as :class:`NonComposable`.
    """
    V0 = t.V0
    o = t.order
    names = V0.names
    ident, src, targets = Sweep("jacobiator identity"), Sweep("common source"), Sweep("P = Q")
    basis = [Vec(V0, _unit(o, i)) for i in range(V0.dim)]
    for idx in itertools.product(range(V0.dim), repeat=4):
        w, x, y, z = (basis[i] for i in idx)
        args = tuple(names[i] for i in idx)
        try:
            left, right, P, Q = jacobiator_sides(t, w, x, y, z)
        except NonComposable as exc:
            ident.fail(args, None, None, str(exc))
            continue
        ident.record(args, left, right)
        src.record(args, left.src, right.src)
        if left.target == P and right.target == Q and P == Q:
            targets.count += 1
        else:
            targets.fail(args, left.target, right.target, "targets differ from P = Q")
    return Verdict("jacobiator", [ident.check(), src.check(), targets.check()])


def check_naturality(t: TwoTermAlgebra) -> Verdict:
    """Naturality of J in each slot along the basis morphisms f = (z, h).

    With f in the third slot the square reads
    J_{x,y,z} then [1_x,[1_y,f]] + eps(y,z)[[1_x,f],1_y]  equals  [[1_x,1_y],f] then J_{x,y,z'}.
    """
    V0, V1 = t.V0, t.V1
    J = Jacobiator(t)
    F, sp = J.functor, J.space
    o = t.order
    e = t.eps
    sw = Sweep("naturality")
    b0 = [Vec(V0, _unit(o, i)) for i in range(V0.dim)]
    b1 = [Vec(V1, _unit(o, i)) for i in range(V1.dim)]
    slots = [(0, 1, 2), (0, 2, 1), (2, 0, 1)]  # positions of (a, b, f) in the triple
    for i, j, k in itertools.product(range(V0.dim), repeat=3):
        for m in range(V1.dim):
            if V0.degree(k) != V1.degree(m):
                continue
            f = sp.morphism(b0[k], b1[m])
            a, b = b0[i], b0[j]
            for slot, order in enumerate(slots):
                mors = [[sp.identity(a), sp.identity(b), f][p] for p in order]
                src = [m_.src for m_ in mors]
                tgt = [m_.target for m_ in mors]
                d1, d2 = (V0.degree([i, j, k][p]) for p in order[1:])
                top = F(F(mors[0], mors[1]), mors[2])
                bottom = _sum(sp, [(1, F(mors[0], F(mors[1], mors[2]))),
                                   (e(d1, d2), F(F(mors[0], mors[2]), mors[1]))])
                args = (V0.names[i], V0.names[j], V0.names[k], V1.names[m], f"slot{2 - slot}")
                try:
                    sw.record(args, J(*src).then(bottom), top.then(J(*tgt)))
                except NonComposable as exc:
                    sw.fail(args, None, None, str(exc))
    return Verdict("naturality", [sw.check()])


def check_functoriality(t: TwoTermAlgebra) -> Verdict:
    """[1_x,1_y] = 1_[x,y] and [g o f, g' o f'] = [g,g'] o [f,f'] on basis-generated pairs."""
    V0, V1 = t.V0, t.V1
    F = BracketFunctor(t)
    sp = F.space
    o = t.order
    ids, law = Sweep("identities"), Sweep("composition")
    b0 = [Vec(V0, _unit(o, i)) for i in range(V0.dim)]
    b1 = [Vec(V1, _unit(o, i)) for i in range(V1.dim)]
    for i, j in itertools.product(range(V0.dim), repeat=2):
        lhs = F(sp.identity(b0[i]), sp.identity(b0[j]))
        ids.record((V0.names[i], V0.names[j]), lhs, sp.identity(F.on_objects(b0[i], b0[j])))
    # f: x -> x + dh, g: x + dh -> x + dh + dk, homogeneous of one degree
    pairs = [(i, a) for i in range(V0.dim) for a in range(V1.dim) if V0.degree(i) == V1.degree(a)]
    for (i, a), (j, c) in itertools.product(pairs, repeat=2):
        for a2, c2 in itertools.product(range(V1.dim), repeat=2):
            if V1.degree(a2) != V0.degree(i) or V1.degree(c2) != V0.degree(j):
                continue
            f = sp.morphism(b0[i], b1[a])
            g = sp.morphism(f.target, b1[a2])
            f2 = sp.morphism(b0[j], b1[c])
            g2 = sp.morphism(f2.target, b1[c2])
            lhs = F(f.then(g), f2.then(g2))
            rhs = F(f, f2).then(F(g, g2))
            law.record((V0.names[i], V1.names[a], V1.names[a2], V0.names[j], V1.names[c], V1.names[c2]),
                       lhs, rhs)
    return Verdict("functoriality", [ids.check(), law.check()])


@dataclass(eq=False)
class LieColor2Algebra:
    """A color 2-vector space with the bracket functor (as a bilinear map on
    morphisms) and the Jacobiator on basis triples of objects."""

    space: Color2VectorSpace
    bicharacter: object
    bracket: MultilinearMap
    jacobiator: dict

    def bracket_morphisms(self, f: Morphism2, g: Morphism2) -> Morphism2:
        sp = self.space
        return sp.from_vec(self.bracket(sp.to_vec(f), sp.to_vec(g)))


def to_lie2(t: TwoTermAlgebra) -> LieColor2Algebra:
    F = BracketFunctor(t)
    J = Jacobiator(t)
    o = t.order
    basis = [Vec(t.V0, _unit(o, i)) for i in range(t.V0.dim)]
    table = {}
    for idx in itertools.product(range(t.V0.dim), repeat=3):
        table[idx] = J(*(basis[i] for i in idx))
    return LieColor2Algebra(F.space, t.bicharacter, F.table, table)


def from_lie2(L: LieColor2Algebra) -> TwoTermAlgebra:
    """ker(s) = V1, d = t on V1, l2(x,y) from [1_x,1_y], l2(x,h) = [1_x,(0,h)], l3 = lift of J."""
    sp = L.space
    V0, V1 = sp.V0, sp.V1
    o = V0.order
    zero0 = Vec.zero(V0)
    d_cols = [sp.t(Morphism2(sp, zero0, Vec(V1, _unit(o, k)))) for k in range(V1.dim)]
    d = GradedMap.from_columns(V1, V0, d_cols, V0.group.zero())
    l2_00, l2_01, l3 = {}, {}, {}
    for i, j in itertools.product(range(V0.dim), repeat=2):
        m = L.bracket_morphisms(sp.identity(Vec(V0, _unit(o, i))), sp.identity(Vec(V0, _unit(o, j))))
        if m.src:
            l2_00[(i, j)] = dict(m.src.data)
    for i, k in itertools.product(range(V0.dim), range(V1.dim)):
        m = L.bracket_morphisms(sp.identity(Vec(V0, _unit(o, i))), Morphism2(sp, zero0, Vec(V1, _unit(o, k))))
        if m.lift:
            l2_01[(i, k)] = dict(m.lift.data)
    for idx, J in L.jacobiator.items():
        if J.lift:
            l3[idx] = dict(J.lift.data)
    return TwoTermAlgebra(V0, V1, L.bicharacter, d, MultilinearMap((V0, V0), V0, l2_00),
                          MultilinearMap((V0, V1), V1, l2_01), MultilinearMap((V0, V0, V0), V1, l3))


def lc2_roundtrip(t: TwoTermAlgebra) -> tuple[LieColor2Algebra, TwoTermAlgebra]:
    L = to_lie2(t)
    return L, from_lie2(L)
