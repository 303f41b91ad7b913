"""Named example algebras, each emitted as a complete algebra file."""

from __future__ import annotations

from typing import Callable

from .coloralg import (ColorAlgebra, QuadraticForm, Representation, gl_bracket, perturb_skew)
from .errors import UnknownFixture
from .fileformat import AlgebraFile, LieSubspace
from .grading import Bicharacter, GradingGroup
from .gvs import GradedMap, GradedSpace, MultilinearMap, Subspace
from .linf2 import (CrossedModule, SkeletalQuadruple, antisymmetrize,
                    inner_derivation_crossed_module, quadruple_to_skeletal, two_term_from_omni)
from .omni import OmniAlgebra
from .scalars import Scalar

Z2 = GradingGroup((2,))
SUPER = Bicharacter.super()
Z2Z2 = GradingGroup((2, 2))
Z2Z2_EPS = Bicharacter(Z2Z2, 2, ((0, 1), (1, 0)))
Z3Z3 = GradingGroup((3, 3))
Z3Z3_EPS = Bicharacter(Z3Z3, 3, ((0, 1), (2, 0)))
TRIVIAL = GradingGroup.trivial()
TRIVIAL_EPS = Bicharacter.trivial()


def super_space(degrees, names=None) -> GradedSpace:
    return GradedSpace.from_degrees(Z2, 2, [Z2.degree(d) for d in degrees], names)


def gl_algebra(V: GradedSpace, b: Bicharacter, names=None) -> ColorAlgebra:
    """gl(V) with the color commutator, optionally with renamed basis."""
    a = gl_bracket(V, b)
    if names is None:
        return a
    S = GradedSpace.from_degrees(V.group, V.order, a.space.degrees, names)
    return ColorAlgebra(S, b, MultilinearMap((S, S), S, a.bracket.table))


def gl11() -> ColorAlgebra:
    """gl(1|1) with basis e11, e12, e21, e22 (degrees 0, 1, 1, 0)."""
    return gl_algebra(super_space([0, 1]), SUPER, ["e11", "e12", "e21", "e22"])


def sl2() -> ColorAlgebra:
    S = GradedSpace.from_degrees(TRIVIAL, 1, [TRIVIAL.zero()] * 3, ["e", "f", "h"])
    return ColorAlgebra.from_constants(S, TRIVIAL_EPS, [
        ("h", "e", "e", 2), ("e", "h", "e", -2),
        ("h", "f", "f", -2), ("f", "h", "f", 2),
        ("e", "f", "h", 1), ("f", "e", "h", -1),
    ])


def heisenberg_z2z2() -> ColorAlgebra:
    """[a, b] = c with |a| = (1,0), |b| = (0,1), |c| = (1,1); eps(b, a) = -1 gives [b, a] = c."""
    S = GradedSpace.from_degrees(Z2Z2, 2, [Z2Z2.degree(1, 0), Z2Z2.degree(0, 1), Z2Z2.degree(1, 1)],
                                 ["a", "b", "c"])
    return ColorAlgebra.from_constants(S, Z2Z2_EPS, [("a", "b", "c", 1), ("b", "a", "c", 1)])


def _file(b: Bicharacter, description: str, **kw) -> AlgebraFile:
    return AlgebraFile(b.order, b.group, b, description=description, **kw)


def _omni_subspaces(V: GradedSpace, extra: dict | None = None) -> dict:
    """gl(V) and V as subspaces of gl(V) + V (coordinates over E)."""
    n = V.dim
    n2 = n * n
    z, one = Scalar.zero(V.order), Scalar.one(V.order)

    def unit(i):
        return [one if k == i else z for k in range(n2 + n)]

    subs = {"gl": ("omni", [unit(i) for i in range(n2)]),
            "V": ("omni", [unit(n2 + i) for i in range(n)])}
    subs.update(extra or {})
    return subs


def _graph_subspace(alg: ColorAlgebra) -> tuple[str, list]:
    om = OmniAlgebra(alg.space, alg.bicharacter)
    L = om.graph_of_adjoint(alg)
    return ("omni", [list(v.coords) for v in L.basis])


def fx_abelian_z2_dim2() -> AlgebraFile:
    V = super_space([0, 1])
    alg = ColorAlgebra.abelian(V, SUPER)
    W = LieSubspace([V.basis_vec(0)], ColorAlgebra.abelian(
        GradedSpace.from_degrees(Z2, 2, [Z2.zero()], ["w0"]), SUPER))
    return _file(SUPER, "abelian bracket on a 1|1 super space", space=V, algebra=alg,
                 representation=Representation.zero(alg, V),
                 subspaces=_omni_subspaces(V, {"graph": _graph_subspace(alg)}), lie_subspace=W)


def fx_gl11() -> AlgebraFile:
    g = gl11()
    S = g.space
    natural = super_space([0, 1])
    maps = []
    for i in range(4):
        r, c = divmod(i, 2)
        maps.append(GradedMap(natural, natural, {(r, c): Scalar.one(2)}))
    return _file(SUPER, "gl(1|1) with the color commutator and its natural module", space=S,
                 algebra=g, representation=Representation(g, natural, maps),
                 subspaces=_omni_subspaces(S, {"graph": _graph_subspace(g)}),
                 lie_subspace=LieSubspace([S.basis_vec(i) for i in range(4)], g))


def fx_broken_jacobi() -> AlgebraFile:
    """gl(1|1) with [e11, e22] += e11 (and the eps-skew partner); eps-skew but not Jacobi."""
    g = perturb_skew(gl11(), 0, 3, 0, 1)
    S = g.space
    om = OmniAlgebra(S, SUPER)
    L = om.pair_subspace(Subspace.full(S), g.bracket)
    return _file(SUPER, "gl(1|1) with a perturbed constant: eps-skew, violates Jacobi "
                        "(witness e11, e12, e21)", space=S, algebra=g,
                 subspaces=_omni_subspaces(S, {"graph": ("omni", [list(v.coords) for v in L.basis])}))


def fx_sl2_killing() -> AlgebraFile:
    g = sl2()
    gram = [[0, 4, 0], [4, 0, 0], [0, 0, 8]]
    return _file(TRIVIAL_EPS, "sl(2) with its Killing form", space=g.space, algebra=g,
                 quadratic=QuadraticForm(g, gram))


def fx_gl11_supertrace() -> AlgebraFile:
    g = gl11()
    gram = [[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, -1]]
    return _file(SUPER, "gl(1|1) with the supertrace form str(XY)", space=g.space, algebra=g,
                 quadratic=QuadraticForm(g, gram))


def fx_heisenberg_z2z2() -> AlgebraFile:
    g = heisenberg_z2z2()
    return _file(Z2Z2_EPS, "three-dimensional color Heisenberg algebra graded by Z2 x Z2",
                 space=g.space, algebra=g, subspaces=_omni_subspaces(g.space, {"graph": _graph_subspace(g)}))


def fx_color_gl_z2z2() -> AlgebraFile:
    V = GradedSpace.from_degrees(Z2Z2, 2, [Z2Z2.degree(0, 0), Z2Z2.degree(1, 0), Z2Z2.degree(0, 1)])
    g = gl_bracket(V, Z2Z2_EPS)
    return _file(Z2Z2_EPS, "gl(V) for V graded by Z2 x Z2 with degrees (0,0), (1,0), (0,1)",
                 space=g.space, algebra=g)


def fx_color_gl_z3z3() -> AlgebraFile:
    V = GradedSpace.from_degrees(Z3Z3, 3, [Z3Z3.degree(0, 1), Z3Z3.degree(1, 0)])
    g = gl_bracket(V, Z3Z3_EPS)
    return _file(Z3Z3_EPS, "gl(V) for V graded by Z3 x Z3; eps takes values in the cube roots of unity",
                 space=g.space, algebra=g)


def fx_inn_der() -> AlgebraFile:
    c = inner_derivation_crossed_module(gl11())
    return _file(SUPER, "Inn(gl(1|1)) -> Der(gl(1|1)) with D > ad_x = ad_{Dx}", crossed_module=c)


def fx_omni_z2_dim2() -> AlgebraFile:
    V = super_space([0, 1])
    return _file(SUPER, "2-term algebra V -> gl(V) + V from the omni-Lie color algebra, V = 1|1",
                 space=V, two_term=two_term_from_omni(OmniAlgebra(V, SUPER)))


def broken_l3_cochain(g: ColorAlgebra) -> MultilinearMap:
    """eps-alternating 3-cochain generated by l3(e11, e12, e21) = e22; not a cocycle."""
    S = g.space
    seed = MultilinearMap.from_entries((S, S, S), S, [(0, 1, 2, 3, 1)])
    return antisymmetrize(g.bicharacter, seed)


def fx_broken_l3() -> AlgebraFile:
    g = gl11()
    t = quadruple_to_skeletal(SkeletalQuadruple(g, Representation.adjoint(g), broken_l3_cochain(g)))
    return _file(SUPER, "skeletal 2-term algebra on gl(1|1) whose l3 is not a cocycle", two_term=t)


def fx_crossed_broken() -> AlgebraFile:
    """phi(c) = e11 into gl(1|1) with the zero action: equivariance fails."""
    g = gl11()
    H = GradedSpace.from_degrees(Z2, 2, [Z2.zero()], ["c"])
    h = ColorAlgebra.abelian(H, SUPER)
    phi = GradedMap(H, g.space, {(0, 0): Scalar.one(2)}, Z2.zero())
    c = CrossedModule(g, h, phi, MultilinearMap((g.space, H), H, {}))
    return _file(SUPER, "phi : <c> -> gl(1|1), c -> e11, zero action; not equivariant", crossed_module=c)


FIXTURES: dict[str, Callable[[], AlgebraFile]] = {
    "abelian-z2-dim2": fx_abelian_z2_dim2,
    "gl11": fx_gl11,
    "broken-jacobi": fx_broken_jacobi,
    "sl2-killing": fx_sl2_killing,
    "gl11-supertrace": fx_gl11_supertrace,
    "heisenberg-z2z2": fx_heisenberg_z2z2,
    "color-gl-z2z2": fx_color_gl_z2z2,
    "color-gl-z3z3": fx_color_gl_z3z3,
    "inn-der": fx_inn_der,
    "omni-z2-dim2": fx_omni_z2_dim2,
    "broken-l3": fx_broken_l3,
    "crossed-broken": fx_crossed_broken,
}


def fixture(name: str) -> AlgebraFile:
    if name not in FIXTURES:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}")
    return FIXTURES[name]()
