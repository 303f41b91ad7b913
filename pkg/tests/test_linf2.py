from __future__ import annotations

import itertools
import random

import pytest

from omnicolor.coloralg import ColorAlgebra, QuadraticForm, Representation, _add, _scaled
from omnicolor.errors import CrossedAxiomFailure, NotQuadratic, NotSkeletal, NotStrict, UnboundSymbol
from omnicolor.fixtures import (SUPER, TRIVIAL, TRIVIAL_EPS, Z2, Z3Z3, Z3Z3_EPS, fixture, gl11, sl2,
                                super_space)
from omnicolor.gvs import GradedMap, GradedSpace, MultilinearMap
from omnicolor.linf2 import (CrossedModule, SkeletalQuadruple, TwoTermAlgebra, alternating_check,
                             antisymmetrize, axiom_i_sweep, ce_differential, check_axioms,
                             check_crossed_module, crossed_to_strict, delta_l3,
                             inner_derivation_crossed_module, quadruple_to_skeletal,
                             skeletal_to_quadruple, strict_to_crossed, string_from_quadratic,
                             two_term_from_omni)
from omnicolor.omni import OmniAlgebra
from omnicolor.scalars import Scalar


def space(group, b, degs):
    return GradedSpace.from_degrees(group, b.order, [group.degree(*d) if isinstance(d, tuple)
                                                     else group.degree(d) for d in degs])


def omni_two_term(group, b, degs, l3_sign="corrected"):
    return two_term_from_omni(OmniAlgebra(space(group, b, degs), b), l3_sign)


def lie_only(g: ColorAlgebra) -> TwoTermAlgebra:
    V0 = g.space
    V1 = GradedSpace((), V0.group, V0.order)
    return TwoTermAlgebra(V0, V1, g.bicharacter, GradedMap.zero(V1, V0, V0.group.zero()), g.bracket,
                          MultilinearMap((V0, V1), V1, {}), MultilinearMap((V0, V0, V0), V1, {}))


def test_lie_algebra_alone_passes():
    for g in (gl11(), sl2(), fixture("heisenberg-z2z2").algebra):
        assert check_axioms(lie_only(g)).passed


def test_omni_construction_passes():
    cases = [(TRIVIAL, TRIVIAL_EPS, [0]), (TRIVIAL, TRIVIAL_EPS, [0, 0]), (Z2, SUPER, [0, 1]),
             (Z2, SUPER, [1, 1]), (Z3Z3, Z3Z3_EPS, [(0, 1), (1, 0)])]
    for group, b, degs in cases:
        v = check_axioms(omni_two_term(group, b, degs))
        assert v.passed, v.render_text()


def test_one_dimensional_omni_has_zero_l3():
    t = omni_two_term(TRIVIAL, TRIVIAL_EPS, [0])
    assert t.l3.table == {}


def test_l3_vanishes_on_endomorphisms():
    t = omni_two_term(Z2, SUPER, [0, 1])
    for i, j, k in itertools.product(range(4), repeat=3):
        assert not t.l3.on_basis(i, j, k)


def test_negated_l3_fails_g():
    t = omni_two_term(Z2, SUPER, [0, 1]).scaled_l3(-1)
    v = check_axioms(t)
    assert not v["(g)"].passed and v["(g)"].witness is not None


def test_l3_sign_only_matters_beyond_plus_minus_one():
    t1 = omni_two_term(Z2, SUPER, [0, 1], "as-printed")
    t2 = omni_two_term(Z2, SUPER, [0, 1])
    assert t1 == t2
    t = omni_two_term(Z3Z3, Z3Z3_EPS, [(0, 1), (1, 0)], "as-printed")
    v = check_axioms(t)
    assert {c.name for c in v.failures()} == {"(d)", "(g)", "(h)", "(i)"}


def test_alternative_sign_pattern_of_i_fails_on_omni():
    # frozen violation counts for the alternative sign pattern of the quartic identity
    for group, b, degs, expected in [(TRIVIAL, TRIVIAL_EPS, [0, 0], 168), (Z2, SUPER, [0, 1], 157)]:
        t = omni_two_term(group, b, degs)
        assert axiom_i_sweep(t, "corrected").violations == 0
        assert axiom_i_sweep(t, "as-printed").violations == expected


def test_h_as_printed_is_rejected():
    with pytest.raises(UnboundSymbol):
        check_axioms(omni_two_term(Z2, SUPER, [0, 1]), h_form="as-printed")


# --- Chevalley-Eilenberg oracle --------------------------------------------------


def textbook_ce(g: ColorAlgebra, rep: Representation, f: MultilinearMap, idx):
    """Ungraded formula for a 3-cochain; only valid for trivial grading."""
    o = g.order
    out = {}
    for i in range(4):
        rest = idx[:i] + idx[i + 1:]
        out = _add(out, _scaled(Scalar.rational(o, (-1) ** i), rep.act_data(idx[i], f.on_basis(*rest))))
    for i, j in itertools.combinations(range(4), 2):
        rest = [{a: Scalar.one(o)} for k, a in enumerate(idx) if k not in (i, j)]
        br = g.bracket.on_basis(idx[i], idx[j])
        out = _add(out, _scaled(Scalar.rational(o, (-1) ** (i + j)), f.apply_data(br, *rest)))
    return out


def random_cochain(g: ColorAlgebra, module: GradedSpace, seed: int, terms: int = 4) -> MultilinearMap:
    rng = random.Random(seed)
    S = g.space
    entries = []
    for _ in range(terms):
        i, j, k = (rng.randrange(S.dim) for _ in range(3))
        d = S.degrees[i] + S.degrees[j] + S.degrees[k]
        outs = [a for a in range(module.dim) if module.degrees[a] == d]
        if outs:
            entries.append((i, j, k, rng.choice(outs), rng.randint(-3, 3)))
    return antisymmetrize(g.bicharacter, MultilinearMap.from_entries((S, S, S), module, entries))


def test_ce_differential_matches_textbook_formula():
    g = sl2()
    rep = Representation.adjoint(g)
    for seed in range(3):
        f = random_cochain(g, g.space, seed)
        delta = ce_differential(g, rep, f)
        for idx in itertools.product(range(3), repeat=4):
            assert dict(delta.on_basis(*idx)) == textbook_ce(g, rep, f, idx)


def test_ce_differential_squares_to_zero():
    g = gl11()
    rep = Representation.adjoint(g)
    f = antisymmetrize(g.bicharacter, MultilinearMap.from_entries((g.space,) * 2, g.space, [(0, 1, 1, 1)]))
    dd = ce_differential(g, rep, ce_differential(g, rep, f))
    assert dd.table == {}


def test_quartic_identity_is_the_ce_differential():
    g = gl11()
    rep = Representation.adjoint(g)
    for seed in range(3):
        f = random_cochain(g, g.space, 10 + seed)
        assert alternating_check(g.space, g.bicharacter, f).passed
        t = quadruple_to_skeletal(SkeletalQuadruple(g, rep, f))
        delta = ce_differential(g, rep, f)
        deg = g.space.degrees
        for idx in itertools.product(range(4), repeat=4):
            units = [{a: Scalar.one(2)} for a in idx]
            val = delta_l3(t, *units, *(deg[a] for a in idx))
            assert val == dict(delta.on_basis(*idx))


# --- skeletal algebras -----------------------------------------------------------


def test_skeletal_roundtrip_and_zero_cocycle():
    g = gl11()
    q = SkeletalQuadruple(g, Representation.adjoint(g), MultilinearMap((g.space,) * 3, g.space, {}))
    t = quadruple_to_skeletal(q)
    assert check_axioms(t).passed
    assert skeletal_to_quadruple(t) == q
    assert quadruple_to_skeletal(skeletal_to_quadruple(t)) == t


def test_non_cocycle_fails_i():
    t = fixture("broken-l3").two_term
    q = skeletal_to_quadruple(t)
    qv = q.check()
    assert not qv["cocycle"].passed and qv["cocycle alternating"].passed
    v = check_axioms(t)
    assert [c.name for c in v.failures()] == ["(i)"]
    assert v["(i)"].witness.args == qv["cocycle"].witness.args


def test_skeletal_requires_zero_d():
    with pytest.raises(NotSkeletal):
        skeletal_to_quadruple(omni_two_term(Z2, SUPER, [0, 1]))


# --- string algebras -------------------------------------------------------------


def test_string_algebras():
    for name in ("sl2-killing", "gl11-supertrace"):
        q = fixture(name).quadratic
        t = string_from_quadratic(q)
        assert check_axioms(t).passed, name
        assert alternating_check(t.V0, t.bicharacter, t.l3).passed
    V = GradedSpace.from_degrees(TRIVIAL, 1, [TRIVIAL.zero()] * 2)
    t = string_from_quadratic(QuadraticForm(ColorAlgebra.abelian(V, TRIVIAL_EPS), [[1, 0], [0, 1]]))
    assert t.l3.table == {} and check_axioms(t).passed
    with pytest.raises(NotQuadratic):
        string_from_quadratic(QuadraticForm(sl2(), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))


# --- crossed modules ---------------------------------------------------------------


def test_crossed_module_examples():
    g = gl11()
    zero_h = ColorAlgebra.abelian(super_space([0, 1]), SUPER)
    trivial = CrossedModule(g, zero_h, GradedMap.zero(zero_h.space, g.space, Z2.zero()),
                            MultilinearMap((g.space, zero_h.space), zero_h.space, {}))
    assert check_crossed_module(trivial).passed
    ident = CrossedModule(g, g, GradedMap.identity(g.space), g.bracket)
    assert check_crossed_module(ident).passed
    t = crossed_to_strict(ident)
    assert check_axioms(t).passed and strict_to_crossed(t) == ident


def test_strict_with_no_v1_gives_zero_crossed_module():
    t = lie_only(gl11())
    c = strict_to_crossed(t)
    assert c.h.dim == 0 and c.g == ColorAlgebra(t.V0, SUPER, t.l2_00)
    with pytest.raises(NotStrict):
        strict_to_crossed(omni_two_term(Z2, SUPER, [0, 1]))


def test_inner_derivations():
    c = inner_derivation_crossed_module(gl11())
    assert (c.g.dim, c.h.dim) == (5, 3)
    assert check_crossed_module(c).passed
    t = crossed_to_strict(c)
    assert check_axioms(t).passed
    assert strict_to_crossed(t) == c


def test_broken_equivariance():
    c = fixture("crossed-broken").crossed_module
    v = check_crossed_module(c)
    assert not v["equivariance"].passed
    with pytest.raises(CrossedAxiomFailure):
        crossed_to_strict(c)
    # built anyway, the strict algebra violates the axiom relating d and l2(x, h)
    t = crossed_to_strict(c, check=False)
    assert [f.name for f in check_axioms(t).failures()] == ["(e)"]
