"""Acceptance criteria 1-11; a PASS/FAIL line per criterion is printed in the terminal summary."""

from __future__ import annotations

import time

import pytest

from helpers import perturbed_l3, skew_corpus
from omnicolor.errors import CrossedAxiomFailure
from omnicolor.coloralg import (ColorAlgebra, Representation, check_lie_color, color_commutator, gl_bracket,
                                jacobi_agreement)
from omnicolor.fixtures import FIXTURES, SUPER, fixture, gl11, super_space
from omnicolor.gvs import GradedMap, MultilinearMap
from omnicolor.lc2 import check_jacobiator_identity, lc2_roundtrip
from omnicolor.linf2 import (CrossedModule, SkeletalQuadruple, alternating_check, check_axioms,
                             check_crossed_module, crossed_to_strict, inner_derivation_crossed_module,
                             quadruple_to_skeletal, skeletal_to_quadruple, strict_to_crossed,
                             string_from_quadratic, two_term_from_omni)
from omnicolor.omni import OmniAlgebra
from omnicolor.suite import standard_spaces

OMNI_GROUPS = ("trivial", "Z2", "Z2xZ2")


@pytest.mark.criterion(1)
def test_criterion_01_leibniz():
    start = time.perf_counter()
    configs = list(standard_spaces(3, OMNI_GROUPS))
    assert len(configs) == 9
    for label, V, b in configs:
        om = OmniAlgebra(V, b)
        v = om.check_leibniz()
        assert v.passed, (label, v.first_witness())
        assert v["leibniz"].count == om.E.dim ** 3
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(2)
def test_criterion_02_homotopy():
    start = time.perf_counter()
    for label, V, b in standard_spaces(3, OMNI_GROUPS):
        om = OmniAlgebra(V, b)
        c = om.verify_homotopy()["J1 = T"]
        assert c.passed and c.violations == 0, (label, c.witness)
        assert c.count == om.E.dim ** 3
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(3)
def test_criterion_03_two_term_from_omni():
    start = time.perf_counter()
    counts = {}
    for label, V, b in standard_spaces(2):
        v = check_axioms(two_term_from_omni(OmniAlgebra(V, b)))
        assert v.passed, (label, [(c.name, c.witness) for c in v.failures()])
        assert v.names[1:] == [f"({a})" for a in "abcdefghi"]
        counts[label] = v["(i)"].count
    assert counts["Z2 dim 2"] == 6 ** 4 == 1296
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(4)
def test_criterion_04_dirac_iff_lie():
    corpus = skew_corpus()
    expected = [jac for _, jac in corpus.values()]
    assert len(corpus) >= 10 and expected.count(True) >= 3 and expected.count(False) >= 3
    assert {"zero-super", "gl11", "color-gl-z2z2"} <= set(corpus)
    for name, (omega, jacobi) in corpus.items():
        om = OmniAlgebra(omega.space, omega.bicharacter)
        dirac = om.is_dirac(om.graph_of_adjoint(omega)).passed
        assert dirac == check_lie_color(omega).passed == jacobi, name


@pytest.mark.criterion(5)
def test_criterion_05_characteristic_pairs():
    for name, (omega, _) in skew_corpus().items():
        om = OmniAlgebra(omega.space, omega.bicharacter)
        L = om.graph_of_adjoint(omega)
        dv = om.is_dirac(L)
        assert dv["isotropic"].passed and dv["maximal"].passed, name
        cond = om.characteristic_pair(L).conditions()
        assert cond.passed == dv.passed, name
        if not dv.passed:
            assert cond.failures() and all(c.witness is not None for c in cond.failures()), name
    om = OmniAlgebra(super_space([0, 1]), SUPER)
    for L in (om.gl_part, om.V_part):
        assert om.characteristic_pair(L).conditions().passed


@pytest.mark.criterion(6)
def test_criterion_06_lie_dirac_roundtrip():
    cases = []
    g = gl11()
    cases.append((g.space, [g.space.basis_vec(i) for i in range(4)], g))
    V6 = super_space([0, 1, 1, 0, 0, 1])
    cases.append((V6, [V6.basis_vec(i) for i in range(4)], g))
    ab = fixture("abelian-z2-dim2")
    cases.append((ab.space, [ab.space.basis_vec(i) for i in range(2)], ab.algebra))
    cases.append((ab.space, ab.lie_subspace.basis, ab.lie_subspace.algebra))
    assert len(cases[3][1]) < ab.space.dim and len(cases[1][1]) < V6.dim
    for V, basis, alg in cases:
        om = OmniAlgebra(V, alg.bicharacter)
        L = om.dirac_from_lie(basis, alg)
        assert om.is_dirac(L).passed
        _, back = om.lie_from_dirac(L, basis)
        assert back.constants == alg.constants


@pytest.mark.criterion(7)
def test_criterion_07_derivations_are_the_normalizer():
    for omega in (gl11(), fixture("heisenberg-z2z2").algebra):
        om = OmniAlgebra(omega.space, omega.bicharacter)
        rep = om.derivations(omega)
        assert rep.derivations == rep.normalizer
        closed = rep.verdict["[Der, Der] in Der"]
        hb = rep.derivations.homogeneous_basis
        assert closed.passed and closed.count == len(hb) ** 2
        # independent closure check through GradedMap commutators
        maps = [GradedMap.from_vec(X, omega.space) for X in hb]
        for D1 in maps:
            for D2 in maps:
                assert om.is_derivation(omega, color_commutator(D1, D2, omega.bicharacter)).passed


@pytest.mark.criterion(8)
def test_criterion_08_skeletal_and_crossed_roundtrips():
    skeletal = [fixture("broken-l3").two_term,
                string_from_quadratic(fixture("sl2-killing").quadratic),
                string_from_quadratic(fixture("gl11-supertrace").quadratic)]
    for t in skeletal:
        q = skeletal_to_quadruple(t)
        assert quadruple_to_skeletal(q) == t
        assert skeletal_to_quadruple(quadruple_to_skeletal(q)) == q
    g = gl11()
    q = SkeletalQuadruple(g, Representation.adjoint(g), MultilinearMap((g.space,) * 3, g.space, {}))
    assert skeletal_to_quadruple(quadruple_to_skeletal(q)) == q
    inn = inner_derivation_crossed_module(g)
    assert check_crossed_module(inn).passed
    for c in (inn, fixture("inn-der").crossed_module, CrossedModule(g, g, GradedMap.identity(g.space), g.bracket)):
        t = crossed_to_strict(c)
        assert check_axioms(t).passed
        assert strict_to_crossed(t) == c
        assert crossed_to_strict(strict_to_crossed(t)) == t
    with pytest.raises(CrossedAxiomFailure):
        crossed_to_strict(fixture("crossed-broken").crossed_module)


@pytest.mark.criterion(9)
def test_criterion_09_string_algebras():
    for name in ("sl2-killing", "gl11-supertrace"):
        q = fixture(name).quadratic
        assert name != "gl11-supertrace" or q.algebra.bicharacter == SUPER
        t = string_from_quadratic(q)
        assert check_axioms(t).passed, name
        alt = alternating_check(t.V0, t.bicharacter, t.l3)
        assert alt.passed and alt.count == 2 * t.V0.dim ** 3, name


def two_term_corpus() -> dict:
    out = {}
    for name in sorted(FIXTURES):
        f = fixture(name)
        if f.two_term is not None:
            out[name] = f.two_term
        if f.quadratic is not None:
            out[f"string:{name}"] = string_from_quadratic(f.quadratic)
        if f.crossed_module is not None and check_crossed_module(f.crossed_module).passed:
            out[f"strict:{name}"] = crossed_to_strict(f.crossed_module)
        if f.space is not None and f.space.dim <= 2:
            out[f"omni:{name}"] = two_term_from_omni(OmniAlgebra(f.space, f.bicharacter))
    for label, V, b in standard_spaces(2):
        out[f"omni:{label}"] = two_term_from_omni(OmniAlgebra(V, b))
    base = string_from_quadratic(fixture("gl11-supertrace").quadratic)
    for seed in ((0, 1, 2, 0, 1), (1, 1, 3, 0, 1)):
        out[f"perturbed-string:{seed}"] = perturbed_l3(base, [seed])
    return out


@pytest.mark.criterion(10)
def test_criterion_10_jacobiator_equals_axiom_i():
    start = time.perf_counter()
    corpus = two_term_corpus()
    failing = []
    for name, t in corpus.items():
        ii = check_axioms(t)["(i)"]
        jc = check_jacobiator_identity(t)["jacobiator identity"]
        assert (ii.passed, ii.violations, ii.count) == (jc.passed, jc.violations, jc.count), name
        assert (ii.witness and ii.witness.args) == (jc.witness and jc.witness.args), name
        if not ii.passed:
            failing.append(name)
        else:
            _, back = lc2_roundtrip(t)
            assert back == t, name
    assert "broken-l3" in failing and len(failing) >= 3
    assert time.perf_counter() - start < 120


@pytest.mark.criterion(11)
def test_criterion_11_j1_is_eps_j2():
    brackets = {name: omega for name, (omega, _) in skew_corpus().items()}
    for name in FIXTURES:
        f = fixture(name)
        for key, a in (("algebra", f.algebra), ("quadratic", f.quadratic and f.quadratic.algebra)):
            if a is not None:
                brackets[f"{name}:{key}"] = a
        if f.crossed_module is not None:
            brackets[f"{name}:g"] = f.crossed_module.g
            brackets[f"{name}:h"] = f.crossed_module.h
    for label, V, b in standard_spaces(2):
        brackets[f"omni bracket {label}"] = OmniAlgebra(V, b).bracket_algebra()
        brackets[f"gl {label}"] = gl_bracket(V, b)
    assert any(not check_lie_color(a).passed for a in brackets.values())
    for name, a in brackets.items():
        assert isinstance(a, ColorAlgebra)
        sw = jacobi_agreement(a).check()
        assert sw.passed and sw.count == a.dim ** 3, (name, sw.witness)
