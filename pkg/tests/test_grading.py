from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omnicolor.errors import DimensionMismatch, GroupMismatch, InvalidOrder
from omnicolor.grading import (Bicharacter, GradingGroup, degree_arith, eval_bicharacter,
                               validate_bicharacter)
from omnicolor.scalars import Scalar


def brute_force_valid(b: Bicharacter) -> bool:
    """Symmetry and independence of integer lifts, checked on every pair of group elements."""
    G, m = b.group, b.order
    E = b.exponents

    def raw(a, c):
        return sum(a[i] * E[i][j] * c[j] for i in range(G.rank) for j in range(G.rank))

    for a, c in itertools.product(G.elements(), repeat=2):
        if (raw(a.residues, c.residues) + raw(c.residues, a.residues)) % m:
            return False
        # every integer lift of a and c must give the same exponent
        for ta, tc in itertools.product(itertools.product((0, 1), repeat=G.rank), repeat=2):
            la = [r + t * n for r, t, n in zip(a.residues, ta, G.cyclic_orders)]
            lc = [r + t * n for r, t, n in zip(c.residues, tc, G.cyclic_orders)]
            if (raw(la, lc) - raw(a.residues, c.residues)) % m:
                return False
    return True


@st.composite
def bicharacters(draw):
    orders = tuple(draw(st.lists(st.integers(1, 4), min_size=1, max_size=2)))
    m = draw(st.integers(1, 6))
    k = len(orders)
    E = tuple(tuple(draw(st.integers(0, m - 1)) for _ in range(k)) for _ in range(k))
    return Bicharacter(GradingGroup(orders), m, E)


@settings(max_examples=150, deadline=None)
@given(bicharacters())
def test_validation_agrees_with_brute_force(b):
    assert validate_bicharacter(b).passed == brute_force_valid(b)


@settings(max_examples=60, deadline=None)
@given(bicharacters())
def test_valid_bicharacters_are_biadditive_and_unitary(b):
    if not validate_bicharacter(b).passed:
        return
    G, one = b.group, Scalar.one(b.order)
    for a, c, d in itertools.product(G.elements(), repeat=3):
        assert b.scalar(a + c, d) == b.scalar(a, d) * b.scalar(c, d)
        assert b.scalar(d, a + c) == b.scalar(d, a) * b.scalar(d, c)
    for a, c in itertools.product(G.elements(), repeat=2):
        assert b.scalar(a, c) * b.scalar(c, a) == one


def test_worked_examples():
    Z2, Z3 = GradingGroup((2,)), GradingGroup((3,))
    assert validate_bicharacter(Bicharacter(Z2, 2, ((1,),))).passed
    bad = validate_bicharacter(Bicharacter(Z3, 3, ((1,),)))
    assert not bad.passed and not bad["symmetry"].passed
    Z3Z3 = GradingGroup((3, 3))
    b = Bicharacter(Z3Z3, 3, ((0, 1), (2, 0)))
    assert validate_bicharacter(b).passed
    assert eval_bicharacter(b, Z3Z3.degree(1, 0), Z3Z3.degree(0, 1)).to_scalar() == Scalar.root(3, 1)
    s = Bicharacter.super()
    assert s.scalar(Z2.degree(1), Z2.degree(1)) == Scalar.rational(2, -1)
    for beta in Z3Z3.elements():
        assert b.scalar(Z3Z3.zero(), beta) == Scalar.one(3)


def test_degree_arithmetic():
    Z4, Z6, K = GradingGroup((4,)), GradingGroup((6,)), GradingGroup((2, 2))
    assert degree_arith("add", Z4.degree(3), Z4.degree(2)) == Z4.degree(1)
    assert degree_arith("neg", K.degree(1, 0)) == K.degree(1, 0)
    assert degree_arith("add", Z6.degree(5), Z6.degree(1)).is_zero()
    assert len(list(K.elements())) == K.size == 4
    with pytest.raises(GroupMismatch):
        Z4.degree(1) + Z6.degree(1)
    with pytest.raises(DimensionMismatch):
        K.degree(1)


def test_construction_errors():
    with pytest.raises(InvalidOrder):
        Bicharacter(GradingGroup((2,)), 0, ((0,),))
    with pytest.raises(DimensionMismatch):
        Bicharacter(GradingGroup((2, 2)), 2, ((0,),))
    with pytest.raises(GroupMismatch):
        Bicharacter.super().scalar(GradingGroup((3,)).zero(), GradingGroup((3,)).zero())
