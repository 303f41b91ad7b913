from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from omnicolor.errors import InversionOfZero, LiteralError, OrderMismatch, ParseError
from omnicolor.scalars import (RootOfUnity, Scalar, cyclo_arith, cyclotomic_polynomial, embed,
                               euler_phi, format_literal, parse_literal)

ORDERS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15]
X = sympy.Symbol("x")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def scalars(draw, order=None):
    m = order if order is not None else draw(st.sampled_from(ORDERS))
    return Scalar(m, draw(st.lists(rationals, min_size=euler_phi(m), max_size=euler_phi(m))))


@st.composite
def scalar_pairs(draw):
    m = draw(st.sampled_from(ORDERS))
    return draw(scalars(m)), draw(scalars(m))


def to_poly(s: Scalar) -> sympy.Poly:
    return sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * X**k
                          for k, c in enumerate(s.coeffs)), X, domain="QQ")


def from_poly(p: sympy.Poly, m: int) -> Scalar:
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]
    coeffs += [Fraction(0)] * (euler_phi(m) - len(coeffs))
    return Scalar(m, coeffs)


def oracle_mul(a: Scalar, b: Scalar) -> Scalar:
    phi = sympy.Poly(sympy.cyclotomic_poly(a.order, X), X, domain="QQ")
    return from_poly((to_poly(a) * to_poly(b)).rem(phi), a.order)


def test_cyclotomic_polynomial_matches_sympy():
    for m in range(1, 31):
        ours = cyclotomic_polynomial(m)
        ref = sympy.Poly(sympy.cyclotomic_poly(m, X), X).all_coeffs()
        assert list(ours) == [int(c) for c in reversed(ref)]
        assert euler_phi(m) == sympy.totient(m)


@settings(max_examples=150, deadline=None)
@given(scalar_pairs())
def test_multiplication_matches_sympy_reduction(pair):
    a, b = pair
    assert a * b == oracle_mul(a, b)


@settings(max_examples=100, deadline=None)
@given(scalar_pairs(), st.data())
def test_field_axioms(pair, data):
    a, b = pair
    c = data.draw(scalars(a.order))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == Scalar.zero(a.order)
    if b:
        assert (a / b) * b == a
        assert b * b.inverse() == Scalar.one(a.order)


@settings(max_examples=100, deadline=None)
@given(scalars())
def test_literal_roundtrip(s):
    assert parse_literal(format_literal(s), s.order) == s


def test_roots_of_unity_have_exact_order():
    for m in ORDERS:
        z = Scalar.root(m, 1)
        assert z**m == Scalar.one(m)
        for k in range(1, m):
            assert z**k != Scalar.one(m)
        # sum of all m-th roots vanishes for m > 1
        total = sum((Scalar.root(m, k) for k in range(m)), Scalar.zero(m))
        assert total == (Scalar.one(m) if m == 1 else Scalar.zero(m))


def test_worked_examples():
    z4, z3, z6 = Scalar.root(4, 1), Scalar.root(3, 1), Scalar.root(6, 1)
    assert cyclo_arith("mul", z4, z4) == Scalar.rational(4, -1)
    assert cyclo_arith("add", Scalar.one(3), cyclo_arith("add", z3, z3**2)) == Scalar.zero(3)
    assert cyclo_arith("inv", Scalar.root(6, 5)) == z6
    assert embed(2, k=1) == Scalar.rational(2, -1)
    assert embed(12, Fraction(3, 4)).is_rational()
    assert embed(12, Fraction(3, 4)) == Scalar.rational(12, Fraction(3, 4))
    assert embed(4, k=2) == Scalar.rational(4, -1)


def test_root_of_unity_symbols():
    r = RootOfUnity(6, 5)
    assert (r * RootOfUnity(6, 1)).exponent == 0
    assert r.inverse().to_scalar() == Scalar.root(6, 1)
    with pytest.raises(OrderMismatch):
        RootOfUnity(6, 1) * RootOfUnity(4, 1)


def test_literal_grammar():
    assert parse_literal("1/2*z^3 - 1", 5) == Scalar.root(5, 3) * Fraction(1, 2) - 1
    assert parse_literal("z", 4) == Scalar.root(4, 1)
    assert parse_literal("-z^2", 4) == Scalar.one(4)
    assert parse_literal("z^7", 3) == Scalar.root(3, 1)
    assert format_literal(Scalar.zero(5)) == "0"
    assert format_literal(Scalar.rational(3, Fraction(-2, 3))) == "-2/3"
    for bad in ["1//2*z", "", "z^", "1 2", "1/0", "x", "2*"]:
        with pytest.raises(ParseError):
            parse_literal(bad, 4)
    assert issubclass(LiteralError, ParseError)


def test_errors():
    with pytest.raises(InversionOfZero):
        Scalar.zero(5).inverse()
    with pytest.raises(OrderMismatch):
        Scalar.one(3) + Scalar.one(4)
    with pytest.raises(ValueError):
        embed(4, k=4)
