from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from omnicolor.errors import ShiftMismatch
from omnicolor.grading import GradingGroup
from omnicolor.gvs import (GradedMap, GradedSpace, MultilinearMap, Subspace, Vec, annihilator,
                           end_space, kernel, null_space, nullspace, solve_linear)
from omnicolor.scalars import Scalar

Z2 = GradingGroup((2,))
Q = GradingGroup.trivial()


def rational_space(n: int) -> GradedSpace:
    return GradedSpace.from_degrees(Q, 1, [Q.zero()] * n)


def super_space(degrees) -> GradedSpace:
    return GradedSpace.from_degrees(Z2, 2, [Z2.degree(d) for d in degrees])


small = st.integers(-3, 3)


@st.composite
def matrices(draw, max_rows=4, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(small) for _ in range(c)] for _ in range(r)]


def as_scalars(rows, order=1):
    return [[Scalar.rational(order, x) for x in row] for row in rows]


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_nullspace_matches_sympy(rows):
    ncols = len(rows[0])
    ns = nullspace(as_scalars(rows), ncols, 1)
    assert len(ns) == ncols - sympy.Matrix(rows).rank()
    for v in ns:
        for row in rows:
            assert sum((Fraction(a) * c.coeffs[0] for a, c in zip(row, v)), Fraction(0)) == 0


@settings(max_examples=60, deadline=None)
@given(matrices(max_rows=3, max_cols=4), matrices(max_rows=3, max_cols=4))
def test_intersection_dimension_formula(a, b):
    n = 4
    a = [row + [0] * (n - len(row)) for row in a]
    b = [row + [0] * (n - len(row)) for row in b]
    S = rational_space(n)
    A = Subspace(S, [Vec.from_coords(S, r) for r in as_scalars(a)])
    B = Subspace(S, [Vec.from_coords(S, r) for r in as_scalars(b)])
    ra, rb, rab = (sympy.Matrix(m).rank() for m in (a, b, a + b))
    assert A.dim == ra and B.dim == rb and (A + B).dim == rab
    I = A.intersect(B)
    assert I.dim == ra + rb - rab
    assert all(A.contains(v) and B.contains(v) for v in I.basis)


def test_solve_linear():
    S = rational_space(3)
    cols = [S.vec([1, 0, 1]), S.vec([0, 1, 1])]
    assert solve_linear(cols, S.vec([2, 3, 5])) == [Scalar.rational(1, 2), Scalar.rational(1, 3)]
    assert solve_linear(cols, S.vec([0, 0, 1])) is None


def test_map_basics():
    V = super_space([0, 1, 1])
    I = GradedMap.identity(V)
    f = GradedMap(V, V, {(1, 0): Scalar.one(2), (0, 2): Scalar.rational(2, 3)})
    assert I.compose(f) == f and f.compose(I) == f
    assert GradedMap.zero(V, V).apply(V.vec([1, 2, 3])) == V.zero()
    comps = f.homogeneous_components()
    assert len(comps) == 1 and comps[0][0] == Z2.degree(1)
    assert GradedMap.zero(V, V).homogeneous_components() == []
    (d, g), = I.homogeneous_components()
    assert d == Z2.zero() and g == I
    with pytest.raises(ShiftMismatch):
        GradedMap(V, V, {(1, 0): Scalar.one(2)}, Z2.zero())


def test_mixed_map_splits_into_components():
    V = super_space([0, 1])
    f = GradedMap(V, V, {(0, 0): Scalar.one(2), (0, 1): Scalar.one(2)})
    comps = dict(f.homogeneous_components())
    assert set(comps) == {Z2.zero(), Z2.degree(1)}
    assert comps[Z2.zero()] + comps[Z2.degree(1)] == f


def test_end_space_grading():
    V = super_space([0, 1])
    end = end_space(V)
    assert end.dim == 4
    # E[i, j] has degree deg_i - deg_j
    assert [d.residues for d in end.degrees] == [(0,), (1,), (1,), (0,)]
    f = GradedMap(V, V, {(0, 1): Scalar.rational(2, 5)})
    assert GradedMap.from_vec(f.to_vec(end), V) == f


def test_multilinear_degree_violations():
    V = super_space([0, 1])
    good = MultilinearMap.from_entries((V, V), V, [(0, 1, 1, 1)])
    assert good.degree_violations() == []
    bad = MultilinearMap.from_entries((V, V), V, [(0, 1, 0, 1)])
    assert bad.degree_violations()


def test_kernel_and_membership():
    V = super_space([0, 1])
    assert kernel(GradedMap.identity(V)).dim == 0
    v = V.vec([1, 2])
    assert Subspace(V, [v]).contains(v)
    assert not Subspace(V, [v]).contains(V.vec([1, 0]))


def test_null_space_and_annihilator():
    V = super_space([0, 1, 1])
    end = end_space(V)
    assert null_space(Subspace.full(end), V).dim == 0
    assert null_space(Subspace.zero(end), V) == Subspace.full(V)
    W = Subspace(V, [V.basis_vec(0), V.basis_vec(1) + V.basis_vec(2)])
    W0 = annihilator(W)
    assert W0.dim == 3 * (3 - 2)
    assert null_space(W0, V) == W
    # brute force: every X in W^0 kills W, and W^0 is everything that does
    for X in W0.basis:
        Xm = GradedMap.from_vec(X, V)
        assert all(not Xm.apply(w) for w in W.basis)
