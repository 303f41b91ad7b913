"""Seeded randomized property suite.

Draws homogeneous elements with small rational coordinates and checks the
identities through the element-level code paths (not the basis tables), so
it cross-checks the tabulated sweeps.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .coloralg import ColorAlgebra, _scaled, check_lie_color, jacobi_j1, jacobi_j2, skew_sweep
from .fixtures import (FIXTURES, SUPER, TRIVIAL, TRIVIAL_EPS, Z2, Z2Z2, Z2Z2_EPS, Z3Z3, Z3Z3_EPS,
                       fixture)
from .grading import Bicharacter
from .gvs import GradedSpace, Vec
from .linf2 import delta_l3, two_term_from_omni
from .omni import OmniAlgebra
from .scalars import Scalar, cyclotomic_polynomial
from .verdicts import Sweep, Verdict


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


def random_scalar(rng: random.Random, order: int) -> Scalar:
    deg = len(cyclotomic_polynomial(order)) - 1
    return Scalar._raw(order, tuple(random_rational(rng) for _ in range(deg)))


def random_homogeneous(space: GradedSpace, rng: random.Random, degree=None) -> Vec:
    comps = space.components
    if degree is None:
        degree = rng.choice(sorted(comps, key=lambda d: d.residues))
    data = {}
    for i in comps.get(degree, ()):
        q = random_rational(rng)
        if q:
            data[i] = Scalar.rational(space.order, q)
    return Vec(space, data)


def _deg(v: Vec, space: GradedSpace):
    return v.degree if v else space.group.zero()


def field_axioms(rng: random.Random, samples: int) -> Verdict:
    assoc, dist, inv = Sweep("associativity"), Sweep("distributivity"), Sweep("inverses")
    for m in (1, 2, 3, 4, 5, 6, 8, 12):
        for _ in range(samples):
            a, b, c = (random_scalar(rng, m) for _ in range(3))
            args = (f"m={m}", str(a), str(b), str(c))
            assoc.record(args, (a * b) * c, a * (b * c))
            dist.record(args, a * (b + c), a * b + a * c)
            if b:
                inv.record(args, (a * b) * b.inverse(), a)
    return Verdict("field", [assoc.check(), dist.check(), inv.check()])


def algebra_identities(name: str, alg: ColorAlgebra, rng: random.Random, samples: int) -> Verdict:
    """Skewness and, for Lie fixtures, J1 = 0; always J1 = eps(z,x) J2 on random homogeneous triples."""
    S = alg.space
    is_lie = check_lie_color(alg).passed
    skew_ok = skew_sweep(alg).check().passed
    j1s, agree = Sweep("jacobi-J1"), Sweep("J1 = eps(z,x) J2")
    for n in range(samples):
        x, y, z = (random_homogeneous(S, rng) for _ in range(3))
        dx, dy, dz = (_deg(v, S) for v in (x, y, z))
        j1 = jacobi_j1(alg, x.data, y.data, z.data, dx, dy, dz)
        args = (f"sample{n}",)
        if is_lie:
            j1s.record(args, Vec(S, j1), Vec(S, {}))
        if skew_ok:
            j2 = jacobi_j2(alg, x.data, y.data, z.data, dx, dy, dz)
            agree.record(args, Vec(S, j1), Vec(S, _scaled(alg.eps_deg(dz, dx), j2)))
    checks = []
    if is_lie:
        checks.append(j1s.check())
    if skew_ok:
        checks.append(agree.check())
    return Verdict(f"algebra:{name}", checks)


def omni_identities(V: GradedSpace, b: Bicharacter, rng: random.Random, samples: int) -> Verdict:
    """Leibniz and J1 = T on random homogeneous elements, using the element-level formulas."""
    om = OmniAlgebra(V, b)
    E = om.E
    leib, hom = Sweep("leibniz"), Sweep("J1 = T")
    for n in range(samples):
        vs = [random_homogeneous(E, rng) for _ in range(3)]
        e1, e2, e3 = (om.from_vec(v) for v in vs)
        x, y = (_deg(v, E) for v in vs[:2])
        eps_xy = b.scalar(x, y)
        lhs = om.circ(e1, om.circ(e2, e3))
        rhs = om.circ(om.circ(e1, e2), e3) + om.circ(e2, om.circ(e1, e3)) * eps_xy
        leib.record((f"sample{n}",), om.to_vec(lhs), om.to_vec(rhs))
        z = _deg(vs[2], E)
        br = om.bracket
        j1 = (br(br(e1, e2), e3) * b.scalar(z, x) + br(br(e2, e3), e1) * b.scalar(x, y)
              + br(br(e3, e1), e2) * b.scalar(y, z))
        hom.record((f"sample{n}",), om.to_vec(j1), om.embed_V(om.T(e1, e2, e3)))
    return Verdict(f"omni:{V}", [leib.check(), hom.check()])


def two_term_identity(V: GradedSpace, b: Bicharacter, rng: random.Random, samples: int) -> Verdict:
    t = two_term_from_omni(OmniAlgebra(V, b))
    sw = Sweep("(i)")
    for n in range(samples):
        vs = [random_homogeneous(t.V0, rng) for _ in range(4)]
        degs = [_deg(v, t.V0) for v in vs]
        val = delta_l3(t, *(v.data for v in vs), *degs)
        sw.record((f"sample{n}",), Vec(t.V1, val), Vec(t.V1, {}))
    return Verdict(f"two-term:{V}", [sw.check()])


STANDARD_CONFIGS = (
    ("trivial", TRIVIAL, TRIVIAL_EPS, ((0,), (0,), (0,))),
    ("Z2", Z2, SUPER, ((0,), (1,), (1,))),
    ("Z2xZ2", Z2Z2, Z2Z2_EPS, ((0, 0), (1, 0), (0, 1))),
    ("Z3xZ3", Z3Z3, Z3Z3_EPS, ((0, 1), (1, 0), (1, 1))),
)


def standard_spaces(max_dim: int, groups=None):
    """(label, V, eps) for each standard grading and 1 <= dim V <= max_dim (at most 3)."""
    for label, group, b, degs in STANDARD_CONFIGS:
        if groups is not None and label not in groups:
            continue
        for n in range(1, min(max_dim, len(degs)) + 1):
            V = GradedSpace.from_degrees(group, b.order, [group.degree(*d) for d in degs[:n]])
            yield f"{label} dim {n}", V, b


def run_suite(seed: int, max_dim: int = 2, samples: int = 20) -> list[Verdict]:
    rng = random.Random(seed)
    verdicts = [field_axioms(rng, samples)]
    for name in sorted(FIXTURES):
        f = fixture(name)
        if f.algebra is not None:
            verdicts.append(algebra_identities(name, f.algebra, rng, samples))
    for _, V, b in standard_spaces(max_dim):
        verdicts.append(omni_identities(V, b, rng, samples))
        verdicts.append(two_term_identity(V, b, rng, samples))
    return verdicts
