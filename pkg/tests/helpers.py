"""Shared test corpora."""

from __future__ import annotations

from omnicolor.coloralg import ColorAlgebra, _add, perturb_skew
from omnicolor.fixtures import (SUPER, Z2Z2, Z2Z2_EPS, fixture, gl11, heisenberg_z2z2, sl2,
                                super_space)
from omnicolor.gvs import GradedSpace, MultilinearMap
from omnicolor.scalars import Scalar


def affine_super() -> ColorAlgebra:
    """[v0, v1] = v1 on a 1|1 space."""
    V = super_space([0, 1])
    return ColorAlgebra.from_constants(V, SUPER, [(0, 1, 1, 1), (1, 0, 1, -1)])


def skew_corpus() -> dict[str, tuple[ColorAlgebra, bool]]:
    """name -> (eps-skew bracket, expected Jacobi verdict)."""
    z3 = fixture("color-gl-z3z3").algebra
    z2z2_space = GradedSpace.from_degrees(Z2Z2, 2, [Z2Z2.degree(0, 0), Z2Z2.degree(1, 0), Z2Z2.degree(0, 1)])
    return {
        "zero-super": (ColorAlgebra.abelian(super_space([0, 1]), SUPER), True),
        "zero-z2z2": (ColorAlgebra.abelian(z2z2_space, Z2Z2_EPS), True),
        "affine-super": (affine_super(), True),
        "gl11": (gl11(), True),
        "sl2": (sl2(), True),
        "heisenberg": (heisenberg_z2z2(), True),
        "heisenberg-extended": (perturb_skew(heisenberg_z2z2(), 1, 2, 0, 1), True),
        "color-gl-z2z2": (fixture("color-gl-z2z2").algebra, True),
        "color-gl-z3z3": (z3, True),
        "gl11-broken-a": (fixture("broken-jacobi").algebra, False),
        "gl11-broken-b": (perturb_skew(gl11(), 1, 2, 0, 1), False),
        "sl2-broken": (perturb_skew(sl2(), 0, 1, 0, 1), False),
        "z3z3-broken": (perturb_skew(z3, 0, 1, 1, Scalar.root(3, 1)), False),
    }


def perturbed_l3(t, seed_entries):
    """t with l3 plus the eps-antisymmetrization of the given sparse entries."""
    from omnicolor.linf2 import antisymmetrize

    extra = antisymmetrize(t.bicharacter, MultilinearMap.from_entries(t.l3.domains, t.l3.codomain,
                                                                     seed_entries))
    table = {k: dict(v) for k, v in t.l3.table.items()}
    for k, v in extra.table.items():
        table[k] = _add(table.get(k, {}), v)
    table = {k: v for k, v in table.items() if v}
    return t.replace(l3=MultilinearMap(t.l3.domains, t.l3.codomain, table))


def applicable_verdicts(f) -> dict:
    """Every check that applies to the sections present in an algebra file."""
    from omnicolor.coloralg import check_leibniz, check_lie_color, check_quadratic, check_representation
    from omnicolor.grading import validate_bicharacter
    from omnicolor.gvs import Subspace, Vec
    from omnicolor.lc2 import check_jacobiator_identity, lc2_roundtrip
    from omnicolor.linf2 import check_axioms, check_crossed_module
    from omnicolor.omni import OmniAlgebra
    from omnicolor.verdicts import Check, Verdict

    out = {"bicharacter": validate_bicharacter(f.bicharacter)}
    if f.algebra is not None:
        out["lie"] = check_lie_color(f.algebra)
        if out["lie"].passed:
            out["leibniz"] = check_leibniz(f.algebra)
    if f.representation is not None:
        out["representation"] = check_representation(f.representation)
    if f.quadratic is not None:
        out["quadratic"] = check_quadratic(f.quadratic)
    if f.space is not None and f.subspaces:
        om = OmniAlgebra(f.space, f.bicharacter)
        for name, (ambient, vectors) in f.subspaces.items():
            L = Subspace(om.E, [Vec.from_coords(om.E, c) for c in vectors])
            out[f"dirac:{name}"] = om.is_dirac(L)
    if f.two_term is not None:
        out["two-term"] = check_axioms(f.two_term)
        out["jacobiator"] = check_jacobiator_identity(f.two_term)
        _, back = lc2_roundtrip(f.two_term)
        ok = back == f.two_term
        out["lc2-roundtrip"] = Verdict("lc2-roundtrip", [Check("equal", ok, count=1, violations=int(not ok))])
    if f.crossed_module is not None:
        out["crossed-module"] = check_crossed_module(f.crossed_module)
    return out
