"""The omni-Lie color algebra E = gl(V) + V.

Basis of E: the elementary matrices E[i,j] of gl(V) (index ``i*n + j``)
followed by the basis of V (index ``n*n + k``).  Every basis element is
homogeneous, so the defining formulas, which only make sense on homogeneous
elements, are evaluated on basis pairs/triples and extended (bi/tri)linearly
through sparse tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .coloralg import (ColorAlgebra, _add, _neg, _scaled, check_leibniz,
                       color_commutator, eps, gl_bracket, jacobi_j1, require_lie, skew_sweep)
from .errors import (InvalidConstants, NotDirac, NotGraded, NotMaximalIsotropic, NotSkew,
                     ShapeMismatch, SpaceMismatch)
from .grading import Bicharacter, Degree
from .gvs import (GradedMap, GradedSpace, MultilinearMap, Subspace, Vec, annihilator,
                  end_space, nullspace, null_space, solve_linear)
from .scalars import Scalar
from .verdicts import Check, Sweep, Verdict, Witness


@dataclass(frozen=True)
class OmniElement:
    """A + x with A in gl(V) and x in V."""

    endo: GradedMap
    vec: Vec

    def __post_init__(self):
        if self.endo.domain != self.vec.space or self.endo.codomain != self.vec.space:
            raise SpaceMismatch("endomorphism and vector act on different spaces")

    @classmethod
    def of_map(cls, A: GradedMap) -> OmniElement:
        return cls(A, Vec.zero(A.domain))

    @classmethod
    def of_vec(cls, x: Vec) -> OmniElement:
        return cls(GradedMap.zero(x.space, x.space), x)

    @property
    def degree(self) -> Degree | None:
        """Common degree of a nonzero homogeneous element, else None."""
        degs = self.endo.entry_shifts() | set(self.vec.homogeneous_parts())
        return degs.pop() if len(degs) == 1 else None

    def is_zero(self) -> bool:
        return self.endo.is_zero() and self.vec.is_zero()

    def __add__(self, other: OmniElement) -> OmniElement:
        return OmniElement(self.endo + other.endo, self.vec + other.vec)

    def __sub__(self, other: OmniElement) -> OmniElement:
        return OmniElement(self.endo - other.endo, self.vec - other.vec)

    def __mul__(self, c) -> OmniElement:
        return OmniElement(self.endo * c, self.vec * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, OmniElement):
            return NotImplemented
        return self.endo == other.endo and self.vec == other.vec

    def __hash__(self):
        return hash((self.endo, self.vec))

    def homogeneous_parts(self) -> dict[Degree, OmniElement]:
        V = self.vec.space
        parts: dict[Degree, OmniElement] = {}
        for d, A in self.endo.homogeneous_components():
            parts[d] = OmniElement(A, Vec.zero(V))
        for d, x in self.vec.homogeneous_parts().items():
            prev = parts.get(d)
            parts[d] = OmniElement(prev.endo if prev else GradedMap.zero(V, V), x)
        return parts

    def to_literal(self):
        return {"endo": self.endo.to_literal(), "vec": self.vec.to_literal()}


def _half(order: int) -> Scalar:
    return Scalar.rational(order, Fraction(1, 2))


class OmniAlgebra:
    """E = gl(V) + V with the circle product, skew bracket, V-valued pairing and T."""

    def __init__(self, V: GradedSpace, bicharacter: Bicharacter):
        if V.group != bicharacter.group or V.order != bicharacter.order:
            raise ShapeMismatch("space and bicharacter disagree on group or field")
        self.V = V
        self.bicharacter = bicharacter
        self.n = V.dim
        self.end = end_space(V)
        self.E = self.end.direct_sum(V)
        self.gl = gl_bracket(V, bicharacter)

    # element conversions -------------------------------------------------
    def to_vec(self, e: OmniElement) -> Vec:
        if e.vec.space != self.V:
            raise SpaceMismatch("element belongs to a different omni-Lie algebra")
        n2 = self.n * self.n
        data = {r * self.n + c: v for (r, c), v in e.endo.entries.items()}
        data.update({n2 + k: v for k, v in e.vec.data.items()})
        return Vec(self.E, data)

    def from_vec(self, v: Vec) -> OmniElement:
        if v.space != self.E:
            raise SpaceMismatch("vector is not in gl(V) + V")
        n, n2 = self.n, self.n * self.n
        entries = {divmod(i, n): x for i, x in v.data.items() if i < n2}
        vec = {i - n2: x for i, x in v.data.items() if i >= n2}
        return OmniElement(GradedMap(self.V, self.V, entries, check=False), Vec(self.V, vec))

    def basis_element(self, p: int) -> OmniElement:
        return self.from_vec(self.E.basis_vec(p))

    def split(self, v: Vec) -> tuple[Vec, Vec]:
        """(gl part as a vector of End(V), V part)."""
        n2 = self.n * self.n
        return (Vec(self.end, {i: x for i, x in v.data.items() if i < n2}),
                Vec(self.V, {i - n2: x for i, x in v.data.items() if i >= n2}))

    def embed_gl(self, X: Vec) -> Vec:
        return Vec(self.E, dict(X.data))

    def embed_V(self, x: Vec) -> Vec:
        n2 = self.n * self.n
        return Vec(self.E, {n2 + k: v for k, v in x.data.items()})

    def _check(self, *es: OmniElement):
        for e in es:
            if e.vec.space != self.V:
                raise SpaceMismatch("element belongs to a different omni-Lie algebra")

    # defining formulas on homogeneous elements ------------------------------
    def _eps(self, a: Degree | None, b: Degree | None) -> Scalar:
        if a is None or b is None:
            return Scalar.one(self.V.order)  # one side is zero; the term vanishes anyway
        return eps(self.bicharacter, a, b)

    def _circ_h(self, e1: OmniElement, e2: OmniElement) -> OmniElement:
        # (A+x) o (B+y) = [A,B] + Ay
        return OmniElement(color_commutator(e1.endo, e2.endo, self.bicharacter),
                           e1.endo.apply(e2.vec))

    def _bracket_h(self, e1: OmniElement, e2: OmniElement) -> OmniElement:
        # [A,B] + 1/2 (Ay - eps(x,y) Bx)
        e = self._eps(e1.degree, e2.degree)
        h = _half(self.V.order)
        v = (e1.endo.apply(e2.vec) - e2.endo.apply(e1.vec) * e) * h
        return OmniElement(color_commutator(e1.endo, e2.endo, self.bicharacter), v)

    def _pairing_h(self, e1: OmniElement, e2: OmniElement) -> Vec:
        # 1/2 (Ay + eps(x,y) Bx)
        e = self._eps(e1.degree, e2.degree)
        return (e1.endo.apply(e2.vec) + e2.endo.apply(e1.vec) * e) * _half(self.V.order)

    def _bilinear(self, fn, e1: OmniElement, e2: OmniElement):
        self._check(e1, e2)
        out = None
        for p1 in e1.homogeneous_parts().values():
            for p2 in e2.homogeneous_parts().values():
                r = fn(p1, p2)
                out = r if out is None else out + r
        return out

    def circ(self, e1: OmniElement, e2: OmniElement) -> OmniElement:
        out = self._bilinear(self._circ_h, e1, e2)
        return out if out is not None else OmniElement.of_vec(Vec.zero(self.V))

    def bracket(self, e1: OmniElement, e2: OmniElement) -> OmniElement:
        out = self._bilinear(self._bracket_h, e1, e2)
        return out if out is not None else OmniElement.of_vec(Vec.zero(self.V))

    def pairing(self, e1: OmniElement, e2: OmniElement) -> Vec:
        out = self._bilinear(self._pairing_h, e1, e2)
        return out if out is not None else Vec.zero(self.V)

    def T(self, e1: OmniElement, e2: OmniElement, e3: OmniElement) -> Vec:
        """1/3 { eps(z,x)<[e1,e2],e3> + eps(x,y)<[e2,e3],e1> + eps(y,z)<[e3,e1],e2> }."""
        self._check(e1, e2, e3)
        total = Vec.zero(self.V)
        third = Scalar.rational(self.V.order, Fraction(1, 3))
        for a in e1.homogeneous_parts().values():
            for b in e2.homogeneous_parts().values():
                for c in e3.homogeneous_parts().values():
                    x, y, z = a.degree, b.degree, c.degree
                    s = (self.pairing(self.bracket(a, b), c) * self._eps(z, x)
                         + self.pairing(self.bracket(b, c), a) * self._eps(x, y)
                         + self.pairing(self.bracket(c, a), b) * self._eps(y, z))
                    total = total + s * third
        return total

    # tables over the basis of E ---------------------------------------------
    def _tabulate2(self, fn, codomain, to_vec) -> MultilinearMap:
        basis = [self.basis_element(p) for p in range(self.E.dim)]
        table = {}
        for p, q in itertools.product(range(self.E.dim), repeat=2):
            out = to_vec(fn(basis[p], basis[q]))
            if out.data:
                table[(p, q)] = dict(out.data)
        return MultilinearMap((self.E, self.E), codomain, table)

    @cached_property
    def circ_table(self) -> MultilinearMap:
        return self._tabulate2(self._circ_h, self.E, self.to_vec)

    @cached_property
    def bracket_table(self) -> MultilinearMap:
        return self._tabulate2(self._bracket_h, self.E, self.to_vec)

    @cached_property
    def pairing_table(self) -> MultilinearMap:
        return self._tabulate2(self._pairing_h, self.V, lambda v: v)

    @cached_property
    def T_table(self) -> MultilinearMap:
        """T on basis triples, assembled from the bracket and pairing tables."""
        E = self.E
        br, pr = self.bracket_table.apply_data, self.pairing_table.apply_data
        deg = E.degrees
        one = Scalar.one(E.order)
        third = Scalar.rational(E.order, Fraction(1, 3))
        table = {}
        for i, j, k in itertools.product(range(E.dim), repeat=3):
            x, y, z = {i: one}, {j: one}, {k: one}
            dx, dy, dz = deg[i], deg[j], deg[k]
            out = _add(
                _scaled(self._eps(dz, dx), pr(br(x, y), z)),
                _scaled(self._eps(dx, dy), pr(br(y, z), x)),
                _scaled(self._eps(dy, dz), pr(br(z, x), y)),
            )
            if out:
                table[(i, j, k)] = _scaled(third, out)
        return MultilinearMap((E, E, E), self.V, table)

    def circ_algebra(self) -> ColorAlgebra:
        return ColorAlgebra(self.E, self.bicharacter, self.circ_table)

    def bracket_algebra(self) -> ColorAlgebra:
        return ColorAlgebra(self.E, self.bicharacter, self.bracket_table)

    # sweeps ------------------------------------------------------------------
    def check_leibniz(self) -> Verdict:
        v = check_leibniz(self.circ_algebra())
        v.subject = "omni-leibniz"
        return v

    def verify_homotopy(self) -> Verdict:
        """J1 of the skew bracket equals T (as an element of V inside E) on basis triples."""
        alg = self.bracket_algebra()
        E, deg, names = self.E, self.E.degrees, self.E.names
        one = Scalar.one(E.order)
        T = self.T_table
        n2 = self.n * self.n
        sw = Sweep("J1 = T")
        for i, j, k in itertools.product(range(E.dim), repeat=3):
            j1 = jacobi_j1(alg, {i: one}, {j: one}, {k: one}, deg[i], deg[j], deg[k])
            t = {n2 + r: v for r, v in T.on_basis(i, j, k).items()}
            sw.record((names[i], names[j], names[k]), Vec(E, j1), Vec(E, t))
        return Verdict("omni-homotopy", [sw.check()])

    def check_decomposition(self) -> Verdict:
        """e1 o e2 = [[e1,e2]] + <e1,e2>, and the two parts are eps-skew / eps-symmetric."""
        E, names, deg = self.E, self.E.names, self.E.degrees
        n2 = self.n * self.n
        split, skew, sym = Sweep("circ = bracket + pairing"), Sweep("bracket eps-skew"), Sweep("pairing eps-symmetric")
        for p, q in itertools.product(range(E.dim), repeat=2):
            args = (names[p], names[q])
            b = self.bracket_table.on_basis(p, q)
            pr = {n2 + r: v for r, v in self.pairing_table.on_basis(p, q).items()}
            split.record(args, Vec(E, dict(self.circ_table.on_basis(p, q))), Vec(E, _add(b, pr)))
            e = self._eps(deg[p], deg[q])
            skew.record(args, Vec(E, _add(b, _scaled(e, self.bracket_table.on_basis(q, p)))), Vec(E, {}))
            sym.record(args, Vec(self.V, dict(self.pairing_table.on_basis(p, q))),
                       Vec(self.V, _scaled(e, self.pairing_table.on_basis(q, p))))
        return Verdict("omni-decomposition", [split.check(), skew.check(), sym.check()])

    # subspaces ---------------------------------------------------------------
    @cached_property
    def gl_part(self) -> Subspace:
        return Subspace.coordinate(self.E, range(self.n * self.n))

    @cached_property
    def V_part(self) -> Subspace:
        n2 = self.n * self.n
        return Subspace.coordinate(self.E, range(n2, n2 + self.n))

    def _require_graded(self, L: Subspace):
        if L.ambient != self.E:
            raise SpaceMismatch("subspace is not in gl(V) + V")
        if not L.graded:
            raise NotGraded("eps-dependent operations need a graded subspace")

    def orth_complement(self, L: Subspace) -> Subspace:
        """{e : <e, l> = 0 for all l in L}, by an exact linear solve."""
        self._require_graded(L)
        E, V = self.E, self.V
        z = Scalar.zero(E.order)
        rows = []
        pair = self.pairing_table.apply_data
        cols = [{p: Scalar.one(E.order)} for p in range(E.dim)]
        for l in L.homogeneous_basis:
            images = [pair(c, l.data) for c in cols]
            for r in range(V.dim):
                rows.append([img.get(r, z) for img in images])
        return Subspace(E, [Vec.from_coords(E, s) for s in nullspace(rows, E.dim, E.order)])

    def is_dirac(self, L: Subspace) -> Verdict:
        """isotropic -> maximal -> closed, short-circuiting at the first failure."""
        self._require_graded(L)
        basis = L.homogeneous_basis
        labels = [f"l{i}" for i in range(len(basis))]
        iso = Sweep("isotropic")
        for (a, u), (b, w) in itertools.product(enumerate(basis), repeat=2):
            iso.record((labels[a], labels[b]), Vec(self.V, self.pairing_table.apply_data(u.data, w.data)),
                       Vec(self.V, {}))
        checks = [iso.check()]
        if not checks[0].passed:
            checks += [Check.skipped("maximal", "not isotropic"), Check.skipped("closed", "not isotropic")]
            return Verdict("dirac", checks)
        perp = self.orth_complement(L)
        maximal = perp == L
        note = f"dim L = {L.dim}, dim L^perp = {perp.dim}"
        wit = None
        if not maximal:
            extra = next(v for v in perp.basis if not L.contains(v))
            wit = Witness(("L^perp",), extra, None, "vector orthogonal to L but outside L")
        checks.append(Check("maximal", maximal, wit, 1, 0 if maximal else 1, note))
        if not maximal:
            checks.append(Check.skipped("closed", "not maximal"))
            return Verdict("dirac", checks)
        closed = Sweep("closed")
        for (a, u), (b, w) in itertools.product(enumerate(basis), repeat=2):
            val = Vec(self.E, self.bracket_table.apply_data(u.data, w.data))
            if L.contains(val):
                closed.count += 1
            else:
                closed.fail((labels[a], labels[b]), val, None, "bracket leaves L")
        checks.append(closed.check())
        return Verdict("dirac", checks)

    # graphs and characteristic pairs ------------------------------------------
    def ad(self, omega: ColorAlgebra, x: Vec) -> Vec:
        """ad_omega(x) as a vector of End(V)."""
        return omega.ad(x).to_vec(self.end)

    def graph_of_adjoint(self, omega: ColorAlgebra) -> Subspace:
        """F_omega = span{ ad_omega(b_i) + b_i }."""
        self._check_on_V(omega)
        skew = skew_sweep(omega).check()
        if not skew.passed:
            raise NotSkew(f"omega is not eps-skew at {skew.witness.args}; its graph is not isotropic")
        gens = []
        for i in range(self.n):
            b = self.V.basis_vec(i)
            gens.append(self.embed_gl(self.ad(omega, b)) + self.embed_V(b))
        return Subspace(self.E, gens)

    def _check_on_V(self, omega: ColorAlgebra):
        if omega.space != self.V:
            raise SpaceMismatch("bracket is not defined on V")

    def characteristic_pair(self, L: Subspace) -> CharacteristicPair:
        self._require_graded(L)
        iso = self.is_dirac(L)
        if not (iso["isotropic"].passed and iso["maximal"].passed):
            raise NotMaximalIsotropic("characteristic pairs exist for maximal isotropic subspaces only")
        V = self.V
        D_E = L.intersect(self.gl_part)
        D = Subspace(self.end, [self.split(v)[0] for v in D_E.basis])
        D0 = null_space(D, V)
        # pi(x) for each homogeneous basis vector of D0: endo part of some l in L over x
        Lb = L.homogeneous_basis
        vec_parts = [self.split(l)[1] for l in Lb]
        reps = []
        for x in D0.homogeneous_basis:
            coeffs = solve_linear(vec_parts, x)
            if coeffs is None:
                raise NotMaximalIsotropic(
                    f"no element of L lies over {x.to_literal()}; L does not split as D + graph"
                )
            l = Vec(self.E, {})
            for c, b in zip(coeffs, Lb):
                if c:
                    l = l + b * c
            l = l.homogeneous_parts().get(x.degree, l)
            reps.append(GradedMap.from_vec(self.split(l)[0], V).with_shift(x.degree))
        return CharacteristicPair(self, L, D, D0, list(D0.homogeneous_basis), reps)

    def pair_subspace(self, W: Subspace, pi: MultilinearMap) -> Subspace:
        """L = W^0 + { pi(x) + x : x in W } for an eps-skew pi : V x V -> V."""
        if W.ambient != self.V:
            raise SpaceMismatch("W must be a subspace of V")
        W.require_graded("W")
        if pi.degree_violations():
            raise InvalidConstants("pi is not graded")
        pi_alg = ColorAlgebra(self.V, self.bicharacter, pi)
        skew = skew_sweep(pi_alg).check()
        if not skew.passed:
            raise NotSkew(f"pi is not eps-skew at {skew.witness.args}")
        D = annihilator(W)
        gens = [self.embed_gl(X) for X in D.basis]
        for x in W.homogeneous_basis:
            gens.append(self.embed_gl(pi_alg.ad(x).to_vec(self.end)) + self.embed_V(x))
        return Subspace(self.E, gens)

    def dirac_from_lie(self, basis: Sequence[Vec], algebra: ColorAlgebra) -> Subspace:
        """Dirac structure W^0 + graph(pi|W) for a Lie color bracket on W = span(basis).

        ``algebra`` carries the bracket in coordinates of ``basis``; pi extends
        ad by zero on the graded complement spanned by non-pivot basis vectors.
        """
        require_lie(algebra, "bracket on W")
        basis = list(basis)
        if len(basis) != algebra.dim:
            raise ShapeMismatch("algebra dimension does not match the basis of W")
        for v, d in zip(basis, algebra.space.degrees):
            if v.space != self.V:
                raise SpaceMismatch("basis of W must lie in V")
            if not v or v.degree != d:
                raise NotGraded("basis of W must be homogeneous with the algebra's degrees")
        W = Subspace(self.V, basis)
        if W.dim != len(basis):
            raise ShapeMismatch("basis of W is linearly dependent")
        complement = self._graded_complement(W)
        full = basis + complement
        k = len(basis)
        # pi(w_i) as an endomorphism: w_j -> [w_i, w_j], complement -> 0
        inv_cols = [solve_linear(full, self.V.basis_vec(r)) for r in range(self.n)]
        gens = [self.embed_gl(X) for X in annihilator(W).basis]
        for i, w in enumerate(basis):
            images = []
            for j in range(k):
                out = algebra.bracket.on_basis(i, j)
                img = Vec(self.V, {})
                for t, c in out.items():
                    img = img + basis[t] * c
                images.append(img)
            cols = []
            for r in range(self.n):
                col = Vec(self.V, {})
                for j, c in enumerate(inv_cols[r][:k]):
                    if c:
                        col = col + images[j] * c
                cols.append(col)
            pi_w = GradedMap.from_columns(self.V, self.V, cols)
            gens.append(self.embed_gl(pi_w.to_vec(self.end)) + self.embed_V(w))
        return Subspace(self.E, gens)

    def _graded_complement(self, W: Subspace) -> list[Vec]:
        out = []
        for d in sorted(self.V.components, key=lambda d: d.residues):
            comp = W.project_degree(d)
            pivots = {min(b.data) for b in comp.basis}
            out.extend(self.V.basis_vec(i) for i in self.V.components[d] if i not in pivots)
        return out

    def lie_from_dirac(self, L: Subspace, basis: Sequence[Vec] | None = None
                       ) -> tuple[list[Vec], ColorAlgebra]:
        """The Lie color bracket pi(x, y) on D^0, in coordinates of ``basis``."""
        verdict = self.is_dirac(L)
        if not verdict.passed:
            raise NotDirac(f"subspace is not a Dirac structure:\n{verdict.render_text()}")
        cp = self.characteristic_pair(L)
        basis = list(basis) if basis is not None else list(cp.D0.homogeneous_basis)
        if Subspace(self.V, basis) != cp.D0 or len(basis) != cp.D0.dim:
            raise ShapeMismatch("given basis does not span D^0")
        degrees = []
        for v in basis:
            if not v or not v.is_homogeneous():
                raise NotGraded("basis of D^0 must be homogeneous")
            degrees.append(v.degree)
        S = GradedSpace.from_degrees(self.V.group, self.V.order, degrees, prefix="w")
        table = {}
        for i, j in itertools.product(range(len(basis)), repeat=2):
            out = cp.pi(basis[i], basis[j])
            if out:
                coords = solve_linear(basis, out)
                if coords is None:
                    raise NotDirac("pi(x, y) leaves D^0")
                table[(i, j)] = {k: c for k, c in enumerate(coords) if c}
        return basis, ColorAlgebra(S, self.bicharacter, MultilinearMap((S, S), S, table))

    # derivations --------------------------------------------------------------
    def derivations(self, omega: ColorAlgebra) -> DerivationReport:
        """Der(V) from the derivation identity and N(F_omega) from the circle action, separately."""
        self._check_on_V(omega)
        require_lie(omega, "omega")
        der = self._solve_by_degree(lambda p, delta: self._derivation_residual(omega, p, delta))
        graph_ad = [self.ad(omega, self.V.basis_vec(k)) for k in range(self.n)]
        norm = self._solve_by_degree(lambda p, delta: self._normalizer_residual(omega, graph_ad, p))
        sw = Sweep("[Der, Der] in Der")
        hb = der.homogeneous_basis
        gl = self.gl
        for (a, X), (b, Y) in itertools.product(enumerate(hb), repeat=2):
            val = Vec(self.end, gl.br(X.data, Y.data))
            if der.contains(val):
                sw.count += 1
            else:
                sw.fail((f"D{a}", f"D{b}"), val, None, "bracket of derivations is not a derivation")
        agree = Check("Der = N(F_omega)", der == norm, count=1, violations=0 if der == norm else 1,
                      note=f"dim Der = {der.dim}, dim N = {norm.dim}")
        return DerivationReport(der, norm, Verdict("derivations", [agree, sw.check()]))

    def _solve_by_degree(self, residual) -> Subspace:
        """Span over degrees delta of {D in gl(V)_delta : residual(D) = 0}; residual is linear."""
        end = self.end
        gens = []
        for delta, idx in sorted(end.components.items(), key=lambda kv: kv[0].residues):
            images = [residual(p, delta) for p in idx]
            keys = sorted({k for img in images for k in img})
            z = Scalar.zero(end.order)
            rows = [[img.get(k, z) for img in images] for k in keys]
            for s in nullspace(rows, len(idx), end.order):
                gens.append(Vec(end, {p: c for p, c in zip(idx, s) if c}))
        return Subspace(end, gens)

    def _derivation_residual(self, omega: ColorAlgebra, p: int, delta: Degree) -> dict:
        """D[x,y] - [Dx,y] - eps(D,x)[x,Dy] for D = E_p, keyed by (x, y, out)."""
        n = self.n
        r0, c0 = divmod(p, n)
        one = Scalar.one(self.V.order)

        def D(v: dict) -> dict:
            c = v.get(c0)
            return {r0: c} if c else {}

        out = {}
        for i, j in itertools.product(range(n), repeat=2):
            x, y = {i: one}, {j: one}
            e = eps(self.bicharacter, delta, self.V.degree(i))
            res = _add(D(omega.br(x, y)), _neg(omega.br(D(x), y)), _scaled(-e, omega.br(x, D(y))))
            for k, v in res.items():
                out[(i, j, k)] = v
        return out

    def _normalizer_residual(self, omega: ColorAlgebra, graph_ad: list[Vec], p: int) -> dict:
        """D o (ad x + x) must be ad(y) + y: residual = gl part - ad(V part), per x."""
        one = Scalar.one(self.V.order)
        n2 = self.n * self.n
        out = {}
        for k in range(self.n):
            f = _add(graph_ad[k].data, {n2 + k: one})
            e = self.circ_table.apply_data({p: one}, f)
            glp = {i: v for i, v in e.items() if i < n2}
            res = glp
            for i, v in e.items():
                if i >= n2:
                    res = _add(res, _scaled(-v, graph_ad[i - n2].data))
            for q, v in res.items():
                out[(k, q)] = v
        return out

    def is_derivation(self, omega: ColorAlgebra, D: GradedMap) -> Verdict:
        """D[x,y] = [Dx,y] + eps(D,x)[x,Dy] on basis pairs, per homogeneous component of D."""
        self._check_on_V(omega)
        names = self.V.names
        sw = Sweep("derivation")
        parts = D.homogeneous_components()
        one = Scalar.one(self.V.order)
        for i, j in itertools.product(range(self.n), repeat=2):
            x, y = Vec(self.V, {i: one}), Vec(self.V, {j: one})
            lhs, rhs = Vec(self.V, {}), Vec(self.V, {})
            for delta, Dd in parts:
                e = eps(self.bicharacter, delta, self.V.degree(i))
                lhs = lhs + Dd(omega(x, y))
                rhs = rhs + omega(Dd(x), y) + omega(x, Dd(y)) * e
            sw.record((names[i], names[j]), lhs, rhs)
        return Verdict("derivation", [sw.check()])


@dataclass
class DerivationReport:
    derivations: Subspace
    normalizer: Subspace
    verdict: Verdict


@dataclass
class CharacteristicPair:
    """(D, pi) for a maximal isotropic L, with pi represented on a homogeneous basis of D^0."""

    omni: OmniAlgebra
    L: Subspace
    D: Subspace
    D0: Subspace
    D0_basis: list[Vec]
    representatives: list[GradedMap]

    def pi_map(self, x: Vec) -> GradedMap:
        """pi(x) for x in D^0, well defined modulo D."""
        coords = solve_linear(self.D0_basis, x)
        if coords is None:
            raise ValueError("pi is only determined on D^0")
        V = self.omni.V
        out = GradedMap.zero(V, V)
        for c, rep in zip(coords, self.representatives):
            if c:
                out = out + rep * c
        return out

    def pi(self, x: Vec, y: Vec) -> Vec:
        return self.pi_map(x).apply(y)

    def conditions(self) -> Verdict:
        """(1) D is a subalgebra; (2) pi(pi(x,y)) - [pi(x),pi(y)] in D; (3) pi(x,y) in D^0."""
        om = self.omni
        gl = om.gl
        dnames = [f"X{i}" for i in range(self.D.dim)]
        c1 = Sweep("D subalgebra")
        hb = self.D.homogeneous_basis
        for (a, X), (b, Y) in itertools.product(enumerate(hb), repeat=2):
            val = Vec(om.end, gl.br(X.data, Y.data))
            if self.D.contains(val):
                c1.count += 1
            else:
                c1.fail((dnames[a], dnames[b]), val, None, "[X, Y] leaves D")
        c2, c3 = Sweep("pi Jacobi mod D"), Sweep("pi closes on D0")
        xs = self.D0_basis
        labels = [f"x{i}" for i in range(len(xs))]
        for (a, x), (b, y) in itertools.product(enumerate(xs), repeat=2):
            pxy = self.pi(x, y)
            args = (labels[a], labels[b])
            if self.D0.contains(pxy):
                c3.count += 1
            else:
                c3.fail(args, pxy, None, "pi(x, y) leaves D0")
                c2.fail(args, None, None, "pi(pi(x, y)) undefined since pi(x, y) is outside D0")
                continue
            px, py = self.representatives[a], self.representatives[b]
            comm = color_commutator(px, py, om.bicharacter)
            diff = (self.pi_map(pxy) - comm).to_vec(om.end)
            if self.D.contains(diff):
                c2.count += 1
            else:
                c2.fail(args, diff, None, "pi(pi(x,y)) - [pi(x), pi(y)] is not in D")
        return Verdict("characteristic-pair", [c1.check(), c2.check(), c3.check()])

    def pi_table(self) -> list[tuple[int, int, Vec]]:
        return [(a, b, self.pi(x, y)) for (a, x), (b, y)
                in itertools.product(enumerate(self.D0_basis), repeat=2)]
