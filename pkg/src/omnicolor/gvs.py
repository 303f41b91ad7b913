"""Finite-dimensional graded vector spaces over Q(zeta_m).

Vectors are stored sparsely (basis index -> nonzero :class:`Scalar`), maps
and multilinear maps as sparse tables on basis tuples.  Subspaces are kept
in reduced row echelon form so that equality is decided canonically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import AmbientMismatch, NotGraded, ShapeMismatch, ShiftMismatch
from .grading import Degree, GradingGroup
from .scalars import Scalar


def _sc(order: int, value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        from .scalars import parse_literal
        return parse_literal(value, order)
    return Scalar.rational(order, value)


def _axpy(acc: dict, coeff: Scalar, vec: dict) -> None:
    """acc += coeff * vec, in place, dropping zeros."""
    for k, v in vec.items():
        t = coeff * v
        if k in acc:
            t = acc[k] + t
            if t:
                acc[k] = t
            else:
                del acc[k]
        elif t:
            acc[k] = t


# spaces ---------------------------------------------------------------


@dataclass(frozen=True)
class GradedSpace:
    """Ordered homogeneous basis ``(name, degree)``; scalars in Q(zeta_order)."""

    basis: tuple[tuple[str, Degree], ...]
    group: GradingGroup
    order: int

    def __post_init__(self):
        basis = tuple((str(n), d) for n, d in self.basis)
        names = [n for n, _ in basis]
        if len(set(names)) != len(names):
            raise ValueError(f"basis names must be unique: {names}")
        for n, d in basis:
            if d.group != self.group:
                raise ValueError(f"degree of {n} is not in {self.group}")
        object.__setattr__(self, "basis", basis)

    @classmethod
    def from_degrees(cls, group: GradingGroup, order: int, degrees, names=None, prefix="v"):
        degrees = [d if isinstance(d, Degree) else group.degree(d) for d in degrees]
        if names is None:
            names = [f"{prefix}{i}" for i in range(len(degrees))]
        return cls(tuple(zip(names, degrees)), group, order)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.basis)

    @cached_property
    def degrees(self) -> tuple[Degree, ...]:
        return tuple(d for _, d in self.basis)

    def degree(self, i: int) -> Degree:
        return self.basis[i][1]

    def index(self, key) -> int:
        if isinstance(key, int):
            if not 0 <= key < self.dim:
                raise IndexError(f"basis index {key} out of range for dimension {self.dim}")
            return key
        try:
            return self.names.index(key)
        except ValueError:
            raise KeyError(f"no basis vector named {key!r}") from None

    @cached_property
    def components(self) -> dict[Degree, tuple[int, ...]]:
        out: dict[Degree, list[int]] = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return {d: tuple(ix) for d, ix in out.items()}

    def zero(self) -> Vec:
        return Vec(self, {})

    def vec(self, coords) -> Vec:
        return Vec.from_coords(self, coords)

    def basis_vec(self, key) -> Vec:
        return Vec(self, {self.index(key): Scalar.one(self.order)})

    def scalar(self, value) -> Scalar:
        return _sc(self.order, value)

    def direct_sum(self, other: GradedSpace, names=None) -> GradedSpace:
        if other.group != self.group or other.order != self.order:
            raise ShapeMismatch("direct sum of spaces over different groups or fields")
        degrees = self.degrees + other.degrees
        if names is None:
            names = self.names + other.names
            if len(set(names)) != len(names):
                names = tuple(f"{n}'" if i >= self.dim else n for i, n in enumerate(names))
        return GradedSpace(tuple(zip(names, degrees)), self.group, self.order)

    def __str__(self):
        return "<" + ", ".join(f"{n}:{d}" for n, d in self.basis) + ">"


class Vec:
    """Vector in a :class:`GradedSpace`.  Treat as immutable."""

    __slots__ = ("space", "data")

    def __init__(self, space: GradedSpace, data: dict):
        self.space = space
        self.data = data

    @classmethod
    def from_coords(cls, space: GradedSpace, coords) -> Vec:
        if isinstance(coords, dict):
            items = ((space.index(k), v) for k, v in coords.items())
        else:
            coords = list(coords)
            if len(coords) != space.dim:
                raise ShapeMismatch(f"expected {space.dim} coordinates, got {len(coords)}")
            items = enumerate(coords)
        data = {}
        for i, v in items:
            s = _sc(space.order, v)
            if s:
                data[i] = s
        return cls(space, data)

    @classmethod
    def zero(cls, space: GradedSpace) -> Vec:
        return cls(space, {})

    @classmethod
    def basis(cls, space: GradedSpace, key) -> Vec:
        return space.basis_vec(key)

    @property
    def coords(self) -> tuple[Scalar, ...]:
        z = Scalar.zero(self.space.order)
        return tuple(self.data.get(i, z) for i in range(self.space.dim))

    def __getitem__(self, i) -> Scalar:
        return self.data.get(self.space.index(i), Scalar.zero(self.space.order))

    def is_zero(self) -> bool:
        return not self.data

    def __bool__(self):
        return bool(self.data)

    def _same(self, other: Vec):
        if not isinstance(other, Vec) or other.space != self.space:
            raise ShapeMismatch("vectors live in different spaces")

    def __add__(self, other: Vec) -> Vec:
        self._same(other)
        acc = dict(self.data)
        _axpy(acc, Scalar.one(self.space.order), other.data)
        return Vec(self.space, acc)

    def __sub__(self, other: Vec) -> Vec:
        self._same(other)
        acc = dict(self.data)
        _axpy(acc, -Scalar.one(self.space.order), other.data)
        return Vec(self.space, acc)

    def __neg__(self) -> Vec:
        return Vec(self.space, {k: -v for k, v in self.data.items()})

    def __mul__(self, c) -> Vec:
        c = _sc(self.space.order, c)
        if not c:
            return Vec(self.space, {})
        return Vec(self.space, {k: c * v for k, v in self.data.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.space == other.space and self.data == other.data

    def __hash__(self):
        return hash(frozenset(self.data.items()))

    def homogeneous_parts(self) -> dict[Degree, Vec]:
        parts: dict[Degree, dict] = {}
        for i, v in self.data.items():
            parts.setdefault(self.space.degree(i), {})[i] = v
        return {d: Vec(self.space, p) for d, p in parts.items()}

    @property
    def degree(self) -> Degree | None:
        """Degree of a nonzero homogeneous vector, else None."""
        degs = {self.space.degree(i) for i in self.data}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({self.space.degree(i) for i in self.data}) <= 1

    def to_literal(self) -> dict[str, str]:
        return {self.space.names[i]: str(self.data[i]) for i in sorted(self.data)}

    def __repr__(self):
        if not self.data:
            return "0"
        return " + ".join(f"({self.data[i]})*{self.space.names[i]}" for i in sorted(self.data))


def sum_vecs(space: GradedSpace, vecs: Iterable[Vec]) -> Vec:
    acc: dict = {}
    one = Scalar.one(space.order)
    for v in vecs:
        _axpy(acc, one, v.data)
    return Vec(space, acc)


# maps -----------------------------------------------------------------


class GradedMap:
    """Linear map ``domain -> codomain`` stored as sparse entries ``(row, col) -> Scalar``.

    ``shift`` is the degree delta for a homogeneous map (it sends degree a to
    degree a + delta); None means the map was not declared homogeneous.
    """

    __slots__ = ("domain", "codomain", "entries", "shift", "_cols")

    def __init__(self, domain: GradedSpace, codomain: GradedSpace, entries: dict,
                 shift: Degree | None = None, *, check: bool = True):
        self.domain = domain
        self.codomain = codomain
        self.entries = entries
        self.shift = shift
        self._cols = None
        if check and shift is not None:
            for (r, c) in entries:
                if codomain.degree(r) != domain.degree(c) + shift:
                    raise ShiftMismatch(
                        f"entry ({codomain.names[r]}, {domain.names[c]}) breaks shift {shift}"
                    )

    @classmethod
    def from_matrix(cls, domain, codomain, rows, shift=None) -> GradedMap:
        rows = [list(r) for r in rows]
        if len(rows) != codomain.dim or any(len(r) != domain.dim for r in rows):
            raise ShapeMismatch(
                f"matrix must be {codomain.dim}x{domain.dim}"
            )
        entries = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                s = _sc(domain.order, v)
                if s:
                    entries[(r, c)] = s
        return cls(domain, codomain, entries, shift)

    @classmethod
    def from_columns(cls, domain, codomain, columns: Sequence[Vec], shift=None) -> GradedMap:
        if len(columns) != domain.dim:
            raise ShapeMismatch(f"need {domain.dim} columns, got {len(columns)}")
        entries = {}
        for c, col in enumerate(columns):
            for r, v in col.data.items():
                entries[(r, c)] = v
        return cls(domain, codomain, entries, shift)

    @classmethod
    def identity(cls, space: GradedSpace) -> GradedMap:
        one = Scalar.one(space.order)
        return cls(space, space, {(i, i): one for i in range(space.dim)}, space.group.zero())

    @classmethod
    def zero(cls, domain, codomain, shift=None) -> GradedMap:
        return cls(domain, codomain, {}, shift)

    @property
    def columns(self) -> dict[int, dict[int, Scalar]]:
        if self._cols is None:
            cols: dict[int, dict] = {}
            for (r, c), v in self.entries.items():
                cols.setdefault(c, {})[r] = v
            self._cols = cols
        return self._cols

    @property
    def matrix(self) -> list[list[Scalar]]:
        z = Scalar.zero(self.domain.order)
        return [[self.entries.get((r, c), z) for c in range(self.domain.dim)]
                for r in range(self.codomain.dim)]

    def apply(self, v: Vec) -> Vec:
        if v.space != self.domain:
            raise ShapeMismatch("vector is not in the map's domain")
        acc: dict = {}
        cols = self.columns
        for c, x in v.data.items():
            col = cols.get(c)
            if col:
                _axpy(acc, x, col)
        return Vec(self.codomain, acc)

    __call__ = apply

    def compose(self, other: GradedMap) -> GradedMap:
        """self after other."""
        if other.codomain != self.domain:
            raise ShapeMismatch("maps are not composable")
        acc: dict = {}
        cols = self.columns
        for (k, c), x in other.entries.items():
            col = cols.get(k)
            if col:
                for r, y in col.items():
                    key = (r, c)
                    t = y * x
                    if key in acc:
                        t = acc[key] + t
                        if t:
                            acc[key] = t
                        else:
                            del acc[key]
                    elif t:
                        acc[key] = t
        shift = self.shift + other.shift if self.shift is not None and other.shift is not None else None
        return GradedMap(other.domain, self.codomain, acc, shift, check=False)

    def __matmul__(self, other):
        if isinstance(other, GradedMap):
            return self.compose(other)
        return self.apply(other)

    def _combine(self, other: GradedMap, sign: int) -> GradedMap:
        if other.domain != self.domain or other.codomain != self.codomain:
            raise ShapeMismatch("maps have different shapes")
        acc = dict(self.entries)
        s = Scalar.rational(self.domain.order, sign)
        _axpy(acc, s, other.entries)
        shift = self.shift if self.shift == other.shift else None
        return GradedMap(self.domain, self.codomain, acc, shift, check=False)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return GradedMap(self.domain, self.codomain, {k: -v for k, v in self.entries.items()},
                         self.shift, check=False)

    def __mul__(self, c):
        c = _sc(self.domain.order, c)
        if not c:
            return GradedMap(self.domain, self.codomain, {}, self.shift, check=False)
        return GradedMap(self.domain, self.codomain,
                         {k: c * v for k, v in self.entries.items()}, self.shift, check=False)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.entries == other.entries)

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def is_zero(self) -> bool:
        return not self.entries

    def entry_shifts(self) -> set[Degree]:
        return {self.codomain.degree(r) - self.domain.degree(c) for (r, c) in self.entries}

    def inferred_shift(self) -> Degree | None:
        """The shift of a nonzero homogeneous map, else None."""
        s = self.entry_shifts()
        return s.pop() if len(s) == 1 else None

    def is_homogeneous(self, shift: Degree | None = None) -> bool:
        s = self.entry_shifts()
        if shift is None:
            return len(s) <= 1
        return s <= {shift}

    def with_shift(self, shift: Degree) -> GradedMap:
        return GradedMap(self.domain, self.codomain, self.entries, shift)

    def homogeneous_components(self) -> list[tuple[Degree, GradedMap]]:
        parts: dict[Degree, dict] = {}
        for (r, c), v in self.entries.items():
            d = self.codomain.degree(r) - self.domain.degree(c)
            parts.setdefault(d, {})[(r, c)] = v
        return [(d, GradedMap(self.domain, self.codomain, parts[d], d, check=False))
                for d in sorted(parts, key=lambda d: d.residues)]

    def to_vec(self, end: GradedSpace | None = None) -> Vec:
        """Coordinates in the elementary-matrix basis of End(V)."""
        if self.domain != self.codomain:
            raise ShapeMismatch("only endomorphisms are elements of gl(V)")
        n = self.domain.dim
        end = end or end_space(self.domain)
        return Vec(end, {r * n + c: v for (r, c), v in self.entries.items()})

    @classmethod
    def from_vec(cls, v: Vec, base: GradedSpace) -> GradedMap:
        n = base.dim
        return cls(base, base, {divmod(i, n): x for i, x in v.data.items()}, v.degree,
                   check=False)

    def to_literal(self):
        return [[str(x) for x in row] for row in self.matrix]

    def __repr__(self):
        return f"GradedMap({self.domain.dim}->{self.codomain.dim}, shift={self.shift}, {self.to_literal()})"


_END_CACHE: dict = {}


def end_space(V: GradedSpace) -> GradedSpace:
    """End(V) with basis E[i,j] (sending basis j to basis i), degree |i| - |j|.

    Index of E[i,j] is ``i * dim V + j``.
    """
    hit = _END_CACHE.get(V)
    if hit is None:
        basis = []
        for i, (ni, di) in enumerate(V.basis):
            for j, (nj, dj) in enumerate(V.basis):
                basis.append((f"E[{ni},{nj}]", di - dj))
        hit = GradedSpace(tuple(basis), V.group, V.order)
        _END_CACHE[V] = hit
    return hit


def map_apply_compose(op: str, f: GradedMap, g=None):
    if op == "apply":
        return f.apply(g)
    if op == "compose":
        return f.compose(g)
    if op == "bracket-free-product":
        return f.compose(g)
    raise ValueError(f"unknown operation {op!r}")


def homogeneous_components(f: GradedMap) -> list[tuple[Degree, GradedMap]]:
    if f.domain != f.codomain:
        raise ShapeMismatch("homogeneous decomposition is defined on End(V)")
    return f.homogeneous_components()


# multilinear maps -------------------------------------------------------


class MultilinearMap:
    """Sparse multilinear map ``domains[0] x ... x domains[k-1] -> codomain``.

    ``table`` maps a tuple of basis indices to a sparse output dict.
    """

    __slots__ = ("domains", "codomain", "table")

    def __init__(self, domains: Sequence[GradedSpace], codomain: GradedSpace, table: dict):
        self.domains = tuple(domains)
        self.codomain = codomain
        self.table = table

    @property
    def arity(self) -> int:
        return len(self.domains)

    @classmethod
    def zero(cls, domains, codomain) -> MultilinearMap:
        return cls(domains, codomain, {})

    @classmethod
    def from_entries(cls, domains, codomain, entries) -> MultilinearMap:
        """``entries``: iterable of ``(i1, ..., ik, out, coeff)``; repeated keys add up."""
        domains = tuple(domains)
        k = len(domains)
        table: dict = {}
        for e in entries:
            e = tuple(e)
            if len(e) != k + 2:
                raise ShapeMismatch(f"entry {e} should have {k + 2} fields")
            idx = tuple(d.index(i) for d, i in zip(domains, e[:k]))
            out = codomain.index(e[k])
            coeff = _sc(codomain.order, e[k + 1])
            _axpy(table.setdefault(idx, {}), coeff, {out: Scalar.one(codomain.order)})
        return cls(domains, codomain, {k: v for k, v in table.items() if v})

    @classmethod
    def from_function(cls, domains, codomain, fn) -> MultilinearMap:
        """Tabulate ``fn(*basis_indices) -> Vec`` on every basis tuple."""
        domains = tuple(domains)
        table = {}
        for idx in itertools.product(*(range(d.dim) for d in domains)):
            out = fn(*idx)
            if out.data:
                table[idx] = dict(out.data)
        return cls(domains, codomain, table)

    def on_basis(self, *idx) -> dict:
        return self.table.get(idx, {})

    def basis_value(self, *idx) -> Vec:
        return Vec(self.codomain, dict(self.table.get(idx, {})))

    def __call__(self, *vecs: Vec) -> Vec:
        if len(vecs) != len(self.domains):
            raise ShapeMismatch(f"expected {len(self.domains)} arguments")
        for v, d in zip(vecs, self.domains):
            if v.space != d:
                raise ShapeMismatch("argument not in the expected space")
        return Vec(self.codomain, self.apply_data(*(v.data for v in vecs)))

    def apply_data(self, *datas: dict) -> dict:
        """Evaluate on sparse coordinate dicts; no space checks."""
        acc: dict = {}
        table = self.table
        if len(datas) == 2:
            u, v = datas
            for i, x in u.items():
                for j, y in v.items():
                    out = table.get((i, j))
                    if out:
                        _axpy(acc, x * y, out)
            return acc
        for combo in itertools.product(*(d.items() for d in datas)):
            out = table.get(tuple(i for i, _ in combo))
            if out:
                c = combo[0][1]
                for _, x in combo[1:]:
                    c = c * x
                _axpy(acc, c, out)
        return acc

    def entries(self) -> list[tuple]:
        return [idx + (out, v) for idx in sorted(self.table)
                for out, v in sorted(self.table[idx].items())]

    def degree_violations(self, shift: Degree | None = None) -> list[tuple]:
        """Basis tuples whose output leaves degree sum(inputs) + shift."""
        bad = []
        for idx in sorted(self.table):
            d = shift if shift is not None else self.codomain.group.zero()
            for dom, i in zip(self.domains, idx):
                d = d + dom.degree(i)
            for out in self.table[idx]:
                if self.codomain.degree(out) != d:
                    bad.append(idx + (out,))
                    break
        return bad

    def __eq__(self, other):
        if not isinstance(other, MultilinearMap):
            return NotImplemented
        return (self.domains == other.domains and self.codomain == other.codomain
                and self.table == other.table)

    def __hash__(self):
        return hash(tuple(sorted((k, frozenset(v.items())) for k, v in self.table.items())))

    def __repr__(self):
        return f"MultilinearMap(arity={self.arity}, nonzero={len(self.table)})"


# echelon linear algebra -------------------------------------------------


def rref(rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(rows: list[list[Scalar]], ncols: int, order: int) -> list[list[Scalar]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    zero, one = Scalar.zero(order), Scalar.one(order)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for row, p in zip(red, pivots):
            if row[f]:
                x[p] = -row[f]
        basis.append(x)
    return basis


def solve_linear(columns: Sequence[Vec], target: Vec) -> list[Scalar] | None:
    """Coefficients c with sum c_i columns[i] = target, or None if inconsistent."""
    space = target.space
    n = len(columns)
    z = Scalar.zero(space.order)
    rows = [[col.data.get(r, z) for col in columns] + [target.data.get(r, z)]
            for r in range(space.dim)]
    red, pivots = rref(rows, n + 1)
    if n in pivots:
        return None
    sol = [z] * n
    for row, p in zip(red, pivots):
        sol[p] = row[n]
    return sol


class Subspace:
    """Subspace of ``ambient`` with a canonical reduced echelon basis."""

    def __init__(self, ambient: GradedSpace, generators: Iterable[Vec] = ()):
        self.ambient = ambient
        gens = list(generators)
        for g in gens:
            if g.space != ambient:
                raise AmbientMismatch("generator not in the ambient space")
        z = Scalar.zero(ambient.order)
        rows = [[g.data.get(i, z) for i in range(ambient.dim)] for g in gens]
        red, pivots = rref(rows, ambient.dim)
        self._rows = tuple(tuple(r) for r in red)
        self._pivots = tuple(pivots)

    @classmethod
    def span(cls, ambient, vecs) -> Subspace:
        return cls(ambient, vecs)

    @classmethod
    def zero(cls, ambient) -> Subspace:
        return cls(ambient, [])

    @classmethod
    def full(cls, ambient) -> Subspace:
        return cls(ambient, [ambient.basis_vec(i) for i in range(ambient.dim)])

    @classmethod
    def coordinate(cls, ambient, indices) -> Subspace:
        return cls(ambient, [ambient.basis_vec(i) for i in indices])

    @property
    def dim(self) -> int:
        return len(self._rows)

    @cached_property
    def basis(self) -> tuple[Vec, ...]:
        return tuple(Vec.from_coords(self.ambient, r) for r in self._rows)

    def _check(self, other: Subspace):
        if other.ambient != self.ambient:
            raise AmbientMismatch("subspaces live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def contains(self, v: Vec) -> bool:
        if v.space != self.ambient:
            raise AmbientMismatch("vector not in the ambient space")
        # eliminate against the echelon basis
        acc = dict(v.data)
        for row, p in zip(self._rows, self._pivots):
            c = acc.get(p)
            if c:
                _axpy(acc, -c, {i: x for i, x in enumerate(row) if x})
        return not acc

    def __contains__(self, v: Vec) -> bool:
        return self.contains(v)

    def coordinates(self, v: Vec) -> list[Scalar] | None:
        """Coordinates in the echelon basis (pivot entries), None if v is outside."""
        if not self.contains(v):
            return None
        z = Scalar.zero(self.ambient.order)
        return [v.data.get(p, z) for p in self._pivots]

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace(self.ambient, self.basis + other.basis)

    def intersect(self, other: Subspace) -> Subspace:
        self._check(other)
        # solve sum a_i u_i = sum b_j w_j
        n, m = self.dim, other.dim
        if n == 0 or m == 0:
            return Subspace.zero(self.ambient)
        order = self.ambient.order
        z = Scalar.zero(order)
        rows = []
        for r in range(self.ambient.dim):
            rows.append([u.data.get(r, z) for u in self.basis]
                        + [-w.data.get(r, z) for w in other.basis])
        sols = nullspace(rows, n + m, order)
        vecs = []
        for s in sols:
            acc: dict = {}
            for a, u in zip(s[:n], self.basis):
                if a:
                    _axpy(acc, a, u.data)
            vecs.append(Vec(self.ambient, acc))
        return Subspace(self.ambient, vecs)

    def __and__(self, other):
        return self.intersect(other)

    def project_degree(self, d: Degree) -> Subspace:
        idx = set(self.ambient.components.get(d, ()))
        return Subspace(self.ambient, [
            Vec(self.ambient, {i: x for i, x in b.data.items() if i in idx}) for b in self.basis
        ])

    @cached_property
    def graded(self) -> bool:
        """True iff W is the direct sum of its intersections with the components."""
        for b in self.basis:
            for part in b.homogeneous_parts().values():
                if not self.contains(part):
                    return False
        return True

    def require_graded(self, what: str = "subspace"):
        if not self.graded:
            raise NotGraded(f"{what} is not graded")

    @cached_property
    def homogeneous_basis(self) -> tuple[Vec, ...]:
        """Echelon basis of each graded component, components in ambient degree order."""
        self.require_graded()
        out = []
        for d in sorted(self.ambient.components, key=lambda d: d.residues):
            out.extend(self.project_degree(d).basis)
        return tuple(out)

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient.dim})"


def kernel_of_linear(domain_dim_space: GradedSpace, images: Sequence[dict], out_dim: int) -> Subspace:
    """Kernel of the linear map sending basis vector j of ``domain_dim_space`` to images[j]."""
    order = domain_dim_space.order
    z = Scalar.zero(order)
    n = domain_dim_space.dim
    rows = [[images[j].get(r, z) for j in range(n)] for r in range(out_dim)]
    basis = nullspace(rows, n, order)
    return Subspace(domain_dim_space, [Vec.from_coords(domain_dim_space, b) for b in basis])


def kernel(f: GradedMap) -> Subspace:
    return kernel_of_linear(f.domain, [f.columns.get(j, {}) for j in range(f.domain.dim)],
                            f.codomain.dim)


def image(f: GradedMap) -> Subspace:
    return Subspace(f.codomain, [Vec(f.codomain, dict(f.columns.get(j, {})))
                                 for j in range(f.domain.dim)])


def preimage(f: GradedMap, W: Subspace) -> Subspace:
    """{v : f(v) in W}."""
    if W.ambient != f.codomain:
        raise AmbientMismatch("target subspace not in the map's codomain")
    # v in preimage iff (f(v), 0) lies in span of W: solve f(v) - sum c_i w_i = 0
    n, k = f.domain.dim, W.dim
    order = f.domain.order
    z = Scalar.zero(order)
    cols = [f.columns.get(j, {}) for j in range(n)]
    rows = [[cols[j].get(r, z) for j in range(n)] + [-w.data.get(r, z) for w in W.basis]
            for r in range(f.codomain.dim)]
    sols = nullspace(rows, n + k, order)
    return Subspace(f.domain, [Vec.from_coords(f.domain, s[:n]) for s in sols])


def null_space(D: Subspace, V: GradedSpace) -> Subspace:
    """D^0 = {x in V : X(x) = 0 for all X in D}, for D a subspace of End(V)."""
    if D.ambient != end_space(V):
        raise AmbientMismatch("D must be a subspace of End(V)")
    D.require_graded("D")
    n = V.dim
    z = Scalar.zero(V.order)
    rows = []
    for X in D.basis:
        for r in range(n):
            rows.append([X.data.get(r * n + c, z) for c in range(n)])
    return Subspace(V, [Vec.from_coords(V, b) for b in nullspace(rows, n, V.order)])


def annihilator(W: Subspace) -> Subspace:
    """W^0 = {X in End(V) : X(w) = 0 for all w in W}."""
    V = W.ambient
    W.require_graded("W")
    n = V.dim
    end = end_space(V)
    z = Scalar.zero(V.order)
    rows = []
    # unknown X_{rc} at index r*n + c; equation (X w)_r = sum_c X_rc w_c
    for w in W.basis:
        for r in range(n):
            row = [z] * (n * n)
            for c, x in w.data.items():
                row[r * n + c] = x
            rows.append(row)
    return Subspace(end, [Vec.from_coords(end, b) for b in nullspace(rows, n * n, V.order)])


def subspace_solve(op: str, *args):
    """Dispatcher over the subspace operations by name."""
    if op == "span":
        ambient, vecs = args
        return Subspace(ambient, vecs)
    if op == "intersect":
        a, b = args
        return a.intersect(b)
    if op == "kernel":
        (f,) = args
        return kernel(f)
    if op == "preimage":
        f, W = args
        return preimage(f, W)
    if op == "membership":
        v, W = args
        return W.contains(v)
    if op == "equality":
        a, b = args
        a._check(b)
        return a == b
    raise ValueError(f"unknown subspace operation {op!r}")
