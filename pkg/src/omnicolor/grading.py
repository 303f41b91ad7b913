"""Finite abelian grading groups, degrees and bicharacters."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import DimensionMismatch, GroupMismatch, InvalidOrder
from .scalars import RootOfUnity, Scalar
from .verdicts import Check, Verdict, Witness


@dataclass(frozen=True)
class GradingGroup:
    """G = Z_{n1} x ... x Z_{nk}.  The trivial group is ``GradingGroup((1,))``."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.cyclic_orders)
        if not orders:
            raise ValueError("a grading group needs at least one cyclic factor")
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {orders}")
        object.__setattr__(self, "cyclic_orders", orders)

    @classmethod
    def trivial(cls) -> GradingGroup:
        return cls((1,))

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def size(self) -> int:
        out = 1
        for n in self.cyclic_orders:
            out *= n
        return out

    def degree(self, *residues) -> Degree:
        if len(residues) == 1 and not isinstance(residues[0], int):
            residues = tuple(residues[0])
        if len(residues) != self.rank:
            raise DimensionMismatch(
                f"degree {residues} has {len(residues)} components, group has rank {self.rank}"
            )
        return Degree(self, tuple(r % n for r, n in zip(residues, self.cyclic_orders)))

    def zero(self) -> Degree:
        return Degree(self, (0,) * self.rank)

    def elements(self):
        for res in itertools.product(*(range(n) for n in self.cyclic_orders)):
            yield Degree(self, res)

    def __str__(self):
        return " x ".join(f"Z{n}" for n in self.cyclic_orders)


@dataclass(frozen=True)
class Degree:
    group: GradingGroup = field(repr=False)
    residues: tuple[int, ...]

    def _check(self, other: Degree):
        if self.group != other.group:
            raise GroupMismatch(f"degrees live in {self.group} and {other.group}")

    def __add__(self, other: Degree) -> Degree:
        self._check(other)
        return Degree(self.group, tuple(
            (a + b) % n for a, b, n in zip(self.residues, other.residues, self.group.cyclic_orders)
        ))

    def __neg__(self) -> Degree:
        return Degree(self.group, tuple(
            (-a) % n for a, n in zip(self.residues, self.group.cyclic_orders)
        ))

    def __sub__(self, other: Degree) -> Degree:
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(self.residues)

    def __str__(self):
        return "(" + ",".join(map(str, self.residues)) + ")"


def degree_arith(op: str, a: Degree, b: Degree | None = None) -> Degree:
    if op == "add":
        return a + b
    if op == "neg":
        return -a
    raise ValueError(f"unknown degree operation {op!r}")


@dataclass(frozen=True)
class Bicharacter:
    """eps(a, b) = zeta_m ** (a^T E b) for an exponent matrix E over the generators."""

    group: GradingGroup
    order: int
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise InvalidOrder(f"cyclotomic order must be a positive integer, got {self.order!r}")
        rows = tuple(tuple(int(e) % self.order for e in row) for row in self.exponents)
        k = self.group.rank
        if len(rows) != k or any(len(r) != k for r in rows):
            raise DimensionMismatch(
                f"exponent matrix must be {k}x{k} for a rank-{k} group"
            )
        object.__setattr__(self, "exponents", rows)

    @classmethod
    def trivial(cls, group: GradingGroup | None = None, order: int = 1) -> Bicharacter:
        group = group or GradingGroup.trivial()
        return cls(group, order, tuple((0,) * group.rank for _ in range(group.rank)))

    @classmethod
    def super(cls) -> Bicharacter:
        """The Z2 sign rule eps(a, b) = (-1)^(ab)."""
        return cls(GradingGroup((2,)), 2, ((1,),))

    def exponent(self, a: Degree, b: Degree) -> int:
        if a.group != self.group or b.group != self.group:
            raise GroupMismatch("degree not in the bicharacter's group")
        total = 0
        for i, ai in enumerate(a.residues):
            if ai:
                row = self.exponents[i]
                for j, bj in enumerate(b.residues):
                    total += ai * row[j] * bj
        return total % self.order

    def __call__(self, a: Degree, b: Degree) -> RootOfUnity:
        return RootOfUnity(self.order, self.exponent(a, b))

    def scalar(self, a: Degree, b: Degree) -> Scalar:
        return Scalar.root(self.order, self.exponent(a, b))

    def validate(self) -> Verdict:
        return validate_bicharacter(self)


def eval_bicharacter(b: Bicharacter, alpha: Degree, beta: Degree) -> RootOfUnity:
    return b(alpha, beta)


def validate_bicharacter(b: Bicharacter) -> Verdict:
    """Congruence checks on the exponent matrix.

    Symmetry ``E_ij + E_ji = 0 (mod m)`` gives eps(a,b) eps(b,a) = 1; the
    order conditions ``n_i E_ij = n_j E_ij = 0 (mod m)`` make eps well defined
    on residues.  Biadditivity holds for any exponent matrix.
    """
    m, E, orders = b.order, b.exponents, b.group.cyclic_orders
    k = len(orders)
    sym_fail, wd_fail = [], []
    for i in range(k):
        for j in range(k):
            if (E[i][j] + E[j][i]) % m:
                sym_fail.append((i, j))
            if (orders[i] * E[i][j]) % m or (orders[j] * E[i][j]) % m:
                wd_fail.append((i, j))

    def check(name, failures, lhs):
        if not failures:
            return Check(name, True, count=k * k)
        i, j = failures[0]
        return Check(
            name, False, count=k * k, violations=len(failures),
            witness=Witness((f"g{i}", f"g{j}"), lhs(i, j), 0),
        )

    return Verdict("bicharacter", [
        check("symmetry", sym_fail, lambda i, j: (E[i][j] + E[j][i]) % m),
        check("well-defined", wd_fail, lambda i, j: (orders[i] * E[i][j]) % m or (orders[j] * E[i][j]) % m),
        Check("biadditive", True, note="satisfied by construction"),
    ])
