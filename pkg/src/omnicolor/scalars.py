"""Exact arithmetic in the cyclotomic field Q(zeta_m).

An element is stored in the power basis ``1, z, ..., z^(phi(m)-1)`` after
reduction modulo the m-th cyclotomic polynomial, with :class:`fractions.Fraction`
coordinates.  The representation is canonical, so ``==`` decides field
equality, which is what every verdict in the package relies on.

The literal grammar used by files and reports is a signed sum of terms
``q`` or ``q*z^k`` where ``q`` is ``a`` or ``a/b``; ``z``, ``z^k`` and ``q*z``
are accepted shorthands.  Example: ``1/2*z^3 - 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import InvalidOrder, InversionOfZero, LiteralError, OrderMismatch


def euler_phi(m: int) -> int:
    if m < 1:
        raise InvalidOrder(f"cyclotomic order must be >= 1, got {m}")
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # both low-to-high, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise InvalidOrder(f"cyclotomic order must be >= 1, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coordinates of z^k for 0 <= k < max(m, 2*phi - 1)."""
    phi = euler_phi(m)
    cyc = cyclotomic_polynomial(m)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(max(m, 2 * phi - 1)):
        rows.append(tuple(cur))
        # multiply by z, then eliminate z^phi with the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * cyc[i] for i, c in enumerate(cur)]
    return tuple(rows)


_ZERO = Fraction(0)
_ONE = Fraction(1)


class Scalar:
    """Immutable element of Q(zeta_m).

    Arithmetic accepts plain ints and Fractions on either side.  Mixing
    two different orders raises :class:`OrderMismatch`.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs):
        phi = euler_phi(order)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(
                f"Q(zeta_{order}) needs {phi} coordinates, got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, order: int, coeffs: tuple[Fraction, ...]) -> Scalar:
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # constructors -----------------------------------------------------
    @classmethod
    def rational(cls, order: int, q) -> Scalar:
        phi = euler_phi(order)
        return cls._raw(order, (Fraction(q),) + (_ZERO,) * (phi - 1))

    @classmethod
    def zero(cls, order: int) -> Scalar:
        return cls.rational(order, 0)

    @classmethod
    def one(cls, order: int) -> Scalar:
        return cls.rational(order, 1)

    @classmethod
    def root(cls, order: int, exponent: int) -> Scalar:
        """zeta_m ** exponent (any integer exponent, reduced mod m)."""
        if order < 1:
            raise InvalidOrder(f"cyclotomic order must be >= 1, got {order}")
        return _root_scalar(order, exponent % order)

    # predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self) -> bool:
        return any(self.coeffs)

    # coercion ---------------------------------------------------------
    def _coerce(self, other) -> Scalar | None:
        if isinstance(other, Scalar):
            if other.order != self.order:
                raise OrderMismatch(
                    f"Q(zeta_{self.order}) and Q(zeta_{other.order}) cannot be mixed"
                )
            return other
        if isinstance(other, (int, Rational)):
            return Scalar.rational(self.order, other)
        return None

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar._raw(self.order, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) == 1:
            return Scalar._raw(self.order, (a[0] * b[0],))
        phi = len(a)
        conv = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = list(conv[:phi])
        table = _power_table(self.order)
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                for i, t in enumerate(table[k]):
                    if t:
                        out[i] += c * t
        return Scalar._raw(self.order, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise InversionOfZero(f"cannot invert zero in Q(zeta_{self.order})")
        if len(self.coeffs) == 1:
            return Scalar._raw(self.order, (1 / self.coeffs[0],))
        # solve (multiplication-by-self) * c = e_0
        phi = len(self.coeffs)
        basis = [Scalar._raw(self.order, tuple(_ONE if i == j else _ZERO for i in range(phi)))
                 for j in range(phi)]
        columns = [(self * e).coeffs for e in basis]
        rows = [[columns[j][i] for j in range(phi)] + [_ONE if i == 0 else _ZERO]
                for i in range(phi)]
        for col in range(phi):
            piv = next(r for r in range(col, phi) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            p = rows[col][col]
            rows[col] = [v / p for v in rows[col]]
            for r in range(phi):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
        return Scalar._raw(self.order, tuple(rows[i][phi] for i in range(phi)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = Scalar.one(self.order)
        n = abs(n)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash((self.order, self.coeffs))
        return self._hash

    # rendering --------------------------------------------------------
    def __str__(self):
        return format_literal(self)

    def __repr__(self):
        return f"Scalar({self.order}, {format_literal(self)!r})"


@lru_cache(maxsize=None)
def _root_scalar(order: int, k: int) -> Scalar:
    row = _power_table(order)[k]
    return Scalar._raw(order, tuple(Fraction(c) for c in row))


def embed(m: int, q=None, *, k: int | None = None) -> Scalar:
    """Canonical element of Q(zeta_m) for a rational ``q`` or for ``zeta_m**k``."""
    if not isinstance(m, int) or m < 1:
        raise InvalidOrder(f"cyclotomic order must be a positive integer, got {m!r}")
    if (q is None) == (k is None):
        raise TypeError("give exactly one of q or k")
    if k is not None:
        if not 0 <= k < m:
            raise ValueError(f"exponent must satisfy 0 <= k < {m}, got {k}")
        return _root_scalar(m, k)
    return Scalar.rational(m, q)


@dataclass(frozen=True)
class RootOfUnity:
    """zeta_order ** exponent, kept symbolic until embedded."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1:
            raise InvalidOrder(f"cyclotomic order must be >= 1, got {self.order}")
        object.__setattr__(self, "exponent", self.exponent % self.order)

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        if other.order != self.order:
            raise OrderMismatch(f"roots of order {self.order} and {other.order}")
        return RootOfUnity(self.order, self.exponent + other.exponent)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity(self.order, -self.exponent)

    def to_scalar(self) -> Scalar:
        return _root_scalar(self.order, self.exponent)

    def __str__(self):
        return format_literal(self.to_scalar())


def cyclo_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Dispatch one of ``add, sub, mul, inv, neg`` by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


# literals ---------------------------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?(?:\s*\*\s*(?P<z1>z)(?:\s*\^\s*(?P<k1>\d+))?)?
          |
          (?P<z2>z)(?:\s*\^\s*(?P<k2>\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_literal(text: str, order: int) -> Scalar:
    """Parse a scalar literal into Q(zeta_order), reducing powers mod order."""
    if not isinstance(text, str):
        if isinstance(text, (int, Rational)):
            return Scalar.rational(order, text)
        raise LiteralError(f"expected a scalar literal string, got {text!r}")
    pos, total, first = 0, Scalar.zero(order), True
    src = text.strip()
    if not src:
        raise LiteralError("empty scalar literal")
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos or (m.group("num") is None and m.group("z2") is None):
            raise LiteralError(f"malformed scalar literal {text!r} at offset {pos}")
        if not first and m.group("sign") is None:
            raise LiteralError(f"missing operator in {text!r} at offset {pos}")
        first = False
        if m.group("num") is not None:
            den = int(m.group("den")) if m.group("den") is not None else 1
            if den == 0:
                raise LiteralError(f"zero denominator in {text!r}")
            coeff = Fraction(int(m.group("num")), den)
            has_z, k = m.group("z1") is not None, m.group("k1")
        else:
            coeff, has_z, k = Fraction(1), True, m.group("k2")
        power = (int(k) if k is not None else 1) if has_z else 0
        if m.group("sign") == "-":
            coeff = -coeff
        total = total + Scalar.root(order, power) * coeff
        pos = m.end()
    return total


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_literal(s: Scalar) -> str:
    """Canonical literal: highest power first, explicit coefficients except +-1."""
    terms = []
    for k in range(len(s.coeffs) - 1, -1, -1):
        c = s.coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = _fmt_q(mag)
        else:
            zpart = "z" if k == 1 else f"z^{k}"
            body = zpart if mag == 1 else f"{_fmt_q(mag)}*{zpart}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
