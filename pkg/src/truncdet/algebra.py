"""Exact scalars (rationals and prime fields) and truncated power series.

Rationals are plain :class:`fractions.Fraction` (ints are accepted wherever a
rational is expected).  Prime-field elements are :class:`Mod` values tagged
with their modulus.  :class:`TruncatedSeries` is an element of K[t]/(t^K)
stored densely.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union


class NotInvertible(ArithmeticError):
    pass


class FieldMismatch(TypeError):
    pass


class TruncationMismatch(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Mod:
    """An element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise FieldMismatch(f"{other} is not defined in F_{self.p}")
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pow__(self, e: int):
        if e < 0:
            if self.v == 0:
                raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
            return Mod(pow(self.v, -1, self.p), self.p) ** (-e)
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


Scalar = Union[int, Fraction, Mod]


@dataclass(frozen=True)
class Rationals:
    """The field Q."""

    def __call__(self, x) -> Fraction:
        if isinstance(x, Mod):
            raise FieldMismatch(f"cannot coerce {x!r} into Q")
        return Fraction(x)

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def contains(self, x) -> bool:
        return isinstance(x, (int, Rational)) and not isinstance(x, bool)

    @property
    def tag(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not (2 <= self.p < 2**31) or not is_prime(self.p):
            raise ValueError(f"F_p requires p prime with 2 <= p < 2^31, got {self.p}")

    def __call__(self, x) -> Mod:
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldMismatch(f"cannot coerce {x!r} into F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldMismatch(f"{x} is not defined in F_{self.p}")
            return Mod(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return Mod(int(x), self.p)

    def zero(self) -> Mod:
        return Mod(0, self.p)

    def one(self) -> Mod:
        return Mod(1, self.p)

    def contains(self, x) -> bool:
        return isinstance(x, Mod) and x.p == self.p

    def elements(self) -> list[Mod]:
        return [Mod(v, self.p) for v in range(self.p)]

    @property
    def tag(self) -> str:
        return f"F_{self.p}"


QQ = Rationals()
Field = Union[Rationals, PrimeField]


def field_of(x) -> Field:
    if isinstance(x, Mod):
        return PrimeField(x.p)
    return QQ


def q_div(a, b):
    """Exact quotient of rationals, kept as int when it divides evenly."""
    if isinstance(a, int) and isinstance(b, int) and b != 0 and a % b == 0:
        return a // b
    return Fraction(a) / Fraction(b)


@dataclass(frozen=True)
class TruncatedSeries:
    """An element of F[t]/(t^K); ``coeffs[l]`` is the coefficient of t^l."""

    coeffs: tuple
    field: Field = QQ

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("truncation order K must be >= 1")
        object.__setattr__(self, "coeffs", tuple(self.field(c) for c in self.coeffs))

    @classmethod
    def of(cls, coeffs: Iterable, K: int, field: Field = QQ) -> "TruncatedSeries":
        """Build from a coefficient list, zero-padding or truncating to length K."""
        c = list(coeffs)[:K]
        c += [0] * (K - len(c))
        return cls(tuple(c), field)

    @classmethod
    def constant(cls, c, K: int, field: Field = QQ) -> "TruncatedSeries":
        return cls.of([c], K, field)

    @property
    def K(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "TruncatedSeries"):
        if other.K != self.K:
            raise TruncationMismatch(f"truncation orders differ: {self.K} vs {other.K}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field.tag} vs {other.field.tag}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.field)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.field)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-a for a in self.coeffs), self.field)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(tuple(a * other for a in self.coeffs), self.field)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        return series_inv(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        terms = [f"{c}*t^{l}" for l, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'}; K={self.K}, {self.field.tag})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    K = a.K
    zero = a.field.zero()
    out = [zero] * K
    for i, ai in enumerate(a.coeffs):
        if not ai:
            continue
        for j in range(K - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return TruncatedSeries(tuple(out), a.field)


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a.coeffs[0]
    if not a0:
        raise NotInvertible("constant term is zero")
    inv0 = a.field.one() / a0
    b = [inv0]
    for l in range(1, a.K):
        acc = a.field.zero()
        for i in range(1, l + 1):
            acc = acc + a.coeffs[i] * b[l - i]
        b.append(-acc * inv0)
    return TruncatedSeries(tuple(b), a.field)


def series_det(rows: Sequence[Sequence[TruncatedSeries]]) -> TruncatedSeries:
    """Determinant of a square matrix of truncated series (cofactor expansion)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for c in range(n):
        entry = rows[0][c]
        if entry.is_zero():
            continue
        minor = [row[:c] + row[c + 1:] for row in rows[1:]]
        term = entry * series_det(minor)
        if c % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return TruncatedSeries.constant(0, rows[0][0].K, rows[0][0].field)
    return total
