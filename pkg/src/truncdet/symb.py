"""Sparse polynomials in the variables x[i,j,l] (coefficient of t^l in entry (i,j)).

Variables are totally ordered by descending level ``l``, then ascending row,
then ascending column: x[1,1,k-1] is the largest variable and x[m,n,0] the
smallest.  Monomials are compared in the graded reverse lexicographic order
built on that chain.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

from .algebra import QQ, FieldMismatch, Field, Mod, PrimeField, q_div


class Var(NamedTuple):
    i: int
    j: int
    l: int

    @property
    def chain_key(self) -> tuple[int, int, int]:
        """Position key in the variable chain; smaller key = larger variable."""
        return (-self.l, self.i, self.j)

    def __str__(self):
        return f"x[{self.i},{self.j},{self.l}]"


def chain_position(v: Var, m: int, n: int, k: int) -> int:
    """Global index of ``v`` in the chain (0 = largest variable)."""
    return (k - 1 - v.l) * m * n + (v.i - 1) * n + (v.j - 1)


class Monomial:
    """Immutable power product; exponents stored sorted along the variable chain."""

    __slots__ = ("exps", "degree", "_hash", "_key")

    def __init__(self, exps: Mapping[Var, int] | Iterable[tuple[Var, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        merged: dict[Var, int] = {}
        for v, e in items:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                merged[Var(*v)] = merged.get(Var(*v), 0) + e
        self.exps = tuple(sorted(merged.items(), key=lambda ve: ve[0].chain_key))
        self.degree = sum(e for _, e in self.exps)
        self._hash = hash(self.exps)
        # grevlex: degree first, then the rightmost differing variable decides,
        # the monomial with the smaller exponent there being the larger one
        self._key = (
            self.degree,
            tuple(((v.l, -v.i, -v.j), -e) for v, e in reversed(self.exps)),
        )

    @classmethod
    def of(cls, *vars: Var | tuple[int, int, int]) -> "Monomial":
        return cls((Var(*v), 1) for v in vars)

    def as_dict(self) -> dict[Var, int]:
        return dict(self.exps)

    def variables(self) -> list[Var]:
        return [v for v, _ in self.exps]

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.exps + other.exps)

    def divides(self, other: "Monomial") -> bool:
        d = other.as_dict()
        return all(d.get(v, 0) >= e for v, e in self.exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            if d.get(v, 0) < e:
                raise ValueError(f"{other} does not divide {self}")
            d[v] -= e
        return Monomial(d)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial(d)

    def coprime(self, other: "Monomial") -> bool:
        return not (set(self.variables()) & set(other.variables()))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for _, e in self.exps)

    def t_weight(self) -> int:
        return sum(v.l * e for v, e in self.exps)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        return self._key < other._key

    def __gt__(self, other: "Monomial") -> bool:
        return self._key > other._key

    def __le__(self, other: "Monomial") -> bool:
        return self._key <= other._key

    def __ge__(self, other: "Monomial") -> bool:
        return self._key >= other._key

    def __str__(self):
        if not self.exps:
            return "1"
        parts = []
        for v, e in sorted(self.exps):
            parts.append(str(v) if e == 1 else f"{v}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"Monomial({self})"


ONE = Monomial()


def grevlex_cmp(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to, or greater than ``b``."""
    if a._key == b._key:
        return 0
    return 1 if a._key > b._key else -1


class Polynomial:
    """Polynomial with rational coefficients (ints kept as ints)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        self.terms: dict[Monomial, object] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[mono] = c

    @classmethod
    def var(cls, i: int, j: int, l: int) -> "Polynomial":
        return cls({Monomial.of((i, j, l)): 1})

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[Monomial, object]]) -> "Polynomial":
        out: dict[Monomial, object] = {}
        for mono, c in pairs:
            out[mono] = out.get(mono, 0) + c
        return cls(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def copy(self) -> "Polynomial":
        p = Polynomial()
        p.terms = dict(self.terms)
        return p

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        p = Polynomial()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = Polynomial()
        p.terms = {mono: -c for mono, c in self.terms.items()}
        return p

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.const(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if not other:
                return Polynomial()
            p = Polynomial()
            p.terms = {mono: c * other for mono, c in self.terms.items()}
            return p
        out: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1 * m2
                out[mono] = out.get(mono, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        p = Polynomial()
        p.terms = {m * mono: cm * c for m, cm in self.terms.items()}
        return p

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        """Terms in descending grevlex order."""
        return sorted(self.terms.items(), key=lambda mc: mc[0]._key, reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=lambda mono: mono._key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def variables(self) -> set[Var]:
        return {v for mono in self.terms for v in mono.variables()}

    def total_degrees(self) -> set[int]:
        return {mono.degree for mono in self.terms}

    def t_weights(self) -> set[int]:
        return {mono.t_weight() for mono in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.total_degrees()) <= 1

    def evaluate(self, point: Mapping[Var, object]):
        return poly_eval(self, point)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


def leading_monomial(p: Polynomial) -> Monomial:
    return p.leading_monomial()


def _field_of_values(values: Iterable) -> Field:
    field: Field = QQ
    seen_mod = None
    for x in values:
        if isinstance(x, Mod):
            if seen_mod is not None and x.p != seen_mod:
                raise FieldMismatch(f"point mixes F_{seen_mod} and F_{x.p}")
            seen_mod = x.p
    if seen_mod is not None:
        field = PrimeField(seen_mod)
    return field


def poly_eval(p: Polynomial, point: Mapping[Var, object], field: Field | None = None):
    """Evaluate ``p`` exactly at ``point`` (a mapping Var -> scalar).

    The field is taken from the point's values unless given; coefficients are
    coerced into it.
    """
    if field is None:
        field = _field_of_values(point.values())
    total = field.zero()
    for mono, c in p.terms.items():
        acc = field(c)
        for v, e in mono.exps:
            try:
                x = point[v]
            except KeyError:
                raise KeyError(f"no value assigned to {v}") from None
            if isinstance(x, Mod) and not field.contains(x):
                raise FieldMismatch(f"{v}={x!r} is not in {field.tag}")
            acc = acc * (x ** e if e > 1 else x)
        total = total + acc
    return total


# -- textual format -----------------------------------------------------------

def _serial_key(mono: Monomial):
    return tuple(v for v, e in sorted(mono.exps) for _ in range(e))


def _format_coeff(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: terms sorted by their variable index lists."""
    if not p.terms:
        return "0"
    out = []
    for mono, c in sorted(p.terms.items(), key=lambda mc: _serial_key(mc[0])):
        c = Fraction(c)
        neg = c < 0
        a = -c if neg else c
        if mono == ONE:
            body = _format_coeff(a)
        elif a == 1:
            body = str(mono)
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"{'-' if neg else '+'} {body}")
    return " ".join(out)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_VAR_RE = re.compile(r"^x\[(\d+),(\d+),(\d+)\](?:\^(\d+))?$")
_NUM_RE = re.compile(r"^\d+(?:/\d+)?$")


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of :func:`format_polynomial`."""
    text = text.strip()
    if text == "0":
        return Polynomial()
    # split on +/- that are not inside brackets (brackets only hold digits and commas)
    pairs: list[tuple[Monomial, object]] = []
    pos = 0
    for match in _TERM_RE.finditer(text):
        if match.start() != pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = match.end()
        sign = -1 if match.group(1) == "-" else 1
        coeff: object = 1
        exps: list[tuple[Var, int]] = []
        for factor in match.group(2).strip().split("*"):
            factor = factor.strip()
            if _NUM_RE.match(factor):
                coeff = coeff * Fraction(factor)
                continue
            vm = _VAR_RE.match(factor)
            if not vm:
                raise ValueError(f"bad factor {factor!r}")
            i, j, l, e = vm.groups()
            exps.append((Var(int(i), int(j), int(l)), int(e) if e else 1))
        c = Fraction(coeff) * sign
        pairs.append((Monomial(exps), c.numerator if c.denominator == 1 else c))
    if pos != len(text):
        raise ValueError(f"trailing input {text[pos:]!r}")
    return Polynomial.from_terms(pairs)


def iter_terms(p: Polynomial) -> Iterator[tuple[Monomial, object]]:
    yield from p.sorted_terms()


def scale_div(p: Polynomial, c) -> Polynomial:
    out = Polynomial()
    out.terms = {mono: q_div(v, c) for mono, v in p.terms.items()}
    return out
