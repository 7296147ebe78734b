"""Generators of the ideal I^{m,n}_{r,k} and related equation families.

The generic m x n matrix over S[t]/(t^k) has entries
``x_{i,j}(t) = sum_l x[i,j,l] t^l``.  Each r x r minor, expanded in t and
truncated, contributes k generators (one per power of t).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .symb import Monomial, Polynomial, Var

# A symbolic series is a list of K polynomials (coefficients of t^0..t^{K-1}).
SymSeries = list


@dataclass(frozen=True)
class MatrixShape:
    m: int
    n: int
    r: int
    k: int

    def __post_init__(self):
        if not (1 <= self.r):
            raise ValueError("r >= 1 required")
        if not (self.r <= self.m):
            raise ValueError("r <= m required")
        if not (self.m <= self.n):
            raise ValueError("m <= n required")
        if not (self.k >= 1):
            raise ValueError("k >= 1 required")

    @property
    def nvars(self) -> int:
        return self.m * self.n * self.k

    def variables(self) -> list[Var]:
        """All variables, in chain order (largest first)."""
        return [
            Var(i, j, l)
            for l in reversed(range(self.k))
            for i in range(1, self.m + 1)
            for j in range(1, self.n + 1)
        ]

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.m, self.n, self.r, self.k)


@dataclass(frozen=True)
class Generator:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    w: int
    poly: Polynomial


@dataclass
class GeneratorSet:
    shape: MatrixShape
    gens: list[Generator] = field(default_factory=list)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def polys(self) -> list[Polynomial]:
        return [g.poly for g in self.gens]


def generic_entry(i: int, j: int, k: int, K: int | None = None) -> SymSeries:
    """x_{i,j}(t) as a symbolic series of length K (default k), zero-padded."""
    K = k if K is None else K
    return [Polynomial.var(i, j, l) if l < k else Polynomial() for l in range(K)]


def _smul(a: SymSeries, b: SymSeries, K: int) -> SymSeries:
    out = [Polynomial() for _ in range(K)]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(K - i):
            if b[j]:
                out[i + j] = out[i + j] + ai * b[j]
    return out


def _sadd(a: SymSeries, b: SymSeries, sign: int = 1) -> SymSeries:
    return [x + y if sign > 0 else x - y for x, y in zip(a, b)]


def series_minor(
    entry, rows: Sequence[int], cols: Sequence[int], K: int
) -> SymSeries:
    """Determinant of the submatrix ``entry(i, j)`` over rows x cols, mod t^K.

    Cofactor expansion along the first remaining row, memoised on the set of
    columns still available.
    """
    rows = tuple(rows)

    @lru_cache(maxsize=None)
    def det(depth: int, avail: tuple[int, ...]) -> tuple:
        i = rows[depth]
        if depth == len(rows) - 1:
            return tuple(entry(i, avail[0]))
        acc = [Polynomial() for _ in range(K)]
        for pos, c in enumerate(avail):
            sub = det(depth + 1, avail[:pos] + avail[pos + 1:])
            prod = _smul(entry(i, c), list(sub), K)
            acc = _sadd(acc, prod, -1 if pos % 2 else 1)
        return tuple(acc)

    return list(det(0, tuple(cols)))


def _check_subset(idx: Sequence[int], size: int, bound: int, what: str):
    if len(idx) != size:
        raise ValueError(f"{what} must have exactly {size} indices, got {len(idx)}")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{what} must be strictly increasing")
    if idx and (idx[0] < 1 or idx[-1] > bound):
        raise ValueError(f"{what} must lie in 1..{bound}")


def minor_coefficients(shape: MatrixShape, rows: Sequence[int], cols: Sequence[int]) -> list[Polynomial]:
    """The k t-coefficients of the r x r minor on ``rows`` x ``cols``."""
    _check_subset(rows, shape.r, shape.m, "rows")
    _check_subset(cols, shape.r, shape.n, "cols")
    k = shape.k
    return series_minor(lambda i, j: generic_entry(i, j, k), rows, cols, k)


def generate_ideal(shape: MatrixShape) -> GeneratorSet:
    """All k*C(m,r)*C(n,r) generators, ordered by (rows, cols, w)."""
    gs = GeneratorSet(shape)
    for rows in itertools.combinations(range(1, shape.m + 1), shape.r):
        for cols in itertools.combinations(range(1, shape.n + 1), shape.r):
            for w, poly in enumerate(minor_coefficients(shape, rows, cols)):
                gs.gens.append(Generator(rows, cols, w, poly))
    return gs


def expected_generator_count(shape: MatrixShape) -> int:
    return shape.k * comb(shape.m, shape.r) * comb(shape.n, shape.r)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def det_coefficients(m: int, k: int) -> list[Polynomial]:
    """d_0..d_{k-1} of the square generic determinant.

    Built from the permutation expansion: each Leibniz monomial
    prod_c x[sigma(c), c, 0] is spread over all level assignments summing to s.
    """
    out = []
    perms = [(p, _perm_sign(p)) for p in itertools.permutations(range(m))]
    for s in range(k):
        terms: dict[Monomial, int] = {}
        for perm, sign in perms:
            for levels in _compositions(s, m):
                mono = Monomial.of(*((perm[c] + 1, c + 1, levels[c]) for c in range(m)))
                terms[mono] = terms.get(mono, 0) + sign
        out.append(Polynomial(terms))
    return out


def ap_equations(shape: MatrixShape, rows: Sequence[int]) -> list[dict[tuple[int, ...], Polynomial]]:
    """Coefficients of t^w, 0 <= w < 2k, of the (r+1)-fold wedge of the given rows.

    Entry w is a bundle mapping each (r+1)-column subset to its Plücker
    coordinate polynomial.  Rows are polynomials of degree <= k-1 in t and the
    wedge is expanded modulo t^{2k}, not t^k.
    """
    size = shape.r + 1
    if size > shape.m:
        raise ValueError("r+1 <= m required (submaximal minors)")
    _check_subset(rows, size, shape.m, "rows")
    k, K = shape.k, 2 * shape.k
    entry = lambda i, j: generic_entry(i, j, k, K)
    bundles: list[dict[tuple[int, ...], Polynomial]] = [{} for _ in range(K)]
    for cols in itertools.combinations(range(1, shape.n + 1), size):
        coeffs = series_minor(entry, rows, cols, K)
        for w in range(K):
            bundles[w][cols] = coeffs[w]
    return bundles


def extra_wedge_equations(shape: MatrixShape) -> list[Polynomial]:
    """Plücker coordinates of every (k(r-1)+1)-fold wedge of the level vectors u_i^{(l)}.

    Empty when k(r-1)+1 > n, where the wedges vanish for dimension reasons.
    """
    d = shape.k * (shape.r - 1) + 1
    if d > shape.n:
        return []
    vectors = [(i, l) for i in range(1, shape.m + 1) for l in range(shape.k)]
    out = []
    for chosen in itertools.combinations(vectors, d):
        for cols in itertools.combinations(range(1, shape.n + 1), d):
            entry = lambda a, c, chosen=chosen: [Polynomial.var(chosen[a][0], c, chosen[a][1])]
            out.append(series_minor(entry, range(d), cols, 1)[0])
    return out
