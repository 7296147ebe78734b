"""f-vectors, Hilbert function and degree of the square maximal-minor variety.

The leading-term ideal of I^{m,m}_{m,k} is the Stanley-Reisner ideal of the
join S_m^k * C_b with b = k(m^2 - m), where C_l is the full simplex on l
vertices and S_l its boundary (all proper subsets).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

import numpy as np

from .groebner import lm_formula

MAX_ENUM_VERTICES = 24


@dataclass(frozen=True)
class FullSimplex:
    size: int


@dataclass(frozen=True)
class Skeleton:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("Skeleton needs at least one vertex")


@dataclass(frozen=True)
class Join:
    factors: tuple

    def __init__(self, *factors):
        object.__setattr__(self, "factors", tuple(factors))


ComplexSpec = Union[FullSimplex, Skeleton, Join]


@dataclass(frozen=True)
class FVector:
    """(f_0, ..., f_{d-1}); f_i counts faces with i+1 vertices."""

    counts: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.counts) - 1

    @property
    def top(self) -> int:
        """Number of top-dimensional faces (1 for the complex {empty set})."""
        return self.counts[-1] if self.counts else 1

    def polynomial(self) -> list[int]:
        """f-polynomial coefficients: 1 + f_0 x + f_1 x^2 + ..."""
        return [1, *self.counts]

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[int]) -> "FVector":
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if coeffs[0] != 1:
            raise ValueError("f-polynomial must have constant term 1 (the empty face)")
        return cls(tuple(coeffs[1:]))


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_pow(a: Sequence[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = poly_mul(out, a)
    return out


def skeleton_polynomial(m: int) -> list[int]:
    return [comb(m, i) for i in range(m)]


def simplex_polynomial(b: int) -> list[int]:
    return [comb(b, i) for i in range(b + 1)]


def fvector_skeleton_power(m: int, k: int) -> FVector:
    """f-vector of S_m^k from the k-th power of the f-polynomial of S_m."""
    return FVector.from_polynomial(poly_pow(skeleton_polynomial(m), k))


def fvector_full(m: int, k: int) -> FVector:
    """f-vector of S_m^k * C_b, b = k(m^2 - m)."""
    b = k * (m * m - m)
    return FVector.from_polynomial(poly_mul(poly_pow(skeleton_polynomial(m), k), simplex_polynomial(b)))


def spec_polynomial(spec: ComplexSpec) -> list[int]:
    """f-polynomial by the join product rule (used to cross-check enumeration)."""
    if isinstance(spec, FullSimplex):
        return simplex_polynomial(spec.size)
    if isinstance(spec, Skeleton):
        return skeleton_polynomial(spec.size)
    out = [1]
    for f in spec.factors:
        out = poly_mul(out, spec_polynomial(f))
    return out


def _blocks(spec: ComplexSpec) -> list[tuple[str, int]]:
    if isinstance(spec, Join):
        return [b for f in spec.factors for b in _blocks(f)]
    kind = "full" if isinstance(spec, FullSimplex) else "skeleton"
    return [(kind, spec.size)]


def fvector_enumerate(spec: ComplexSpec, chunk: int = 1 << 20) -> FVector:
    """Brute force: test every vertex subset for being a face, count by size."""
    blocks = _blocks(spec)
    nv = sum(size for _, size in blocks)
    if nv > MAX_ENUM_VERTICES:
        raise ValueError(f"vertex budget exceeded: {nv} > {MAX_ENUM_VERTICES}")
    counts = np.zeros(nv + 1, dtype=np.int64)
    for start in range(0, 1 << nv, chunk):
        masks = np.arange(start, min(start + chunk, 1 << nv), dtype=np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        offset = 0
        for kind, size in blocks:
            if kind == "skeleton":
                full = ((1 << size) - 1) << offset
                ok &= (masks & full) != full
            offset += size
        sizes = np.zeros(masks.shape, dtype=np.int64)
        for bit in range(nv):
            sizes += (masks >> bit) & 1
        counts += np.bincount(sizes[ok], minlength=nv + 1)
    return FVector.from_polynomial([int(c) for c in counts])


def hilbert_function(m: int, k: int, d: int) -> int:
    """H(d) = sum_i f_i C(d-1, i) for d >= 1; H(0) = 1."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    if d == 0:
        return 1
    f = fvector_full(m, k).counts
    return sum(fi * comb(d - 1, i) for i, fi in enumerate(f))


def hilbert_polynomial(m: int, k: int) -> FVector:
    """Coefficients f_i of H(n) in the binomial basis C(n-1, i)."""
    return fvector_full(m, k)


def standard_monomial_count(m: int, k: int, d: int, max_d: int = 10, max_k: int = 6) -> int:
    """Degree-d monomials in k*m^2 variables divisible by no lm(d_i).

    Inclusion-exclusion over subsets of the leading monomials: monomials
    divisible by all leads in a subset are those divisible by their lcm.
    """
    if d > max_d or k > max_k:
        raise ValueError(f"budget exceeded (d <= {max_d}, k <= {max_k})")
    nvars = k * m * m
    leads = [lm_formula(m, k, i) for i in range(k)]
    total = 0
    for mask in range(1 << k):
        lcm_deg = 0
        chosen = [leads[i] for i in range(k) if mask >> i & 1]
        if chosen:
            acc = chosen[0]
            for mono in chosen[1:]:
                acc = acc.lcm(mono)
            lcm_deg = acc.degree
        rest = d - lcm_deg
        if rest < 0:
            continue
        sign = -1 if bin(mask).count("1") % 2 else 1
        total += sign * comb(nvars + rest - 1, rest)
    return total


def degree(m: int, k: int) -> int:
    return m**k
