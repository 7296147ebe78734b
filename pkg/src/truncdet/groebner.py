"""Computational check that d_0..d_{k-1} form a Groebner basis (r = m = n)."""
from __future__ import annotations

import itertools
import logging
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .algebra import q_div
from .ideal_gen import det_coefficients
from .symb import Monomial, Polynomial, Var

log = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 200_000
DEFAULT_MAX_TERMS = 50_000


class Inconclusive(RuntimeError):
    """A resource cap was hit before the reduction finished."""


def lm_formula(m: int, k: int, index: int) -> Monomial:
    """Closed-form leading monomial of d_index, index = lam*m + mu."""
    if not 0 <= index < k:
        raise ValueError(f"index must be in 0..{k - 1}")
    lam, mu = divmod(index, m)
    factors = [Var(a, m - mu + 1 - a, lam) for a in range(1, m - mu + 1)]
    factors += [Var(m - mu + b, m + 1 - b, lam + 1) for b in range(1, mu + 1)]
    return Monomial.of(*factors)


@dataclass
class GBReport:
    m: int
    k: int
    lm_matches_formula: list[bool] = field(default_factory=list)
    pairwise_coprime: bool | None = None
    spairs_reduce_to_zero: bool | None = None
    lead_terms_squarefree: bool | None = None
    inconclusive_reason: str | None = None

    @property
    def ok(self) -> bool:
        return (
            all(self.lm_matches_formula)
            and bool(self.pairwise_coprime)
            and bool(self.spairs_reduce_to_zero)
            and bool(self.lead_terms_squarefree)
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["shape"] = {"m": self.m, "n": self.m, "r": self.m, "k": self.k}
        d["ok"] = self.ok
        return d


def verify_lm(m: int, k: int, gens: Sequence[Polynomial] | None = None) -> GBReport:
    gens = det_coefficients(m, k) if gens is None else gens
    leads = [g.leading_monomial() for g in gens]
    report = GBReport(m, k)
    report.lm_matches_formula = [lead == lm_formula(m, k, i) for i, lead in enumerate(leads)]
    report.pairwise_coprime = all(a.coprime(b) for a, b in itertools.combinations(leads, 2))
    return report


def divide(
    f: Polynomial,
    gens: Sequence[Polynomial],
    max_steps: int = DEFAULT_MAX_STEPS,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: f = sum q_i g_i + remainder.

    When several leading monomials divide the current term the generator with
    the smallest index is used.  No remainder term is divisible by any lm(g_i).
    """
    leads = [(g.leading_monomial(), g.leading_coefficient()) for g in gens]
    quotients = [Polynomial() for _ in gens]
    rem: dict[Monomial, object] = {}
    p = f.copy()
    steps = 0
    while p.terms:
        steps += 1
        if steps > max_steps:
            raise Inconclusive(f"division exceeded {max_steps} steps")
        if len(p.terms) > max_terms:
            raise Inconclusive(f"intermediate polynomial exceeded {max_terms} terms")
        lt = p.leading_monomial()
        c = p.terms[lt]
        for idx, (lg, lc) in enumerate(leads):
            if lg.divides(lt):
                mono = lt / lg
                coef = q_div(c, lc)
                quotients[idx].terms[mono] = quotients[idx].terms.get(mono, 0) + coef
                p = p - gens[idx].mul_term(mono, coef)
                break
        else:
            rem[lt] = c
            del p.terms[lt]
    return quotients, Polynomial(rem)


def normal_form(f: Polynomial, gens: Sequence[Polynomial], **caps) -> Polynomial:
    return divide(f, gens, **caps)[1]


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = lf.lcm(lg)
    return f.mul_term(lcm / lf, q_div(1, f.terms[lf])) - g.mul_term(lcm / lg, q_div(1, g.terms[lg]))


def spair_reduce_check(
    gens: Sequence[Polynomial],
    max_steps: int = DEFAULT_MAX_STEPS,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> bool:
    """True iff every S-polynomial has normal form 0; raises Inconclusive on caps."""
    if any(g.is_zero() for g in gens):
        raise ValueError("generators must be nonzero")
    for a, b in itertools.combinations(range(len(gens)), 2):
        s = s_polynomial(gens[a], gens[b])
        if normal_form(s, gens, max_steps=max_steps, max_terms=max_terms):
            log.debug("S(%d,%d) has nonzero normal form", a, b)
            return False
    return True


def squarefree_lead_check(gens: Sequence[Polynomial]) -> bool:
    return all(g.leading_monomial().is_squarefree() for g in gens)


def buchberger(
    gens: Sequence[Polynomial], max_steps: int = DEFAULT_MAX_STEPS, max_basis: int = 64
) -> list[Polynomial]:
    """Plain Buchberger completion; intended for tiny inputs only."""
    basis = [g for g in gens if g]
    pairs = list(itertools.combinations(range(len(basis)), 2))
    while pairs:
        a, b = pairs.pop(0)
        r = normal_form(s_polynomial(basis[a], basis[b]), basis, max_steps=max_steps)
        if r:
            if len(basis) >= max_basis:
                raise Inconclusive(f"basis grew beyond {max_basis} elements")
            basis.append(r)
            pairs.extend((i, len(basis) - 1) for i in range(len(basis) - 1))
    return basis


def gb_check(m: int, k: int, max_steps: int = DEFAULT_MAX_STEPS, max_terms: int = DEFAULT_MAX_TERMS) -> GBReport:
    gens = det_coefficients(m, k)
    report = verify_lm(m, k, gens)
    report.lead_terms_squarefree = squarefree_lead_check(gens)
    try:
        report.spairs_reduce_to_zero = spair_reduce_check(gens, max_steps, max_terms)
    except Inconclusive as exc:
        report.inconclusive_reason = str(exc)
    return report
