"""Component census and codimension formulas for Z^{m,n}_{r,k}.

Codimensions are in the ambient affine space of dimension m*n*k.  Exact
component counts are known for maximal minors (r = m), for 2x2 minors, for
k = 2, and for k < r chains that bottom out in one of those; otherwise the
report carries the lower bound 1 + floor(k/2).
"""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from functools import lru_cache

log = logging.getLogger(__name__)

EXACT = "Exact"
LOWER_BOUND = "LowerBound"


@dataclass(frozen=True)
class Component:
    label: str
    s_index: int | None
    codim: int
    description: str


@dataclass
class ComponentReport:
    m: int
    n: int
    r: int
    k: int
    components: list[Component] = field(default_factory=list)
    count_exactness: str = EXACT
    component_count: int = 0

    @property
    def variety_codim(self) -> int:
        return min(c.codim for c in self.components)

    @property
    def codims(self) -> list[int]:
        return [c.codim for c in self.components]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["shape"] = {"m": self.m, "n": self.n, "r": self.r, "k": self.k}
        for key in ("m", "n", "r", "k"):
            del d[key]
        d["variety_codim"] = self.variety_codim
        return d


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def _x_desc(s: int) -> str:
    if s == 0:
        return "closure of the open set where some x^(0) != 0"
    return f"closure of the open set where some x^({s}) != 0 after zeroing levels < {s}"


def census_maximal(m: int, n: int, k: int) -> ComponentReport:
    """r = m: one irreducible component of codimension k(n - m + 1)."""
    _require(1 <= m, "m >= 1 required")
    _require(m <= n, "m <= n required")
    _require(k >= 1, "k >= 1 required")
    comp = Component("Z", None, k * (n - m + 1), "irreducible (maximal minors)")
    return ComponentReport(m, n, m, k, [comp], EXACT, 1)


def census_2xk(m: int, n: int, k: int) -> ComponentReport:
    """2x2 minors with 3 <= m <= n, k >= 2: components X_0..X_{L-1} and Y_L."""
    _require(3 <= m, "r < m required (2x2 submaximal minors need m >= 3)")
    _require(m <= n, "m <= n required")
    _require(k >= 2, "k >= 2 required")
    L = k // 2
    comps = [
        Component(f"X_{s}", s, (m - 1) * (n - 1) * (k - 2 * s) + m * n * s, _x_desc(s))
        for s in range(L)
    ]
    if k % 2 == 0:
        comps.append(Component(f"Y_{L}", L, m * n * L, f"levels < {L} zero, remaining levels free"))
    else:
        comps.append(
            Component(
                f"Y_{L}", L, (m - 1) * (n - 1) + m * n * L,
                f"levels < {L} zero, level {L} of rank <= 1, higher levels free",
            )
        )
    return ComponentReport(m, n, 2, k, comps, EXACT, L + 1)


def census_tangent(m: int, n: int, r: int) -> ComponentReport:
    """k = 2, 2 <= r < m <= n: exactly two components."""
    _require(2 <= r, "r >= 2 required")
    _require(r < m, "r < m required")
    _require(m <= n, "m <= n required")
    comps = [
        Component(
            "X_0", 0, 2 * (m - r + 1) * (n - r + 1),
            "closure of the set where some degree-zero (r-1)-minor is nonzero",
        ),
        Component(
            "Y_1", 1, (m - r + 2) * (n - r + 2),
            "all degree-zero (r-1)-minors vanish",
        ),
    ]
    return ComponentReport(m, n, r, 2, comps, EXACT, 2)


def classical_codim(m: int, n: int, r: int) -> int:
    # k = 1: matrices of rank <= r-1, codim (m-r+1)(n-r+1) (Bruns-Vetter)
    return (m - r + 1) * (n - r + 1)


@lru_cache(maxsize=None)
def variety_codim(m: int, n: int, r: int, k: int) -> int:
    """Codimension of Z^{m,n}_{r,k} by recursion on r (1 <= r <= m <= n)."""
    if r == 1:
        return m * n * k  # only the origin
    if k == 1:
        return classical_codim(m, n, r)
    if r == m:
        return k * (n - m + 1)
    if k < r:
        return variety_codim(m - 1, n - 1, r - 1, k)
    return min(codim for _, _, codim in _strata(m, n, r, k))


def _strata(m: int, n: int, r: int, k: int) -> list[tuple[str, int, int]]:
    """(label, s, codim) for X_0..X_{lam-1} and Y_lam, with k = lam*r + mu."""
    lam, mu = divmod(k, r)
    out = []
    for s in range(lam):
        c_s = variety_codim(m - 1, n - 1, r - 1, k - r * s)
        out.append((f"X_{s}", s, c_s + s * m * n))
    c_lam = 0 if mu == 0 else variety_codim(m, n, r, mu)
    out.append((f"Y_{lam}", lam, c_lam + lam * m * n))
    return out


def census_general(m: int, n: int, r: int, k: int) -> ComponentReport:
    """Census for any 2 <= r <= m <= n, k >= 1, via the codimension recursion."""
    _require(2 <= r, "r >= 2 required")
    _require(r <= m, "r <= m required")
    _require(m <= n, "m <= n required")
    _require(k >= 1, "k >= 1 required")
    if r == m:
        return census_maximal(m, n, k)
    if k == 1:
        comp = Component("Z", None, classical_codim(m, n, r), "classical determinantal variety")
        return ComponentReport(m, n, r, k, [comp], EXACT, 1)
    if k < r:
        sub = census_general(m - 1, n - 1, r - 1, k)
        comps = [
            Component(
                c.label, c.s_index, c.codim,
                f"corresponds to {c.label} of Z^{{{m - 1},{n - 1}}}_{{{r - 1},{k}}}: {c.description}",
            )
            for c in sub.components
        ]
        return ComponentReport(m, n, r, k, comps, sub.count_exactness, sub.component_count)
    comps = []
    for label, s, codim in _strata(m, n, r, k):
        desc = _x_desc(s) if label.startswith("X") else f"levels < {s} zero"
        comps.append(Component(label, s, codim, desc))
    if r == 2:
        return ComponentReport(m, n, r, k, comps, EXACT, len(comps))
    return ComponentReport(m, n, r, k, comps, LOWER_BOUND, 1 + k // 2)


def monotone_in_k_violations(m: int, n: int, r: int, kmax: int) -> list[int]:
    """Values of k where the codimension drops as k grows; logged, not asserted."""
    bad = []
    prev = None
    for k in range(1, kmax + 1):
        c = census_general(m, n, r, k).variety_codim
        if prev is not None and c < prev:
            log.warning("codim of Z^{%d,%d}_{%d,k} drops at k=%d: %d -> %d", m, n, r, k, prev, c)
            bad.append(k)
        prev = c
    return bad
