"""Point-level tools: membership, brute-force point counts over F_q, the
corner-pivot lift, separation and intersection witnesses, and scaling curves.
"""
from __future__ import annotations

import enum
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from .algebra import QQ, Field, FieldMismatch, PrimeField, TruncatedSeries, series_det
from .ideal_gen import GeneratorSet, MatrixShape, ap_equations, extra_wedge_equations, generate_ideal
from .symb import Polynomial, Var, poly_eval

DEFAULT_CAP = 2**26


class CapExceeded(ValueError):
    pass


@dataclass
class PointAssignment:
    """A value for every variable x[i,j,l] of ``shape``, all in one field."""

    shape: MatrixShape
    values: dict[Var, object]
    field: Field = QQ

    def __post_init__(self):
        expected = set(self.shape.variables())
        missing = expected - self.values.keys()
        if missing:
            raise ValueError(f"unassigned variables: {sorted(missing)[:4]}...")
        extra = self.values.keys() - expected
        if extra:
            raise ValueError(f"variables outside shape: {sorted(extra)[:4]}")
        self.values = {v: self.field(x) for v, x in self.values.items()}

    @classmethod
    def zeros(cls, shape: MatrixShape, field: Field = QQ) -> "PointAssignment":
        return cls(shape, {v: 0 for v in shape.variables()}, field)

    @classmethod
    def from_rows(
        cls, shape: MatrixShape, rows: Mapping[tuple[int, int], Sequence], field: Field = QQ
    ) -> "PointAssignment":
        """Build from level rows: ``rows[(i, l)]`` is the vector u_i^{(l)}; others zero."""
        vals: dict[Var, object] = {v: 0 for v in shape.variables()}
        for (i, l), vec in rows.items():
            for j, x in enumerate(vec, start=1):
                vals[Var(i, j, l)] = x
        return cls(shape, vals, field)

    @classmethod
    def from_series(
        cls, shape: MatrixShape, entries: Sequence[Sequence[TruncatedSeries]]
    ) -> "PointAssignment":
        field = entries[0][0].field
        vals = {}
        for i, row in enumerate(entries, start=1):
            for j, x in enumerate(row, start=1):
                for l, c in enumerate(x.coeffs):
                    vals[Var(i, j, l)] = c
        return cls(shape, vals, field)

    def __getitem__(self, v: Var):
        return self.values[v]

    def series(self, i: int, j: int) -> TruncatedSeries:
        return TruncatedSeries(tuple(self.values[Var(i, j, l)] for l in range(self.shape.k)), self.field)

    def matrix(self) -> list[list[TruncatedSeries]]:
        return [
            [self.series(i, j) for j in range(1, self.shape.n + 1)]
            for i in range(1, self.shape.m + 1)
        ]

    def level_is_zero(self, l: int) -> bool:
        return all(not x for v, x in self.values.items() if v.l == l)

    def to_json(self) -> dict[str, str]:
        return {str(v): str(self.values[v]) for v in sorted(self.values)}


def _eval_all(polys: Iterable[Polynomial], pt: PointAssignment) -> Iterator:
    for p in polys:
        yield poly_eval(p, pt.values, pt.field)


def evaluate_membership(pt: PointAssignment, gens: GeneratorSet | Iterable[Polynomial] | None = None) -> bool:
    """True iff every generator vanishes at ``pt`` (default: the ideal of pt.shape)."""
    if gens is None:
        gens = generate_ideal(pt.shape)
    if isinstance(gens, GeneratorSet):
        if gens.shape.as_tuple()[:2] != pt.shape.as_tuple()[:2] or gens.shape.k != pt.shape.k:
            raise ValueError("generator shape does not match point shape")
        gens = gens.polys()
    return not any(_eval_all(gens, pt))


# -- counting -----------------------------------------------------------------

@dataclass
class CountResult:
    m: int
    n: int
    r: int
    k: int
    q: int
    count: int
    enumerated: int
    method: str

    def to_dict(self) -> dict:
        return {
            "shape": {"m": self.m, "n": self.n, "r": self.r, "k": self.k},
            "q": self.q,
            "count": self.count,
            "enumerated": self.enumerated,
            "method": self.method,
        }


@dataclass
class _Tape:
    """Generators flattened to (coefficient, variable-column) lists for numpy."""

    q: int
    polys: list[list[tuple[int, tuple[int, ...]]]] = field(default_factory=list)


def compile_tape(polys: Iterable[Polynomial], variables: Sequence[Var], q: int) -> _Tape:
    index = {v: c for c, v in enumerate(variables)}
    tape = _Tape(q)
    for p in polys:
        terms = []
        for mono, c in p.terms.items():
            coef = int(PrimeField(q)(c))
            if coef:
                cols = tuple(index[v] for v, e in mono.exps for _ in range(e))
                terms.append((coef, cols))
        if terms:
            tape.polys.append(terms)
    return tape


def _digits(count: int, width: int, q: int) -> np.ndarray:
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, width), dtype=np.int64)
    for c in range(width - 1, -1, -1):
        out[:, c] = idx % q
        idx //= q
    return out


def _surviving_rows(tape: _Tape, block: np.ndarray) -> np.ndarray:
    """Rows of ``block`` (one assignment per row) where every generator vanishes mod q."""
    q = tape.q
    alive = block
    for terms in tape.polys:
        if not len(alive):
            break
        acc = np.zeros(len(alive), dtype=np.int64)
        for coef, cols in terms:
            t = np.full(len(alive), coef, dtype=np.int64)
            for c in cols:
                t = (t * alive[:, c]) % q
            acc += t
        alive = alive[acc % q == 0]
    return alive


def _count_partition(args) -> int:
    tape, nvars, prefix_len, prefixes, rest = args
    total = 0
    block = np.empty((len(rest), nvars), dtype=np.int64)
    block[:, prefix_len:] = rest
    for prefix in prefixes:
        block[:, :prefix_len] = prefix
        total += len(_surviving_rows(tape, block))
    return total


def _partition_space(q: int, nvars: int, chunk_bits: int = 16):
    """Split variables into an outer prefix and an inner block of <= 2^chunk_bits rows."""
    rest_len = nvars
    while rest_len > 0 and q**rest_len > (1 << chunk_bits):
        rest_len -= 1
    prefix_len = nvars - rest_len
    rest = _digits(q**rest_len, rest_len, q)
    prefixes = _digits(q**prefix_len, prefix_len, q) if prefix_len else np.zeros((1, 0), dtype=np.int64)
    return prefix_len, prefixes, rest


def count_points(
    shape: MatrixShape, q: int, cap: int = DEFAULT_CAP, workers: int = 1, chunk_bits: int = 16
) -> CountResult:
    """Number of F_q-points of Z^{m,n}_{r,k}, enumerating all q^{mnk} assignments.

    The search space is partitioned by the values of the leading variables;
    partitions are independent and their counts are summed, so the total does
    not depend on ``workers`` or ``chunk_bits``.
    """
    PrimeField(q)
    nvars = shape.nvars
    total_space = q**nvars
    if total_space > cap:
        raise CapExceeded(f"q^(mnk) = {q}^{nvars} exceeds cap {cap}")
    variables = shape.variables()
    tape = compile_tape(generate_ideal(shape).polys(), variables, q)
    prefix_len, prefixes, rest = _partition_space(q, nvars, chunk_bits)
    parts = np.array_split(prefixes, max(1, min(workers * 4, len(prefixes))))
    jobs = [(tape, nvars, prefix_len, part, rest) for part in parts if len(part)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            count = sum(ex.map(_count_partition, jobs))
    else:
        count = sum(map(_count_partition, jobs))
    return CountResult(*shape.as_tuple(), q, count, total_space, "VariableLevel")


def enumerate_points(shape: MatrixShape, q: int, cap: int = DEFAULT_CAP) -> list[PointAssignment]:
    """All F_q-points of the variety (small shapes only)."""
    nvars = shape.nvars
    if q**nvars > cap:
        raise CapExceeded(f"q^(mnk) = {q}^{nvars} exceeds cap {cap}")
    variables = shape.variables()
    F = PrimeField(q)
    tape = compile_tape(generate_ideal(shape).polys(), variables, q)
    prefix_len, prefixes, rest = _partition_space(q, nvars)
    out = []
    block = np.empty((len(rest), nvars), dtype=np.int64)
    block[:, prefix_len:] = rest
    for prefix in prefixes:
        block[:, :prefix_len] = prefix
        for row in _surviving_rows(tape, block):
            out.append(PointAssignment(shape, {v: int(x) for v, x in zip(variables, row)}, F))
    return out


def count_points_ringlevel(shape: MatrixShape, q: int, cap: int = DEFAULT_CAP) -> CountResult:
    """Count matrices over F_q[t]/(t^k) whose r x r minors all vanish.

    Works directly with truncated-series arithmetic; shares no code with the
    generator polynomials used by :func:`count_points`.
    """
    F = PrimeField(q)
    m, n, r, k = shape.as_tuple()
    total_space = (q**k) ** (m * n)
    if total_space > cap:
        raise CapExceeded(f"(q^k)^(mn) = {total_space} exceeds cap {cap}")
    ring = [TruncatedSeries(c, F) for c in itertools.product(range(q), repeat=k)]
    index_sets = [
        (rows, cols)
        for rows in itertools.combinations(range(m), r)
        for cols in itertools.combinations(range(n), r)
    ]
    count = 0
    for entries in itertools.product(ring, repeat=m * n):
        mat = [entries[i * n:(i + 1) * n] for i in range(m)]
        if all(
            series_det([[mat[i][j] for j in cols] for i in rows]).is_zero()
            for rows, cols in index_sets
        ):
            count += 1
    return CountResult(m, n, r, k, q, count, total_space, "RingLevel")


# -- lift -----------------------------------------------------------------------

def lift_point(
    z: PointAssignment,
    last_row: Sequence[TruncatedSeries],
    last_col: Sequence[TruncatedSeries],
) -> PointAssignment:
    """Undo the corner-pivot row reduction.

    ``z`` lives on shape (m-1, n-1, r-1, k); ``last_row`` gives x_{m,1..n} (its
    last entry is the corner, which must be a unit) and ``last_col`` gives
    x_{1..m-1,n}.  Returns x with x_{i,j} = z_{i,j} + x_{m,j} x_{i,n} / x_{m,n}.
    """
    zs = z.shape
    m, n, r, k = zs.m + 1, zs.n + 1, zs.r + 1, zs.k
    if len(last_row) != n or len(last_col) != m - 1:
        raise ValueError(f"border needs {n} last-row and {m - 1} last-column entries")
    corner = last_row[-1]
    if not corner.coeffs[0]:
        raise ValueError("corner entry is not invertible (zero constant term)")
    inv = corner.inverse()
    entries = []
    for i in range(1, m):
        row = []
        for j in range(1, n):
            row.append(z.series(i, j) + last_row[j - 1] * last_col[i - 1] * inv)
        row.append(last_col[i - 1])
        entries.append(row)
    entries.append(list(last_row))
    return PointAssignment.from_series(MatrixShape(m, n, r, k), entries)


def random_series(K: int, field: PrimeField, rng: random.Random, unit: bool = False) -> TruncatedSeries:
    coeffs = [rng.randrange(field.p) for _ in range(K)]
    if unit and coeffs[0] == 0:
        coeffs[0] = rng.randrange(1, field.p)
    return TruncatedSeries(tuple(coeffs), field)


def random_border(m: int, n: int, k: int, field: PrimeField, rng: random.Random):
    last_row = [random_series(k, field, rng) for _ in range(n - 1)]
    last_row.append(random_series(k, field, rng, unit=True))
    last_col = [random_series(k, field, rng) for _ in range(m - 1)]
    return last_row, last_col


def random_lifted_point(shape: MatrixShape, field: PrimeField, rng: random.Random) -> PointAssignment:
    """A point of Z^{m,n}_{r,k} built by r-1 lifts of the origin of shape (m-r+1, n-r+1, 1, k)."""
    m, n, r, k = shape.as_tuple()
    pt = PointAssignment.zeros(MatrixShape(m - r + 1, n - r + 1, 1, k), field)
    for step in range(1, r):
        last_row, last_col = random_border(m - r + 1 + step, n - r + 1 + step, k, field, rng)
        pt = lift_point(pt, last_row, last_col)
    return pt


# -- witnesses ----------------------------------------------------------------

def _unit(n: int, pos: int) -> list[int]:
    v = [0] * n
    v[pos - 1] = 1
    return v


def witness_separation(m: int, n: int, k: int, s: int, alpha: int, field: Field = QQ) -> PointAssignment:
    """Point in X_{s+alpha} (or Y_L when alpha = L - s) violating the AP equations of T_s.

    u_1^{(s+alpha)} = e1, u_2^{(k-s-alpha)} = e2, u_3^{(k-1-s)} = e3, all else zero.
    """
    L = k // 2
    if m < 3 or n < 3:
        raise ValueError("m >= 3 and n >= 3 required")
    if not 0 <= s < L:
        raise ValueError(f"0 <= s < floor(k/2) = {L} required")
    if not 1 <= alpha <= L - s:
        raise ValueError(f"1 <= alpha <= {L - s} required")
    shape = MatrixShape(m, n, 2, k)
    rows = {
        (1, s + alpha): _unit(n, 1),
        (2, k - s - alpha): _unit(n, 2),
        (3, k - 1 - s): _unit(n, 3),
    }
    return PointAssignment.from_rows(shape, rows, field)


def window(pt: PointAssignment, s: int) -> PointAssignment:
    """Levels s..k-1-s of ``pt`` re-indexed as a point of shape (m, n, r, k-2s)."""
    m, n, r, k = pt.shape.as_tuple()
    kk = k - 2 * s
    if kk < 1:
        raise ValueError("window is empty")
    shape = MatrixShape(m, n, r, kk)
    vals = {Var(v.i, v.j, v.l - s): x for v, x in pt.values.items() if s <= v.l < s + kk}
    return PointAssignment(shape, vals, pt.field)


def ap_values(pt: PointAssignment, rows: Sequence[int], s: int = 0, w: int | None = None):
    """Values of the AP bundles of the window T_s at ``pt``; one dict per w (or just w)."""
    win = window(pt, s)
    bundles = ap_equations(win.shape, rows)
    ws = range(len(bundles)) if w is None else [w]
    out = [{cols: poly_eval(p, win.values, pt.field) for cols, p in bundles[x].items()} for x in ws]
    return out if w is None else out[0]


def designated_ap_value(pt: PointAssignment, s: int) -> dict:
    """The AP bundle for rows (1,2,3) at w = 2(k-2s)-1 on the window of T_s."""
    return ap_values(pt, (1, 2, 3), s, 2 * (pt.shape.k - 2 * s) - 1)


class Weight(str, enum.Enum):
    BY_LEVEL = "ByLevel"      # x^(l) -> lam^l x^(l)
    BY_COLEVEL = "ByCoLevel"  # x^(l) -> lam^(k-1-l) x^(l)


def scaling_action(pt: PointAssignment, lam, rule: Weight | str = Weight.BY_LEVEL) -> PointAssignment:
    rule = Weight(rule)
    k = pt.shape.k
    lam = pt.field(lam)
    one = pt.field.one()

    def factor(l: int):
        e = l if rule is Weight.BY_LEVEL else k - 1 - l
        out = one
        for _ in range(e):
            out = out * lam
        return out

    return PointAssignment(pt.shape, {v: x * factor(v.l) for v, x in pt.values.items()}, pt.field)


def in_Y(pt: PointAssignment, s: int) -> bool:
    """Membership plus vanishing of all levels below s."""
    return all(pt.level_is_zero(l) for l in range(s)) and evaluate_membership(pt)


def in_open_X(pt: PointAssignment, s: int) -> bool:
    """pt in Y_s with some level-s coordinate nonzero (the open set whose closure is X_s)."""
    return in_Y(pt, s) and not pt.level_is_zero(s)


def X_necessary_conditions(pt: PointAssignment, s: int) -> bool:
    """Equations that hold on all of X_s (r = 2): Y_s membership plus the AP and
    wedge equations of the window T_s."""
    if not in_Y(pt, s):
        return False
    win = window(pt, s)
    m = pt.shape.m
    for rows in itertools.combinations(range(1, m + 1), 3):
        for bundle in ap_values(pt, rows, s):
            if any(bundle.values()):
                return False
    return not any(_eval_all(extra_wedge_equations(win.shape), win))


@dataclass
class IntersectionWitness:
    """A point on two census components, with a curve certifying closure membership.

    ``curve(lam)`` lies in the open part of ``curve_locus`` for lam != 0 and
    equals ``point`` at lam = 0; ``other_locus`` is a Y-stratum checked directly.
    """

    point: PointAssignment
    curve_locus: tuple[str, int]
    other_locus: tuple[str, int]
    curve: Callable[[object], PointAssignment]
    curve_degree: int


def intersection_witness(m: int, n: int, k: int, values: Mapping[tuple[int, int], int] | None = None,
                         field: Field = QQ) -> IntersectionWitness:
    """Point in the intersection of two components of Z^{m,n}_{2,k}.

    k >= 4: only the top level u^{(k-1)} is nonzero; it is in X_1 and Y_L.
    k in {2, 3}: the lam -> 0 limit of a ByCoLevel scaling of a point with
    u^{(0)} != 0; it is in X_0 and Y_1.
    """
    if k < 2:
        raise ValueError("k >= 2 required")
    shape = MatrixShape(m, n, 2, k)
    if values is None:
        values = {(i, j): (i - 1) * n + j for i in range(1, m + 1) for j in range(1, n + 1)}
    if k >= 4:
        vals = {v: 0 for v in shape.variables()}
        for (i, j), x in values.items():
            vals[Var(i, j, k - 1)] = x
        point = PointAssignment(shape, vals, field)
        direction = Var(1, 1, 1)

        def curve(lam):
            moved = dict(point.values)
            moved[direction] = moved[direction] + field(lam)
            return PointAssignment(shape, moved, field)

        return IntersectionWitness(point, ("X", 1), ("Y", k // 2), curve, 2)
    # rank one over the ring: u_i(t) = c_i * (e1 + t^{k-1} e2)
    base_rows = {}
    for i in range(1, m + 1):
        c = i
        base_rows[(i, 0)] = [c * x for x in _unit(n, 1)]
        base_rows[(i, k - 1)] = [c * x for x in _unit(n, 2)]
    base = PointAssignment.from_rows(shape, base_rows, field)

    def curve(lam):
        return scaling_action(base, lam, Weight.BY_COLEVEL)

    return IntersectionWitness(curve(0), ("X", 0), ("Y", 1), curve, 2 * (k - 1))


def verify_intersection_witness(w: IntersectionWitness) -> dict[str, bool]:
    """Membership, the Y-stratum conditions, and the curve certificate for the X locus.

    Generator values along the curve are polynomials in lam of degree at most
    ``curve_degree``; vanishing at curve_degree+1 distinct nonzero lam proves
    the whole curve lies in the variety.
    """
    _, s_x = w.curve_locus
    _, s_y = w.other_locus
    lams = [w.point.field(x) for x in range(1, w.curve_degree + 2)]
    if isinstance(w.point.field, PrimeField) and w.point.field.p <= w.curve_degree + 1:
        raise FieldMismatch("field too small for the curve certificate")
    curve_pts = [w.curve(lam) for lam in lams]
    return {
        "membership": evaluate_membership(w.point),
        f"in_Y_{s_y}": in_Y(w.point, s_y),
        "curve_at_0_is_point": w.curve(0).values == w.point.values,
        f"curve_in_open_X_{s_x}": all(in_open_X(p, s_x) for p in curve_pts),
        f"X_{s_x}_necessary_conditions": X_necessary_conditions(w.point, s_x),
    }


def verify_separation_witness(pt: PointAssignment, s: int, alpha: int) -> dict[str, bool]:
    value = designated_ap_value(pt, s)
    return {
        "membership": evaluate_membership(pt),
        f"levels_below_{s + alpha}_zero": all(pt.level_is_zero(l) for l in range(s + alpha)),
        "designated_ap_nonzero": any(value.values()),
    }


def permute_point(pt: PointAssignment, row_perm: Sequence[int], col_perm: Sequence[int]) -> PointAssignment:
    """Relabel rows/columns: entry (i, j) moves to (row_perm[i-1], col_perm[j-1])."""
    vals = {Var(row_perm[v.i - 1], col_perm[v.j - 1], v.l): x for v, x in pt.values.items()}
    return PointAssignment(pt.shape, vals, pt.field)
