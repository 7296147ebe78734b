from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from truncdet.algebra import (
    QQ,
    FieldMismatch,
    Mod,
    NotInvertible,
    PrimeField,
    TruncatedSeries,
    TruncationMismatch,
    is_prime,
    series_det,
    series_inv,
    series_mul,
)

F5 = PrimeField(5)


def S(coeffs, field=QQ):
    return TruncatedSeries(tuple(coeffs), field)


# -- scalars --------------------------------------------------------------------

def test_is_prime_against_trial_division():
    slow = lambda n: n >= 2 and all(n % d for d in range(2, n))
    assert [n for n in range(200) if is_prime(n)] == [n for n in range(200) if slow(n)]


@pytest.mark.parametrize("p", [0, 1, 4, 9, 2**31 - 1 + 1, 2**31 + 11])
def test_prime_field_rejects(p):
    with pytest.raises(ValueError):
        PrimeField(p)


def test_prime_field_largest_allowed():
    F = PrimeField(2**31 - 1)
    assert F(-1) == F(2**31 - 2)


def test_mod_identities_and_inverse():
    for a in range(1, 7):
        x = Mod(a, 7)
        assert x * (1 / x) == Mod(1, 7)
        assert x + 0 == x and x * 1 == x
        assert x - x == Mod(0, 7)


def test_mod_mixing_fields_raises():
    with pytest.raises(FieldMismatch):
        Mod(1, 5) + Mod(1, 7)


def test_mod_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Mod(3, 5) / Mod(0, 5)


def test_rationals_exact():
    assert QQ(1) / QQ(3) * 3 == 1
    assert isinstance(QQ("2/3"), Fraction)


# -- series ---------------------------------------------------------------------

@pytest.mark.parametrize(
    "a, b, K, expected",
    [
        ((1, 1), (1, 1), 2, (1, 2)),
        ((0, 1, 0), (0, 1, 0), 3, (0, 0, 1)),
        ((1, 1, 1), (1, -1, 0), 3, (1, 0, 0)),
    ],
)
def test_series_mul_examples(a, b, K, expected):
    assert series_mul(S(a), S(b)).coeffs == expected


@pytest.mark.parametrize(
    "a, expected",
    [((1, 1, 0), (1, -1, 1)), ((2, 0), (Fraction(1, 2), 0)), ((1, 1, 1), (1, -1, 0))],
)
def test_series_inv_examples(a, expected):
    assert series_inv(S(a)).coeffs == expected


def test_inv_zero_constant_raises():
    with pytest.raises(NotInvertible):
        S((0, 1, 2)).inverse()


def test_truncation_mismatch():
    with pytest.raises(TruncationMismatch):
        S((1, 2)) + S((1, 2, 3))


def test_series_field_mismatch():
    with pytest.raises(FieldMismatch):
        S((1, 2), F5) * S((1, 2), PrimeField(7))


def test_of_pads_and_truncates():
    assert TruncatedSeries.of([1, 2, 3], 2).coeffs == (1, 2)
    assert TruncatedSeries.of([4], 3).coeffs == (4, 0, 0)


coeff = st.integers(-6, 6)


def series_pair(K):
    return st.tuples(st.lists(coeff, min_size=K, max_size=K), st.lists(coeff, min_size=K, max_size=K))


@given(st.integers(1, 6).flatmap(lambda K: series_pair(K)))
def test_mul_matches_numpy_convolution(pair):
    a, b = pair
    K = len(a)
    expected = tuple(int(x) for x in np.convolve(a, b)[:K])
    assert series_mul(S(a), S(b)).coeffs == expected


@given(st.integers(1, 5).flatmap(lambda K: st.lists(coeff, min_size=K, max_size=K)))
def test_inverse_is_two_sided(a):
    if a[0] == 0:
        a[0] = 1
    x = S(a)
    one = TruncatedSeries.constant(1, len(a))
    assert x * x.inverse() == one
    assert x.inverse() * x == one


@given(st.integers(1, 4).flatmap(lambda K: st.lists(st.integers(0, 4), min_size=3 * K, max_size=3 * K)))
def test_ring_axioms_over_F5(flat):
    K = len(flat) // 3
    a, b, c = (S(flat[i * K:(i + 1) * K], F5) for i in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


def test_series_det_two_by_two_by_hand():
    # det [[1+t, t], [2, 1]] = 1 + t - 2t = 1 - t
    M = [[S((1, 1)), S((0, 1))], [S((2, 0)), S((1, 0))]]
    assert series_det(M).coeffs == (1, -1)


@given(st.integers(1, 3), st.lists(st.integers(0, 4), min_size=27, max_size=27))
def test_series_det_multiplicative(K, raw):
    A = [[S([raw[(3 * i + j + s) % 27] for s in range(K)], F5) for j in range(3)] for i in range(3)]
    B = [[S([raw[(5 * i + 7 * j + 2 * s + 1) % 27] for s in range(K)], F5) for j in range(3)] for i in range(3)]
    AB = [[A[i][0] * B[0][j] + A[i][1] * B[1][j] + A[i][2] * B[2][j] for j in range(3)] for i in range(3)]
    assert series_det(AB) == series_det(A) * series_det(B)
