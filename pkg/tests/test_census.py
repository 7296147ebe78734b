import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from truncdet.census import (
    EXACT,
    LOWER_BOUND,
    census_2xk,
    census_general,
    census_maximal,
    census_tangent,
    classical_codim,
    monotone_in_k_violations,
    variety_codim,
)


def closed_form_2x2(m, n, k):
    """Codimension of the 2x2-minor variety, odd/even k and the two special shapes."""
    if (m, n) == (3, 3):
        return 4 * k
    if (m, n) == (3, 4):
        return 6 * k
    L = k // 2
    return (m - 1) * (n - 1) + m * n * L if k % 2 else m * n * L


def test_maximal_examples():
    rep = census_maximal(2, 3, 2)
    assert rep.codims == [4] and rep.component_count == 1 and rep.count_exactness == EXACT
    assert census_maximal(4, 4, 3).variety_codim == 3
    assert census_maximal(1, 5, 3).variety_codim == 15


def test_2xk_examples():
    assert census_2xk(3, 3, 2).codims == [8, 9]
    assert census_2xk(3, 3, 2).variety_codim == 8
    rep = census_2xk(3, 4, 3)
    assert rep.codims == [18, 18]
    assert census_2xk(4, 4, 2).codims == [18, 16]
    assert census_2xk(4, 4, 2).variety_codim == 16


def test_tangent_examples():
    assert census_tangent(3, 3, 2).codims == [8, 9]
    assert census_tangent(4, 5, 3).codims == [12, 12]
    assert census_tangent(4, 4, 3).codims == [8, 9]


def test_general_hand_recursion():
    rep = census_general(4, 5, 3, 5)
    # c_0 = codim Z^{3,4}_{2,5} = 30, c_1 = codim Z^{4,5}_{3,2} = 12, plus mn = 20
    assert rep.codims == [30, 32]
    assert rep.variety_codim == 30
    assert rep.count_exactness == LOWER_BOUND and rep.component_count == 3


@pytest.mark.parametrize(
    "fn, args, msg",
    [
        (census_2xk, (2, 3, 2), "r < m"),
        (census_2xk, (4, 3, 2), "m <= n"),
        (census_2xk, (3, 3, 1), "k >= 2"),
        (census_tangent, (3, 3, 3), "r < m"),
        (census_general, (3, 3, 4, 2), "r <= m"),
        (census_general, (3, 3, 1, 2), "r >= 2"),
    ],
)
def test_preconditions(fn, args, msg):
    with pytest.raises(ValueError, match=msg):
        fn(*args)


grid_2x2 = st.tuples(st.integers(3, 6), st.integers(0, 3), st.integers(2, 8)).map(
    lambda t: (t[0], t[0] + t[1], t[2])
)


@given(grid_2x2)
def test_general_agrees_with_2xk(shape):
    m, n, k = shape
    a, b = census_general(m, n, 2, k), census_2xk(m, n, k)
    assert a.codims == b.codims
    assert a.component_count == b.component_count == 1 + k // 2
    assert a.count_exactness == EXACT


@given(grid_2x2)
def test_closed_forms(shape):
    m, n, k = shape
    assert census_2xk(m, n, k).variety_codim == closed_form_2x2(m, n, k)


@given(st.integers(2, 5), st.integers(2, 6), st.integers(1, 7))
def test_report_invariants(r, m, k):
    m = max(m, r)
    n = m + 1
    rep = census_general(m, n, r, k)
    assert rep.variety_codim == min(rep.codims)
    assert all(0 <= c <= m * n * k for c in rep.codims)
    assert rep.variety_codim == variety_codim(m, n, r, k)


def test_k_below_r_reduces():
    for m, n, r, k in [(4, 4, 3, 2), (5, 6, 4, 3), (5, 5, 4, 2), (6, 7, 5, 4)]:
        a, b = census_general(m, n, r, k), census_general(m - 1, n - 1, r - 1, k)
        assert a.codims == b.codims and a.count_exactness == b.count_exactness


def test_k_equals_one_is_classical():
    for m, n, r in [(3, 3, 2), (4, 6, 3), (5, 5, 5)]:
        assert census_general(m, n, r, 1).variety_codim == classical_codim(m, n, r)


def test_monotone_soft_check_logs(caplog):
    with caplog.at_level(logging.WARNING):
        bad = monotone_in_k_violations(3, 3, 2, 6)
    assert bad == []
    assert monotone_in_k_violations(4, 5, 3, 6) == [
        k for k in range(2, 7) if variety_codim(4, 5, 3, k) < variety_codim(4, 5, 3, k - 1)
    ]


def test_to_dict_shape():
    d = census_general(3, 3, 2, 2).to_dict()
    assert d["shape"] == {"m": 3, "n": 3, "r": 2, "k": 2}
    assert d["variety_codim"] == 8
    assert [c["codim"] for c in d["components"]] == [8, 9]
