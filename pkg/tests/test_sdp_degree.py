from fractions import Fraction
from math import factorial

import pytest

from lascoux.combinatorics import psi_via_minors
from lascoux.errors import InputError
from lascoux.polynomials import lp_value_C
from lascoux.sdp_degree import (DeltaQuery, degree_threshold, delta_polynomial, delta_terms, delta_value,
                                lc_delta_s1)


@pytest.mark.parametrize("n", range(2, 9))
def test_m1_is_n(n):
    assert delta_value(DeltaQuery("C", 1, n, n - 1)) == n


def test_m2_n3():
    assert delta_value(DeltaQuery("C", 2, 3, 2)) == 6 == psi_via_minors((1,)) * lp_value_C((1,), 3)


@pytest.mark.parametrize("n", range(3, 9))
def test_below_threshold_is_zero(n):
    q = DeltaQuery("C", 2, n, n - 2)
    assert delta_terms(q) == []
    assert delta_value(q) == 0


def test_polynomial_examples():
    assert delta_polynomial("C", 1, 1).coefficients == (0, 1)
    assert delta_polynomial("C", 2, 1).coefficients == (0, -1, 1)


@pytest.mark.parametrize("m", range(1, 7))
def test_type_c_s1_leading_coefficient(m):
    assert delta_polynomial("C", m, 1).leading_coefficient == Fraction(2 ** (m - 1), factorial(m))


@pytest.mark.parametrize("kind, m, expected", [("C", 1, 1), ("A", 2, 1), ("D", 2, 1), ("C", 3, Fraction(2, 3))])
def test_lc_closed_forms(kind, m, expected):
    assert lc_delta_s1(kind, m) == expected


def test_single_term_identity():
    for m in range(1, 7):
        for n in range(2, 9):
            expected = psi_via_minors((m - 1,)) * lp_value_C((m - 1,), n)
            assert delta_value(DeltaQuery("C", m, n, n - 1)) == expected


def test_values_nonnegative():
    for kind in "CAD":
        for s in (1, 2):
            for m in range(1, 6):
                for n in range(s + 1, 7):
                    assert delta_value(DeltaQuery(kind, m, n, n - s)) >= 0


def test_thresholds():
    assert [degree_threshold("C", s) for s in (1, 2, 3)] == [1, 3, 6]
    assert [degree_threshold("A", s) for s in (1, 2, 3)] == [1, 4, 9]
    assert [degree_threshold("D", s) for s in (1, 2, 3)] == [1, 6, 15]


def test_type_d_s2_at_threshold():
    p = delta_polynomial("D", 6, 2)
    assert p.degree == 6


def test_query_validation():
    with pytest.raises(InputError):
        DeltaQuery("C", 1, 3, 3)
    with pytest.raises(InputError):
        DeltaQuery("C", 0, 3, 2)
    with pytest.raises(InputError):
        DeltaQuery("Q", 1, 3, 2)
