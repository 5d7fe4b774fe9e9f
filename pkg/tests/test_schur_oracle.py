import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from lascoux.combinatorics import IndexSet, index_set_of_partition, psi_via_minors
from lascoux.errors import InputError, ResourceError
from lascoux.schur_oracle import (OracleBudget, alpha_oracle, alpha_two_element, complete_homogeneous,
                                  d_oracle, expand_pairsum_power, form_values, psi_oracle, schur_eval)

WIDE = OracleBudget(max_degree=20)


def _rand_points(rng, count):
    pts = set()
    while len(pts) < count:
        pts.add(Fraction(rng.randint(-30, 30), rng.randint(1, 9)))
    return sorted(pts)


def test_schur_eval_examples():
    a, b = Fraction(3, 7), Fraction(-2, 5)
    assert schur_eval((), [a, b]) == 1
    assert schur_eval((1, 0), [a, b]) == a + b
    assert schur_eval((1, 1), [a, b]) == a * b
    # h_2 in two variables
    assert schur_eval((2,), [a, b]) == a * a + a * b + b * b


def test_schur_eval_repeated_points():
    with pytest.raises(InputError):
        schur_eval((1,), [1, 1])


def test_type_c_single_variable():
    for m in range(1, 9):
        exp = expand_pairsum_power("C", m - 1, 1)
        assert exp.coefficients == {(m - 1,): 2 ** (m - 1)}


def test_type_a_one_by_one_is_binomial():
    for d in range(8):
        exp = expand_pairsum_power("A", d, 1, 1)
        assert exp.coefficients == {((i,), (d - i,)): comb(d, i) for i in range(d + 1)}


def test_type_d_two_variables_degree_one():
    exp = expand_pairsum_power("D", 1, 2)
    assert exp.coefficients == {(1, 0): 1}
    assert alpha_two_element(0, 2) == 1


def test_coefficient_examples():
    assert psi_oracle((1,)) == 2
    assert d_oracle((0,), (1,)) == 1
    assert alpha_oracle((1, 2)) == 1


@pytest.mark.parametrize("kind, d, k, l", [
    ("C", 4, 3, 0), ("C", 6, 2, 0), ("D", 5, 4, 0), ("D", 6, 3, 0), ("A", 4, 2, 2), ("A", 3, 3, 1),
])
def test_full_expansion_matches_targeted_reads(kind, d, k, l):
    exp = expand_pairsum_power(kind, d, k, l)
    assert all(isinstance(c, int) and c >= 0 for c in exp.coefficients.values())
    assert not exp.negative_entries
    if kind == "A":
        for (lam, mu), c in exp.coefficients.items():
            assert d_oracle(index_set_of_partition(lam), index_set_of_partition(mu)) == c
    else:
        oracle = psi_oracle if kind == "C" else alpha_oracle
        for lam, c in exp.coefficients.items():
            assert oracle(index_set_of_partition(lam)) == c


@pytest.mark.parametrize("kind, d, k, l", [("C", 4, 3, 0), ("D", 4, 4, 0), ("A", 3, 2, 2), ("A", 4, 2, 1)])
def test_expansion_reproduces_lhs_at_random_points(kind, d, k, l):
    exp = expand_pairsum_power(kind, d, k, l)
    rng = random.Random(f"{kind}{d}{k}{l}")
    for _ in range(5):
        xs = _rand_points(rng, k)
        ys = _rand_points(rng, l) if kind == "A" else []
        lhs = complete_homogeneous(d, form_values(kind, xs, ys))
        rhs = exp.evaluate(xs, ys) if kind == "A" else exp.evaluate(xs)
        assert lhs == rhs


def test_psi_oracle_matches_minors():
    for r in range(5):
        for i_set in combinations(range(7), r):
            assert psi_oracle(i_set, WIDE) == psi_via_minors(i_set)


def test_d_oracle_symmetric():
    for r in range(3):
        for i_set in combinations(range(5), r):
            for j_set in combinations(range(5), r):
                assert d_oracle(i_set, j_set, WIDE) == d_oracle(j_set, i_set, WIDE) >= 0


def test_alpha_two_element_formula():
    for i in range(7):
        for j in range(i + 1, 7):
            assert alpha_oracle((i, j), WIDE) == alpha_two_element(i, j)


def test_budget_exceeded():
    with pytest.raises(ResourceError):
        psi_oracle((5, 9))  # degree 13 > 12
    with pytest.raises(ResourceError):
        alpha_oracle(IndexSet(range(7)))
    with pytest.raises(ResourceError):
        expand_pairsum_power("C", 13, 1)
    assert psi_oracle((5, 9), WIDE) == psi_via_minors((5, 9))


def test_unknown_type():
    with pytest.raises(InputError):
        expand_pairsum_power("B", 1, 1)
