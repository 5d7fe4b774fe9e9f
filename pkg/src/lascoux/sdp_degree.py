"""Algebraic degree of semidefinite programming and its type A / D analogues.

All three are finite sums of (Lascoux coefficient) x (Lascoux polynomial
value) over index sets of prescribed size and sum. An empty sum gives 0,
which is how "the dual is not a hypersurface" shows up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .algebra import RationalPolynomial, poly_from_samples
from .combinatorics import IndexSet, psi_via_minors, subsets_with_sum
from .errors import ConsistencyError, InputError, ResourceError
from .polynomials import DEFAULT_MEMO, LascouxMemo, lp_value_A, lp_value_C, lp_value_D
from .schur_oracle import DEFAULT_BUDGET, OracleBudget, alpha_oracle, alpha_two_element, d_oracle


@dataclass(frozen=True)
class DeltaQuery:
    kind: str
    m: int
    n: int
    r: int

    def __post_init__(self):
        if self.kind not in ("C", "A", "D"):
            raise InputError(f"unknown type {self.kind!r}")
        if self.m < 1 or self.n < 1:
            raise InputError(f"need m, n >= 1, got m={self.m}, n={self.n}")
        if not 0 < self.r < self.n:
            raise InputError(f"need 0 < r < n, got r={self.r}, n={self.n}")

    @property
    def s(self) -> int:
        return self.n - self.r


def delta_terms(q: DeltaQuery, budget: OracleBudget = DEFAULT_BUDGET,
                memo: Optional[LascouxMemo] = DEFAULT_MEMO) -> list:
    """(index set(s), coefficient, LP value) for every summand."""
    s = q.s
    terms = []
    try:
        if q.kind == "C":
            for i_set in subsets_with_sum(q.n, s, q.m - s):
                terms.append(((i_set,), psi_via_minors(i_set), lp_value_C(i_set, q.n, memo)))
        elif q.kind == "A":
            for sum_i in range(q.m - s + 1):
                for i_set in subsets_with_sum(q.n, s, sum_i):
                    for j_set in subsets_with_sum(q.n, s, q.m - s - sum_i):
                        coeff = d_oracle(i_set, j_set, budget)
                        terms.append(((i_set, j_set), coeff, lp_value_A(i_set, j_set, q.n, memo)))
        else:
            for i_set in subsets_with_sum(2 * q.n, 2 * s, q.m):
                coeff = alpha_two_element(*i_set) if len(i_set) == 2 else alpha_oracle(i_set, budget)
                terms.append(((i_set,), coeff, lp_value_D(i_set, 2 * q.n, memo)))
    except ResourceError as exc:
        raise ResourceError(f"{q}: {exc}") from exc
    return terms


def delta_value(q: DeltaQuery, budget: OracleBudget = DEFAULT_BUDGET,
                memo: Optional[LascouxMemo] = DEFAULT_MEMO) -> int:
    """delta(m, n, r) for types C and A; delta_D(m, n, r) (2n x 2n skew matrices) for D."""
    return sum(c * v for _, c, v in delta_terms(q, budget, memo))


def degree_threshold(kind: str, s: int) -> int:
    """Smallest m for which delta(m, n, n - s) is known to have degree m."""
    if kind == "C":
        return comb(s + 1, 2)
    if kind == "A":
        return s * s
    if kind == "D":
        return comb(2 * s, 2)
    raise InputError(f"unknown type {kind!r}")


def _first_admissible_n(kind: str, m: int, s: int) -> int:
    # every index set in the sum must fit and r = n - s must stay positive
    if kind == "C":
        top = m - s - s * (s - 1) // 2 + (s - 1)
        return max(s + 1, top + 1)
    if kind == "A":
        top = m - s - 2 * (s * (s - 1) // 2) + (s - 1)
        return max(s + 1, top + 1)
    top = m - (2 * s) * (2 * s - 1) // 2 + (2 * s - 1)
    return max(s + 1, (top + 2) // 2)


def delta_polynomial(kind: str, m: int, s: int, extra_points: int = 2,
                     budget: OracleBudget = DEFAULT_BUDGET,
                     memo: Optional[LascouxMemo] = DEFAULT_MEMO) -> RationalPolynomial:
    """n -> delta(m, n, n - s) as an exact polynomial of degree <= m."""
    if m < 1 or s < 1:
        raise InputError(f"need m, s >= 1, got m={m}, s={s}")
    n0 = _first_admissible_n(kind, m, s)
    samples = [(n, delta_value(DeltaQuery(kind, m, n, n - s), budget, memo))
               for n in range(n0, n0 + m + 1 + extra_points)]
    poly = poly_from_samples(samples, m)
    if m >= degree_threshold(kind, s) and poly.degree != m:
        raise ConsistencyError(f"delta_{kind}({m}, n, n-{s}) has degree {poly.degree}, expected {m}")
    return poly


def lc_delta_s1(kind: str, m: int) -> Fraction:
    """Leading coefficient of n -> delta(m, n, n - 1)."""
    if m < 1:
        raise InputError(f"need m >= 1, got {m}")
    central = comb(2 * (m - 1), m - 1)
    if kind == "C":
        return Fraction(2 ** (m - 1), factorial(m))
    if kind == "A":
        return Fraction(central, factorial(m))
    if kind == "D":
        return Fraction(2 ** m, 4 * factorial(m)) * (Fraction(central, m) + 1)
    raise InputError(f"unknown type {kind!r}")
