"""Closed-form degree and leading coefficient of Lascoux (quasi)polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Optional, Sequence

from .combinatorics import IndexSet
from .errors import InputError


@dataclass(frozen=True)
class DegreeLC:
    degree: int
    leading_coefficient: Fraction
    # type D with 0 in I: argument parity ("even"/"odd") on which the value is nonzero
    parity_note: Optional[str] = None


def _pairs(items):
    return [(items[j], items[k]) for j in range(len(items)) for k in range(j)]


def degree_lc_C(index_set: Sequence[int]) -> DegreeLC:
    items = IndexSet(index_set)
    num = prod(a - b for a, b in _pairs(items))
    den = prod(factorial(i + 1) for i in items) * prod(a + b + 2 for a, b in _pairs(items))
    return DegreeLC(len(items) + sum(items), Fraction(num, den))


def degree_lc_A(i_set: Sequence[int], j_set: Sequence[int]) -> DegreeLC:
    items_i, items_j = IndexSet(i_set), IndexSet(j_set)
    if len(items_i) != len(items_j):
        raise InputError(f"type A needs |I| = |J|, got {len(items_i)} and {len(items_j)}")
    num = prod(a - b for a, b in _pairs(items_i)) * prod(a - b for a, b in _pairs(items_j))
    den = (prod(i + j + 1 for i in items_i for j in items_j)
           * prod(factorial(i) for i in items_i) * prod(factorial(j) for j in items_j))
    return DegreeLC(len(items_i) + sum(items_i) + sum(items_j), Fraction(num, den))


def degree_lc_D(index_set: Sequence[int]) -> DegreeLC:
    """Degree and LC in t of the branches t -> LP^D_I(2t), LP^D_I(2t+1).

    When 0 is in I the function agrees with the one for I minus 0 on
    arguments m with m - |I| even and vanishes otherwise; ``parity_note``
    names the surviving argument parity.
    """
    items = IndexSet(index_set)
    if items and items[0] == 0:
        inner = degree_lc_D(items[1:])
        return DegreeLC(inner.degree, inner.leading_coefficient,
                        "even" if len(items) % 2 == 0 else "odd")
    num = 2 ** sum(items) * prod(a - b for a, b in _pairs(items))
    den = 2 ** len(items) * prod(a + b for a, b in _pairs(items)) * prod(factorial(i) for i in items)
    return DegreeLC(sum(items), Fraction(num, den))


def degree_lc(kind: str, i_set: Sequence[int], j_set: Optional[Sequence[int]] = None) -> DegreeLC:
    if kind == "C":
        return degree_lc_C(i_set)
    if kind == "A":
        if j_set is None:
            raise InputError("type A needs J")
        return degree_lc_A(i_set, j_set)
    if kind == "D":
        return degree_lc_D(i_set)
    raise InputError(f"unknown type {kind!r}")
