"""Index sets, partitions and Pascal-matrix minors."""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import InputError


class IndexSet(tuple):
    """Strictly increasing tuple of nonnegative integers."""

    def __new__(cls, elements: Iterable[int] = ()):
        if isinstance(elements, IndexSet):
            return elements
        items = tuple(int(e) for e in elements)
        for a, b in zip(items, items[1:]):
            if a >= b:
                raise InputError(f"index set must be strictly increasing: {items}")
        if items and items[0] < 0:
            raise InputError(f"index set must be nonnegative: {items}")
        return super().__new__(cls, items)

    @property
    def size(self) -> int:
        return len(self)

    @property
    def total(self) -> int:
        return sum(self)

    def fits(self, n: int) -> bool:
        """True when the set is contained in [n] = {0, ..., n-1}."""
        return not self or self[-1] < n

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


class Partition(tuple):
    """Nonincreasing tuple of nonnegative integers (trailing zeros allowed)."""

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        items = tuple(int(p) for p in parts)
        for a, b in zip(items, items[1:]):
            if a < b:
                raise InputError(f"partition must be nonincreasing: {items}")
        if items and items[-1] < 0:
            raise InputError(f"partition must be nonnegative: {items}")
        return super().__new__(cls, items)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)


def parse_index_set(text: str) -> IndexSet:
    """Parse ``"0,2,5"`` (empty string or ``"{}"`` for the empty set)."""
    text = text.strip().strip("{}[]() ")
    if not text:
        return IndexSet()
    try:
        return IndexSet(int(t) for t in text.split(","))
    except ValueError as exc:
        raise InputError(f"cannot parse index set {text!r}") from exc


def complement(index_set: Sequence[int], n: int) -> IndexSet:
    """[n] minus the given set."""
    drop = set(index_set)
    return IndexSet(i for i in range(n) if i not in drop)


def partition_of_index_set(index_set: Sequence[int]) -> Partition:
    """lambda(I) = (i_r - (r-1), ..., i_2 - 1, i_1)."""
    items = IndexSet(index_set)
    return Partition(i - k for k, i in reversed(list(enumerate(items))))


def index_set_of_partition(partition: Sequence[int]) -> IndexSet:
    """Inverse of :func:`partition_of_index_set` (length is preserved)."""
    parts = Partition(partition)
    r = len(parts)
    return IndexSet(parts[r - 1 - k] + k for k in range(r))


def subsets_with_sum(universe: int, size: int, total: int, start: int = 0) -> Iterator[IndexSet]:
    """All subsets of [universe] of the given size and element sum, in lex order."""

    def rec(lo: int, size: int, total: int, prefix: tuple):
        if size == 0:
            if total == 0:
                yield IndexSet(prefix)
            return
        # the smallest possible sum of `size` elements >= lo
        for x in range(lo, universe):
            if x * size + size * (size - 1) // 2 > total:
                break
            yield from rec(x + 1, size - 1, total - x, prefix + (x,))

    yield from rec(start, size, total, ())


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination over the integers."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def pascal_minor(rows: Sequence[int], cols: Sequence[int]) -> int:
    """det of the submatrix of E = (binom(i, j)) on the given rows and columns."""
    rows, cols = IndexSet(rows), IndexSet(cols)
    if len(rows) != len(cols):
        raise InputError(f"minor needs |I| = |J|, got {len(rows)} and {len(cols)}")
    return bareiss_det([[comb(i, j) for j in cols] for i in rows])


def _dominated_sets(index_set: IndexSet) -> Iterator[tuple]:
    """Strictly increasing J with j_k <= i_k for every position k."""

    def rec(k: int, lo: int, prefix: tuple):
        if k == len(index_set):
            yield prefix
            return
        for j in range(lo, index_set[k] + 1):
            yield from rec(k + 1, j + 1, prefix + (j,))

    yield from rec(0, 0, ())


def psi_via_minors(index_set: Sequence[int], prune: bool = True) -> int:
    """Lascoux coefficient as the sum of all r x r Pascal minors on rows I.

    With ``prune`` only columns J dominated position-wise by I are visited;
    every other minor vanishes because E is lower triangular. ``prune=False``
    walks all r-subsets of [max(I) + 1] instead.
    """
    items = IndexSet(index_set)
    if not items:
        return 1
    if prune:
        candidates = _dominated_sets(items)
    else:
        candidates = combinations(range(items[-1] + 1), len(items))
    return sum(pascal_minor(items, cols) for cols in candidates)
