"""Lascoux polynomials of types C, A and D from their recurrences.

Values are zero whenever the index set does not fit in [n]. Otherwise they
are built from the empty set (value 1) by two moves: a set containing 0 is
reduced to smaller sets at the same ``n``, and a set avoiding 0 accumulates
its shifted neighbours at ``n - 1`` starting from ``n = max(I)``, where the
value is zero.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence, Union

from .algebra import QuasiPolynomial2, RationalPolynomial, poly_eval, poly_from_samples
from .asymptotics import DegreeLC, degree_lc
from .combinatorics import IndexSet, parse_index_set
from .errors import ConsistencyError, InputError

Key = tuple  # (kind, I, J, n) with I, J plain tuples


class LascouxMemo:
    """Value table shared by all recurrence calls.

    Reads are lock-free; writes are serialized. Two threads computing the
    same key store the same value, so races are harmless.
    """

    def __init__(self):
        self._table: dict[Key, int] = {}
        self._lock = threading.Lock()

    def get(self, key: Key):
        return self._table.get(key)

    def put(self, key: Key, value: int):
        with self._lock:
            self._table[key] = value

    def update(self, entries: dict):
        with self._lock:
            self._table.update(entries)

    def clear(self):
        with self._lock:
            self._table.clear()

    def items(self):
        return list(self._table.items())

    def __len__(self):
        return len(self._table)

    def __contains__(self, key):
        return key in self._table


DEFAULT_MEMO = LascouxMemo()


def format_key(key: Key) -> str:
    """Canonical cache key, e.g. ``C|I=0,2|n=5`` or ``A|I=1|J=0|n=3``."""
    kind, i_set, j_set, n = key
    parts = [kind, "I=" + ",".join(map(str, i_set))]
    if kind == "A":
        parts.append("J=" + ",".join(map(str, j_set)))
    parts.append(f"n={n}")
    return "|".join(parts)


def parse_key(text: str) -> Key:
    fields = text.split("|")
    try:
        kind = fields[0]
        if kind not in ("C", "A", "D"):
            raise ValueError(kind)
        expect = 4 if kind == "A" else 3
        if len(fields) != expect or not fields[1].startswith("I=") or not fields[-1].startswith("n="):
            raise ValueError(text)
        i_set = tuple(parse_index_set(fields[1][2:]))
        j_set = ()
        if kind == "A":
            if not fields[2].startswith("J="):
                raise ValueError(text)
            j_set = tuple(parse_index_set(fields[2][2:]))
        n = int(fields[-1][2:])
    except (ValueError, InputError) as exc:
        raise InputError(f"malformed cache key {text!r}") from exc
    return (kind, i_set, j_set, n)


def _increasing(items: tuple) -> bool:
    return all(a < b for a, b in zip(items, items[1:])) and (not items or items[0] >= 0)


def _shifts(items: tuple):
    """All I - eps, eps in {0,1}^r nonzero, that stay strictly increasing and nonnegative."""
    out = []
    for eps in product((0, 1), repeat=len(items)):
        if any(eps):
            shifted = tuple(i - e for i, e in zip(items, eps))
            if _increasing(shifted):
                out.append(shifted)
    return out


def _raise_one(rest: tuple, l: int):
    """Replace rest[l] by rest[l] + 1 when that keeps the set repeat-free."""
    if l + 1 < len(rest) and rest[l + 1] == rest[l] + 1:
        return None
    return rest[:l] + (rest[l] + 1,) + rest[l + 1:]


def _accumulate(kind, i_set, j_set, n, memo, step):
    """Sum the n-step recurrence from the last vanishing argument up to n."""
    start = max(i_set[-1] if i_set else -1, j_set[-1] if j_set else -1)
    value, t = 0, start
    # resume from the highest memoized argument below n
    if memo is not None:
        for s in range(n - 1, start, -1):
            hit = memo.get((kind, i_set, j_set, s))
            if hit is not None:
                value, t = hit, s
                break
    for t in range(t + 1, n + 1):
        value += step(t - 1)
        if memo is not None:
            memo.put((kind, i_set, j_set, t), value)
    return value


def _lp_c(i_set: tuple, n: int, memo) -> int:
    if i_set and i_set[-1] >= n:
        return 0
    if not i_set:
        return 1
    key = ("C", i_set, (), n)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    if i_set[0] == 0:
        r, rest = len(i_set), i_set[1:]
        value = (n - r + 1) * _lp_c(rest, n, memo)
        for l in range(len(rest)):
            raised = _raise_one(rest, l)
            if raised is not None:
                value -= 2 * _lp_c(raised, n, memo)
        if memo is not None:
            memo.put(key, value)
        return value
    shifts = _shifts(i_set)
    return _accumulate("C", i_set, (), n, memo,
                       lambda m: sum(_lp_c(s, m, memo) for s in shifts))


def _lp_a(i_set: tuple, j_set: tuple, n: int, memo) -> int:
    if (i_set and i_set[-1] >= n) or (j_set and j_set[-1] >= n):
        return 0
    if not i_set:
        return 1
    key = ("A", i_set, j_set, n)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    if i_set[0] == 0 and j_set[0] == 0:
        r, rest_i, rest_j = len(i_set), i_set[1:], j_set[1:]
        value = (n - r + 1) * _lp_a(rest_i, rest_j, n, memo)
        for l in range(len(rest_i)):
            raised = _raise_one(rest_i, l)
            if raised is not None:
                value -= _lp_a(raised, rest_j, n, memo)
        for l in range(len(rest_j)):
            raised = _raise_one(rest_j, l)
            if raised is not None:
                value -= _lp_a(rest_i, raised, n, memo)
        if memo is not None:
            memo.put(key, value)
        return value
    shifts_i = [i_set] + _shifts(i_set)
    shifts_j = [j_set] + _shifts(j_set)
    pairs = [(a, b) for a in shifts_i for b in shifts_j if (a, b) != (i_set, j_set)]
    return _accumulate("A", i_set, j_set, n, memo,
                       lambda m: sum(_lp_a(a, b, m, memo) for a, b in pairs))


def _lp_d(i_set: tuple, n: int, memo) -> int:
    if i_set and i_set[-1] >= n:
        return 0
    if not i_set:
        return 1
    if i_set[0] == 0:
        return _lp_d(i_set[1:], n, memo) if (n - len(i_set)) % 2 == 0 else 0
    key = ("D", i_set, (), n)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    shifts = _shifts(i_set)
    return _accumulate("D", i_set, (), n, memo,
                       lambda m: sum(_lp_d(s, m, memo) for s in shifts))


def _check_n(n: int):
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")


def lp_value_C(index_set: Sequence[int], n: int, memo: Optional[LascouxMemo] = DEFAULT_MEMO) -> int:
    """LP_I(n) = psi of [n] minus I (0 unless I is inside [n])."""
    _check_n(n)
    return _lp_c(tuple(IndexSet(index_set)), n, memo)


def lp_value_A(i_set: Sequence[int], j_set: Sequence[int], n: int,
               memo: Optional[LascouxMemo] = DEFAULT_MEMO) -> int:
    """LP^A_{I,J}(n) = d of the complements of I and J in [n]."""
    i_set, j_set = tuple(IndexSet(i_set)), tuple(IndexSet(j_set))
    if len(i_set) != len(j_set):
        raise InputError(f"type A needs |I| = |J|, got {len(i_set)} and {len(j_set)}")
    _check_n(n)
    return _lp_a(i_set, j_set, n, memo)


def lp_value_D(index_set: Sequence[int], n: int, memo: Optional[LascouxMemo] = DEFAULT_MEMO) -> int:
    """LP^D_I(n) = alpha of [n] minus I (0 unless I is inside [n])."""
    _check_n(n)
    return _lp_d(tuple(IndexSet(index_set)), n, memo)


def lp_value(kind: str, i_set, n: int, j_set=None, memo: Optional[LascouxMemo] = DEFAULT_MEMO) -> int:
    if kind == "C":
        return lp_value_C(i_set, n, memo)
    if kind == "A":
        if j_set is None:
            raise InputError("type A needs J")
        return lp_value_A(i_set, j_set, n, memo)
    if kind == "D":
        return lp_value_D(i_set, n, memo)
    raise InputError(f"unknown type {kind!r}")


def recompute(key: Key) -> int:
    """Evaluate a cache key from scratch (fresh memo)."""
    kind, i_set, j_set, n = key
    return lp_value(kind, i_set, n, j_set, memo=LascouxMemo())


@dataclass(frozen=True)
class LascouxPolynomial:
    kind: str
    i_set: IndexSet
    j_set: Optional[IndexSet]
    body: Union[RationalPolynomial, QuasiPolynomial2]
    expected: DegreeLC
    # smallest argument from which the polynomial matches the function
    validity_floor: int
    verified_up_to: int

    def __call__(self, n: int):
        return self.body(n)


def _agreement_floor(func, poly, anchor: int) -> int:
    floor = anchor
    for m in range(anchor - 1, -1, -1):
        if poly(m) != func(m):
            break
        floor = m
    return floor


def lp_polynomial(kind: str, i_set: Sequence[int], j_set: Optional[Sequence[int]] = None,
                  extra_points: int = 3, memo: Optional[LascouxMemo] = DEFAULT_MEMO) -> LascouxPolynomial:
    """Interpolate LP from recurrence values and check it against the closed forms.

    Raises :class:`ConsistencyError` if the extra points leave the
    interpolant or the degree / leading coefficient differ from
    :mod:`lascoux.asymptotics`.
    """
    i_set = IndexSet(i_set)
    j_set = IndexSet(j_set) if j_set is not None else None
    if kind == "A" and j_set is None:
        raise InputError("type A needs J")
    if kind != "A":
        j_set = None
    expected = degree_lc(kind, i_set, j_set)
    anchor = max(list(i_set) + list(j_set or ()), default=-1) + 1

    def func(m):
        return lp_value(kind, i_set, m, j_set, memo)

    deg = expected.degree
    count = deg + 1 + extra_points
    if kind in ("C", "A"):
        args = range(anchor, anchor + count)
        body = poly_from_samples([(m, func(m)) for m in args], deg)
        if body.degree != deg or body.leading_coefficient != expected.leading_coefficient:
            raise ConsistencyError(
                f"LP^{kind} {i_set} {j_set or ''}: interpolated degree {body.degree}, "
                f"LC {body.leading_coefficient}; closed form says {deg}, {expected.leading_coefficient}")
        top = args[-1]
    else:
        t_even = (anchor + 1) // 2
        t_odd = max(0, anchor // 2)
        even = poly_from_samples([(t, func(2 * t)) for t in range(t_even, t_even + count)], deg)
        odd = poly_from_samples([(t, func(2 * t + 1)) for t in range(t_odd, t_odd + count)], deg)
        body = QuasiPolynomial2(even, odd)
        for parity, branch in (("even", even), ("odd", odd)):
            alive = expected.parity_note in (None, parity)
            ok = (branch.degree == deg and branch.leading_coefficient == expected.leading_coefficient) \
                if alive else branch.is_zero
            if not ok:
                raise ConsistencyError(
                    f"LP^D {i_set} {parity} branch: degree {branch.degree}, LC "
                    f"{branch.leading_coefficient}; closed form says "
                    f"{deg if alive else 'zero'}, {expected.leading_coefficient if alive else 0}")
        top = max(2 * (t_even + count - 1), 2 * (t_odd + count - 1) + 1)
    floor = _agreement_floor(func, body, anchor)
    return LascouxPolynomial(kind, i_set, j_set, body, expected, floor, top)
