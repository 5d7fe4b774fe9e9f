"""Lascoux coefficients read directly off Schur expansions.

The left-hand side ``s_(d)`` of a multiset of linear forms equals the
complete homogeneous polynomial ``h_d`` of those forms. It is expanded into
monomials by iterating ``H <- H / (1 - L)`` over the forms and keeping the
degree-``d`` part. Multiplying by the Vandermonde determinant gives the
numerator alternant, whose coefficient at the strictly decreasing exponent
``lambda + delta`` is the Schur coefficient of ``s_lambda``.

Single-coefficient queries only need monomials below ``lambda + delta``
coordinate-wise, so they truncate the expansion to that box. This keeps them
cheap far beyond the budget needed for a complete expansion.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Optional, Sequence

from .combinatorics import IndexSet, Partition, partition_of_index_set
from .errors import InputError, ResourceError

logger = logging.getLogger(__name__)

MonomialExpansion = dict  # exponent tuple -> int | Fraction, zero coefficients dropped

TYPES = ("C", "A", "D")


@dataclass(frozen=True)
class OracleBudget:
    max_vars: int = 6
    max_degree: int = 12
    max_monomials: int = 2_000_000


DEFAULT_BUDGET = OracleBudget()


@dataclass
class SchurExpansion:
    """Schur-basis coefficients of ``s_(d)`` of pairwise sums.

    For types C and D the keys are partitions with at most ``nvars[0]`` parts.
    For type A they are pairs ``(lambda, mu)`` for ``s_lambda(X) s_mu(Y)``.
    """

    kind: str
    degree: int
    nvars: tuple
    coefficients: dict = field(default_factory=dict)

    def __getitem__(self, key) -> int:
        return self.coefficients.get(key, 0)

    @property
    def negative_entries(self) -> dict:
        return {k: c for k, c in self.coefficients.items() if c < 0}

    def evaluate(self, *points: Sequence) -> Fraction:
        """Sum of ``c * s_lambda`` at the given point(s) (one list per variable set)."""
        total = Fraction(0)
        for key, c in self.coefficients.items():
            if self.kind == "A":
                lam, mu = key
                total += c * schur_eval(lam, points[0]) * schur_eval(mu, points[1])
            else:
                total += c * schur_eval(key, points[0])
        return total


def _forms(kind: str, k: int, l: int = 0) -> list[tuple]:
    """Linear forms as tuples of (variable, coefficient)."""
    if kind == "C":
        return [((i, 2),) if i == j else ((i, 1), (j, 1)) for i in range(k) for j in range(i, k)]
    if kind == "D":
        return [((i, 1), (j, 1)) for i in range(k) for j in range(i + 1, k)]
    if kind == "A":
        return [((i, 1), (k + j, 1)) for i in range(k) for j in range(l)]
    raise InputError(f"unknown type {kind!r}; expected one of {TYPES}")


def form_values(kind: str, xs: Sequence, ys: Sequence = ()) -> list:
    """The pairwise sums themselves, evaluated at concrete points."""
    k, l = len(xs), len(ys)
    pts = list(xs) + list(ys)
    return [sum(c * pts[v] for v, c in form) for form in _forms(kind, k, l)]


def complete_homogeneous(d: int, values: Sequence) -> Fraction:
    """h_d evaluated at numbers."""
    h = [Fraction(1)] + [Fraction(0)] * d
    for v in values:
        for t in range(1, d + 1):
            h[t] += v * h[t - 1]
    return h[d]


def complete_homogeneous_expansion(
    forms: Sequence[tuple], nvars: int, d: int, box: Optional[Sequence[int]] = None,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> MonomialExpansion:
    """Degree-``d`` part of prod 1/(1 - L) over the forms, as monomials.

    With ``box`` set, only monomials with exponents ``<= box`` are kept. The
    truncation is exact for those monomials since every factor has
    nonnegative exponents.
    """
    levels = [{(0,) * nvars: 1}] + [{} for _ in range(d)]
    for form in forms:
        for t in range(1, d + 1):
            # levels[t-1] already holds the updated H_new at degree t-1
            cur = levels[t]
            for mono, c in levels[t - 1].items():
                for v, a in form:
                    if box is not None and mono[v] >= box[v]:
                        continue
                    nxt = mono[:v] + (mono[v] + 1,) + mono[v + 1:]
                    val = cur.get(nxt, 0) + a * c
                    if val:
                        cur[nxt] = val
                    else:
                        cur.pop(nxt, None)
            if len(cur) > budget.max_monomials:
                raise ResourceError(f"monomial expansion exceeded {budget.max_monomials} terms")
    return levels[d]


def vandermonde(k: int, offset: int = 0, nvars: Optional[int] = None) -> MonomialExpansion:
    """prod_{i<j} (x_i - x_j) = sum over permutations of sgn(w) x^{w(delta)}."""
    nvars = k if nvars is None else nvars
    out = {}
    delta = tuple(range(k - 1, -1, -1))
    for perm in permutations(range(k)):
        mono = [0] * nvars
        for i, p in enumerate(perm):
            mono[offset + i] = delta[p]
        out[tuple(mono)] = _perm_sign(perm)
    return out


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def multiply(a: MonomialExpansion, b: MonomialExpansion) -> MonomialExpansion:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            val = out.get(m, 0) + ca * cb
            if val:
                out[m] = val
            else:
                out.pop(m, None)
    return out


def _check_budget(kind: str, d: int, k: int, l: int, budget: OracleBudget):
    if d < 0 or k < 0 or l < 0:
        raise InputError("degree and variable counts must be nonnegative")
    if k > budget.max_vars or l > budget.max_vars:
        raise ResourceError(f"type {kind}: {max(k, l)} variables exceeds oracle budget {budget.max_vars}")
    if d > budget.max_degree:
        raise ResourceError(f"type {kind}: degree {d} exceeds oracle budget {budget.max_degree}")


def _partitions(weight: int, max_parts: int, max_part: Optional[int] = None):
    """Partitions of ``weight`` into at most ``max_parts`` parts, padded with zeros."""
    if max_part is None:
        max_part = weight
    if weight == 0:
        yield (0,) * max_parts
        return
    if max_parts == 0:
        return
    for first in range(min(weight, max_part), 0, -1):
        for rest in _partitions(weight - first, max_parts - 1, first):
            yield (first,) + rest


def expand_pairsum_power(kind: str, d: int, k: int, l: int = 0,
                         budget: OracleBudget = DEFAULT_BUDGET) -> SchurExpansion:
    """Complete Schur expansion of ``s_(d)`` applied to the type's pairwise sums.

    Types C and D use variables x_1..x_k with sums over i <= j and i < j
    respectively. Type A uses x_1..x_k, y_1..y_l and all sums x_i + y_j.
    """
    if kind not in TYPES:
        raise InputError(f"unknown type {kind!r}")
    if kind != "A":
        l = 0
    _check_budget(kind, d, k, l, budget)
    nvars = k + l
    h = complete_homogeneous_expansion(_forms(kind, k, l), nvars, d, budget=budget)
    alt = multiply(h, vandermonde(k, 0, nvars))
    if kind == "A":
        alt = multiply(alt, vandermonde(l, k, nvars))

    dk = tuple(range(k - 1, -1, -1))
    dl = tuple(range(l - 1, -1, -1))
    coeffs = {}
    for mono, c in alt.items():
        xs, ys = mono[:k], mono[k:]
        if any(a <= b for a, b in zip(xs, xs[1:])) or any(a <= b for a, b in zip(ys, ys[1:])):
            continue
        lam = Partition(a - s for a, s in zip(xs, dk))
        if kind == "A":
            mu = Partition(a - s for a, s in zip(ys, dl))
            coeffs[(lam, mu)] = c
        else:
            coeffs[lam] = c
    out = SchurExpansion(kind, d, (k, l) if kind == "A" else (k,), coeffs)
    if out.negative_entries:
        logger.warning("type %s, d=%d, k=%d: negative Schur coefficients %s",
                       kind, d, k, out.negative_entries)
    return out


def _coefficient(kind: str, lam: Sequence[int], mu: Sequence[int], budget: OracleBudget) -> int:
    """Coefficient of s_lam (times s_mu for type A) via a box-truncated alternant."""
    k, l = len(lam), len(mu)
    d = sum(lam) + sum(mu)
    _check_budget(kind, d, k, l, budget)
    dk = tuple(range(k - 1, -1, -1))
    dl = tuple(range(l - 1, -1, -1))
    target = tuple(a + s for a, s in zip(lam, dk)) + tuple(a + s for a, s in zip(mu, dl))
    h = complete_homogeneous_expansion(_forms(kind, k, l), k + l, d, box=target, budget=budget)
    total = 0
    for wx in permutations(dk):
        sx = _perm_sign([k - 1 - e for e in wx])
        head = tuple(t - e for t, e in zip(target[:k], wx))
        if min(head, default=0) < 0:
            continue
        for wy in permutations(dl):
            tail = tuple(t - e for t, e in zip(target[k:], wy))
            if min(tail, default=0) < 0:
                continue
            c = h.get(head + tail, 0)
            if c:
                total += sx * _perm_sign([l - 1 - e for e in wy]) * c
    if total < 0:
        logger.warning("type %s: negative coefficient %d at %s %s", kind, total, tuple(lam), tuple(mu))
    return total


def psi_oracle(index_set: Sequence[int], budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """psi_I: coefficient of s_lambda(I) in s_(d)({x_i + x_j : i <= j})."""
    return _coefficient("C", partition_of_index_set(index_set), (), budget)


def d_oracle(i_set: Sequence[int], j_set: Sequence[int], budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """d_{I,J}: coefficient of s_lambda(I)(X) s_lambda(J)(Y) in s_(d)(X + Y)."""
    return _coefficient("A", partition_of_index_set(i_set), partition_of_index_set(j_set), budget)


def alpha_oracle(index_set: Sequence[int], budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """alpha_I: coefficient of s_lambda(I) in s_(d)({x_i + x_j : i < j})."""
    return _coefficient("D", partition_of_index_set(index_set), (), budget)


def alpha_two_element(i: int, j: int) -> int:
    """Closed form for alpha_{{i,j}}, 0 <= i < j."""
    if not 0 <= i < j:
        raise InputError(f"need 0 <= i < j, got ({i}, {j})")
    return comb(i + j - 1, i) - (comb(i + j - 1, i - 1) if i >= 1 else 0)


def schur_eval(lam: Sequence[int], points: Sequence) -> Fraction:
    """Bialternant det(x_j^(lam_i + k - i)) / det(x_j^(k - i)) at distinct points."""
    pts = [Fraction(p) for p in points]
    k = len(pts)
    lam = tuple(lam)
    if len(lam) > k:
        if any(lam[k:]):
            return Fraction(0)
        lam = lam[:k]
    if len(set(pts)) != k:
        raise InputError("schur_eval needs pairwise distinct points (bialternant pole)")
    lam = lam + (0,) * (k - len(lam))
    num = _det([[x ** (lam[i] + k - 1 - i) for x in pts] for i in range(k)])
    den = _det([[x ** (k - 1 - i) for x in pts] for i in range(k)])
    return num / den


def _det(m: list) -> Fraction:
    a = [[Fraction(v) for v in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for cc in range(c, n):
                    a[r][cc] -= f * a[c][cc]
    return det
