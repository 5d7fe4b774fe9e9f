"""Exact evaluation checks of four rational-function identities.

Each identity is evaluated on both sides at rational points. Pole sets,
read off the denominators:

``double_sum``
    x pairwise distinct, y pairwise distinct, x_k + y_l != 0.
``sum``
    x pairwise distinct, x_j + x_l != 1 for j != l.
``double_product``
    x pairwise distinct, y pairwise distinct, x_k != -1, y_k != -1,
    x_k + y_l != -2.
``product``
    x pairwise distinct, x_j + x_l != -3 for j != l.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .errors import InputError, ResourceError

NAMES = ("double_sum", "sum", "double_product", "product")
DOUBLE = ("double_sum", "double_product")


@dataclass(frozen=True)
class IdentityInstance:
    name: str
    r: int
    x: tuple
    y: tuple = ()


def _distinct(vals: Sequence) -> bool:
    return len(set(vals)) == len(vals)


def is_admissible(inst: IdentityInstance) -> bool:
    x, y, r = inst.x, inst.y, inst.r
    if len(x) != r or (inst.name in DOUBLE) != (len(y) == r) or r < 1:
        return False
    if not _distinct(x) or not _distinct(y):
        return False
    off_diag = [(a, b) for i, a in enumerate(x) for j, b in enumerate(x) if i != j]
    cross = [a + b for a in x for b in y]
    if inst.name == "double_sum":
        return 0 not in cross
    if inst.name == "sum":
        return all(a + b != 1 for a, b in off_diag)
    if inst.name == "double_product":
        return -1 not in x and -1 not in y and -2 not in cross
    if inst.name == "product":
        return all(a + b != -3 for a, b in off_diag)
    raise InputError(f"unknown identity {inst.name!r}")


def _double_sum(x, y):
    r = len(x)
    lhs = sum(x) + sum(y) + r
    rhs = sum(
        x[t] * prod(Fraction(x[k] - x[t] + 1, 1) / (x[k] - x[t]) for k in range(r) if k != t)
        * prod(Fraction(x[t] + b + 1, 1) / (x[t] + b) for b in y)
        for t in range(r)
    ) + sum(
        y[m] * prod(Fraction(y[k] - y[m] + 1, 1) / (y[k] - y[m]) for k in range(r) if k != m)
        * prod(Fraction(a + y[m] + 1, 1) / (a + y[m]) for a in x)
        for m in range(r)
    )
    return lhs, rhs


def _sum(x, _y):
    r = len(x)
    rhs = sum(
        x[l] * prod(Fraction((x[j] - x[l] + 1) * (x[j] + x[l]), 1) / ((x[j] - x[l]) * (x[j] + x[l] - 1))
                    for j in range(r) if j != l)
        for l in range(r)
    )
    return sum(x), rhs


def _half_double_product(u, v):
    r = len(u)
    return sum(
        Fraction(1) / (u[l] + 1)
        * prod(Fraction(u[l] + b + 1, 1) / (u[l] + b + 2) for b in v)
        * prod(Fraction(u[k] - u[l] - 1, 1) / (u[k] - u[l]) for k in range(r) if k != l)
        for l in range(r)
    )


def _double_product(x, y):
    lhs = Fraction(prod(x) * prod(y), 1) / (prod(a + 1 for a in x) * prod(b + 1 for b in y))
    rhs = 1 - _half_double_product(x, y) - _half_double_product(y, x)
    return lhs, rhs


def _product(x, _y):
    r = len(x)
    rhs = prod(a + 2 for a in x) - 2 * sum(
        prod(Fraction((x[j] + 2) * (x[j] - x[l] - 1) * (x[j] + x[l] + 2), 1)
             / ((x[j] - x[l]) * (x[j] + x[l] + 3)) for j in range(r) if j != l)
        for l in range(r)
    )
    return prod(x), rhs


_SIDES = {"double_sum": _double_sum, "sum": _sum, "double_product": _double_product, "product": _product}


def identity_sides(inst: IdentityInstance) -> tuple:
    if inst.name not in _SIDES:
        raise InputError(f"unknown identity {inst.name!r}")
    x = tuple(Fraction(v) for v in inst.x)
    y = tuple(Fraction(v) for v in inst.y)
    try:
        return _SIDES[inst.name](x, y)
    except ZeroDivisionError as exc:
        raise InputError(f"{inst.name}: point {inst.x} {inst.y} hits a pole") from exc


def check_identity(inst: IdentityInstance) -> bool:
    if not is_admissible(inst):
        raise InputError(f"{inst.name}: inadmissible instance {inst}")
    lhs, rhs = identity_sides(inst)
    return lhs == rhs


def random_admissible_point(name: str, r: int, seed: int, bound: int = 50,
                            max_attempts: int = 1000) -> IdentityInstance:
    """Deterministic random instance with numerators in [-bound, bound], denominators in [1, bound]."""
    if name not in NAMES:
        raise InputError(f"unknown identity {name!r}")
    if r < 1:
        raise InputError(f"need r >= 1, got {r}")
    rng = random.Random(f"{name}:{r}:{seed}")

    def draw(count):
        return tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(count))

    for _ in range(max_attempts):
        inst = IdentityInstance(name, r, draw(r), draw(r) if name in DOUBLE else ())
        if is_admissible(inst):
            return inst
    raise ResourceError(f"{name}: no admissible point after {max_attempts} draws")


def verify_identities(r_max: int = 5, trials: int = 100, seed: int = 0) -> dict:
    """Run every identity for r = 1..r_max; returns per-identity pass/fail counts."""
    report = {}
    for name in NAMES:
        passed, failed = 0, []
        for r in range(1, r_max + 1):
            for trial in range(trials):
                inst = random_admissible_point(name, r, seed * 1_000_003 + trial)
                if check_identity(inst):
                    passed += 1
                else:
                    failed.append((r, trial))
        report[name] = {"passed": passed, "failed": failed}
    return report
