"""Exact rational scalars and dense univariate polynomials.

Scalars are :class:`fractions.Fraction` (always in lowest terms, positive
denominator). Integer-valued quantities are returned as plain ``int``, which
mixes freely with ``Fraction``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ConsistencyError, InputError

Rational = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = -math.inf


def to_rational(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise InputError("floating point values are not accepted")
    return Fraction(value)


def rational_str(value: Rational) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when q == 1."""
    return str(Fraction(value))


def _strip(coeffs: Iterable[Rational]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in one variable; ``coefficients[k]`` multiplies ``n**k``."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _strip(self.coefficients))

    @classmethod
    def zero(cls) -> "RationalPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c: Rational) -> "RationalPolynomial":
        return cls((c,))

    @classmethod
    def identity(cls) -> "RationalPolynomial":
        return cls((0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self):
        """Highest power present; :data:`NEG_INF` for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else NEG_INF

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, n: Rational) -> Fraction:
        return poly_eval(self, n)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        return RationalPolynomial(
            tuple((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(size))
        )

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            c = Fraction(other)
            return RationalPolynomial(tuple(c * a for a in self.coefficients))
        if self.is_zero or other.is_zero:
            return RationalPolynomial.zero()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def to_json(self) -> list[str]:
        return [rational_str(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RationalPolynomial":
        return cls(tuple(to_rational(c) for c in data))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"({c})" + ("*" + mono if mono else ""))
        return " + ".join(terms)


def poly_eval(p: RationalPolynomial, n: Rational) -> Fraction:
    """Horner evaluation."""
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * n + c
    return acc


def poly_from_samples(samples: Iterable[tuple[int, Rational]], max_degree: int) -> RationalPolynomial:
    """Lagrange interpolation through ``max_degree + 1`` samples.

    Samples are sorted by argument; the lowest ``max_degree + 1`` define the
    interpolant and any remaining ones must lie on it.
    """
    pts = sorted((int(a), Fraction(v)) for a, v in samples)
    args = [a for a, _ in pts]
    if len(set(args)) != len(args):
        raise InputError(f"duplicate sample arguments in {args}")
    if max_degree < 0:
        raise InputError("max_degree must be nonnegative")
    if len(pts) < max_degree + 1:
        raise InputError(f"need {max_degree + 1} samples, got {len(pts)}")
    base, extra = pts[: max_degree + 1], pts[max_degree + 1:]

    result = RationalPolynomial.zero()
    for i, (xi, yi) in enumerate(base):
        if yi == 0:
            continue
        basis = RationalPolynomial.constant(1)
        denom = 1
        for j, (xj, _) in enumerate(base):
            if j != i:
                basis = basis * RationalPolynomial((-xj, 1))
                denom *= xi - xj
        result = result + basis * (yi / denom)

    for a, v in extra:
        got = poly_eval(result, a)
        if got != v:
            raise ConsistencyError(
                f"sample ({a}, {v}) is off the degree-{max_degree} interpolant (which gives {got})"
            )
    return result


@dataclass(frozen=True)
class QuasiPolynomial2:
    """Period-2 quasipolynomial.

    ``even_branch(t)`` is the value at argument ``2t`` and ``odd_branch(t)``
    the value at ``2t + 1``.
    """

    even_branch: RationalPolynomial
    odd_branch: RationalPolynomial

    def __call__(self, m: int) -> Fraction:
        if m % 2 == 0:
            return poly_eval(self.even_branch, m // 2)
        return poly_eval(self.odd_branch, (m - 1) // 2)

    def branch(self, parity: str) -> RationalPolynomial:
        return self.even_branch if parity == "even" else self.odd_branch
