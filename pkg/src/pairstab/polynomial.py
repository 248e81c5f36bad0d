"""Exact rational polynomials and the eventual (large-argument) order.

A polynomial here is a finite tuple of ``fractions.Fraction`` coefficients,
constant term first.  All arithmetic is exact; floats are rejected on input.
Two polynomials are compared "eventually": ``f < g`` means ``f(m) < g(m)``
for every sufficiently large ``m``, which for polynomials is the
lexicographic comparison of coefficients from the top degree down.  Every
stability inequality in this package is an eventual comparison.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]


def parse_rational(value) -> Fraction:
    """Parse an exact rational from an int, a Fraction or a "num/den" string.

    Floats are rejected: this library never goes through floating point.
    """
    if isinstance(value, bool):
        raise ValueError(f"expected a rational number, got boolean {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational string {value!r}") from exc
    raise ValueError(f"expected int, Fraction or 'num/den' string, got {value!r}")


def rational_str(q: Rational) -> str:
    """Serialize a rational as the canonical "num/den" string."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class EventualOrdering(Enum):
    """Outcome of an eventual comparison of two polynomials."""

    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


class RatPoly:
    """Immutable polynomial with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of degree ``k``; trailing zeros are
    stripped so the representation is canonical (the zero polynomial is the
    empty tuple, with degree -1).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, float):
                raise TypeError("float coefficients are not allowed; use Fraction")
            cs.append(Fraction(c))
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls()

    @classmethod
    def constant(cls, c: Rational) -> "RatPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: Rational, degree: int) -> "RatPoly":
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls((0,) * degree + (c,))

    @classmethod
    def from_json(cls, data) -> "RatPoly":
        """Parse the wire format: a JSON array of "num/den" strings, degree 0 first."""
        if not isinstance(data, list):
            raise ValueError(f"polynomial must be a JSON array, got {data!r}")
        return cls(parse_rational(c) for c in data)

    def to_json(self) -> list:
        return [rational_str(c) for c in self._coeffs]

    # -- inspection ----------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def leading(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "RatPoly") -> "RatPoly":
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            if self.is_zero() or other.is_zero():
                return RatPoly()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return RatPoly(out)
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, q: Rational) -> "RatPoly":
        return self * Fraction(q)

    def evaluate(self, m: Rational) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        m = Fraction(m)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * m + c
        return acc

    # -- comparison ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __lt__(self, other: "RatPoly") -> bool:
        return cmp_eventual(self, other) is EventualOrdering.LESS

    def __le__(self, other: "RatPoly") -> bool:
        return cmp_eventual(self, other) is not EventualOrdering.GREATER

    def __gt__(self, other: "RatPoly") -> bool:
        return cmp_eventual(self, other) is EventualOrdering.GREATER

    def __ge__(self, other: "RatPoly") -> bool:
        return cmp_eventual(self, other) is not EventualOrdering.LESS

    def __repr__(self) -> str:
        return f"RatPoly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{k}" if c != 1 else f"x^{k}")
        return " + ".join(parts).replace("+ -", "- ")


def cmp_eventual(p: RatPoly, q: RatPoly) -> EventualOrdering:
    """Compare two polynomials for all sufficiently large arguments.

    Implemented as lexicographic comparison of coefficients from the highest
    degree down, which is equivalent because the top nonzero coefficient of
    p - q dominates eventually.
    """
    top = max(p.degree, q.degree)
    for k in range(top, -1, -1):
        a, b = p.coefficient(k), q.coefficient(k)
        if a < b:
            return EventualOrdering.LESS
        if a > b:
            return EventualOrdering.GREATER
    return EventualOrdering.EQUAL


def sign_eventual(p: RatPoly) -> int:
    """Eventual sign of p: -1, 0 or +1."""
    c = cmp_eventual(p, RatPoly())
    if c is EventualOrdering.LESS:
        return -1
    if c is EventualOrdering.GREATER:
        return 1
    return 0


def eventually_le(p: RatPoly, q: RatPoly, strict: bool = False) -> bool:
    """p (<=) q eventually; with ``strict`` the comparison must be strict."""
    c = cmp_eventual(p, q)
    if strict:
        return c is EventualOrdering.LESS
    return c is not EventualOrdering.GREATER


def eventually_nonnegative(p: RatPoly) -> bool:
    return sign_eventual(p) >= 0


def rank_of(p: RatPoly) -> Fraction:
    """Leading coefficient, read as the rank of the underlying object."""
    if p.is_zero():
        raise ValueError("rank is undefined for the zero polynomial")
    return p.leading()


def mu_hat(p: RatPoly) -> Fraction:
    """Coefficient of p / rank in degree one below the top."""
    if p.is_zero():
        raise ValueError("mu_hat is undefined for the zero polynomial")
    d = p.degree
    if d < 1:
        raise ValueError("mu_hat requires degree >= 1")
    return p.coefficient(d - 1) / p.leading()


def bracket_plus_pow(x: Rational, d: int) -> Fraction:
    """Truncated power (max(x, 0))**d."""
    if d < 0:
        raise ValueError("exponent must be a natural number")
    x = Fraction(x)
    truncated = x if x > 0 else Fraction(0)
    return truncated ** d


def decided_bound(p: RatPoly) -> int:
    """An integer M such that sign(p(m)) equals the eventual sign for all m >= M.

    Uses the classical bound M = 1 + (sum of lower |coefficients|) / |leading|.
    For the zero polynomial any point works; returns 1.
    """
    if p.is_zero():
        return 1
    lead = abs(p.leading())
    rest = sum((abs(c) for c in p.coeffs[:-1]), Fraction(0))
    bound = 1 + rest / lead
    m = int(bound)
    return m + 1 if m < bound else m
