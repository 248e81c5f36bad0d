"""Closed-form slope bounds and section-count stability criteria.

Pure calculators: section counts are inputs, never computed.  The h0 bound
follows the Simpson-type estimate with C = r(r+d)/2; the section-count
criteria mirror the polynomial stability inequalities at a single evaluation
point m, which decides semistability once m is large enough (the caller is
responsible for that; no constructive threshold exists here).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple, Optional

from .pair_model import PairModel, subobject_rank
from .polynomial import RatPoly, Rational, bracket_plus_pow, rank_of
from .stability import Verdict, _aggregate


@dataclass(frozen=True)
class AmbientConstants:
    """Coefficients of the structure sheaf polynomial plus the framing slope.

    ``alpha_d`` and ``alpha_dm1`` are the top two coefficients of P_{O_X};
    ``mu_min_D`` is the minimal slope of the framing sheaf, supplied by the
    caller.
    """

    alpha_d: Fraction
    alpha_dm1: Fraction
    mu_min_D: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha_d", Fraction(self.alpha_d))
        object.__setattr__(self, "alpha_dm1", Fraction(self.alpha_dm1))
        object.__setattr__(self, "mu_min_D", Fraction(self.mu_min_D))
        if self.alpha_d <= 0:
            raise ValueError("alpha_d must be positive")


def mu_from_muhat(muhat: Rational, c: AmbientConstants) -> Fraction:
    """Invert the normalized slope: mu = muhat * alpha_d - alpha_{d-1}."""
    return Fraction(muhat) * c.alpha_d - c.alpha_dm1


def bound_C(mu_P: Rational, r: Rational, c: AmbientConstants) -> Fraction:
    """Uniform upper bound for the slope of any subobject of a semistable pair.

    max of mu_P, mu_P*r - mu_min(D)*r and mu_P*r - mu_min(D)/r; independent
    of the stability parameter.
    """
    mu_P = Fraction(mu_P)
    r = Fraction(r)
    if r <= 0:
        raise ValueError("rank must be positive")
    return max(mu_P, mu_P * r - c.mu_min_D * r, mu_P * r - c.mu_min_D / r)


def simpson_h0_bound(
    r: int, d: int, muhat_max: Rational, muhat: Rational, m: Rational
) -> Fraction:
    """Upper bound for h0(E(m)) for a sheaf of rank r and dimension d.

    With C = r(r+d)/2:

        h0(E(m)) <= r * [ (r-1)/r * [muhat_max + C - 1 + m]_+^d / d!
                          +   1/r * [muhat     + C - 1 + m]_+^d / d! ]

    The semistable case is the special call muhat_max = muhat.
    """
    if r < 1:
        raise ValueError("rank must be at least 1")
    if d < 0:
        raise ValueError("dimension must be a natural number")
    C = Fraction(r * (r + d), 2)
    shift = C - 1 + Fraction(m)
    dfact = factorial(d)
    per_rank = (
        Fraction(r - 1, r) * bracket_plus_pow(Fraction(muhat_max) + shift, d) / dfact
        + Fraction(1, r) * bracket_plus_pow(Fraction(muhat) + shift, d) / dfact
    )
    return r * per_rank


class SectionCriteria(NamedTuple):
    cond_ii: Verdict
    cond_iii: Verdict


def check_section_criteria(
    model: PairModel,
    delta: RatPoly,
    m: int,
    h0_quotient: Optional[dict] = None,
) -> SectionCriteria:
    """Section-count forms of the stability inequality at one twist m.

    cond_ii, per record of rank 0 < r' < r:

        h0(F(m)) + eps(F) delta(m)  (<=)  (r'/r)(P(m) + delta(m))

    cond_iii, per corresponding quotient of rank 0 < r'' < r:

        (r''/r)(P(m) + delta(m))  (<=)  h0(G(m)) + eps(G) delta(m)

    Section counts for subobjects come from each record's ``h0_at``;
    quotient counts may be supplied via ``h0_quotient`` (record index ->
    h0(G(m))) and otherwise default to P(m) - h0(F(m)), which is only a
    lower bound for the true count, so a passing defaulted cond_iii is
    conservative.  Witness polynomials are the compared constants.
    """
    r = rank_of(model.P)
    value = model.P.evaluate(m) + delta.evaluate(m)
    h0_quotient = h0_quotient or {}

    sub_comparisons = []
    quot_comparisons = []
    for idx, rec in enumerate(model.subobjects):
        r_sub = subobject_rank(rec.P_F, model.P)
        if not 0 < r_sub < r:
            continue
        h0_sub = rec.h0(m)
        if h0_sub is None:
            raise ValueError(f"record {idx} supplies no section count h0 at m={m}")
        eps = 1 if rec.contains_image else 0
        lhs = Fraction(h0_sub) + eps * delta.evaluate(m)
        rhs = (r_sub / r) * value
        sub_comparisons.append((idx, RatPoly.constant(lhs), RatPoly.constant(rhs)))

        r_quot = r - r_sub
        h0_quot = h0_quotient.get(idx, model.P.evaluate(m) - Fraction(h0_sub))
        eps_g = 1 - eps
        q_lhs = (r_quot / r) * value
        q_rhs = Fraction(h0_quot) + eps_g * delta.evaluate(m)
        quot_comparisons.append((idx, RatPoly.constant(q_lhs), RatPoly.constant(q_rhs)))

    return SectionCriteria(
        cond_ii=_aggregate(sub_comparisons),
        cond_iii=_aggregate(quot_comparisons),
    )
