import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pairstab.polynomial import (
    EventualOrdering,
    RatPoly,
    bracket_plus_pow,
    cmp_eventual,
    decided_bound,
    mu_hat,
    parse_rational,
    rank_of,
    rational_str,
    sign_eventual,
)

X = RatPoly.x()


fractions_st = st.fractions(min_value=-6, max_value=6, max_denominator=4)
polys_st = st.lists(fractions_st, min_size=0, max_size=5).map(RatPoly)
int_polys_st = st.lists(st.integers(-8, 8), min_size=0, max_size=5).map(RatPoly)


# -- representation ----------------------------------------------------------


def test_trailing_zeros_are_stripped():
    assert RatPoly([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
    assert RatPoly([0, 0]).is_zero()
    assert RatPoly().degree == -1


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        RatPoly([0.5])


def test_json_round_trip():
    p = RatPoly([Fraction(2), Fraction(2)])
    assert p.to_json() == ["2/1", "2/1"]
    assert RatPoly.from_json(["2/1", "2/1"]) == p
    assert RatPoly.from_json(["-1/3", "0/1", "5/2"]).coeffs == (
        Fraction(-1, 3),
        Fraction(0),
        Fraction(5, 2),
    )


def test_parse_rational_accepts_ints_and_strings():
    assert parse_rational(3) == 3
    assert parse_rational("3") == 3
    assert parse_rational("-7/2") == Fraction(-7, 2)
    with pytest.raises(ValueError):
        parse_rational("nope")
    with pytest.raises(ValueError):
        parse_rational(2.5)
    assert rational_str(Fraction(4, 6)) == "2/3"


# -- evaluation --------------------------------------------------------------


def term_by_term(p: RatPoly, m) -> Fraction:
    return sum((c * Fraction(m) ** k for k, c in enumerate(p.coeffs)), Fraction(0))


def test_evaluate_examples():
    assert (X * X + RatPoly([1])).evaluate(3) == 10
    assert RatPoly().evaluate(7) == 0
    p = RatPoly([2, 2])
    assert p.evaluate(1) == 4 == term_by_term(p, 1)


@given(polys_st, fractions_st)
def test_evaluate_matches_term_by_term(p, m):
    assert p.evaluate(m) == term_by_term(p, m)


# -- eventual comparison -----------------------------------------------------


def test_cmp_eventual_examples():
    assert cmp_eventual(X * X + RatPoly([1]), X * X) is EventualOrdering.GREATER
    assert cmp_eventual(RatPoly(), RatPoly()) is EventualOrdering.EQUAL
    assert cmp_eventual(RatPoly([0, 3]), RatPoly([0, -100, 1])) is EventualOrdering.LESS


@given(polys_st, polys_st, polys_st)
def test_order_compatible_with_addition(p, q, r):
    if cmp_eventual(p, q) is not EventualOrdering.GREATER:
        assert cmp_eventual(p + r, q + r) is not EventualOrdering.GREATER


@given(polys_st, polys_st)
def test_total_order(p, q):
    rel = cmp_eventual(p, q)
    back = cmp_eventual(q, p)
    flip = {
        EventualOrdering.LESS: EventualOrdering.GREATER,
        EventualOrdering.GREATER: EventualOrdering.LESS,
        EventualOrdering.EQUAL: EventualOrdering.EQUAL,
    }
    assert back is flip[rel]
    assert (rel is EventualOrdering.EQUAL) == (p == q)


@given(int_polys_st, int_polys_st)
def test_sampling_consistency_at_coefficient_bound(p, q):
    # For integer coefficients, the stated sample point decides the order:
    # M = 1 + sum of |numerator * denominator| over both polynomials.
    if cmp_eventual(p, q) is EventualOrdering.LESS:
        M = 1 + sum(
            abs(c.numerator * c.denominator) for c in p.coeffs + q.coeffs
        )
        assert p.evaluate(M) < q.evaluate(M)


@given(polys_st)
def test_decided_bound_fixes_sign(p):
    M = decided_bound(p)
    s = sign_eventual(p)
    for m in (M, M + 1, M + 7):
        v = p.evaluate(m)
        assert (v > 0) == (s > 0) and (v < 0) == (s < 0)


# -- rank and slope ----------------------------------------------------------


def test_rank_of_examples():
    assert rank_of(RatPoly([2, 2])) == 2
    assert rank_of(X * X) == 1
    with pytest.raises(ValueError):
        rank_of(RatPoly())


@given(polys_st, polys_st)
def test_rank_ignores_lower_degree_summands(p, q):
    if not p.is_zero() and p.degree > q.degree:
        assert rank_of(p + q) == rank_of(p)


def test_mu_hat_examples():
    assert mu_hat(RatPoly([1, 6, 2])) == 3
    for d in range(1, 5):
        assert mu_hat(RatPoly.monomial(1, d)) == 0
    assert mu_hat(RatPoly([2, 2])) == 1
    with pytest.raises(ValueError):
        mu_hat(RatPoly([5]))
    with pytest.raises(ValueError):
        mu_hat(RatPoly())


@given(polys_st, st.integers(1, 5))
def test_mu_hat_scalar_invariance(p, c):
    if p.degree >= 1:
        assert mu_hat(p * c) == mu_hat(p)


def test_bracket_plus_pow_examples():
    assert bracket_plus_pow(-2, 3) == 0
    assert bracket_plus_pow(3, 2) == 9
    assert bracket_plus_pow(0, 5) == 0
    assert bracket_plus_pow(Fraction(1, 2), 2) == Fraction(1, 4)


# -- arithmetic sanity -------------------------------------------------------


@given(polys_st, polys_st)
def test_ring_axioms_sampled(p, q):
    assert p + q == q + p
    assert p * q == q * p
    assert p - p == RatPoly()
    assert (p + q) - q == p


def test_repr_and_str_smoke():
    p = RatPoly([Fraction(1, 2), -1, 2])
    assert "RatPoly" in repr(p)
    assert str(RatPoly()) == "0"
    assert "x^2" in str(p)
