"""Seeded random generators for pair/system models used across the test suite.

Everything is driven by an explicit ``random.Random`` so test runs are
reproducible.  Generated models always pass ``validate``; coefficient sizes
are kept small so the independent oracles stay fast.
"""

from __future__ import annotations

import random
from fractions import Fraction

from pairstab import (
    DeltaRay,
    PairModel,
    RatPoly,
    SubobjectRecord,
    SystemModel,
    SystemRecord,
    cmp_eventual,
    validate,
)
from pairstab.polynomial import EventualOrdering


def rand_fraction(rng: random.Random, lo=-4, hi=4, dens=(1, 2)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def rand_poly(rng: random.Random, degree: int, lead_choices=(1, 2, 3, 4), dens=(1, 2)) -> RatPoly:
    """A polynomial of exactly the given degree with positive leading term."""
    coeffs = [rand_fraction(rng, dens=dens) for _ in range(degree)]
    coeffs.append(Fraction(rng.choice(lead_choices)))
    return RatPoly(coeffs)


def rand_subpoly(rng: random.Random, P: RatPoly, dens=(1, 2), allow_torsion=True) -> RatPoly:
    """A proper record polynomial: eventually below P, degree at most deg P."""
    d = P.degree
    while True:
        if allow_torsion and rng.random() < 0.25 and d >= 1:
            # torsion record of strictly smaller degree, eventually >= 0
            deg = rng.randint(0, d - 1)
            coeffs = [rand_fraction(rng, dens=dens) for _ in range(deg)]
            coeffs.append(Fraction(rng.randint(0, 3)))
            cand = RatPoly(coeffs)
        else:
            lead = rng.randint(1, max(1, int(P.leading()) - 1)) if P.leading() > 1 else None
            if lead is None:
                deg = rng.randint(0, max(d - 1, 0))
                coeffs = [rand_fraction(rng, dens=dens) for _ in range(deg)]
                coeffs.append(Fraction(rng.randint(1, 2)))
                cand = RatPoly(coeffs)
            else:
                coeffs = [rand_fraction(rng, dens=dens) for _ in range(d)]
                coeffs.append(Fraction(lead))
                cand = RatPoly(coeffs)
        if cand == P:
            continue
        if cmp_eventual(cand, P) is not EventualOrdering.GREATER and cand.degree <= d:
            return cand


def rand_pair_model(
    rng: random.Random,
    max_degree: int = 3,
    max_records: int = 6,
    dens=(1, 2),
    allow_torsion: bool = True,
) -> PairModel:
    d = rng.randint(1, max_degree)
    P = rand_poly(rng, d, dens=dens)
    n = rng.randint(0, max_records)
    records = []
    for _ in range(n):
        P_F = rand_subpoly(rng, P, dens=dens, allow_torsion=allow_torsion)
        eps = rng.random() < 0.4 and not P_F.is_zero()
        # The maximal torsion subobject is saturated; keep torsion records so.
        saturated = True if P_F.degree < P.degree else rng.random() < 0.9
        records.append(
            SubobjectRecord(
                P_F=P_F,
                contains_image=eps,
                saturated=saturated,
            )
        )
    model = PairModel(dim_X=d, P=P, phi_nontrivial=True, subobjects=tuple(records))
    assert not validate(model), validate(model)
    return model


def rand_delta(rng: random.Random, dim_X: int, dens=(1, 2)) -> RatPoly:
    """Eventually nonnegative parameter of degree < dim_X."""
    deg = rng.randint(0, dim_X - 1)
    coeffs = [rand_fraction(rng, dens=dens) for _ in range(deg)]
    coeffs.append(Fraction(rng.randint(0, 4)))
    delta = RatPoly(coeffs)
    if cmp_eventual(delta, RatPoly()) is EventualOrdering.LESS:
        delta = -delta
    return delta


def rand_ray(rng: random.Random, model: PairModel, top_degree: bool = True) -> DeltaRay:
    """A ray base, by default of degree exactly deg P - 1 (the regime where
    the large-parameter criterion is provable on the ray)."""
    d = model.P.degree
    deg = d - 1 if top_degree and d >= 1 else 0
    coeffs = [rand_fraction(rng) for _ in range(deg)]
    coeffs.append(Fraction(rng.randint(1, 4)))
    return DeltaRay(RatPoly(coeffs))


def rand_system_model(
    rng: random.Random, max_degree: int = 3, max_records: int = 5
) -> SystemModel:
    d = rng.randint(1, max_degree)
    P = rand_poly(rng, d)
    gamma_dim = rng.randint(1, 4)
    records = []
    for _ in range(rng.randint(0, max_records)):
        P_F = rand_subpoly(rng, P)
        if P_F.is_zero():
            gp = 0
        else:
            gp = rng.randint(0, gamma_dim)
        records.append(
            SystemRecord(P_F=P_F, gamma_prime_dim=gp, saturated=rng.random() < 0.9)
        )
    return SystemModel(gamma_dim=gamma_dim, P=P, dim_X=d, subobjects=tuple(records))
