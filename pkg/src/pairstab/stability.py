"""Semistability verdicts for framed pairs, in exact eventual-order arithmetic.

The central inequality: a pair is (semi)stable for a parameter ``delta`` when
for every saturated subobject record of rank r' the eventual comparison

    P_F + eps(F) * delta   (<=)   (r'/r) * (P + delta)

holds, with the right-hand side read as 0 for torsion records.  The quotient
form, purity, the large-parameter criterion, Jordan-Hoelder filtrations and
S-equivalence are all consequences of this one comparison.

All verdicts here are relative to the supplied record set: the model cannot
enumerate subobjects, it can only judge the declared candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional

from .pair_model import PairModel, SubobjectRecord, quotient_of, subobject_rank
from .polynomial import (
    EventualOrdering,
    RatPoly,
    cmp_eventual,
    eventually_nonnegative,
    rank_of,
)


class Status(Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class Witness:
    """A record achieving equality or violation, with both compared sides."""

    record: int
    lhs: RatPoly
    rhs: RatPoly

    @property
    def relation(self) -> EventualOrdering:
        return cmp_eventual(self.lhs, self.rhs)

    def to_json(self) -> dict:
        return {"record": self.record, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}


@dataclass(frozen=True)
class Verdict:
    status: Status
    witnesses: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "witnesses", tuple(self.witnesses))

    def passes(self, strict: bool = False) -> bool:
        """Semistable (default) or stable (``strict``) as a boolean."""
        if strict:
            return self.status is Status.STABLE
        return self.status is not Status.UNSTABLE

    @property
    def is_semistable(self) -> bool:
        return self.status is not Status.UNSTABLE

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def verdict_from_json(data) -> Verdict:
    status = Status(data["status"])
    witnesses = tuple(
        Witness(
            record=int(w["record"]),
            lhs=RatPoly.from_json(w["lhs"]),
            rhs=RatPoly.from_json(w["rhs"]),
        )
        for w in data.get("witnesses", [])
    )
    return Verdict(status=status, witnesses=witnesses)


class LatticeError(ValueError):
    """The supplied containment lattice cannot realize a required chain."""


def _aggregate(pairs: Iterable[tuple]) -> Verdict:
    """Fold per-record comparisons into a single three-valued verdict."""
    witnesses = []
    violated = False
    for idx, lhs, rhs in pairs:
        rel = cmp_eventual(lhs, rhs)
        if rel is EventualOrdering.GREATER:
            violated = True
            witnesses.append(Witness(idx, lhs, rhs))
        elif rel is EventualOrdering.EQUAL:
            witnesses.append(Witness(idx, lhs, rhs))
    if violated:
        status = Status.UNSTABLE
    elif witnesses:
        status = Status.STRICTLY_SEMISTABLE
    else:
        status = Status.STABLE
    return Verdict(status=status, witnesses=tuple(witnesses))


def _is_vacuous(rec: SubobjectRecord) -> bool:
    # The zero subobject imposes no condition; counting its 0 <= 0 as an
    # equality witness would mark every pair strictly semistable.
    return rec.P_F.is_zero() and not rec.contains_image


def _require_parameter(model: PairModel, delta: RatPoly, below_dimension: bool = True) -> None:
    if not model.phi_nontrivial:
        raise ValueError("stability of pairs requires a nontrivial framing")
    if not eventually_nonnegative(delta):
        raise ValueError("stability parameter must be eventually nonnegative")
    if below_dimension and delta.degree >= model.dim_X:
        raise ValueError(
            f"stability parameter degree {delta.degree} must be < dim_X = {model.dim_X}"
        )


def check_semistable(model: PairModel, delta: RatPoly) -> Verdict:
    """Subobject-form semistability check over all saturated records.

    Returns the aggregated verdict: Unstable when some record violates the
    inequality, StrictlySemistable when equalities but no violations occur,
    Stable otherwise.  Witnesses carry both sides for every equality or
    violation; strict and non-strict readings are both available from the
    verdict via :meth:`Verdict.passes`.
    """
    _require_parameter(model, delta)
    r = rank_of(model.P)
    ambient = model.P + delta
    comparisons = []
    for idx, rec in enumerate(model.subobjects):
        if not rec.saturated or _is_vacuous(rec):
            continue
        r_sub = subobject_rank(rec.P_F, model.P)
        lhs = rec.P_F + delta if rec.contains_image else rec.P_F
        rhs = ambient * (r_sub / r)
        comparisons.append((idx, lhs, rhs))
    return _aggregate(comparisons)


def check_semistable_quotient_form(model: PairModel, delta: RatPoly) -> Verdict:
    """Quotient-form check: (r''/r)(P + delta) (<=) P_G + eps(G) delta.

    Equivalent to :func:`check_semistable` record by record; quotients of
    rank zero impose no condition and are skipped.
    """
    _require_parameter(model, delta)
    r = rank_of(model.P)
    ambient = model.P + delta
    comparisons = []
    for idx, rec in enumerate(model.subobjects):
        if not rec.saturated or _is_vacuous(rec):
            continue
        r_quot = r - subobject_rank(rec.P_F, model.P)
        if r_quot == 0:
            continue
        q = quotient_of(model, idx)
        lhs = ambient * (r_quot / r)
        rhs = q.P_G + delta if q.eps_G else q.P_G
        comparisons.append((idx, lhs, rhs))
    return _aggregate(comparisons)


def purity_violations(model: PairModel, delta: RatPoly) -> list:
    """Indices of torsion records with P_F + eps * delta eventually positive.

    A semistable pair admits none: its maximal lower-dimensional subobject
    must be zero.
    """
    if not eventually_nonnegative(delta):
        raise ValueError("stability parameter must be eventually nonnegative")
    zero = RatPoly()
    out = []
    for idx, rec in enumerate(model.subobjects):
        if rec.P_F.degree >= model.P.degree:
            continue
        lhs = rec.P_F + delta if rec.contains_image else rec.P_F
        if cmp_eventual(lhs, zero) is EventualOrdering.GREATER:
            out.append(idx)
    return out


def large_delta_check(model: PairModel, delta: RatPoly) -> Verdict:
    """Stability test in the regime deg delta >= dim_X.

    There the verdict no longer depends on the fine shape of delta: the pair
    is destabilized exactly by a proper saturated record of rank r' < r that
    contains the framing image, or by a purity violation.
    """
    if not model.phi_nontrivial:
        raise ValueError("stability of pairs requires a nontrivial framing")
    if not eventually_nonnegative(delta):
        raise ValueError("stability parameter must be eventually nonnegative")
    if delta.degree < model.dim_X:
        raise ValueError(
            f"large-parameter check requires deg delta >= dim_X = {model.dim_X}"
        )
    r = rank_of(model.P)
    ambient = model.P + delta
    witnesses = []
    for idx, rec in enumerate(model.subobjects):
        if not rec.saturated:
            continue
        r_sub = subobject_rank(rec.P_F, model.P)
        if rec.contains_image and 0 < r_sub < r:
            witnesses.append(Witness(idx, rec.P_F + delta, ambient * (r_sub / r)))
    for idx in purity_violations(model, delta):
        rec = model.subobjects[idx]
        lhs = rec.P_F + delta if rec.contains_image else rec.P_F
        witnesses.append(Witness(idx, lhs, RatPoly()))
    if witnesses:
        return Verdict(Status.UNSTABLE, tuple(witnesses))
    return Verdict(Status.STABLE, ())


# -- Jordan-Hoelder filtrations ---------------------------------------------


@dataclass(frozen=True)
class GradedObject:
    """Multiset of (polynomial, framing flag) factors of a filtration.

    Factors are kept in a canonical sorted order so equality is multiset
    equality.
    """

    factors: tuple

    def __post_init__(self):
        canon = tuple(
            sorted(
                ((RatPoly(p.coeffs), bool(e)) for p, e in self.factors),
                key=lambda fe: (fe[0].degree, fe[0].coeffs, fe[1]),
            )
        )
        object.__setattr__(self, "factors", canon)

    def total_polynomial(self) -> RatPoly:
        total = RatPoly()
        for p, _ in self.factors:
            total = total + p
        return total

    def image_count(self) -> int:
        return sum(1 for _, e in self.factors if e)

    def to_json(self) -> dict:
        return {
            "factors": [{"P": p.to_json(), "eps": e} for p, e in self.factors]
        }


def s_equivalent(g1: GradedObject, g2: GradedObject) -> bool:
    """True when the two graded factor multisets agree, order-free."""
    return g1.factors == g2.factors


def _equal_reduced_candidates(
    model: PairModel,
    delta: RatPoly,
    reduced_times_rank: RatPoly,
    pool: frozenset,
    eps_live: bool,
) -> list:
    """Records in ``pool`` whose reduced pair polynomial equals the ambient one.

    Comparison is done cleared of denominators: r * (P_F + eps*delta) must
    equal r' * (P + delta) exactly.  ``eps_live`` is False once the framing
    image has been handed to a higher factor, killing all deeper flags.
    """
    r = rank_of(model.P)
    out = []
    for idx in sorted(pool):
        rec = model.subobjects[idx]
        if not rec.saturated or _is_vacuous(rec):
            continue
        r_sub = subobject_rank(rec.P_F, model.P)
        if r_sub == 0:
            continue
        eps = rec.contains_image and eps_live
        lhs = (rec.P_F + delta if eps else rec.P_F) * r
        if lhs == reduced_times_rank * r_sub:
            out.append(idx)
    return out


def _maximal_in_lattice(model: PairModel, candidates: list) -> list:
    cand = set(candidates)
    out = []
    for idx in candidates:
        if not (model.ancestors(idx) & cand):
            out.append(idx)
    return out


def _descend(model: PairModel, idx: int, pool: frozenset) -> frozenset:
    return frozenset(j for j in pool if idx in model.ancestors(j))


def _check_chain_step(model: PairModel, ambient: RatPoly, idx: int) -> None:
    rec = model.subobjects[idx]
    if cmp_eventual(rec.P_F, ambient) is not EventualOrdering.LESS:
        raise LatticeError(
            f"record {idx} is not a proper subobject of the current filtration step"
        )
    r_sub = subobject_rank(rec.P_F, model.P)
    r_cur = rank_of(ambient)
    if not 0 < r_sub < r_cur:
        raise LatticeError(
            f"record {idx} does not decrease the rank along the filtration"
        )


def jordan_holder(model: PairModel, delta: RatPoly) -> GradedObject:
    """Graded object of a Jordan-Hoelder filtration of a semistable pair.

    Greedy descent: among records whose reduced pair polynomial equals the
    ambient one, pick a lattice-maximal candidate (lowest index on ties),
    emit the quotient factor and recurse inside.  The framing flag travels
    with the image: exactly one factor ends up carrying it.
    """
    verdict = check_semistable(model, delta)
    if verdict.status is Status.UNSTABLE:
        raise ValueError("Jordan-Hoelder filtration requires a semistable pair")
    reduced_times_rank = model.P + delta

    factors = []
    ambient = model.P
    eps_live = True
    pool = frozenset(range(len(model.subobjects)))
    while True:
        candidates = _equal_reduced_candidates(model, delta, reduced_times_rank, pool, eps_live)
        if not candidates:
            factors.append((ambient, eps_live))
            break
        chosen = _maximal_in_lattice(model, candidates)[0]
        _check_chain_step(model, ambient, chosen)
        rec = model.subobjects[chosen]
        eps_here = rec.contains_image and eps_live
        factors.append((ambient - rec.P_F, eps_live and not eps_here))
        ambient = rec.P_F
        eps_live = eps_here
        pool = _descend(model, chosen, pool)
    return GradedObject(tuple(factors))


def jordan_holder_multisets(model: PairModel, delta: RatPoly) -> frozenset:
    """All distinct graded multisets over every maximal-candidate chain.

    Enumeration oracle for the chain-independence property: on lattices
    coming from genuine filtrations this set is a singleton; on arbitrary
    user data it reports every outcome instead of asserting uniqueness.
    """
    verdict = check_semistable(model, delta)
    if verdict.status is Status.UNSTABLE:
        raise ValueError("Jordan-Hoelder filtration requires a semistable pair")
    reduced_times_rank = model.P + delta
    results = set()

    def walk(ambient: RatPoly, eps_live: bool, pool: frozenset, acc: tuple) -> None:
        candidates = _equal_reduced_candidates(model, delta, reduced_times_rank, pool, eps_live)
        if not candidates:
            results.add(GradedObject(acc + ((ambient, eps_live),)))
            return
        for chosen in _maximal_in_lattice(model, candidates):
            _check_chain_step(model, ambient, chosen)
            rec = model.subobjects[chosen]
            eps_here = rec.contains_image and eps_live
            walk(
                rec.P_F,
                eps_here,
                _descend(model, chosen, pool),
                acc + ((ambient - rec.P_F, eps_live and not eps_here),),
            )

    walk(model.P, True, frozenset(range(len(model.subobjects))), ())
    return frozenset(results)
