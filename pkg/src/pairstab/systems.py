"""Coherent-system stability and the correspondence to framed pairs.

A system is a sheaf with a distinguished space of sections of dimension
gamma_dim; each record carries the dimension of the sections landing in the
subobject.  The stability inequality

    dim Gamma' * alpha + P_F  (<=)  (r_F/r_E)(dim Gamma * alpha + P_E)

matches the pair inequality after setting delta = gamma_dim * alpha and
flagging a record as containing the framing image exactly when all sections
land in it.  The product-group weight formulas used by that comparison are
exposed as calculators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .pair_model import PairModel, SubobjectRecord, subobject_rank
from .polynomial import RatPoly, cmp_eventual, eventually_nonnegative, rank_of
from .stability import Verdict, _aggregate
from .walls import ChamberReport, DeltaRay, Wall, chamber_report, wall_ts


@dataclass(frozen=True)
class SystemRecord:
    """One declared subobject with the dimension of its retained sections."""

    P_F: RatPoly
    gamma_prime_dim: int
    saturated: bool = True


@dataclass(frozen=True)
class SystemModel:
    gamma_dim: int
    P: RatPoly
    dim_X: int
    subobjects: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "subobjects", tuple(self.subobjects))
        if self.gamma_dim <= 0:
            raise ValueError("a coherent system needs gamma_dim > 0")
        if self.P.is_zero() or self.P.leading() <= 0:
            raise ValueError("ambient rank must be positive")
        for i, rec in enumerate(self.subobjects):
            if rec.gamma_prime_dim > self.gamma_dim:
                raise ValueError(f"record {i}: gamma' dimension exceeds gamma_dim")
            if rec.gamma_prime_dim < 0:
                raise ValueError(f"record {i}: gamma' dimension must be natural")
            if rec.P_F == self.P:
                raise ValueError(f"record {i}: records must be proper")


def check_system_semistable(model: SystemModel, alpha: RatPoly) -> Verdict:
    """Per saturated record, the section-weighted stability comparison."""
    if not eventually_nonnegative(alpha):
        raise ValueError("stability parameter alpha must be eventually nonnegative")
    r = rank_of(model.P)
    ambient = model.gamma_dim * alpha + model.P
    comparisons = []
    for idx, rec in enumerate(model.subobjects):
        if not rec.saturated:
            continue
        if rec.P_F.is_zero() and rec.gamma_prime_dim == 0:
            continue
        r_sub = subobject_rank(rec.P_F, model.P)
        lhs = rec.gamma_prime_dim * alpha + rec.P_F
        rhs = ambient * (r_sub / r)
        comparisons.append((idx, lhs, rhs))
    return _aggregate(comparisons)


def system_to_pair(model: SystemModel, alpha: RatPoly) -> Tuple[PairModel, RatPoly]:
    """The corresponding framed pair and its parameter delta = gamma_dim * alpha.

    A record contains the framing image exactly when every section lands in
    it, i.e. gamma' = gamma.
    """
    delta = model.gamma_dim * alpha
    records = tuple(
        SubobjectRecord(
            P_F=rec.P_F,
            contains_image=(rec.gamma_prime_dim == model.gamma_dim),
            saturated=rec.saturated,
        )
        for rec in model.subobjects
    )
    pair = PairModel(
        dim_X=model.dim_X,
        P=model.P,
        phi_nontrivial=True,
        subobjects=records,
    )
    return pair, delta


def system_walls(model: SystemModel, alpha_base: RatPoly) -> List[Wall]:
    """Critical values of t for alpha(t) = t * alpha_base, via the pair ray."""
    pair, base = system_to_pair(model, alpha_base)
    return wall_ts(pair, DeltaRay(base))


def system_chamber_report(model: SystemModel, alpha_base: RatPoly) -> ChamberReport:
    pair, base = system_to_pair(model, alpha_base)
    return chamber_report(pair, DeltaRay(base))


def product_weight(i: int, j: int, p: int, r: int) -> Fraction:
    """Weight of a framing map with invariants (i, j) for the product subgroup:
    i - j * p / r."""
    if r <= 0:
        raise ValueError("r must be positive")
    if not 0 <= j <= r or not 0 <= i <= p:
        raise ValueError("indices must satisfy 0 <= j <= r and 0 <= i <= p")
    return Fraction(i) - Fraction(j * p, r)


def schmitt_special_vectors(j: int, r: int, i: int, p: int) -> Tuple[tuple, tuple]:
    """The special product weight vectors for section and ambient factors.

    First sequence: (j-r)/r repeated j times then j/r repeated r-j times;
    second: (i-p)/p repeated i times then i/p repeated p-i times.  Each sums
    to zero.
    """
    if r <= 0 or p <= 0:
        raise ValueError("r and p must be positive")
    if not 0 <= j <= r or not 0 <= i <= p:
        raise ValueError("indices must satisfy 0 <= j <= r and 0 <= i <= p")
    sections = (Fraction(j - r, r),) * j + (Fraction(j, r),) * (r - j)
    ambient = (Fraction(i - p, p),) * i + (Fraction(i, p),) * (p - i)
    return sections, ambient


def special_vector_pairing(j: int, r: int, i: int, p: int) -> Fraction:
    """Framing weight of the special vectors, read off the block values.

    The framing map sends the retained sections (the first j coordinates)
    into the subspace (the first i coordinates); it stays inside the
    subspace exactly when j = r.  The weight is p times the difference of
    the ambient block reached by the image and the section block carrying
    it; at empty blocks the block value is used directly.
    """
    sections, ambient = schmitt_special_vectors(j, r, i, p)
    contained = j == r
    if contained:
        v_w = ambient[i - 1] if i > 0 else Fraction(i - p, p)
        s_w = sections[j - 1] if j > 0 else Fraction(j - r, r)
    else:
        v_w = ambient[i] if i < p else Fraction(i, p)
        s_w = sections[j]
    return p * (v_w - s_w)


def git_system_check(
    i: int,
    j: int,
    p: int,
    r: int,
    P: RatPoly,
    P_F: RatPoly,
    alpha: RatPoly,
    strict: bool = False,
) -> bool:
    """The eventual inequality behind semistability of the product action:

        j * alpha + P_F  (<=)  (r_F/r_E)(P + r * alpha).

    It is the leading-coefficient reduction of the full weight inequality;
    i and p describe the subspace the weight vectors were built from but
    cancel out of the reduced form.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    r_amb = rank_of(P)
    if r_amb <= 0:
        raise ValueError("ambient rank must be positive")
    r_sub = subobject_rank(P_F, P)
    lhs = j * alpha + P_F
    rhs = (P + r * alpha) * (r_sub / r_amb)
    return lhs < rhs if strict else lhs <= rhs


# -- JSON wire format -------------------------------------------------------


def system_record_from_json(data) -> SystemRecord:
    if not isinstance(data, dict):
        raise ValueError(f"system record must be a JSON object, got {data!r}")
    try:
        return SystemRecord(
            P_F=RatPoly.from_json(data["P_F"]),
            gamma_prime_dim=int(data["gamma_prime_dim"]),
            saturated=bool(data.get("saturated", True)),
        )
    except KeyError as exc:
        raise ValueError(f"system record missing field {exc}") from exc


def system_model_from_json(data) -> SystemModel:
    if not isinstance(data, dict):
        raise ValueError(f"system model must be a JSON object, got {data!r}")
    try:
        return SystemModel(
            gamma_dim=int(data["gamma_dim"]),
            P=RatPoly.from_json(data["P"]),
            dim_X=int(data["dim_X"]),
            subobjects=tuple(system_record_from_json(s) for s in data.get("subobjects", [])),
        )
    except KeyError as exc:
        raise ValueError(f"system model missing field {exc}") from exc


def system_model_to_json(model: SystemModel) -> dict:
    return {
        "gamma_dim": model.gamma_dim,
        "P": model.P.to_json(),
        "dim_X": model.dim_X,
        "subobjects": [
            {
                "P_F": rec.P_F.to_json(),
                "gamma_prime_dim": rec.gamma_prime_dim,
                "saturated": rec.saturated,
            }
            for rec in model.subobjects
        ],
    }
