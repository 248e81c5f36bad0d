"""Finite numerical model of a framed pair: ambient Hilbert polynomial plus
declared subobject records.

A record describes one candidate subobject by its Hilbert polynomial, a flag
saying whether the framing image is contained in it, a saturation flag and
optional extras (section counts, containment lattice).  Subobjects are user
supplied data, never computed: every verdict downstream is relative to the
declared record set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .polynomial import (
    EventualOrdering,
    RatPoly,
    cmp_eventual,
    rank_of,
)


@dataclass(frozen=True)
class SubobjectRecord:
    """One declared subobject of the ambient sheaf.

    ``contains_image`` is the indicator that the framing lands inside this
    subobject; ``h0_at`` optionally supplies section counts h0(F(m)) for the
    section-count criteria; ``parents`` lists indices of records known to
    contain this one (the lattice used by Jordan-Hoelder filtrations).
    """

    P_F: RatPoly
    contains_image: bool
    saturated: bool = True
    h0_at: tuple = ()
    parents: tuple = ()

    def __post_init__(self):
        if isinstance(self.h0_at, Mapping):
            object.__setattr__(
                self, "h0_at", tuple(sorted((int(k), int(v)) for k, v in self.h0_at.items()))
            )
        else:
            object.__setattr__(
                self, "h0_at", tuple(sorted((int(k), int(v)) for k, v in self.h0_at))
            )
        object.__setattr__(self, "parents", tuple(int(i) for i in self.parents))

    def h0(self, m: int) -> Optional[int]:
        for k, v in self.h0_at:
            if k == m:
                return v
        return None


@dataclass(frozen=True)
class PairModel:
    """Ambient data of a pair plus its declared subobject records."""

    dim_X: int
    P: RatPoly
    phi_nontrivial: bool = True
    subobjects: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "subobjects", tuple(self.subobjects))

    @property
    def rank(self) -> Fraction:
        return rank_of(self.P)

    def record_rank(self, idx: int) -> Fraction:
        """Rank of a record: leading coefficient at full degree, else 0 (torsion)."""
        return subobject_rank(self.subobjects[idx].P_F, self.P)

    def is_torsion(self, idx: int) -> bool:
        return self.subobjects[idx].P_F.degree < self.P.degree

    def ancestors(self, idx: int) -> frozenset:
        """Transitive closure of the ``parents`` relation for one record."""
        seen: set = set()
        stack = list(self.subobjects[idx].parents)
        while stack:
            j = stack.pop()
            if j in seen or j == idx:
                continue
            seen.add(j)
            if 0 <= j < len(self.subobjects):
                stack.extend(self.subobjects[j].parents)
        return frozenset(seen)


@dataclass(frozen=True)
class QuotientRecord:
    """Numerical shadow of the quotient by a record: derived, never stored."""

    P_G: RatPoly
    eps_G: bool


def subobject_rank(P_F: RatPoly, P: RatPoly) -> Fraction:
    """Rank convention for records: torsion records (lower degree) have rank 0."""
    if P_F.is_zero() or P_F.degree < P.degree:
        return Fraction(0)
    return rank_of(P_F)


def quotient_of(model: PairModel, idx: int) -> QuotientRecord:
    """Kernel-to-quotient correspondence at the polynomial level."""
    if not 0 <= idx < len(model.subobjects):
        raise IndexError(f"no subobject record with index {idx}")
    rec = model.subobjects[idx]
    return QuotientRecord(P_G=model.P - rec.P_F, eps_G=not rec.contains_image)


def validate(model: PairModel) -> list:
    """Check all model invariants; returns a list of violation descriptions.

    An empty list means the model is well formed.  Violations are data, not
    errors: each entry names the record index and the broken invariant.
    """
    problems = []
    if model.P.is_zero() or model.P.leading() <= 0:
        problems.append("ambient: rank of P must be positive")
    if model.dim_X < 0:
        problems.append("ambient: dim_X must be a natural number")
    if not model.P.is_zero() and model.P.degree > model.dim_X:
        problems.append("ambient: deg P exceeds dim_X")
    if not model.phi_nontrivial:
        problems.append("ambient: stability workflows require a nontrivial framing")

    n = len(model.subobjects)
    for i, rec in enumerate(model.subobjects):
        if cmp_eventual(rec.P_F, model.P) is EventualOrdering.GREATER:
            problems.append(f"record {i}: P_F eventually exceeds the ambient polynomial")
        if rec.P_F == model.P:
            problems.append(f"record {i}: equals the ambient object (records must be proper)")
        if rec.P_F.degree > model.P.degree:
            problems.append(f"record {i}: deg P_F exceeds deg P")
        if rec.P_F.is_zero() and rec.contains_image:
            problems.append(
                f"record {i}: contains_image on the zero subobject contradicts a nontrivial framing"
            )
        for j in rec.parents:
            if not 0 <= j < n or j == i:
                problems.append(f"record {i}: parent index {j} is invalid")
            elif rec.contains_image and not model.subobjects[j].contains_image:
                problems.append(
                    f"record {i}: contains_image but parent {j} does not (monotonicity)"
                )
        for m, h in rec.h0_at:
            if h < 0:
                problems.append(f"record {i}: negative section count h0 at m={m}")
    return problems


# -- JSON wire format -------------------------------------------------------


def record_from_json(data) -> SubobjectRecord:
    if not isinstance(data, dict):
        raise ValueError(f"subobject record must be a JSON object, got {data!r}")
    try:
        P_F = RatPoly.from_json(data["P_F"])
        contains_image = data["contains_image"]
        saturated = data.get("saturated", True)
    except KeyError as exc:
        raise ValueError(f"subobject record missing field {exc}") from exc
    if not isinstance(contains_image, bool) or not isinstance(saturated, bool):
        raise ValueError("subobject flags contains_image/saturated must be booleans")
    h0_at = data.get("h0_at") or {}
    parents = data.get("parents") or ()
    return SubobjectRecord(
        P_F=P_F,
        contains_image=contains_image,
        saturated=saturated,
        h0_at={int(k): int(v) for k, v in h0_at.items()},
        parents=tuple(parents),
    )


def pair_model_from_json(data) -> PairModel:
    if not isinstance(data, dict):
        raise ValueError(f"pair model must be a JSON object, got {data!r}")
    try:
        dim_X = int(data["dim_X"])
        P = RatPoly.from_json(data["P"])
        phi_nontrivial = data.get("phi_nontrivial", True)
        subs = data.get("subobjects", [])
    except KeyError as exc:
        raise ValueError(f"pair model missing field {exc}") from exc
    if not isinstance(phi_nontrivial, bool):
        raise ValueError("phi_nontrivial must be a boolean")
    return PairModel(
        dim_X=dim_X,
        P=P,
        phi_nontrivial=phi_nontrivial,
        subobjects=tuple(record_from_json(s) for s in subs),
    )


def record_to_json(rec: SubobjectRecord) -> dict:
    out = {
        "P_F": rec.P_F.to_json(),
        "contains_image": rec.contains_image,
        "saturated": rec.saturated,
    }
    if rec.h0_at:
        out["h0_at"] = {str(k): v for k, v in rec.h0_at}
    if rec.parents:
        out["parents"] = list(rec.parents)
    return out


def pair_model_to_json(model: PairModel) -> dict:
    return {
        "dim_X": model.dim_X,
        "P": model.P.to_json(),
        "phi_nontrivial": model.phi_nontrivial,
        "subobjects": [record_to_json(r) for r in model.subobjects],
    }
