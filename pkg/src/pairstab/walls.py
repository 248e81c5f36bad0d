"""Chamber structure of the stability verdict along a one-parameter ray.

The ray is delta(t) = t * base for t >= 0.  For each saturated record the
margin

    f_t = (r'/r)(P + t*base) - P_F - eps * t * base

is a polynomial whose coefficients are affine in t, so its eventual sign is
piecewise constant in t with breakpoints among the roots of those affine
coefficients.  Walls are the breakpoints where the comparison changes sign
or touches equality; verdicts are constant on the open intervals between
consecutive walls.

Because the eventual order is lexicographic, a sign change need not pass
through equality: the margin can jump from negative to positive while a
lower coefficient keeps it nonzero at the wall itself.  Such jump walls are
reported as SignFlip; equality walls as BecomesEqual.  The textbook nesting
of semistable loci across a wall holds at every equality-type wall and is
reported, not assumed, for the jump type.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .pair_model import PairModel, subobject_rank, validate
from .polynomial import RatPoly, Rational, rank_of, rational_str, sign_eventual
from .stability import Status, Verdict, _is_vacuous, check_semistable, purity_violations


class ChamberConsistencyError(RuntimeError):
    """A sampled consequence of the chamber theorem failed on this model."""


@dataclass(frozen=True)
class DeltaRay:
    """The ray t -> t * base of stability parameters, base eventually positive."""

    base: RatPoly

    def __post_init__(self):
        if sign_eventual(self.base) <= 0:
            raise ValueError("ray base must be eventually positive")

    def delta_at(self, t: Rational) -> RatPoly:
        return self.base * Fraction(t)


class WallKind(Enum):
    BECOMES_EQUAL = "BecomesEqual"
    SIGN_FLIP = "SignFlip"


@dataclass(frozen=True)
class Wall:
    t: Fraction
    record: int
    kind: WallKind

    def to_json(self) -> dict:
        return {"t": rational_str(self.t), "record": self.record, "kind": self.kind.value}


@dataclass(frozen=True)
class Segment:
    """One piece of the ray: either a wall point or an open interval.

    ``hi`` is None for the final unbounded interval; ``lo_closed`` marks the
    initial interval containing t = 0.
    """

    lo: Fraction
    hi: Optional[Fraction]
    is_wall: bool
    status: Status

    def to_json(self) -> dict:
        if self.is_wall:
            return {"type": "wall", "t": rational_str(self.lo), "status": self.status.value}
        return {
            "type": "interval",
            "lo": rational_str(self.lo),
            "hi": rational_str(self.hi) if self.hi is not None else None,
            "status": self.status.value,
        }


@dataclass(frozen=True)
class WallInclusion:
    """Nesting report at one wall: chamber-semistable implies wall-semistable
    and wall-stable implies chamber-stable, checked on both sides."""

    t: Fraction
    semistable_nesting: bool
    stable_nesting: bool

    def to_json(self) -> dict:
        return {
            "t": rational_str(self.t),
            "semistable_nesting": self.semistable_nesting,
            "stable_nesting": self.stable_nesting,
        }


@dataclass(frozen=True)
class ChamberReport:
    walls: tuple
    segments: tuple
    inclusions: tuple

    def to_json(self) -> dict:
        return {
            "walls": [w.to_json() for w in self.walls],
            "segments": [s.to_json() for s in self.segments],
            "inclusions": [i.to_json() for i in self.inclusions],
        }


def _record_margin_coeffs(model: PairModel, ray: DeltaRay, idx: int) -> Tuple[RatPoly, RatPoly]:
    """The margin f_t = A + t*B of one record, as two polynomials."""
    rec = model.subobjects[idx]
    r = rank_of(model.P)
    r_sub = subobject_rank(rec.P_F, model.P)
    eps = 1 if rec.contains_image else 0
    A = model.P * (r_sub / r) - rec.P_F
    B = ray.base * (r_sub / r - eps)
    return A, B


def _margin_sign_at(A: RatPoly, B: RatPoly, t: Fraction) -> int:
    return sign_eventual(A + B * t)


def _require_usable(model: PairModel, ray: DeltaRay) -> None:
    problems = validate(model)
    if problems:
        raise ValueError("invalid pair model: " + "; ".join(problems))
    if ray.base.degree >= model.dim_X:
        raise ValueError(
            f"ray base degree {ray.base.degree} must be < dim_X = {model.dim_X}"
        )


def wall_ts(model: PairModel, ray: DeltaRay) -> List[Wall]:
    """All critical parameters t >= 0 of the ray, sorted by (t, record).

    Per record the candidates are the roots of the affine coefficients of
    the margin; a candidate is a wall when the eventual comparison flips
    across it or touches equality at it.  At most (d+1) walls per record.
    """
    _require_usable(model, ray)
    walls: List[Wall] = []
    for idx, rec in enumerate(model.subobjects):
        if not rec.saturated or _is_vacuous(rec):
            continue
        A, B = _record_margin_coeffs(model, ray, idx)
        candidates = sorted(
            {
                -A.coefficient(k) / B.coefficient(k)
                for k in range(max(A.degree, B.degree) + 1)
                if B.coefficient(k) != 0
            }
        )
        candidates = [t for t in candidates if t >= 0]
        for pos, t0 in enumerate(candidates):
            left = candidates[pos - 1] if pos > 0 else None
            right = candidates[pos + 1] if pos + 1 < len(candidates) else None
            s_at = _margin_sign_at(A, B, t0)
            t_right = (t0 + right) / 2 if right is not None else t0 + 1
            s_right = _margin_sign_at(A, B, t_right)
            if t0 > 0:
                t_left = (t0 + left) / 2 if left is not None else t0 / 2
                s_left = _margin_sign_at(A, B, t_left)
            else:
                s_left = None
            changes = (s_left is not None and s_left != s_right) or (
                s_left is None and s_at != s_right
            )
            if s_at == 0:
                # The record achieves equality: strictly semistable locus.
                walls.append(Wall(t0, idx, WallKind.BECOMES_EQUAL))
            elif changes:
                # Lexicographic jump: the comparison flips without equality.
                walls.append(Wall(t0, idx, WallKind.SIGN_FLIP))
    walls.sort(key=lambda w: (w.t, w.record))
    return walls


def _status_at(model: PairModel, ray: DeltaRay, t: Rational) -> Status:
    return check_semistable(model, ray.delta_at(t)).status


def chamber_report(model: PairModel, ray: DeltaRay) -> ChamberReport:
    """Statuses on every wall and every open interval between walls.

    Interval statuses are sampled at two interior points which must agree
    (they do whenever the walls are exactly the critical values, so a
    disagreement raises).  Inclusion nesting across each wall is reported.
    """
    walls = wall_ts(model, ray)
    ts = sorted({w.t for w in walls})
    segments: List[Segment] = []

    def interval_status(lo: Fraction, hi: Optional[Fraction]) -> Status:
        if hi is None:
            s1, s2 = lo + 1, lo + 2
        else:
            gap = hi - lo
            s1, s2 = lo + gap / 3, lo + 2 * gap / 3
        st1, st2 = _status_at(model, ray, s1), _status_at(model, ray, s2)
        if st1 is not st2:
            raise ChamberConsistencyError(
                f"status not constant on the interval ({lo}, {hi}): {st1} vs {st2}"
            )
        return st1

    lo = Fraction(0)
    if not ts or ts[0] > 0:
        first_hi = ts[0] if ts else None
        segments.append(Segment(lo, first_hi, False, interval_status(lo, first_hi)))
    for i, t in enumerate(ts):
        segments.append(Segment(t, t, True, _status_at(model, ray, t)))
        hi = ts[i + 1] if i + 1 < len(ts) else None
        segments.append(Segment(t, hi, False, interval_status(t, hi)))

    inclusions = []
    for t in ts:
        at = _status_at(model, ray, t)
        sides = [
            seg.status
            for seg in segments
            if not seg.is_wall and (seg.hi == t or seg.lo == t)
        ]
        ss_ok = all(side is Status.UNSTABLE or at is not Status.UNSTABLE for side in sides)
        st_ok = at is not Status.STABLE or all(side is Status.STABLE for side in sides)
        inclusions.append(WallInclusion(t, ss_ok, st_ok))

    return ChamberReport(tuple(walls), tuple(segments), tuple(inclusions))


def delta_max_on_ray(model: PairModel, ray: DeltaRay) -> Optional[Fraction]:
    """The largest wall t*, beyond which the verdict is frozen; None if no walls.

    Past t* the verdict must match the large-parameter criterion: semistable
    exactly when no proper saturated record of rank 0 < r' < r carries the
    framing image and no purity violation exists.  This equality is checked,
    not assumed; it can genuinely fail when the ray grows too slowly (base
    degree below deg P - 1) to dominate a slope defect, and then a
    ChamberConsistencyError reports the mismatch.
    """
    walls = wall_ts(model, ray)
    if not walls:
        return None
    t_star = max(w.t for w in walls)
    probe = t_star + 1
    tail = _status_at(model, ray, probe)
    r = rank_of(model.P)
    eps_clear = all(
        not (rec.saturated and rec.contains_image and 0 < subobject_rank(rec.P_F, model.P) < r)
        for rec in model.subobjects
    )
    pure = not purity_violations(model, ray.delta_at(probe))
    criterion = eps_clear and pure
    if (tail is not Status.UNSTABLE) != criterion:
        raise ChamberConsistencyError(
            "tail verdict beyond the last wall disagrees with the large-parameter "
            f"criterion: status {tail.value} vs criterion {'semistable' if criterion else 'unstable'}"
        )
    return t_star


def sampling_check(
    model: PairModel, ray: DeltaRay, denominator: int = 1024
) -> dict:
    """Cross-validate wall_ts against a grid scan of the direct comparison.

    Independent route: statuses on the grid come from the per-record
    stability comparison at each sampled t, not from the affine-coefficient
    analysis.  Checks that every grid-visible sign change brackets a
    computed wall, that every computed wall is confirmed by local exact
    sampling, and reports the outcome.
    """
    if denominator < 1:
        raise ValueError("denominator must be positive")
    walls = wall_ts(model, ray)
    t_max = max((w.t for w in walls), default=Fraction(0)) + 1

    per_record: dict = {}
    for idx, rec in enumerate(model.subobjects):
        if not rec.saturated or _is_vacuous(rec):
            continue
        A, B = _record_margin_coeffs(model, ray, idx)
        per_record[idx] = (A, B)

    def record_sign(idx: int, t: Fraction) -> int:
        A, B = per_record[idx]
        return _margin_sign_at(A, B, t)

    grid_flips = []
    steps = int(t_max * denominator) + 1
    for idx in per_record:
        prev_t = Fraction(0)
        prev_s = record_sign(idx, prev_t)
        for k in range(1, steps + 1):
            t = Fraction(k, denominator)
            s = record_sign(idx, t)
            if s != prev_s:
                grid_flips.append((idx, prev_t, t))
            prev_t, prev_s = t, s

    wall_set = {(w.record, w.t) for w in walls}
    unmatched_flips = [
        flip
        for flip in grid_flips
        if not any(rec == flip[0] and flip[1] <= t <= flip[2] for rec, t in wall_set)
    ]

    unconfirmed = []
    for w in walls:
        A, B = per_record[w.record]
        s_at = _margin_sign_at(A, B, w.t)
        others = sorted({t for rec, t in wall_set if rec == w.record and t != w.t})
        below = max((t for t in others if t < w.t), default=None)
        above = min((t for t in others if t > w.t), default=None)
        left = (w.t + below) / 2 if below is not None else (w.t / 2 if w.t > 0 else None)
        right = (w.t + above) / 2 if above is not None else w.t + 1
        s_left = _margin_sign_at(A, B, left) if left is not None else None
        s_right = _margin_sign_at(A, B, right)
        changed = (s_left is not None and s_left != s_right) or (
            s_left is None and s_at != s_right
        )
        if not (changed or s_at == 0):
            unconfirmed.append(w)

    return {
        "agrees": not unmatched_flips and not unconfirmed,
        "denominator": denominator,
        "grid_flips": len(grid_flips),
        "unmatched_flips": [
            {"record": r, "lo": rational_str(lo), "hi": rational_str(hi)}
            for r, lo, hi in unmatched_flips
        ],
        "unconfirmed_walls": [w.to_json() for w in unconfirmed],
    }
