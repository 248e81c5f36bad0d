"""Hilbert-Mumford weight calculus for framed quotient points.

A point is modeled by the two space dimensions p = P(m) and rho = P(l), the
linearization weights n1, n2 and finitely many subspace records (dim U,
psi(U) = dim q'(U tensor W), and the flag im a in U).  One-parameter
subgroups enter through weight vectors; stability reduces to one rational
inequality per subspace record, and that reduction is itself testable here:
the pairing is linear in the weight vector and every admissible vector
decomposes over the special ones.

The module also carries the bridge to the polynomial stability inequality:
the linearization ratio n2/n1, the l-symbolic subspace inequality, and the
exact substitution identity connecting the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .polynomial import RatPoly, Rational, parse_rational, rational_str
from .stability import Verdict, Witness, _aggregate


@dataclass(frozen=True)
class SubspaceRecord:
    """One nontrivial proper subspace U with its image dimension and flag."""

    dim_U: int
    psi_U: int
    eps_U: bool
    P_FU: Optional[RatPoly] = None


@dataclass(frozen=True)
class GitPointModel:
    p: int
    rho: int
    m: int
    l: int
    delta_m: Fraction
    delta_l: Fraction
    n1: Fraction
    n2: Fraction
    subspaces: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "delta_m", Fraction(self.delta_m))
        object.__setattr__(self, "delta_l", Fraction(self.delta_l))
        object.__setattr__(self, "n1", Fraction(self.n1))
        object.__setattr__(self, "n2", Fraction(self.n2))
        object.__setattr__(self, "subspaces", tuple(self.subspaces))
        if self.p <= 0:
            raise ValueError("p must be positive")
        if self.l < self.m:
            raise ValueError("l must be at least m")
        if self.n1 <= 0 or self.n2 <= 0:
            raise ValueError("linearization weights n1, n2 must be positive")
        for s in self.subspaces:
            if not 0 < s.dim_U < self.p:
                raise ValueError(f"subspace dimension {s.dim_U} must satisfy 0 < dim U < p")
            if s.psi_U > self.rho:
                raise ValueError(f"psi_U = {s.psi_U} exceeds rho = {self.rho}")


@dataclass(frozen=True)
class WeightVector:
    """A one-parameter subgroup: nondecreasing weights summing to zero,
    the image filtration psi (unit steps), and the framing index tau."""

    gamma: tuple
    psi: tuple
    tau: int

    def __post_init__(self):
        gamma = tuple(Fraction(g) for g in self.gamma)
        psi = tuple(int(v) for v in self.psi)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "psi", psi)
        p = len(gamma)
        if p == 0:
            raise ValueError("weight vector must be nonempty")
        if any(gamma[i] > gamma[i + 1] for i in range(p - 1)):
            raise ValueError("weights must be nondecreasing")
        if sum(gamma) != 0:
            raise ValueError("weights must sum to zero")
        if len(psi) != p + 1 or psi[0] != 0:
            raise ValueError("psi must run from psi(0) = 0 over p unit steps")
        if any(psi[i + 1] - psi[i] not in (0, 1) for i in range(p)):
            raise ValueError("psi steps must be 0 or 1")
        if not 1 <= self.tau <= p:
            raise ValueError("tau must index one of the weights")

    @property
    def p(self) -> int:
        return len(self.gamma)


def hm_weight_quot(w: WeightVector) -> Fraction:
    """Weight of the quotient datum: -sum gamma_i * (psi(i) - psi(i-1))."""
    return -sum(
        (w.gamma[i] * (w.psi[i + 1] - w.psi[i]) for i in range(w.p)), Fraction(0)
    )


def hm_weight_framing(w: WeightVector) -> Fraction:
    """Weight of the framing datum: the weight at the framing index tau."""
    return w.gamma[w.tau - 1]


def git_pairing(point: GitPointModel, w: WeightVector) -> Fraction:
    """n1 * weight(quotient) + n2 * weight(framing).

    The point is GIT-(semi)stable for this subgroup when the value is
    (positive) nonnegative.
    """
    if w.p != point.p:
        raise ValueError(f"weight vector has length {w.p}, point expects {point.p}")
    if w.psi[-1] != point.rho:
        raise ValueError(f"psi must reach rho = {point.rho}, got {w.psi[-1]}")
    return point.n1 * hm_weight_quot(w) + point.n2 * hm_weight_framing(w)


def special_gamma(i: int, p: int) -> tuple:
    """The i-th special weight vector: i-p repeated i times, then i."""
    if not 1 <= i <= p - 1:
        raise ValueError(f"special index must satisfy 1 <= i <= p-1, got i={i}, p={p}")
    return (Fraction(i - p),) * i + (Fraction(i),) * (p - i)


def decompose_weight_vector(gamma: Sequence[Rational]) -> tuple:
    """Nonnegative coefficients expressing gamma over the special vectors.

    Solves the triangular system c_i = (gamma_{i+1} - gamma_i) / p; the
    reconstruction sum c_i * gamma^(i) is exact.
    """
    gamma = tuple(Fraction(g) for g in gamma)
    p = len(gamma)
    if p == 0:
        raise ValueError("weight vector must be nonempty")
    if any(gamma[i] > gamma[i + 1] for i in range(p - 1)):
        raise ValueError("weights must be nondecreasing")
    if sum(gamma) != 0:
        raise ValueError("weights must sum to zero")
    return tuple((gamma[i + 1] - gamma[i]) / p for i in range(p - 1))


def subspace_weight_vector(point: GitPointModel, s: SubspaceRecord) -> WeightVector:
    """The special weight vector adapted to one subspace record.

    gamma is the special vector at i = dim U; psi climbs to psi_U within the
    first dim U steps and on to rho afterwards; tau sits at dim U when the
    framing image lies inside U and at p otherwise.  Requires rho <= p and a
    feasible climb (psi_U <= dim U and rho - psi_U <= p - dim U).
    """
    i = s.dim_U
    if s.psi_U > i:
        raise ValueError("psi_U exceeds dim U: no unit-step filtration exists")
    if point.rho - s.psi_U > point.p - i:
        raise ValueError("rho unreachable by unit steps after dim U")
    psi = [min(k, s.psi_U) for k in range(i + 1)]
    psi += [min(s.psi_U + (k - i), point.rho) for k in range(i + 1, point.p + 1)]
    return WeightVector(
        gamma=special_gamma(i, point.p),
        psi=tuple(psi),
        tau=i if s.eps_U else point.p,
    )


def git_check_subspace(point: GitPointModel, s: SubspaceRecord, strict: bool = False) -> bool:
    """The per-subspace stability inequality:

        dim U * (n1 rho - n2)  (<=)  p * (n1 psi_U - eps_U n2).
    """
    lhs = s.dim_U * (point.n1 * point.rho - point.n2)
    rhs = point.p * (point.n1 * s.psi_U - (point.n2 if s.eps_U else 0))
    return lhs < rhs if strict else lhs <= rhs


def git_verdict(point: GitPointModel) -> Verdict:
    """Aggregate the subspace inequalities into a three-valued verdict."""
    if not point.subspaces:
        raise ValueError("a GIT verdict needs at least one subspace record")
    comparisons = []
    for idx, s in enumerate(point.subspaces):
        lhs = s.dim_U * (point.n1 * point.rho - point.n2)
        rhs = point.p * (point.n1 * s.psi_U - (point.n2 if s.eps_U else 0))
        comparisons.append((idx, RatPoly.constant(lhs), RatPoly.constant(rhs)))
    return _aggregate(comparisons)


def linearization_ratio(P: RatPoly, delta: RatPoly, m: int, l: int) -> Fraction:
    """The ratio n2/n1 matching GIT stability with the polynomial inequality:

        (P(l) delta(m) - delta(l) P(m)) / (P(m) + delta(m)).
    """
    den = P.evaluate(m) + delta.evaluate(m)
    if den == 0:
        raise ValueError("P(m) + delta(m) must be nonzero")
    return (P.evaluate(l) * delta.evaluate(m) - delta.evaluate(l) * P.evaluate(m)) / den


def eqconstr3_margin(
    P: RatPoly, delta: RatPoly, m: int, dim_U: int, eps: bool, P_FU: RatPoly
) -> RatPoly:
    """Right minus left of the l-symbolic subspace inequality:

        P (dim U + eps delta(m)) + delta (dim U - eps P(m))
            (<=)  P_FU (P(m) + delta(m)).
    """
    e = 1 if eps else 0
    lhs = P * (dim_U + e * delta.evaluate(m)) + delta * (dim_U - e * P.evaluate(m))
    rhs = P_FU * (P.evaluate(m) + delta.evaluate(m))
    return rhs - lhs


def eqconstr3_check(
    P: RatPoly,
    delta: RatPoly,
    m: int,
    dim_U: int,
    eps: bool,
    P_FU: RatPoly,
    strict: bool = False,
) -> bool:
    """Evaluate the l-symbolic subspace inequality in the eventual order."""
    margin = eqconstr3_margin(P, delta, m, dim_U, eps, P_FU)
    zero = RatPoly()
    return margin > zero if strict else margin >= zero


def verify_ratio_substitution(
    P: RatPoly, delta: RatPoly, m: int, dim_U: int, eps: bool, P_FU: RatPoly
) -> bool:
    """Confirm the substitution identity between the two subspace inequalities.

    Scale (n1, n2) by P(m) + delta(m) so the linearization ratio clears its
    denominator: n1 := P(m) + delta(m), n2(l) := P(l) delta(m) - delta(l) P(m),
    both read as polynomials in l.  Substituted into

        dim U (n1 P(l) - n2)  (<=)  P(m) (n1 P_FU(l) - eps n2)

    the margin must be exactly P(m) times the l-symbolic margin, a positive
    scalar multiple.  Returns True iff the polynomial identity holds and the
    scalar P(m) is positive.
    """
    Pm = P.evaluate(m)
    dm = delta.evaluate(m)
    if Pm + dm == 0:
        raise ValueError("P(m) + delta(m) must be nonzero")
    e = 1 if eps else 0
    n1 = Pm + dm
    n2 = P * dm - delta * Pm
    lhs2 = dim_U * (n1 * P - n2)
    rhs2 = Pm * (n1 * P_FU - e * n2)
    margin2 = rhs2 - lhs2
    margin3 = eqconstr3_margin(P, delta, m, dim_U, eps, P_FU)
    return Pm > 0 and margin2 == Pm * margin3


# -- JSON wire format -------------------------------------------------------


def subspace_from_json(data) -> SubspaceRecord:
    if not isinstance(data, dict):
        raise ValueError(f"subspace record must be a JSON object, got {data!r}")
    try:
        P_FU = data.get("P_FU")
        return SubspaceRecord(
            dim_U=int(data["dim_U"]),
            psi_U=int(data["psi_U"]),
            eps_U=bool(data["eps_U"]),
            P_FU=RatPoly.from_json(P_FU) if P_FU is not None else None,
        )
    except KeyError as exc:
        raise ValueError(f"subspace record missing field {exc}") from exc


def git_point_from_json(data) -> GitPointModel:
    if not isinstance(data, dict):
        raise ValueError(f"GIT point must be a JSON object, got {data!r}")
    try:
        return GitPointModel(
            p=int(data["p"]),
            rho=int(data["rho"]),
            m=int(data["m"]),
            l=int(data["l"]),
            delta_m=parse_rational(data["delta_m"]),
            delta_l=parse_rational(data["delta_l"]),
            n1=parse_rational(data["n1"]),
            n2=parse_rational(data["n2"]),
            subspaces=tuple(subspace_from_json(s) for s in data.get("subspaces", [])),
        )
    except KeyError as exc:
        raise ValueError(f"GIT point missing field {exc}") from exc


def weight_vector_from_json(data) -> WeightVector:
    if not isinstance(data, dict):
        raise ValueError(f"weight vector must be a JSON object, got {data!r}")
    try:
        return WeightVector(
            gamma=tuple(parse_rational(g) for g in data["gamma"]),
            psi=tuple(int(v) for v in data["psi"]),
            tau=int(data["tau"]),
        )
    except KeyError as exc:
        raise ValueError(f"weight vector missing field {exc}") from exc


def weight_vector_to_json(w: WeightVector) -> dict:
    return {
        "gamma": [rational_str(g) for g in w.gamma],
        "psi": list(w.psi),
        "tau": w.tau,
    }
