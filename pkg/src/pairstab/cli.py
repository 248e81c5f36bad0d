"""Batch command-line front end.

One command per invocation; models arrive as JSON documents (file path or
stdin), reports leave as JSON on stdout.  Exit codes: 0 success, 1 invalid
input (with per-field diagnostics), 2 internal error.  Rationals are always
"num/den" strings so output is exact and byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from . import git as git_mod
from . import systems as systems_mod
from . import walls as walls_mod
from .pair_model import pair_model_from_json, validate
from .polynomial import RatPoly, cmp_eventual, rational_str
from .stability import Status, check_semistable, jordan_holder, purity_violations
from .systems import system_model_from_json


class InputError(ValueError):
    """Invalid input document; carries per-field diagnostics."""

    def __init__(self, diagnostics):
        if isinstance(diagnostics, str):
            diagnostics = [diagnostics]
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


def _load_document(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from exc
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON: {exc}") from exc


def _reject_float(text):
    raise InputError(f"floating point literal {text!r} is not allowed; use \"num/den\" strings")


def _field(doc, name, parser):
    if name not in doc:
        raise InputError(f"missing field '{name}'")
    try:
        return parser(doc[name])
    except InputError:
        raise
    except (ValueError, TypeError) as exc:
        raise InputError(f"field '{name}': {exc}") from exc


def _optional_field(doc, name, parser):
    if name not in doc or doc[name] is None:
        return None
    try:
        return parser(doc[name])
    except (ValueError, TypeError) as exc:
        raise InputError(f"field '{name}': {exc}") from exc


def _pair_model(doc):
    model = _field(doc, "model", pair_model_from_json)
    problems = validate(model)
    if problems:
        raise InputError([f"model: {p}" for p in problems])
    return model


def _explain_records(model, delta):
    from .pair_model import subobject_rank
    from .polynomial import rank_of

    r = rank_of(model.P)
    out = []
    for idx, rec in enumerate(model.subobjects):
        r_sub = subobject_rank(rec.P_F, model.P)
        lhs = rec.P_F + delta if rec.contains_image else rec.P_F
        rhs = (model.P + delta) * (r_sub / r)
        out.append(
            {
                "record": idx,
                "saturated": rec.saturated,
                "lhs": lhs.to_json(),
                "rhs": rhs.to_json(),
                "relation": cmp_eventual(lhs, rhs).value,
            }
        )
    return out


def cmd_check(args) -> dict:
    doc = _load_document(args.input)
    model = _pair_model(doc)
    delta = _field(doc, "delta", RatPoly.from_json)
    verdict = check_semistable(model, delta)
    report = verdict.to_json()
    report["passes"] = verdict.passes(strict=args.strict)
    report["purity_violations"] = purity_violations(model, delta)
    if args.explain:
        report["records"] = _explain_records(model, delta)
    return report


def cmd_jh(args) -> dict:
    doc = _load_document(args.input)
    model = _pair_model(doc)
    delta = _field(doc, "delta", RatPoly.from_json)
    verdict = check_semistable(model, delta)
    graded = jordan_holder(model, delta)
    report = {"status": verdict.status.value, "graded": graded.to_json()["factors"]}
    return report


def cmd_walls(args) -> dict:
    doc = _load_document(args.input)
    model = _pair_model(doc)
    ray_doc = _field(doc, "ray", dict)
    base = _field(ray_doc, "base", RatPoly.from_json)
    try:
        ray = walls_mod.DeltaRay(base)
    except ValueError as exc:
        raise InputError(f"ray: {exc}") from exc
    report = walls_mod.chamber_report(model, ray).to_json()
    try:
        t_star = walls_mod.delta_max_on_ray(model, ray)
        report["delta_max_t"] = rational_str(t_star) if t_star is not None else None
    except walls_mod.ChamberConsistencyError as exc:
        report["delta_max_t"] = None
        report["delta_max_note"] = str(exc)
    if args.grid_check:
        report["grid_check"] = walls_mod.sampling_check(model, ray, args.grid_check)
    return report


def cmd_git(args) -> dict:
    doc = _load_document(args.input)
    point = _field(doc, "point", git_mod.git_point_from_json)
    verdict = git_mod.git_verdict(point)
    report = verdict.to_json()
    report["passes"] = verdict.passes(strict=args.strict)
    weight = _optional_field(doc, "weight", git_mod.weight_vector_from_json)
    if weight is not None:
        report["pairing"] = rational_str(git_mod.git_pairing(point, weight))
    if args.explain:
        report["subspaces"] = [
            {
                "record": idx,
                "lhs": rational_str(s.dim_U * (point.n1 * point.rho - point.n2)),
                "rhs": rational_str(
                    point.p * (point.n1 * s.psi_U - (point.n2 if s.eps_U else 0))
                ),
                "holds": git_mod.git_check_subspace(point, s, strict=args.strict),
            }
            for idx, s in enumerate(point.subspaces)
        ]
    return report


def cmd_bounds(args) -> dict:
    doc = _load_document(args.input)
    report: dict = {}
    constants = None
    if "constants" in doc:
        c = doc["constants"]
        constants = bounds_mod.AmbientConstants(
            alpha_d=_field(c, "alpha_d", Fraction),
            alpha_dm1=_field(c, "alpha_dm1", Fraction),
            mu_min_D=_field(c, "mu_min_D", Fraction),
        )
    if "mu_from_muhat" in doc:
        q = doc["mu_from_muhat"]
        if constants is None:
            raise InputError("mu_from_muhat requires 'constants'")
        report["mu"] = rational_str(
            bounds_mod.mu_from_muhat(_field(q, "muhat", Fraction), constants)
        )
    if "bound_C" in doc:
        q = doc["bound_C"]
        if constants is None:
            raise InputError("bound_C requires 'constants'")
        report["C"] = rational_str(
            bounds_mod.bound_C(
                _field(q, "mu_P", Fraction), _field(q, "r", Fraction), constants
            )
        )
    if "simpson" in doc:
        q = doc["simpson"]
        report["h0_bound"] = rational_str(
            bounds_mod.simpson_h0_bound(
                r=_field(q, "r", int),
                d=_field(q, "d", int),
                muhat_max=_field(q, "muhat_max", Fraction),
                muhat=_field(q, "muhat", Fraction),
                m=_field(q, "m", Fraction),
            )
        )
    if "section_criteria" in doc:
        q = doc["section_criteria"]
        model = _pair_model(q)
        delta = _field(q, "delta", RatPoly.from_json)
        m = _field(q, "m", int)
        crit = bounds_mod.check_section_criteria(model, delta, m)
        report["section_criteria"] = {
            "cond_ii": crit.cond_ii.to_json(),
            "cond_iii": crit.cond_iii.to_json(),
        }
    if not report:
        raise InputError(
            "bounds document must contain one of mu_from_muhat, bound_C, simpson, section_criteria"
        )
    return report


def cmd_systems(args) -> dict:
    doc = _load_document(args.input)
    model = _field(doc, "model", system_model_from_json)
    alpha = _field(doc, "alpha", RatPoly.from_json)
    if args.sub == "check":
        verdict = systems_mod.check_system_semistable(model, alpha)
        report = verdict.to_json()
        report["passes"] = verdict.passes(strict=args.strict)
        return report
    if args.sub == "to-pair":
        pair, delta = systems_mod.system_to_pair(model, alpha)
        from .pair_model import pair_model_to_json

        return {"model": pair_model_to_json(pair), "delta": delta.to_json()}
    if args.sub == "walls":
        pair, base = systems_mod.system_to_pair(model, alpha)
        ray = walls_mod.DeltaRay(base)
        report = walls_mod.chamber_report(pair, ray).to_json()
        if args.grid_check:
            report["grid_check"] = walls_mod.sampling_check(pair, ray, args.grid_check)
        return report
    raise InputError(f"unknown systems subcommand {args.sub!r}")


def _selftest_identities(trials: int = 120, seed: int = 20240) -> int:
    """Built-in symbolic identity suite; returns the number verified."""
    rng = random.Random(seed)
    verified = 0

    def rand_poly(max_deg, positive_lead=True):
        deg = rng.randint(0, max_deg)
        coeffs = [Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2])) for _ in range(deg)]
        lead = Fraction(rng.randint(1, 4)) if positive_lead else Fraction(rng.randint(-4, 4))
        return RatPoly(coeffs + [lead])

    for _ in range(trials):
        P = rand_poly(3)
        delta = rand_poly(max(P.degree - 1, 0))
        m = rng.randint(1, 6)
        while P.evaluate(m) <= 0 or P.evaluate(m) + delta.evaluate(m) == 0:
            m += 1
        P_FU = rand_poly(P.degree)
        dim_U = rng.randint(1, 8)
        eps = rng.choice([True, False])
        if not git_mod.verify_ratio_substitution(P, delta, m, dim_U, eps, P_FU):
            raise RuntimeError("ratio substitution identity failed")
        verified += 1

    for p in range(2, 7):
        for _ in range(10):
            cs = [Fraction(rng.randint(0, 3)) for _ in range(p - 1)]
            gamma = [Fraction(0)] * p
            for i, c in enumerate(cs, start=1):
                for k in range(p):
                    gamma[k] += c * git_mod.special_gamma(i, p)[k]
            back = git_mod.decompose_weight_vector(gamma)
            if tuple(back) != tuple(cs):
                raise RuntimeError("weight vector decomposition failed")
            verified += 1

    for r in range(1, 5):
        for p in range(1, 9):
            for j in range(r + 1):
                for i in range(p + 1):
                    if systems_mod.special_vector_pairing(j, r, i, p) != systems_mod.product_weight(
                        i, j, p, r
                    ):
                        raise RuntimeError("product weight pairing failed")
                    verified += 1
    return verified


def cmd_selftest(args) -> dict:
    n = _selftest_identities()
    print(f"identities verified: {n}")
    return {}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairstab",
        description="Stability of framed pairs and coherent systems, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, with_input=True, grid=False, subchoices=None):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--strict", action="store_true", help="require strict inequalities")
        sp.add_argument(
            "--explain", action="store_true", help="include per-record comparison detail"
        )
        if grid:
            sp.add_argument(
                "--grid-check",
                type=int,
                metavar="N",
                help="cross-validate walls against an N-denominator grid scan",
            )
        if subchoices:
            sp.add_argument("sub", choices=subchoices, help="operation")
        if with_input:
            sp.add_argument("input", nargs="?", default="-", metavar="FILE|-")
        return sp

    add("check", cmd_check, "semistability verdict for a pair model")
    add("jh", cmd_jh, "Jordan-Hoelder graded object of a semistable pair")
    add("walls", cmd_walls, "chamber structure along a parameter ray", grid=True)
    add("git", cmd_git, "GIT verdict for a framed quotient point")
    add("bounds", cmd_bounds, "slope bounds and section-count criteria")
    add(
        "systems",
        cmd_systems,
        "coherent system commands",
        grid=True,
        subchoices=["check", "to-pair", "walls"],
    )
    add("selftest", cmd_selftest, "run the built-in symbolic identity suite", with_input=False)
    return parser


def _emit(report: dict) -> None:
    if report:
        print(json.dumps(report, sort_keys=True, separators=(",", ": "), indent=1))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except InputError as exc:
        print(
            json.dumps({"error": "invalid input", "diagnostics": exc.diagnostics}),
            file=sys.stderr,
        )
        return 1
    except (ValueError, IndexError, KeyError) as exc:
        print(json.dumps({"error": "invalid input", "diagnostics": [str(exc)]}), file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - final CLI guard
        print(json.dumps({"error": "internal error", "detail": str(exc)}), file=sys.stderr)
        return 2
    _emit(report)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
