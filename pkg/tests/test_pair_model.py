import random

import pytest

from pairstab import (
    PairModel,
    RatPoly,
    SubobjectRecord,
    pair_model_from_json,
    pair_model_to_json,
    quotient_of,
    validate,
)
from pairstab.pair_model import subobject_rank

from model_gen import rand_pair_model

P = RatPoly([2, 2])  # 2x + 2


def model_with(*records, dim_X=1, P_amb=P, phi=True):
    return PairModel(dim_X=dim_X, P=P_amb, phi_nontrivial=phi, subobjects=records)


# -- validate ----------------------------------------------------------------


def test_validate_clean_model():
    m = model_with(SubobjectRecord(RatPoly([2, 1]), contains_image=False))
    assert validate(m) == []


def test_validate_flags_eventually_larger_record():
    m = model_with(SubobjectRecord(RatPoly([0, 3]), contains_image=False))
    problems = validate(m)
    assert any("record 0" in p and "eventually exceeds" in p for p in problems)


def test_validate_flags_epsilon_monotonicity():
    parent = SubobjectRecord(RatPoly([1, 1]), contains_image=False)
    child = SubobjectRecord(RatPoly([0, 1]), contains_image=True, parents=(0,))
    m = model_with(parent, child)
    problems = validate(m)
    assert any("monotonicity" in p for p in problems)


def test_validate_flags_ambient_record_and_degree():
    m = model_with(SubobjectRecord(P, contains_image=False))
    assert any("proper" in p for p in validate(m))
    m2 = PairModel(dim_X=1, P=RatPoly([1, 0, 1]), subobjects=())
    assert any("dim_X" in p for p in validate(m2))


def test_validate_flags_zero_record_with_image():
    m = model_with(SubobjectRecord(RatPoly(), contains_image=True))
    assert any("zero subobject" in p for p in validate(m))


def test_validate_flags_bad_parent_index():
    m = model_with(SubobjectRecord(RatPoly([0, 1]), contains_image=False, parents=(5,)))
    assert any("parent index" in p for p in validate(m))


def test_validate_flags_trivial_framing():
    m = model_with(phi=False)
    assert any("nontrivial framing" in p for p in validate(m))


# -- quotient correspondence -------------------------------------------------


def test_quotient_examples():
    m = model_with(
        SubobjectRecord(RatPoly([2, 1]), contains_image=False),
        SubobjectRecord(RatPoly(), contains_image=True),
        SubobjectRecord(RatPoly([1, 2]), contains_image=True),
    )
    q0 = quotient_of(m, 0)
    assert q0.P_G == RatPoly([0, 1]) and q0.eps_G is True
    q1 = quotient_of(m, 1)
    assert q1.P_G == P and q1.eps_G is False
    q2 = quotient_of(m, 2)
    assert q2.P_G == RatPoly([1]) and q2.eps_G is False


def test_quotient_bad_index():
    m = model_with()
    with pytest.raises(IndexError):
        quotient_of(m, 0)


def test_quotient_involution_and_additivity():
    rng = random.Random(7)
    for _ in range(50):
        m = rand_pair_model(rng)
        for i, rec in enumerate(m.subobjects):
            q = quotient_of(m, i)
            assert rec.P_F + q.P_G == m.P
            # kernel <-> quotient applied twice returns the original data
            back = PairModel(
                dim_X=m.dim_X,
                P=m.P,
                subobjects=(SubobjectRecord(q.P_G, contains_image=q.eps_G),),
            )
            qq = quotient_of(back, 0)
            assert qq.P_G == rec.P_F and qq.eps_G == rec.contains_image


def test_record_rank_convention():
    m = model_with(
        SubobjectRecord(RatPoly([2, 1]), contains_image=False),
        SubobjectRecord(RatPoly([3]), contains_image=False),
    )
    assert m.record_rank(0) == 1
    assert m.record_rank(1) == 0  # torsion: lower degree
    assert subobject_rank(RatPoly(), P) == 0


# -- lattice helpers ---------------------------------------------------------


def test_ancestors_transitive():
    m = model_with(
        SubobjectRecord(RatPoly([1, 1]), contains_image=False),
        SubobjectRecord(RatPoly([0, 1]), contains_image=False, parents=(0,)),
        SubobjectRecord(RatPoly([1]), contains_image=False, parents=(1,)),
    )
    assert m.ancestors(2) == {0, 1}
    assert m.ancestors(1) == {0}
    assert m.ancestors(0) == frozenset()


# -- JSON --------------------------------------------------------------------


def test_json_round_trip():
    m = model_with(
        SubobjectRecord(
            RatPoly([2, 1]),
            contains_image=False,
            saturated=True,
            h0_at={3: 5},
            parents=(),
        ),
        SubobjectRecord(RatPoly([1]), contains_image=True, saturated=False, parents=(0,)),
    )
    again = pair_model_from_json(pair_model_to_json(m))
    assert again == m
    assert again.subobjects[0].h0(3) == 5
    assert again.subobjects[0].h0(4) is None


def test_json_rejects_malformed():
    with pytest.raises(ValueError):
        pair_model_from_json({"dim_X": 1})
    with pytest.raises(ValueError):
        pair_model_from_json({"dim_X": 1, "P": ["x"]})
    with pytest.raises(ValueError):
        pair_model_from_json(
            {"dim_X": 1, "P": ["1/1"], "subobjects": [{"P_F": ["0/1"]}]}
        )
