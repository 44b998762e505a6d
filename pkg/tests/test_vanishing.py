import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from flagbott.bott import DimensionError
from flagbott.partitions import Partition, PartitionError, partitions_of, transpose
from flagbott.vanishing import (
    Hook,
    SchurDet,
    SchurLambda,
    SymDet,
    TensorMix,
    VanishingQuery,
    WedgePower,
    ampleness_implication,
    audit_tensor,
    bundle_rank,
    certify,
    classical,
    cor_1_2,
    cor_1_2_lambda,
    delta,
    hook_vanishing,
    parse_bundle,
    schur_weight,
    thm_1_1,
)


def by_theorem(verdicts):
    return {v.theorem: v for v in verdicts}


# -- delta -------------------------------------------------------------------------


@pytest.mark.parametrize("x, expected", [(0, 1), (1, 2), (2, 2), (3, 3), (5, 3), (6, 4), (9, 4), (10, 5)])
def test_delta_examples(x, expected):
    assert delta(x) == expected


def test_delta_defining_inequalities():
    prev = 1
    for x in range(2000):
        t = delta(x)
        assert comb(t, 2) <= x < comb(t + 1, 2)
        assert t >= prev
        prev = t
    for t in range(1, 101):
        assert delta(comb(t, 2)) == t
    with pytest.raises(ValueError):
        delta(-1)


# -- Theorem-style thresholds ---------------------------------------------------------


def test_thm_1_1_examples():
    v = thm_1_1(VanishingQuery(3, 4, 3, 3, SchurLambda(Partition((2, 1)))))
    assert (v.value, v.threshold, v.satisfied, v.vacuous) == (3, 7, False, False)
    v = thm_1_1(VanishingQuery(3, 1, 2, 2, SchurLambda(Partition((1,)))))
    assert v.threshold == 0 and v.satisfied
    v = thm_1_1(VanishingQuery(3, 1, 2, 1, SchurLambda(Partition((1,)))))
    assert not v.satisfied  # p + q = n is not enough
    for r in range(1, 6):
        v = thm_1_1(VanishingQuery(4, 6, 4, 4, SchurLambda(Partition((r,)))))
        assert v.threshold == r * (6 - r)


def test_thm_1_1_vacuous_when_zero():
    v = thm_1_1(VanishingQuery(2, 2, 0, 0, SchurLambda(Partition((3,)))))
    assert v.vacuous and v.satisfied
    assert certify(VanishingQuery(2, 2, 0, 0, WedgePower(3))).certified


def test_cor_1_2_examples():
    v = cor_1_2(VanishingQuery(3, 2, 3, 3, TensorMix((1,), ())))
    assert v.threshold == 1 and v.satisfied
    v = cor_1_2(VanishingQuery(3, 4, 3, 3, TensorMix((), (4,))))
    assert v.threshold == 0
    v = cor_1_2(VanishingQuery(3, 4, 3, 3, TensorMix((), (5,))))
    assert v.vacuous
    assert cor_1_2(VanishingQuery(3, 4, 3, 3, WedgePower(2))) is None
    assert cor_1_2_lambda((2,), (3, 1)) == transpose((3, 1, 1, 1))


def test_cor_1_2_agrees_with_thm_1_1_on_wedge_powers():
    for n in range(1, 9):
        for d in range(1, 9):
            for s in range(1, 9):
                for p, q in itertools.product(range(n + 1), repeat=2):
                    a = cor_1_2(VanishingQuery(n, d, p, q, TensorMix((), (s,))))
                    b = thm_1_1(VanishingQuery(n, d, p, q, SchurLambda(Partition((s,)))))
                    assert (a.satisfied, a.vacuous) == (b.satisfied, b.vacuous)
                    assert a.threshold == b.threshold


def test_cor_1_2_without_symmetric_factors_matches_sommese_form():
    for d in range(1, 7):
        for s in itertools.combinations_with_replacement(range(1, d + 1), 2):
            q = VanishingQuery(5, d, 5, 5, TensorMix((), s))
            four = by_theorem(classical(q))["2.4"]
            assert four.threshold == cor_1_2(q).threshold


def test_classical_examples():
    for d in range(1, 6):
        for r in range(1, d + 1):
            vs = by_theorem(classical(VanishingQuery(4, d, 4, d - r, WedgePower(r)))) if d - r <= 4 else {}
            if vs:
                assert not vs["2.2"].satisfied
    vs = by_theorem(classical(VanishingQuery(3, 3, 3, 1, SymDet(2))))
    assert vs["2.5"].satisfied
    vs = by_theorem(classical(VanishingQuery(3, 3, 3, 1, SchurDet(Partition((2, 1)), 2))))
    assert vs["2.6"].satisfied
    vs = by_theorem(classical(VanishingQuery(3, 3, 2, 1, SchurDet(Partition((2, 1)), 2))))
    assert "2.6" not in vs
    vs = by_theorem(classical(VanishingQuery(3, 1, 2, 2, SchurLambda(Partition((1,))))))
    assert vs["2.1"].satisfied


def test_classical_rank_zero():
    vs = classical(VanishingQuery(2, 2, 0, 0, Hook(0, 3)))
    assert [v.theorem for v in vs] == ["zero"] and vs[0].vacuous


def test_hook_examples():
    for n, d, k, p in itertools.product(range(1, 6), range(1, 6), range(1, 8), range(6)):
        if p > n:
            continue
        q = VanishingQuery(n, d, p, 0, Hook(0, k))
        v = hook_vanishing(q)
        if d - k < 0:
            assert v.vacuous
        else:
            assert v.threshold == delta(n - p) * (d - k)
        if k > d:
            continue
        # alpha = k - d
        alpha = k - d
        if 0 <= alpha < k:
            v = hook_vanishing(VanishingQuery(n, d, p, 0, Hook(alpha, k)))
            assert v.threshold == (delta(n - p) - 1) * (k - d)
    v = hook_vanishing(VanishingQuery(3, 3, 3, 1, SymDet(1)))
    assert v.threshold == 0 and v.satisfied


def test_schur_weights_and_ranks():
    assert schur_weight(SymDet(2), 3) == (3, 1, 1)
    assert schur_weight(SchurDet(Partition((2, 1)), 1), 3) == (3, 2, 1)
    assert schur_weight(Hook(1, 3), 5) == (2, 1)
    assert schur_weight(TensorMix((1,), (1,)), 3) is None
    assert bundle_rank(TensorMix((2,), (1,)), 3) == 18
    assert bundle_rank(WedgePower(4), 3) == 0
    assert bundle_rank(SymDet(2), 3) == 6


def test_bundle_validation():
    with pytest.raises(PartitionError):
        SchurLambda(Partition(()))
    with pytest.raises(PartitionError):
        Hook(3, 3)
    with pytest.raises(PartitionError):
        TensorMix((), ())
    with pytest.raises(PartitionError):
        TensorMix((0,), ())
    with pytest.raises(DimensionError):
        VanishingQuery(2, 2, 3, 0, WedgePower(1))


# -- ampleness --------------------------------------------------------------------


def test_ampleness_examples():
    assert ampleness_implication((2, 1), (1, 1, 1))
    for k in range(1, 6):
        assert ampleness_implication((1,), (k,)) and ampleness_implication((k,), (1,))
    with pytest.raises(PartitionError):
        ampleness_implication((), (1,))


small = st.integers(1, 8).flatmap(lambda n: st.sampled_from(list(partitions_of(n))))


@given(small, small, small)
def test_ampleness_is_transitive(a, b, c):
    if ampleness_implication(a, b) and ampleness_implication(b, c):
        assert ampleness_implication(a, c)


# -- certificates and audits ---------------------------------------------------------


def test_certificate_is_deterministic_and_sorted():
    q = VanishingQuery(3, 3, 3, 1, SymDet(2))
    a, b = certify(q).to_json(), certify(q).to_json()
    assert a == b
    names = [v["theorem"] for v in a["verdicts"]]
    assert names == sorted(names)
    assert a["certified"]


def test_audit_tensor():
    out = audit_tensor((1,), (2,), 3)
    assert out["lambda"] == [2, 1]
    assert out["lambda_is_summand"] and out["optimal"]
    assert {tuple(r["partition"]) for r in out["summands"]} == {(2, 1), (1, 1, 1)}


def test_audit_optimal_on_small_cases():
    for d in range(1, 5):
        for k in [(), (1,), (2,), (1, 1)]:
            for s in [(), (1,), (2,), (1, 2)]:
                if not k and not s or any(x > d for x in s):
                    continue
                assert audit_tensor(k, s, d)["optimal"], (k, s, d)


@pytest.mark.parametrize(
    "text, bundle",
    [
        ("schur:2,1", SchurLambda(Partition((2, 1)))),
        ("wedge:2", WedgePower(2)),
        ("symdet:3", SymDet(3)),
        ("hook:1,4", Hook(1, 4)),
        ("schurdet:2,1@2", SchurDet(Partition((2, 1)), 2)),
        ("tensor:k=1,2;s=3", TensorMix((1, 2), (3,))),
        ("tensor:s=1", TensorMix((), (1,))),
    ],
)
def test_parse_bundle(text, bundle):
    assert parse_bundle(text) == bundle


@pytest.mark.parametrize("text", ["nope:1", "hook:1", "tensor:x=1", "wedge:a", "schur:1,2"])
def test_parse_bundle_rejects(text):
    with pytest.raises(PartitionError):
        parse_bundle(text)
