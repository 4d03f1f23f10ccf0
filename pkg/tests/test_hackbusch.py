"""Landmark sequence, interval exponents, and bond-growth verdicts."""

import pytest

from tncuts import (
    LandmarkMismatchError,
    TnsModel,
    a_seq,
    build_almost_perfect_binary,
    build_train_track,
    complement,
    estimate_generic_rank,
    hackbusch_verdict,
    landmark_index,
    min_exponent_over_permutations,
    min_mono_cut,
    relabel,
    tt_exponent,
)


def test_a_seq_values():
    assert a_seq(0) == 0
    assert a_seq(1) == 5
    assert a_seq(2) == 21
    assert a_seq(3) == 85
    with pytest.raises(ValueError):
        a_seq(-1)


def test_landmark_index():
    assert landmark_index(2) == 1
    assert landmark_index(5) == 1
    assert landmark_index(6) == 2
    assert landmark_index(21) == 2
    assert landmark_index(22) == 3
    assert landmark_index(85) == 3
    assert landmark_index(86) == 4


def test_tt_exponent_examples():
    assert tt_exponent(build_almost_perfect_binary(5)) == (1, 1)
    k, j = tt_exponent(build_almost_perfect_binary(6))
    assert k == 2 and j == 3  # the {1,2,3} prefix forces the second cut
    assert tt_exponent(build_train_track(9)).k == 1


def test_tt_exponent_two_leaves():
    assert tt_exponent(build_train_track(2)) == (1, 1)


def test_tt_exponent_complement_symmetry():
    # computing with complements of prefixes gives the same maximum
    for n in (5, 6, 9):
        tree = build_almost_perfect_binary(n)
        ks = [min_mono_cut(tree, set(range(1, j + 1))).size for j in range(1, n)]
        kc = [min_mono_cut(tree, complement(tree, set(range(1, j + 1)))).size for j in range(1, n)]
        assert max(ks) == max(kc) == tt_exponent(tree).k


def test_exponent_nondecreasing_across_sizes():
    ks = [tt_exponent(build_almost_perfect_binary(n)).k for n in range(2, 23)]
    assert all(a <= b for a, b in zip(ks, ks[1:]))


def test_min_exponent_over_permutations_examples():
    res6 = min_exponent_over_permutations(build_almost_perfect_binary(6), "exhaustive")
    assert res6.k_min == 2 == tt_exponent(build_almost_perfect_binary(6)).k

    res_tt = min_exponent_over_permutations(build_train_track(5), "exhaustive")
    assert res_tt.k_min == 1
    assert res_tt.witness == (1, 2, 3, 4, 5)

    res5 = min_exponent_over_permutations(build_almost_perfect_binary(5), "exhaustive")
    assert res5.k_min == 1


def test_min_exponent_sampled_mode():
    tree = build_almost_perfect_binary(6)
    res = min_exponent_over_permutations(tree, "sampled", trials=60, seed=1)
    assert res.k_min == 2
    assert min_exponent_over_permutations(tree, "sampled", trials=60, seed=1) == res
    assert tt_exponent(relabel(tree, res.witness)).k == res.k_min


def test_min_exponent_guards():
    with pytest.raises(ValueError):
        min_exponent_over_permutations(build_train_track(9), "exhaustive")
    with pytest.raises(ValueError):
        min_exponent_over_permutations(build_train_track(4), "nope")
    with pytest.raises(ValueError):
        min_exponent_over_permutations(build_train_track(4), "sampled", trials=0)


def test_hackbusch_verdict_examples():
    v6 = hackbusch_verdict(6, 2)
    assert (v6.k, v6.inclusion_bond, v6.exclusion_bond) == (2, 4, 3)
    v5 = hackbusch_verdict(5, 2)
    assert (v5.k, v5.inclusion_bond, v5.exclusion_bond) == (1, 2, 1)
    v21 = hackbusch_verdict(21, 3)
    assert (v21.k, v21.inclusion_bond) == (2, 9)
    assert hackbusch_verdict(2, 2).k == 1
    assert hackbusch_verdict(22, 2).k == 3


def test_verdict_k_independent_of_r():
    ks = {hackbusch_verdict(9, r).k for r in (2, 3, 5)}
    assert len(ks) == 1


def test_verdict_landmark_interval():
    for n in (2, 5, 6, 13, 21, 22, 30):
        v = hackbusch_verdict(n, 2)
        assert a_seq(v.k - 1) < n <= a_seq(v.k)


def test_verdict_guards():
    with pytest.raises(ValueError):
        hackbusch_verdict(1, 2)
    with pytest.raises(ValueError):
        hackbusch_verdict(6, 1)
    assert issubclass(LandmarkMismatchError, RuntimeError)


def test_verdict_json_shape():
    d = hackbusch_verdict(6, 2).to_json_dict()
    assert d["n"] == 6 and d["r"] == 2 and d["k"] == 2 and d["witness_j"] == 3
    assert d["inclusion"] == "HT(6,2) ⊆ TT(6,4)"
    assert d["exclusion"] == "HT(6,2) ⊄ TT(6,3)"


def test_oracle_cross_check_abt6():
    # a generic sample of the 6-leaf balanced model has max interval rank r^k = 4
    tree = build_almost_perfect_binary(6)
    model = TnsModel.constant(tree, 2)
    best = max(
        estimate_generic_rank(model, set(range(1, j + 1)), trials=3, seed=0) for j in range(1, 6)
    )
    assert best == 4
