"""Pairs of sets against the pointwise oracle: every pair operation must
agree with applying the three-element tables slot by slot through the
preimage bijection."""

import pytest
from hypothesis import given, strategies as st

from mcond.algebras import (
    PairOfSets,
    all_pairs,
    default_ground,
    function_from_pair,
    mk_three,
    pair_and,
    pair_down,
    pair_from_function,
    pair_neg,
    pair_or,
    power_ada,
)
from mcond.errors import ModelError, SizeCapError

THREE = mk_three()


def oracle_unary(table, p):
    vals = function_from_pair(p)
    return pair_from_function([table[v] for v in vals], p.ground)


def oracle_binary(table, p, q):
    vp, vq = function_from_pair(p), function_from_pair(q)
    return pair_from_function([table[a][b] for a, b in zip(vp, vq)], p.ground)


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_pair_ops_equal_pointwise_oracle_exhaustively(k):
    ground = default_ground(k)
    pairs = list(all_pairs(ground))
    mismatches = 0
    for p in pairs:
        if pair_neg(p) != oracle_unary(THREE.neg, p):
            mismatches += 1
        if pair_down(p) != oracle_unary(THREE.down, p):
            mismatches += 1
        for q in pairs:
            if pair_and(p, q) != oracle_binary(THREE.and_, p, q):
                mismatches += 1
            if pair_or(p, q) != oracle_binary(THREE.or_, p, q):
                mismatches += 1
    assert mismatches == 0


def test_frozen_and_example():
    # over {x, y}: ({x},{y}) & ({y},{}) = ({},{y}), by the pointwise oracle
    ground = ("x", "y")
    p = PairOfSets(ground, 0b01, 0b10)
    q = PairOfSets(ground, 0b10, 0)
    got = pair_and(p, q)
    assert (got.a, got.b) == (0, 0b10)
    assert got == oracle_binary(THREE.and_, p, q)


def test_everywhere_undefined_is_fixed_by_neg():
    p = PairOfSets(("x", "y"), 0, 0)
    assert pair_neg(p) == p


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_false_is_left_identity_for_or_and_left_zero_for_and(k):
    ground = default_ground(k)
    full = (1 << k) - 1
    f = PairOfSets(ground, 0, full)
    u = PairOfSets(ground, 0, 0)
    for p in all_pairs(ground):
        assert pair_or(f, p) == p
        assert pair_and(f, p) == f
        assert pair_and(u, p) == u
        assert pair_or(u, p) == u


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_down_components_and_idempotence(k):
    for p in all_pairs(default_ground(k)):
        d = pair_down(p)
        assert d.b == d.full & ~d.a
        assert pair_down(d) == d


def test_bijection_round_trips_and_frozen_values():
    ground = ("x", "y")
    assert pair_from_function((0, 0), ground) == PairOfSets(ground, 0b11, 0)
    assert pair_from_function((2, 2), ground) == PairOfSets(ground, 0, 0)
    assert pair_from_function((0, 1), ground) == PairOfSets(ground, 0b01, 0b10)
    for p in all_pairs(default_ground(3)):
        assert pair_from_function(function_from_pair(p), p.ground) == p


def test_ground_set_mismatch_is_an_error():
    p = PairOfSets(("x",), 1, 0)
    q = PairOfSets(("y",), 1, 0)
    with pytest.raises(ModelError):
        pair_and(p, q)


def test_pair_invariants_enforced():
    with pytest.raises(ModelError):
        PairOfSets(("x",), 1, 1)
    with pytest.raises(ModelError):
        PairOfSets(("x",), 2, 0)


def test_power_ada_sizes_and_small_cases(three):
    assert power_ada(0).n == 1
    assert power_ada(1) == three  # 3^1 has the same carrier order and tables
    assert power_ada(2).n == 9
    with pytest.raises(SizeCapError):
        power_ada(4)


masks = st.integers(min_value=0, max_value=(1 << 4) - 1)


@given(st.integers(1, 4), masks, masks, masks, masks, st.data())
def test_ops_commute_with_bijection(k, a1, b1, a2, b2, data):
    full = (1 << k) - 1
    ground = default_ground(k)
    p = PairOfSets(ground, a1 & full, b1 & full & ~a1)
    q = PairOfSets(ground, a2 & full, b2 & full & ~a2)
    op = data.draw(st.sampled_from(["and", "or"]))
    if op == "and":
        assert pair_and(p, q) == oracle_binary(THREE.and_, p, q)
    else:
        assert pair_or(p, q) == oracle_binary(THREE.or_, p, q)
