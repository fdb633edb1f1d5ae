import pytest

from mcond.actions import (
    CMonoid,
    CSet,
    PointedCarrier,
    basic_c_monoid,
    check_b_monoid,
    check_b_set,
    check_c_monoid,
    check_c_set,
    functional_b_monoid,
    functional_b_set,
    functional_c_monoid,
    functional_c_set,
    mm_action,
    mm_cset,
    pointwise_c_monoid,
    three_element_carrier,
    two_element_carrier,
)
from mcond.algebras import mk_three, power_ada
from mcond.errors import ModelError, SizeCapError

T, F, U = 0, 1, 2


def test_mm_action_on_three(three):
    for b in range(3):
        for c in range(3):
            assert mm_action(three, T, b, c) == b
            assert mm_action(three, U, b, c) == U
    # (F and T) or (T and U) = F or U = U, straight from the tables
    assert mm_action(three, F, T, U) == U


def test_functional_c_set_passes_and_detects_corruption():
    cs = functional_c_set(1)
    assert check_c_set(cs).ok
    act = [[list(r) for r in blk] for blk in cs.act]
    act[T][0][0] = 1 - act[T][0][0]
    bad = CSet(cs.s, cs.m, tuple(tuple(tuple(r) for r in blk) for blk in act))
    rep = check_c_set(bad)
    assert not rep.ok
    assert rep.failures()[0].witness is not None


@pytest.mark.parametrize("k", [1, 2])
def test_self_action_of_the_test_algebra_is_a_c_set(k):
    assert check_c_set(mm_cset(power_ada(k))).ok


def test_bundled_models_pass_all_axioms(bundled):
    for cm in bundled:
        assert check_c_monoid(cm).ok, cm.name


def test_corrupting_comp_of_the_zero_map_breaks_the_bot_law(fcm1):
    comp = [list(r) for r in fcm1.comp]
    comp[fcm1.s.bot][0] = fcm1.m.t
    bad = CMonoid(fcm1.base, tuple(tuple(r) for r in comp))
    rep = check_c_monoid(bad)
    assert not rep["EM-bot"].holds
    assert rep["EM-bot"].witness == (("%a", "T"),)


def test_basic_model_values(basic2, basic3):
    one, bot = 0, 1
    assert basic2.comp[one][T] == T
    assert basic2.comp[bot][T] == U
    assert check_c_monoid(basic3).ok


def test_zero_divisors_are_rejected_with_witness():
    # associative: a*a = bot makes {1, a, bot} a zero-divisor monoid
    pc = PointedCarrier(("1", "a", "bot"), bot=2, one=0,
                        mul=((0, 1, 2), (1, 2, 2), (2, 2, 2)))
    with pytest.raises(ModelError, match=r"a \. a = bot"):
        basic_c_monoid(pc)


def test_missing_monoid_structure_is_rejected():
    with pytest.raises(ModelError, match="monoid"):
        basic_c_monoid(PointedCarrier(("1", "bot"), bot=1))


def test_trivial_carrier_is_rejected():
    pc = PointedCarrier(("z",), bot=0, one=0, mul=((0,),))
    with pytest.raises(ModelError, match="non-trivial"):
        basic_c_monoid(pc)


def test_pointwise_power_one_matches_basic(basic2):
    pw = pointwise_c_monoid(two_element_carrier(), 1)
    assert pw.s.elements == basic2.s.elements
    assert pw.s.mul == basic2.s.mul
    assert pw.act == basic2.act
    assert pw.comp == basic2.comp


def test_pointwise_identity_is_the_constant_one_vector():
    pw = pointwise_c_monoid(three_element_carrier(), 2)
    assert pw.s.elements[pw.s.one] == "1-1"
    assert pw.s.elements[pw.s.bot] == "bot-bot"
    mul = pw.s.mul
    assert all(mul[pw.s.one][s] == s == mul[s][pw.s.one] for s in range(pw.s.n))


def test_functional_sizes_and_identity_composition(fcm1, fcm2):
    assert (fcm1.s.n, fcm1.m.n) == (2, 3)
    assert (fcm2.s.n, fcm2.m.n) == (9, 9)
    for cm in (fcm1, fcm2):
        assert all(cm.comp[cm.s.one][a] == a for a in range(cm.m.n))


def test_functional_comp_frozen_example(fcm2):
    # f sends x0 to x1 and x1 to bot; the test holds exactly on {x1}
    f = fcm2.s.elements.index("x1-bot")
    alpha = fcm2.m.elements.index("UT")  # U at x0, T at x1
    # composing first consults f: at x0 the test is read at x1 (true), at x1
    # the map diverges
    assert fcm2.m.elements[fcm2.comp[f][alpha]] == "TU"


def test_action_of_undefined_test_is_the_zero_map(fcm2):
    u = fcm2.m.u
    for s in range(fcm2.s.n):
        for t in range(fcm2.s.n):
            assert fcm2.act[u][s][t] == fcm2.s.bot


def test_action_fixes_bot_pair_everywhere(bundled):
    for cm in bundled:
        bot = cm.s.bot
        assert all(cm.act[a][bot][bot] == bot for a in range(cm.m.n))


def test_domain_test_restores_the_program(bundled):
    for cm in bundled:
        t, bot = cm.m.t, cm.s.bot
        for q in range(cm.s.n):
            assert cm.act[cm.comp[q][t]][q][bot] == q


def test_functional_model_size_cap():
    with pytest.raises(SizeCapError):
        functional_c_monoid(4)


@pytest.mark.parametrize("k", [1, 2])
def test_halting_baseline_models(k):
    assert check_b_set(functional_b_set(k)).ok
    assert check_b_monoid(functional_b_monoid(k)).ok


def test_corrupting_the_false_branch_breaks_a_b_axiom():
    bs = functional_b_set(2)
    act = [[list(r) for r in blk] for blk in bs.act]
    f = bs.q.f
    act[f][0][1] = (act[f][0][1] + 1) % bs.n
    from mcond.actions import BSet

    bad = BSet(bs.elements, bs.q, tuple(tuple(tuple(r) for r in blk)
                                        for blk in act))
    rep = check_b_set(bad)
    assert not rep.ok
    assert any(not rep[l].holds for l in ("B1", "B2", "B3", "B4", "B5", "B6"))
