import pytest

from mcond.actions import CMonoid, CSet
from mcond.congruence import Congruence, diagonal, maximal_congruences
from mcond.embedding import (
    build_embedding,
    check_phi_rho_theta_hom,
    check_separation,
    phi_theta,
    rho_theta,
    verify_embedding,
)
from mcond.errors import ModelError, ModelInconsistencyError
from mcond.algebras import PairOfSets, pair_and, pair_neg, pair_or


def test_per_congruence_homomorphism_on_all_bundled(bundled):
    for cm in bundled:
        for theta in maximal_congruences(cm.m):
            rep = check_phi_rho_theta_hom(cm, theta)
            assert rep.ok, f"{cm.name}: {rep.format()}"


def test_phi_values_on_the_three_element_basic_model(basic3):
    theta = Congruence(basic3.m, diagonal(3))
    qps, phi = phi_theta(basic3, theta)
    # classes are singletons: 0 = {1}, 1 = {a}, 2 = {bot}
    assert qps.names == ("1", "a", "bot")
    assert phi[basic3.s.one] == (0, 1, 2)
    assert phi[basic3.s.bot] == (2, 2, 2)
    # right multiplication by a sends the class of 1 and of a to the class of a
    assert phi[1] == (1, 1, 2)


def test_rho_values_under_every_maximal_congruence(bundled):
    for cm in bundled:
        m = cm.m
        for theta in maximal_congruences(m):
            _, ground, rho = rho_theta(cm, theta)
            k = len(ground)
            assert (rho[m.t].a, rho[m.t].b) == ((1 << k) - 1, 0)
            assert (rho[m.f].a, rho[m.f].b) == (0, (1 << k) - 1)
            assert (rho[m.u].a, rho[m.u].b) == (0, 0)
            for p in rho:
                assert p.a & p.b == 0


def test_rho_is_injective_on_the_basic_model(basic3):
    theta = Congruence(basic3.m, diagonal(3))
    _, _, rho = rho_theta(basic3, theta)
    assert len({(p.a, p.b) for p in rho}) == 3


def test_corrupted_composition_is_caught(basic3):
    comp = [list(r) for r in basic3.comp]
    comp[1][0] = basic3.m.u  # a @ T now claims to diverge
    bad = CMonoid(basic3.base, tuple(tuple(r) for r in comp))
    theta = Congruence(basic3.m, diagonal(3))
    try:
        rep = check_phi_rho_theta_hom(bad, theta)
        assert not rep.ok
    except ModelInconsistencyError:
        pass


def test_separation_on_all_bundled(bundled):
    for cm in bundled:
        rep = check_separation(cm)
        assert rep.ok, f"{cm.name}: {rep.format()}"


def test_ground_set_sizes(bundled):
    basic2, basic3, pointwise3, fcm1, fcm2 = bundled
    sizes = {basic2.name: 1, basic3.name: 2, pointwise3.name: 2,
             fcm1.name: 1, fcm2.name: 4}
    for cm in bundled:
        assert build_embedding(cm).x_size == sizes[cm.name]


def test_two_element_basic_embedding_is_the_identity_picture(basic2):
    mor = build_embedding(basic2)
    assert mor.x_size == 1
    assert mor.phi == ((1,), (0,))  # 1 to the identity, bot to the zero map
    assert [mor.rho_index(a) for a in range(3)] == [0, 1, 2]


def test_verify_embedding_on_all_bundled(bundled):
    for cm in bundled:
        mor = build_embedding(cm)
        rep = verify_embedding(cm, mor)
        assert rep.ok, f"{cm.name}: {rep.format()}"
        labels = {e.label for e in rep.entries}
        assert {"inj-programs", "inj-tests", "pres-mul", "pres-unit-zero",
                "pres-constants", "pres-neg", "pres-and", "pres-or",
                "pres-action", "pres-comp"} <= labels


def test_repointing_hits_both_branches(fcm2):
    mor = build_embedding(fcm2)
    nonzero = bot_hits = 0
    for s in range(fcm2.s.n):
        if s == fcm2.s.bot:
            continue
        for v in mor.phi[s]:
            if v == 0:
                bot_hits += 1
            else:
                nonzero += 1
    assert bot_hits > 0 and nonzero > 0


def test_lazy_target_matches_dense_functional_model(basic3):
    mor = build_embedding(basic3)
    dense = mor.materialize_target()
    assert dense.s.n == (mor.x_size + 1) ** mor.x_size
    for s in range(basic3.s.n):
        for t in range(basic3.s.n):
            assert mor.phi_index(basic3.s.mul[s][t]) == \
                dense.s.mul[mor.phi_index(s)][mor.phi_index(t)]
    for a in range(basic3.m.n):
        for s in range(basic3.s.n):
            for t in range(basic3.s.n):
                assert mor.phi_index(basic3.act[a][s][t]) == \
                    dense.act[mor.rho_index(a)][mor.phi_index(s)][mor.phi_index(t)]
        for s in range(basic3.s.n):
            assert mor.rho_index(basic3.comp[s][a]) == \
                dense.comp[mor.phi_index(s)][mor.rho_index(a)]


def test_corollary_holds_in_the_image(bundled):
    for cm in bundled:
        mor = build_embedding(cm)
        rt = mor.rho[cm.m.t]
        for s in range(cm.s.n):
            f = mor.phi[s]
            assert mor.target_act(mor.target_comp(f, rt), f, f) == f


def test_image_test_operations_are_the_pair_operations(bundled):
    for cm in bundled:
        m = cm.m
        mor = build_embedding(cm)
        for a in range(m.n):
            assert mor.rho[m.neg[a]] == pair_neg(mor.rho[a])
            for b in range(m.n):
                assert mor.rho[m.and_[a][b]] == pair_and(mor.rho[a], mor.rho[b])
                assert mor.rho[m.or_[a][b]] == pair_or(mor.rho[a], mor.rho[b])


def test_embedding_requires_an_ada(fcm1):
    stripped = CMonoid(CSet(fcm1.s, fcm1.m.as_c_algebra(), fcm1.act), fcm1.comp)
    with pytest.raises(ModelError):
        build_embedding(stripped)


def test_embedding_requires_a_nontrivial_test_algebra():
    from mcond.algebras import power_ada
    from mcond.actions import PointedCarrier

    one = power_ada(0)
    carrier = PointedCarrier(("1", "bot"), bot=1, one=0, mul=((0, 1), (1, 1)))
    act = (((1, 1), (1, 1)),)  # the single test sends everything to bot
    cm = CMonoid(CSet(carrier, one, act), ((0,), (0,)))
    with pytest.raises(ModelError):
        build_embedding(cm)


def test_materialization_respects_the_cap(fcm2):
    mor = build_embedding(fcm2)  # |X| = 4, dense carrier would have 625 maps
    with pytest.raises(Exception) as exc:
        mor.materialize_target(max_carrier=64)
    from mcond.errors import SizeCapError

    assert isinstance(exc.value, SizeCapError)
