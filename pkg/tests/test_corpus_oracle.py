"""Two independent routes to every named law: the dedicated hand-written
checkers versus the parsed corpus run through the term evaluator.  Their
verdicts must agree label by label, on genuine models and on mutated ones."""

import pytest

from mcond.actions import (
    BMonoid,
    BSet,
    CMonoid,
    CSet,
    check_b_monoid,
    check_c_monoid,
    functional_b_monoid,
)
from mcond.algebras import Ada, check_ada
from mcond.terms import builtin_corpus, check_identity

CORPUS = builtin_corpus()


def checker_verdicts_c(cm):
    rep = check_ada(cm.m) if isinstance(cm.m, Ada) else None
    out = {}
    if rep is not None:
        for e in rep.entries:
            out[e.label] = e.holds
    for e in check_c_monoid(cm).entries:
        out[e.label] = e.holds
    return out

def checker_verdicts_b(bm):
    return {e.label: e.holds for e in check_b_monoid(bm).entries}


def corpus_verdicts(model, families):
    out = {}
    for entry in CORPUS:
        if entry.family in families:
            out[entry.label] = check_identity(model, entry.identity).holds
    return out


C_FAMILIES = ("calgebra", "ada", "cset", "cmonoid")
B_FAMILIES = ("bset", "bmonoid")


def assert_agreement(direct, via_terms):
    disagreements = {label: (direct[label], via_terms[label])
                     for label in via_terms
                     if direct[label] != via_terms[label]}
    assert not disagreements


def test_routes_agree_on_bundled_models(bundled):
    for cm in bundled:
        assert_agreement(checker_verdicts_c(cm),
                         corpus_verdicts(cm, C_FAMILIES))


@pytest.mark.parametrize("k", [1, 2])
def test_routes_agree_on_halting_models(k):
    bm = functional_b_monoid(k)
    assert_agreement(checker_verdicts_b(bm), corpus_verdicts(bm, B_FAMILIES))


def _mutate_act(cm, a, s, t, value):
    act = [[list(r) for r in blk] for blk in cm.act]
    act[a][s][t] = value
    base = CSet(cm.s, cm.m, tuple(tuple(tuple(r) for r in blk) for blk in act),
                name=cm.name + "*")
    return CMonoid(base, cm.comp, name=cm.name + "*")


def _mutate_comp(cm, s, a, value):
    comp = [list(r) for r in cm.comp]
    comp[s][a] = value
    return CMonoid(cm.base, tuple(tuple(r) for r in comp), name=cm.name + "*")


def _mutate_down(cm, x, value):
    m = cm.m
    down = list(m.down)
    down[x] = value
    bad = Ada(m.elements, m.neg, m.and_, m.or_, m.t, m.f, m.u,
              name=m.name + "*", down=tuple(down))
    base = CSet(cm.s, bad, cm.act, name=cm.name + "*")
    return CMonoid(base, cm.comp, name=cm.name + "*")


def _mutate_or(cm, a, b, value):
    m = cm.m
    or_ = [list(r) for r in m.or_]
    or_[a][b] = value
    bad = Ada(m.elements, m.neg, m.and_, tuple(tuple(r) for r in or_),
              m.t, m.f, m.u, name=m.name + "*", down=m.down)
    base = CSet(cm.s, bad, cm.act, name=cm.name + "*")
    return CMonoid(base, cm.comp, name=cm.name + "*")


def test_routes_agree_on_mutated_models(basic3, fcm1):
    mutants = [
        _mutate_act(basic3, basic3.m.t, 0, 1, 1),   # true branch corrupted
        _mutate_act(fcm1, fcm1.m.u, 0, 0, 1 - fcm1.act[fcm1.m.u][0][0]),
        _mutate_comp(basic3, 1, basic3.m.t, basic3.m.u),
        _mutate_comp(fcm1, fcm1.s.bot, 0, fcm1.m.t),
        _mutate_down(basic3, basic3.m.u, basic3.m.u),
        _mutate_or(basic3, basic3.m.u, basic3.m.t, basic3.m.t),
    ]
    for cm in mutants:
        direct = checker_verdicts_c(cm)
        via_terms = corpus_verdicts(cm, C_FAMILIES)
        assert_agreement(direct, via_terms)
        assert not all(direct[label] for label in via_terms), \
            "mutation was supposed to break at least one law"


def test_routes_agree_on_mutated_halting_model():
    bm = functional_b_monoid(2)
    act = [[list(r) for r in blk] for blk in bm.act]
    act[bm.q.f][0][1] = (act[bm.q.f][0][1] + 1) % bm.base.n
    base = BSet(bm.elements, bm.q,
                tuple(tuple(tuple(r) for r in blk) for blk in act),
                name="b*")
    bad = BMonoid(base, bm.one, bm.mul, bm.comp, name="b*")
    direct = checker_verdicts_b(bad)
    via_terms = corpus_verdicts(bad, B_FAMILIES)
    assert_agreement(direct, via_terms)
    assert not all(direct[label] for label in via_terms)
