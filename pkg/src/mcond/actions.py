"""Pointed carriers acted on by test algebras: if-then-else actions,
program composition, and composition of programs with tests.

Includes the halting baseline (Boolean tests, no bottom element) and three
concrete model families: self-maps of a pointed set with pointwise tests,
pointwise powers of a zero-divisor-free monoid, and the basic action of the
three-element test algebra on any such monoid.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebras import (
    Ada,
    BoolAlg,
    CAlgebra,
    DEFAULT_MAX_CARRIER,
    all_pairs,
    default_ground,
    function_from_pair,
    guard_carrier,
    mk_three,
    mk_two,
    power_ada,
)
from .errors import ModelError, SizeCapError
from .laws import law_text
from .report import AxiomReport, CheckResult


@dataclass(frozen=True)
class PointedCarrier:
    """Ordered carrier with base point `bot`; optionally a monoid with zero
    (then `one` and `mul` are present and bot is the two-sided zero)."""

    elements: tuple[str, ...]
    bot: int
    one: int | None = None
    mul: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise ModelError("empty carrier")
        if not 0 <= self.bot < n:
            raise ModelError(f"bot -> {self.bot} out of range")
        if self.one is not None and not 0 <= self.one < n:
            raise ModelError(f"one -> {self.one} out of range")
        if self.mul is not None:
            if len(self.mul) != n or any(len(r) != n for r in self.mul):
                raise ModelError("mul: table shape does not match carrier")
            for i, row in enumerate(self.mul):
                for j, v in enumerate(row):
                    if not 0 <= v < n:
                        raise ModelError(f"mul: entry ({i},{j}) -> {v} out of range")

    @property
    def n(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class CSet:
    """Pointed set with an if-then-else action of a conditional-logic
    algebra: act[a][s][t] is `if a then s else t`."""

    s: PointedCarrier
    m: CAlgebra
    act: tuple[tuple[tuple[int, ...], ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        ns, nm = self.s.n, self.m.n
        if len(self.act) != nm:
            raise ModelError(f"act: {len(self.act)} test blocks, algebra has {nm}")
        for a, block in enumerate(self.act):
            if len(block) != ns or any(len(r) != ns for r in block):
                raise ModelError(f"act: block {a} shape does not match carrier")
            for row in block:
                for v in row:
                    if not 0 <= v < ns:
                        raise ModelError(f"act: block {a} entry {v} out of range")


@dataclass(frozen=True)
class CMonoid:
    """A CSet whose carrier is a monoid with zero, plus composition of
    programs with tests: comp[s][a] is `s` then test `a`."""

    base: CSet
    comp: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.base.s.one is None or self.base.s.mul is None:
            raise ModelError("carrier lacks monoid structure (one/mul)")
        ns, nm = self.base.s.n, self.base.m.n
        if len(self.comp) != ns or any(len(r) != nm for r in self.comp):
            raise ModelError("comp: table shape does not match carriers")
        for row in self.comp:
            for v in row:
                if not 0 <= v < nm:
                    raise ModelError(f"comp: entry {v} out of range")

    @property
    def s(self) -> PointedCarrier:
        return self.base.s

    @property
    def m(self) -> CAlgebra:
        return self.base.m

    @property
    def act(self):
        return self.base.act


@dataclass(frozen=True)
class BSet:
    """Halting baseline: a plain set with an if-then-else action of a
    Boolean algebra (no bottom)."""

    elements: tuple[str, ...]
    q: BoolAlg
    act: tuple[tuple[tuple[int, ...], ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        ns, nq = len(self.elements), self.q.n
        if len(self.act) != nq:
            raise ModelError(f"act: {len(self.act)} test blocks, algebra has {nq}")
        for a, block in enumerate(self.act):
            if len(block) != ns or any(len(r) != ns for r in block):
                raise ModelError(f"act: block {a} shape does not match carrier")
            for row in block:
                for v in row:
                    if not 0 <= v < ns:
                        raise ModelError(f"act: block {a} entry {v} out of range")

    @property
    def n(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class BMonoid:
    base: BSet
    one: int
    mul: tuple[tuple[int, ...], ...]
    comp: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        ns, nq = self.base.n, self.base.q.n
        if not 0 <= self.one < ns:
            raise ModelError("one out of range")
        if len(self.mul) != ns or any(len(r) != ns for r in self.mul):
            raise ModelError("mul: table shape does not match carrier")
        if len(self.comp) != ns or any(len(r) != nq for r in self.comp):
            raise ModelError("comp: table shape does not match carriers")

    @property
    def elements(self):
        return self.base.elements

    @property
    def q(self) -> BoolAlg:
        return self.base.q

    @property
    def act(self):
        return self.base.act


# ---------------------------------------------------------------------------
# derived action on the test algebra itself


def mm_action(m: CAlgebra, a: int, b: int, c: int) -> int:
    """The double-bracket action (a and b) or (not-a and c) inside M."""
    return m.or_[m.and_[a][b]][m.and_[m.neg[a]][c]]


def mm_cset(m: CAlgebra) -> CSet:
    """The test algebra acting on itself, with U as base point."""
    rng = range(m.n)
    act = tuple(tuple(tuple(mm_action(m, a, b, c) for c in rng) for b in rng)
                for a in rng)
    carrier = PointedCarrier(elements=m.elements, bot=m.u)
    return CSet(carrier, m, act, name=f"(M,M) over {m.name or 'M'}")


# ---------------------------------------------------------------------------
# monoid-structure validation


def validate_monoid(pc: PointedCarrier) -> None:
    """Associativity, two-sided identity, bot a two-sided zero."""
    if pc.one is None or pc.mul is None:
        raise ModelError("carrier lacks monoid structure (one/mul)")
    mul, names = pc.mul, pc.elements
    rng = range(pc.n)
    for s in rng:
        if mul[pc.one][s] != s or mul[s][pc.one] != s:
            raise ModelError(f"one is not an identity at {names[s]}")
        if mul[pc.bot][s] != pc.bot or mul[s][pc.bot] != pc.bot:
            raise ModelError(f"bot is not a zero at {names[s]}")
    for s in rng:
        for t in rng:
            for r in rng:
                if mul[mul[s][t]][r] != mul[s][mul[t][r]]:
                    raise ModelError(
                        f"mul not associative at ({names[s]},{names[t]},{names[r]})")


def require_no_zero_divisors(pc: PointedCarrier) -> None:
    rng = range(pc.n)
    for s in rng:
        for t in rng:
            if s != pc.bot and t != pc.bot and pc.mul[s][t] == pc.bot:
                raise ModelError(
                    "zero divisors: "
                    f"{pc.elements[s]} . {pc.elements[t]} = {pc.elements[pc.bot]}")


# ---------------------------------------------------------------------------
# concrete model families


def _map_name(vec: tuple[int, ...], point_names: tuple[str, ...]) -> str:
    return "-".join("bot" if v == 0 else point_names[v - 1] for v in vec)


def _enum_vectors(k: int, base: int):
    """All length-k vectors over range(base), first coordinate most
    significant; the all-zero vector comes first."""
    vec = [0] * k

    def rec(i: int):
        if i == k:
            yield tuple(vec)
            return
        for v in range(base):
            vec[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def functional_carrier(x_size: int, max_carrier: int = DEFAULT_MAX_CARRIER,
                       points: tuple[str, ...] | None = None):
    """Self-maps of the pointed set over `x_size` ground points which fix the
    base point, as value vectors (0 = bot, i+1 = point i)."""
    n = (x_size + 1) ** x_size
    guard_carrier(n, f"self-maps over {x_size} points", max_carrier)
    if points is None:
        points = default_ground(x_size)
    elif len(points) != x_size:
        raise ModelError("point names do not match x_size")
    vectors = list(_enum_vectors(x_size, x_size + 1))
    names = tuple(_map_name(v, points) for v in vectors)
    index = {v: i for i, v in enumerate(vectors)}
    return points, vectors, names, index


def functional_c_set(x_size: int, max_carrier: int = DEFAULT_MAX_CARRIER,
                     points: tuple[str, ...] | None = None) -> CSet:
    """Base-point-fixing self-maps with pointwise three-valued tests."""
    if x_size < 1:
        raise ModelError("x_size must be at least 1")
    points, vectors, names, index = functional_carrier(x_size, max_carrier, points)
    m = power_ada(x_size, max_carrier)
    test_vecs = [function_from_pair(p) for p in all_pairs(points)]

    def act_entry(avec, fv, gv):
        out = []
        for j, tv in enumerate(avec):
            if tv == 0:
                out.append(fv[j])
            elif tv == 1:
                out.append(gv[j])
            else:
                out.append(0)
        return index[tuple(out)]

    act = tuple(
        tuple(tuple(act_entry(avec, fv, gv) for gv in vectors) for fv in vectors)
        for avec in test_vecs)
    carrier = PointedCarrier(elements=names, bot=index[(0,) * x_size])
    return CSet(carrier, m, act, name=f"functional({x_size})")


def functional_c_monoid(x_size: int, max_carrier: int = DEFAULT_MAX_CARRIER,
                        points: tuple[str, ...] | None = None) -> CMonoid:
    """The functional model with left-to-right composition and the induced
    composition of maps with tests."""
    if x_size < 1:
        raise ModelError("x_size must be at least 1")
    points, vectors, names, index = functional_carrier(x_size, max_carrier, points)
    base = functional_c_set(x_size, max_carrier, points)
    m = base.m
    test_vecs = [function_from_pair(p) for p in all_pairs(points)]
    test_index = {v: i for i, v in enumerate(test_vecs)}

    def mul_entry(fv, gv):
        # (f . g)(x) = g(f(x)); the base point is fixed by every map
        return index[tuple(0 if v == 0 else gv[v - 1] for v in fv)]

    mul = tuple(tuple(mul_entry(fv, gv) for gv in vectors) for fv in vectors)

    def comp_entry(fv, avec):
        return test_index[tuple(2 if v == 0 else avec[v - 1] for v in fv)]

    comp = tuple(tuple(comp_entry(fv, avec) for avec in test_vecs) for fv in vectors)
    carrier = PointedCarrier(elements=names, bot=index[(0,) * x_size],
                             one=index[tuple(range(1, x_size + 1))], mul=mul)
    cset = CSet(carrier, m, base.act, name=base.name)
    return CMonoid(cset, comp, name=f"functional({x_size})")


def basic_c_monoid(pc: PointedCarrier) -> CMonoid:
    """Three-valued tests acting on a zero-divisor-free monoid with zero:
    T picks the first branch, F the second, U gives bot."""
    validate_monoid(pc)
    require_no_zero_divisors(pc)
    if pc.n < 2:
        raise ModelError("carrier must be non-trivial (one distinct from bot)")
    m = mk_three()
    rng = range(pc.n)
    first = tuple(tuple(s for _t in rng) for s in rng)
    second = tuple(tuple(t for t in rng) for _s in rng)
    botrow = tuple(tuple(pc.bot for _t in rng) for _s in rng)
    act = (first, second, botrow)
    comp = tuple(tuple(m.u for _a in range(3)) if s == pc.bot else (0, 1, 2)
                 for s in rng)
    label = f"basic({','.join(pc.elements)})"
    return CMonoid(CSet(pc, m, act, name=label), comp, name=label)


def pointwise_c_monoid(pc: PointedCarrier, x_size: int,
                       max_carrier: int = DEFAULT_MAX_CARRIER) -> CMonoid:
    """Pointwise power of a zero-divisor-free monoid with zero, with
    pointwise tests: the test is consulted where the map is non-bot."""
    validate_monoid(pc)
    require_no_zero_divisors(pc)
    if pc.n < 2:
        raise ModelError("carrier must be non-trivial (one distinct from bot)")
    if x_size < 1:
        raise ModelError("x_size must be at least 1")
    n = pc.n ** x_size
    guard_carrier(n, f"pointwise power over {x_size} points", max_carrier)
    m = power_ada(x_size, max_carrier)
    points = default_ground(x_size)
    vectors = list(_enum_vectors(x_size, pc.n))
    names = tuple("-".join(pc.elements[v] for v in vec) for vec in vectors)
    index = {v: i for i, v in enumerate(vectors)}
    test_vecs = [function_from_pair(p) for p in all_pairs(points)]
    test_index = {v: i for i, v in enumerate(test_vecs)}

    mul = tuple(
        tuple(index[tuple(pc.mul[a][b] for a, b in zip(fv, gv))] for gv in vectors)
        for fv in vectors)

    def act_entry(avec, fv, gv):
        out = []
        for j, tv in enumerate(avec):
            if tv == 0:
                out.append(fv[j])
            elif tv == 1:
                out.append(gv[j])
            else:
                out.append(pc.bot)
        return index[tuple(out)]

    act = tuple(
        tuple(tuple(act_entry(avec, fv, gv) for gv in vectors) for fv in vectors)
        for avec in test_vecs)

    comp = tuple(
        tuple(test_index[tuple(2 if v == pc.bot else avec[j]
                               for j, v in enumerate(fv))]
              for avec in test_vecs)
        for fv in vectors)

    carrier = PointedCarrier(elements=names, bot=index[(pc.bot,) * x_size],
                             one=index[(pc.one,) * x_size], mul=mul)
    label = f"pointwise({','.join(pc.elements)};x={x_size})"
    return CMonoid(CSet(carrier, m, act, name=label), comp, name=label)


def two_element_carrier() -> PointedCarrier:
    """The smallest non-trivial monoid with zero: {1, bot}."""
    return PointedCarrier(("1", "bot"), bot=1, one=0, mul=((0, 1), (1, 1)))


def three_element_carrier() -> PointedCarrier:
    """{1, a, bot} with a idempotent; zero-divisor-free."""
    return PointedCarrier(("1", "a", "bot"), bot=2, one=0,
                          mul=((0, 1, 2), (1, 1, 2), (2, 2, 2)))


def bundled_non_functional() -> tuple[CMonoid, ...]:
    """The finite non-functional examples shipped for regression."""
    return (
        basic_c_monoid(two_element_carrier()),
        basic_c_monoid(three_element_carrier()),
        pointwise_c_monoid(three_element_carrier(), 1),
    )


def bundled_c_monoids() -> tuple[CMonoid, ...]:
    """All bundled example models: the non-functional trio plus the two
    smallest functional models."""
    return bundled_non_functional() + (functional_c_monoid(1),
                                       functional_c_monoid(2))


# --- halting baseline models ------------------------------------------------


def power_bool(x_size: int, max_carrier: int = DEFAULT_MAX_CARRIER) -> BoolAlg:
    """Boolean algebra of subsets of `x_size` points, pointwise."""
    n = 2 ** x_size
    guard_carrier(n, f"power boolean algebra over {x_size} points", max_carrier)
    vectors = list(_enum_vectors(x_size, 2))  # 0 = in the set (T), 1 = out (F)
    names = tuple("".join("TF"[v] for v in vec) or "e" for vec in vectors)
    index = {v: i for i, v in enumerate(vectors)}
    neg = tuple(index[tuple(1 - v for v in vec)] for vec in vectors)
    and_ = tuple(tuple(index[tuple(a | b for a, b in zip(va, vb))] for vb in vectors)
                 for va in vectors)
    or_ = tuple(tuple(index[tuple(a & b for a, b in zip(va, vb))] for vb in vectors)
                for va in vectors)
    return BoolAlg(names, neg, and_, or_, t=index[(0,) * x_size],
                   f=index[(1,) * x_size], name=f"2^{x_size}")


def functional_b_set(x_size: int, max_carrier: int = DEFAULT_MAX_CARRIER) -> BSet:
    """All self-maps of `x_size` points with subset tests (no bottom)."""
    if x_size < 1:
        raise ModelError("x_size must be at least 1")
    n = x_size ** x_size
    guard_carrier(n, f"self-maps of {x_size} points", max_carrier)
    q = power_bool(x_size, max_carrier)
    vectors = list(_enum_vectors(x_size, x_size))
    names = tuple("-".join(f"x{v}" for v in vec) for vec in vectors)
    index = {v: i for i, v in enumerate(vectors)}
    test_vecs = list(_enum_vectors(x_size, 2))

    act = tuple(
        tuple(tuple(index[tuple(gv[j] if avec[j] == 0 else hv[j]
                                for j in range(x_size))]
                    for hv in vectors)
              for gv in vectors)
        for avec in test_vecs)
    return BSet(names, q, act, name=f"b-functional({x_size})")


def functional_b_monoid(x_size: int, max_carrier: int = DEFAULT_MAX_CARRIER) -> BMonoid:
    base = functional_b_set(x_size, max_carrier)
    vectors = list(_enum_vectors(x_size, x_size))
    index = {v: i for i, v in enumerate(vectors)}
    test_vecs = list(_enum_vectors(x_size, 2))
    test_index = {v: i for i, v in enumerate(test_vecs)}

    mul = tuple(tuple(index[tuple(gv[v] for v in fv)] for gv in vectors)
                for fv in vectors)
    comp = tuple(tuple(test_index[tuple(avec[v] for v in fv)] for avec in test_vecs)
                 for fv in vectors)
    one = index[tuple(range(x_size))]
    return BMonoid(base, one, mul, comp, name=f"b-functional({x_size})")


# ---------------------------------------------------------------------------
# axiom checkers (hand-written sweeps, independent of the term evaluator)


def _monoid_entries(rep: AxiomReport, elements, one, bot, mul) -> None:
    n = len(elements)
    rng = range(n)

    ok, wit = True, None
    for s in rng:
        for t in rng:
            for r in rng:
                if mul[mul[s][t]][r] != mul[s][mul[t][r]]:
                    ok, wit = False, (("s", elements[s]), ("t", elements[t]),
                                      ("u", elements[r]))
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add(CheckResult("M-assoc", "(s . t) . u = s . (t . u)", ok, n ** 3, wit))

    for label, law, fn in (
        ("M-unit-l", "1 . s = s", lambda s: (mul[one][s], s)),
        ("M-unit-r", "s . 1 = s", lambda s: (mul[s][one], s)),
    ):
        ok, wit = True, None
        for s in rng:
            lhs, rhs = fn(s)
            if lhs != rhs:
                ok, wit = False, (("s", elements[s]),)
                break
        rep.add(CheckResult(label, law, ok, n, wit))

    if bot is not None:
        for label, law, fn in (
            ("M-zero-l", "bot . s = bot", lambda s: (mul[bot][s], bot)),
            ("M-zero-r", "s . bot = bot", lambda s: (mul[s][bot], bot)),
        ):
            ok, wit = True, None
            for s in rng:
                lhs, rhs = fn(s)
                if lhs != rhs:
                    ok, wit = False, (("s", elements[s]),)
                    break
            rep.add(CheckResult(label, law, ok, n, wit))


def check_c_set(cs: CSet, max_carrier: int = DEFAULT_MAX_CARRIER) -> AxiomReport:
    """All if-then-else axioms over possibly non-halting programs and tests;
    the compatibility law is a quasi-identity and reports its vacuous count."""
    guard_carrier(cs.s.n, "c-set axiom sweep", max_carrier)
    guard_carrier(cs.m.n, "c-set axiom sweep", max_carrier)
    rep = AxiomReport(f"c-set axioms of {cs.name or '<c-set>'}")
    m, act = cs.m, cs.act
    sn, mn = cs.s.elements, m.elements
    bot = cs.s.bot
    rs, rm = range(cs.s.n), range(m.n)

    ok, wit, val = True, None, None
    for s in rs:
        for t in rs:
            got = act[m.u][s][t]
            if got != bot:
                ok, wit, val = False, (("s", sn[s]), ("t", sn[t])), got
                break
        if not ok:
            break
    rep.add(CheckResult("EC-U", law_text("EC-U"), ok, cs.s.n ** 2, wit,
                        None if ok else sn[val], None if ok else sn[bot]))

    ok, wit = True, None
    for s in rs:
        for t in rs:
            if act[m.f][s][t] != t:
                ok, wit = False, (("s", sn[s]), ("t", sn[t]))
                break
        if not ok:
            break
    rep.add(CheckResult("EC-F", law_text("EC-F"), ok, cs.s.n ** 2, wit))

    ok, wit = True, None
    for a in rm:
        na = m.neg[a]
        for s in rs:
            for t in rs:
                if act[na][s][t] != act[a][t][s]:
                    ok, wit = False, (("%a", mn[a]), ("s", sn[s]), ("t", sn[t]))
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add(CheckResult("EC-neg", law_text("EC-neg"), ok, m.n * cs.s.n ** 2, wit))

    for label, redo in (("EC-pos-red", True), ("EC-neg-red", False)):
        ok, wit = True, None
        for a in rm:
            act_a = act[a]
            for s in rs:
                for t in rs:
                    for u in rs:
                        if redo:
                            lhs = act_a[act_a[s][t]][u]
                        else:
                            lhs = act_a[s][act_a[t][u]]
                        if lhs != act_a[s][u]:
                            ok, wit = False, (("%a", mn[a]), ("s", sn[s]),
                                              ("t", sn[t]), ("u", sn[u]))
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        rep.add(CheckResult(label, law_text(label), ok, m.n * cs.s.n ** 3, wit))

    ok, wit = True, None
    for a in rm:
        for b in rm:
            act_ab, act_a, act_b = act[m.and_[a][b]], act[a], act[b]
            for s in rs:
                for t in rs:
                    if act_ab[s][t] != act_a[act_b[s][t]][t]:
                        ok, wit = False, (("%a", mn[a]), ("%b", mn[b]),
                                          ("s", sn[s]), ("t", sn[t]))
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add(CheckResult("EC-and", law_text("EC-and"), ok, m.n ** 2 * cs.s.n ** 2, wit))

    ok, wit = True, None
    for a in rm:
        act_a = act[a]
        for b in rm:
            act_b = act[b]
            for s in rs:
                for t in rs:
                    for u in rs:
                        au = act_a[s][u]
                        for v in rs:
                            if act_a[act_b[s][t]][act_b[u][v]] != \
                                    act_b[au][act_a[t][v]]:
                                ok, wit = False, (("%a", mn[a]), ("%b", mn[b]),
                                                  ("s", sn[s]), ("t", sn[t]),
                                                  ("u", sn[u]), ("v", sn[v]))
                                break
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add(CheckResult("EC-swap", law_text("EC-swap"), ok,
                        m.n ** 2 * cs.s.n ** 4, wit))

    ok, wit = True, None
    vacuous = 0
    checked = 0
    for a in rm:
        act_a = act[a]
        for b in rm:
            act_ab = act[m.and_[a][b]]
            for s in rs:
                for t in rs:
                    if act_a[s][t] != act_a[t][t]:
                        vacuous += 1
                        continue
                    checked += 1
                    if act_ab[s][t] != act_ab[t][t]:
                        ok, wit = False, (("%a", mn[a]), ("%b", mn[b]),
                                          ("s", sn[s]), ("t", sn[t]))
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add(CheckResult("EC-and-compat", law_text("EC-and-compat"), ok, checked,
                        wit, vacuous=vacuous))
    return rep


def check_c_monoid(cm: CMonoid, max_carrier: int = DEFAULT_MAX_CARRIER) -> AxiomReport:
    """Monoid-with-zero laws, the full if-then-else suite, and the nine
    composition axioms, all exhaustive."""
    rep = AxiomReport(f"c-monoid axioms of {cm.name or '<c-monoid>'}")
    s, m = cm.s, cm.m
    _monoid_entries(rep, s.elements, s.one, s.bot, s.mul)
    rep.extend(check_c_set(cm.base, max_carrier))
    rep.subject = f"c-monoid axioms of {cm.name or '<c-monoid>'}"

    act, comp, mul = cm.act, cm.comp, s.mul
    sn, mn = s.elements, m.elements
    rs, rm = range(s.n), range(m.n)

    def law(label: str, cases: int, sweep) -> None:
        wit = sweep()
        rep.add(CheckResult(label, law_text(label), wit is None, cases, wit))

    def em_bot():
        for a in rm:
            if comp[s.bot][a] != m.u:
                return (("%a", mn[a]),)
        return None

    def em_u():
        for t in rs:
            if comp[t][m.u] != m.u:
                return (("s", sn[t]),)
        return None

    def em_one():
        for a in rm:
            if comp[s.one][a] != a:
                return (("%a", mn[a]),)
        return None

    def em_neg():
        for t in rs:
            row = comp[t]
            for a in rm:
                if row[m.neg[a]] != m.neg[row[a]]:
                    return (("s", sn[t]), ("%a", mn[a]))
        return None

    def em_and():
        for t in rs:
            row = comp[t]
            for a in rm:
                for b in rm:
                    if row[m.and_[a][b]] != m.and_[row[a]][row[b]]:
                        return (("s", sn[t]), ("%a", mn[a]), ("%b", mn[b]))
        return None

    def em_assoc():
        for t in rs:
            for r in rs:
                prod = comp[mul[t][r]]
                for a in rm:
                    if prod[a] != comp[t][comp[r][a]]:
                        return (("s", sn[t]), ("t", sn[r]), ("%a", mn[a]))
        return None

    def em_rmul():
        for a in rm:
            act_a = act[a]
            for x in rs:
                for y in rs:
                    axy = act_a[x][y]
                    for u in rs:
                        if mul[axy][u] != act_a[mul[x][u]][mul[y][u]]:
                            return (("%a", mn[a]), ("s", sn[x]), ("t", sn[y]),
                                    ("u", sn[u]))
        return None

    def em_lmul():
        for x in rs:
            mul_x = mul[x]
            for a in rm:
                act_ca = act[comp[x][a]]
                act_a = act[a]
                for t in rs:
                    for u in rs:
                        if mul_x[act_a[t][u]] != act_ca[mul_x[t]][mul_x[u]]:
                            return (("s", sn[x]), ("%a", mn[a]), ("t", sn[t]),
                                    ("u", sn[u]))
        return None

    def em_ite():
        for a in rm:
            act_a, na = act[a], m.neg[a]
            for x in rs:
                for y in rs:
                    axy = act_a[x][y]
                    for b in rm:
                        rhs = m.or_[m.and_[a][comp[x][b]]][m.and_[na][comp[y][b]]]
                        if comp[axy][b] != rhs:
                            return (("%a", mn[a]), ("s", sn[x]), ("t", sn[y]),
                                    ("%b", mn[b]))
        return None

    law("EM-bot", m.n, em_bot)
    law("EM-U", s.n, em_u)
    law("EM-one", m.n, em_one)
    law("EM-neg", s.n * m.n, em_neg)
    law("EM-and", s.n * m.n ** 2, em_and)
    law("EM-assoc", s.n ** 2 * m.n, em_assoc)
    law("EM-rmul", m.n * s.n ** 3, em_rmul)
    law("EM-lmul", m.n * s.n ** 3, em_lmul)
    law("EM-ite", m.n ** 2 * s.n ** 2, em_ite)
    return rep


def check_b_set(bs: BSet, max_carrier: int = DEFAULT_MAX_CARRIER) -> AxiomReport:
    guard_carrier(bs.n, "b-set axiom sweep", max_carrier)
    guard_carrier(bs.q.n, "b-set axiom sweep", max_carrier)
    rep = AxiomReport(f"b-set axioms of {bs.name or '<b-set>'}")
    q, act = bs.q, bs.act
    sn, qn = bs.elements, q.elements
    rs, rq = range(bs.n), range(q.n)

    def law(label: str, cases: int, sweep) -> None:
        wit = sweep()
        rep.add(CheckResult(label, law_text(label), wit is None, cases, wit))

    def b1():
        for a in rq:
            for s in rs:
                if act[a][s][s] != s:
                    return (("%a", qn[a]), ("s", sn[s]))
        return None

    def b2():
        for a in rq:
            act_a = act[a]
            for s in rs:
                for t in rs:
                    ast = act_a[s][t]
                    for u in rs:
                        if act_a[ast][u] != act_a[s][u]:
                            return (("%a", qn[a]), ("s", sn[s]), ("t", sn[t]),
                                    ("u", sn[u]))
        return None

    def b3():
        for a in rq:
            act_a = act[a]
            for s in rs:
                for t in rs:
                    for u in rs:
                        if act_a[s][act_a[t][u]] != act_a[s][u]:
                            return (("%a", qn[a]), ("s", sn[s]), ("t", sn[t]),
                                    ("u", sn[u]))
        return None

    def b4():
        for s in rs:
            for t in rs:
                if act[q.f][s][t] != t:
                    return (("s", sn[s]), ("t", sn[t]))
        return None

    def b5():
        for a in rq:
            na = q.neg[a]
            for s in rs:
                for t in rs:
                    if act[na][s][t] != act[a][t][s]:
                        return (("%a", qn[a]), ("s", sn[s]), ("t", sn[t]))
        return None

    def b6():
        for a in rq:
            for b in rq:
                act_ab, act_a, act_b = act[q.and_[a][b]], act[a], act[b]
                for s in rs:
                    for t in rs:
                        if act_ab[s][t] != act_a[act_b[s][t]][t]:
                            return (("%a", qn[a]), ("%b", qn[b]), ("s", sn[s]),
                                    ("t", sn[t]))
        return None

    law("B1", q.n * bs.n, b1)
    law("B2", q.n * bs.n ** 3, b2)
    law("B3", q.n * bs.n ** 3, b3)
    law("B4", bs.n ** 2, b4)
    law("B5", q.n * bs.n ** 2, b5)
    law("B6", q.n ** 2 * bs.n ** 2, b6)
    return rep


def check_b_monoid(bm: BMonoid, max_carrier: int = DEFAULT_MAX_CARRIER) -> AxiomReport:
    rep = AxiomReport(f"b-monoid axioms of {bm.name or '<b-monoid>'}")
    _monoid_entries(rep, bm.elements, bm.one, None, bm.mul)
    rep.extend(check_b_set(bm.base, max_carrier))
    rep.subject = f"b-monoid axioms of {bm.name or '<b-monoid>'}"

    q, act, comp, mul = bm.q, bm.act, bm.comp, bm.mul
    sn, qn = bm.elements, q.elements
    rs, rq = range(bm.base.n), range(q.n)

    def law(label: str, cases: int, sweep) -> None:
        wit = sweep()
        rep.add(CheckResult(label, law_text(label), wit is None, cases, wit))

    law("BM1", bm.base.n,
        lambda: next(((("s", sn[s]),) for s in rs if comp[s][q.t] != q.t), None))
    law("BM2", bm.base.n * q.n ** 2,
        lambda: next(
            ((("s", sn[s]), ("%a", qn[a]), ("%b", qn[b]))
             for s in rs for a in rq for b in rq
             if q.and_[comp[s][a]][comp[s][b]] != comp[s][q.and_[a][b]]), None))
    law("BM3", bm.base.n * q.n,
        lambda: next(
            ((("s", sn[s]), ("%a", qn[a]))
             for s in rs for a in rq
             if comp[s][q.neg[a]] != q.neg[comp[s][a]]), None))
    law("BM4", bm.base.n ** 2 * q.n,
        lambda: next(
            ((("s", sn[s]), ("t", sn[t]), ("%a", qn[a]))
             for s in rs for t in rs for a in rq
             if comp[s][comp[t][a]] != comp[mul[s][t]][a]), None))
    law("BM5", q.n * bm.base.n ** 3,
        lambda: next(
            ((("%a", qn[a]), ("s", sn[s]), ("t", sn[t]), ("u", sn[u]))
             for a in rq for s in rs for t in rs for u in rs
             if mul[act[a][s][t]][u] != act[a][mul[s][u]][mul[t][u]]), None))
    law("BM6", q.n * bm.base.n ** 3,
        lambda: next(
            ((("s", sn[s]), ("%a", qn[a]), ("t", sn[t]), ("u", sn[u]))
             for s in rs for a in rq for t in rs for u in rs
             if mul[s][act[a][t][u]] != act[comp[s][a]][mul[s][t]][mul[s][u]]), None))
    law("BM7", q.n ** 2 * bm.base.n ** 2,
        lambda: next(
            ((("%b", qn[b]), ("s", sn[s]), ("t", sn[t]), ("%a", qn[a]))
             for b in rq for s in rs for t in rs for a in rq
             if comp[act[b][s][t]][a]
             != q.or_[q.and_[b][comp[s][a]]][q.and_[q.neg[b]][comp[t][a]]]), None))
    law("BM8", q.n,
        lambda: next(((("%a", qn[a]),) for a in rq if comp[bm.one][a] != a), None))
    return rep
