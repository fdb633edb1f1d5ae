"""Finite conditional-logic algebras as operation tables.

Carriers are ordered name lists; elements are their indices.  All tables
are tuples, so every value here is immutable and hashable.  Axiom checkers
sweep exhaustively in ascending index order and report the first witness,
which keeps reports deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ModelError, SizeCapError
from .laws import law_text
from .report import AxiomReport, CheckResult

# Sweeps are exhaustive; past this carrier size they are refused outright
# rather than silently sampled.
DEFAULT_MAX_CARRIER = 64


def _check_unary(table, n: int, op: str) -> None:
    if len(table) != n:
        raise ModelError(f"{op}: table has {len(table)} rows, carrier has {n}")
    for i, v in enumerate(table):
        if not 0 <= v < n:
            raise ModelError(f"{op}: entry {i} -> {v} out of range 0..{n - 1}")


def _check_binary(table, n: int, op: str) -> None:
    if len(table) != n:
        raise ModelError(f"{op}: table has {len(table)} rows, carrier has {n}")
    for i, row in enumerate(table):
        if len(row) != n:
            raise ModelError(f"{op}: row {i} has {len(row)} entries, carrier has {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise ModelError(f"{op}: entry ({i},{j}) -> {v} out of range 0..{n - 1}")


def guard_carrier(n: int, what: str, max_carrier: int = DEFAULT_MAX_CARRIER) -> None:
    if n > max_carrier:
        raise SizeCapError(f"{what}: carrier size {n} exceeds cap {max_carrier}")


@dataclass(frozen=True)
class CAlgebra:
    """Algebra of McCarthy's sequential three-valued logic: <M, or, and, neg>
    with designated constants T, F, U."""

    elements: tuple[str, ...]
    neg: tuple[int, ...]
    and_: tuple[tuple[int, ...], ...]
    or_: tuple[tuple[int, ...], ...]
    t: int
    f: int
    u: int
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise ModelError("empty carrier")
        _check_unary(self.neg, n, "neg")
        _check_binary(self.and_, n, "and")
        _check_binary(self.or_, n, "or")
        for c, v in (("T", self.t), ("F", self.f), ("U", self.u)):
            if not 0 <= v < n:
                raise ModelError(f"constant {c} -> {v} out of range")

    @property
    def n(self) -> int:
        return len(self.elements)

    def as_c_algebra(self) -> "CAlgebra":
        """View without the halting projection (identity on plain algebras)."""
        return CAlgebra(self.elements, self.neg, self.and_, self.or_,
                        self.t, self.f, self.u, name=self.name)


@dataclass(frozen=True)
class Ada(CAlgebra):
    """Conditional-logic algebra with a halting oracle: adds a unary
    projection `down` that decides T / does-not-hold."""

    down: tuple[int, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        _check_unary(self.down, self.n, "down")

    def as_c_algebra(self) -> CAlgebra:
        return CAlgebra(self.elements, self.neg, self.and_, self.or_,
                        self.t, self.f, self.u, name=self.name)


@dataclass(frozen=True)
class BoolAlg:
    """Finite Boolean algebra as tables (the halting-test baseline)."""

    elements: tuple[str, ...]
    neg: tuple[int, ...]
    and_: tuple[tuple[int, ...], ...]
    or_: tuple[tuple[int, ...], ...]
    t: int
    f: int
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise ModelError("empty carrier")
        _check_unary(self.neg, n, "neg")
        _check_binary(self.and_, n, "and")
        _check_binary(self.or_, n, "or")

    @property
    def n(self) -> int:
        return len(self.elements)


def mk_three() -> Ada:
    """The three-element algebra {T, F, U} with short-circuit tables and the
    halting projection sending U to F."""
    return Ada(
        elements=("T", "F", "U"),
        neg=(1, 0, 2),
        and_=((0, 1, 2), (1, 1, 1), (2, 2, 2)),
        or_=((0, 0, 0), (0, 1, 2), (2, 2, 2)),
        t=0,
        f=1,
        u=2,
        name="3",
        down=(0, 1, 1),
    )


def mk_two() -> BoolAlg:
    """The two-element Boolean algebra."""
    return BoolAlg(
        elements=("T", "F"),
        neg=(1, 0),
        and_=((0, 1), (1, 1)),
        or_=((0, 0), (0, 1)),
        t=0,
        f=1,
        name="2",
    )


# ---------------------------------------------------------------------------
# pairs of sets: the (where-true, where-false) view of tests over a ground set


@dataclass(frozen=True)
class PairOfSets:
    """A map ground -> {T, F, U} stored as two disjoint bit-sets: `a` holds
    the points mapped to T, `b` the points mapped to F."""

    ground: tuple[str, ...]
    a: int
    b: int

    def __post_init__(self):
        full = (1 << len(self.ground)) - 1
        if self.a & self.b:
            raise ModelError("pair components not disjoint")
        if self.a & ~full or self.b & ~full:
            raise ModelError("pair component outside the ground set")

    @property
    def full(self) -> int:
        return (1 << len(self.ground)) - 1

    def show(self) -> str:
        def bits(mask: int) -> str:
            return ",".join(g for i, g in enumerate(self.ground) if mask >> i & 1)

        return f"({{{bits(self.a)}}},{{{bits(self.b)}}})"


def _same_ground(p: PairOfSets, q: PairOfSets) -> None:
    if p.ground != q.ground:
        raise ModelError(f"ground-set mismatch: {p.ground} vs {q.ground}")


def pair_neg(p: PairOfSets) -> PairOfSets:
    return PairOfSets(p.ground, p.b, p.a)


def pair_and(p: PairOfSets, q: PairOfSets) -> PairOfSets:
    _same_ground(p, q)
    return PairOfSets(p.ground, p.a & q.a, p.b | (p.a & q.b))


def pair_or(p: PairOfSets, q: PairOfSets) -> PairOfSets:
    _same_ground(p, q)
    return PairOfSets(p.ground, p.a | (p.b & q.a), p.b & q.b)


def pair_down(p: PairOfSets) -> PairOfSets:
    # pointwise halting projection: T stays, F and U both go to F
    return PairOfSets(p.ground, p.a, p.full & ~p.a)


# value encoding for maps ground -> {T, F, U}: 0 = T, 1 = F, 2 = U,
# matching the element order of mk_three()


def pair_from_function(values, ground: tuple[str, ...]) -> PairOfSets:
    """Pair of preimages (where-T, where-F) of a map given as a value vector."""
    if len(values) != len(ground):
        raise ModelError("value vector length does not match ground set")
    a = b = 0
    for i, v in enumerate(values):
        if v == 0:
            a |= 1 << i
        elif v == 1:
            b |= 1 << i
        elif v != 2:
            raise ModelError(f"value {v} at point {i} is not in {{0,1,2}}")
    return PairOfSets(ground, a, b)


def function_from_pair(p: PairOfSets) -> tuple[int, ...]:
    """Inverse of `pair_from_function`."""
    out = []
    for i in range(len(p.ground)):
        if p.a >> i & 1:
            out.append(0)
        elif p.b >> i & 1:
            out.append(1)
        else:
            out.append(2)
    return tuple(out)


def default_ground(x_size: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(x_size))


def all_pairs(ground: tuple[str, ...]):
    """All pairs over `ground`, ordered by value vector (T < F < U, first
    point most significant)."""
    k = len(ground)
    vec = [0] * k

    def rec(i: int):
        if i == k:
            yield pair_from_function(vec, ground)
            return
        for v in (0, 1, 2):
            vec[i] = v
            yield from rec(i + 1)

    yield from rec(0)


def pair_name(p: PairOfSets) -> str:
    if not p.ground:
        return "e"
    return "".join("TFU"[v] for v in function_from_pair(p))


def power_ada(x_size: int, max_carrier: int = DEFAULT_MAX_CARRIER) -> Ada:
    """The ada of all tests over `x_size` points, operations pointwise
    (realized through the pair representation)."""
    if x_size < 0:
        raise ModelError("x_size must be non-negative")
    n = 3 ** x_size
    guard_carrier(n, f"power ada over {x_size} points", max_carrier)
    ground = default_ground(x_size)
    pairs = list(all_pairs(ground))
    index = {(p.a, p.b): i for i, p in enumerate(pairs)}

    def idx(p: PairOfSets) -> int:
        return index[(p.a, p.b)]

    neg = tuple(idx(pair_neg(p)) for p in pairs)
    down = tuple(idx(pair_down(p)) for p in pairs)
    and_ = tuple(tuple(idx(pair_and(p, q)) for q in pairs) for p in pairs)
    or_ = tuple(tuple(idx(pair_or(p, q)) for q in pairs) for p in pairs)
    t = idx(PairOfSets(ground, (1 << x_size) - 1, 0))
    f = idx(PairOfSets(ground, 0, (1 << x_size) - 1))
    u = idx(PairOfSets(ground, 0, 0))
    return Ada(
        elements=tuple(pair_name(p) for p in pairs),
        neg=neg,
        and_=and_,
        or_=or_,
        t=t,
        f=f,
        u=u,
        name=f"3^{x_size}",
        down=down,
    )


# ---------------------------------------------------------------------------
# axiom checkers


def _subject(alg) -> str:
    return alg.name or f"<{alg.n}-element algebra>"


def check_c_algebra(alg: CAlgebra, max_carrier: int = DEFAULT_MAX_CARRIER) -> AxiomReport:
    """Sweep the seven conditional-logic axioms plus the designated-constant
    laws; each entry carries the first witness on failure."""
    guard_carrier(alg.n, "c-algebra axiom sweep", max_carrier)
    rep = AxiomReport(f"c-algebra {_subject(alg)}")
    rng = range(alg.n)
    neg, and_, or_ = alg.neg, alg.and_, alg.or_
    names = alg.elements

    distinct = alg.n == 1 or len({alg.t, alg.f, alg.u}) == 3
    rep.add(CheckResult("TFU-distinct", "T, F, U pairwise distinct (n > 1)",
                        distinct, 1,
                        None if distinct else (("T", names[alg.t]), ("F", names[alg.f]),
                                               ("U", names[alg.u]))))

    def law1(label: str, fn) -> None:
        for a in rng:
            lhs, rhs = fn(a)
            if lhs != rhs:
                rep.add(CheckResult(label, law_text(label), False, alg.n,
                                    (("%a", names[a]),), names[lhs], names[rhs]))
                return
        rep.add(CheckResult(label, law_text(label), True, alg.n))

    def law2(label: str, fn) -> None:
        for a in rng:
            for b in rng:
                lhs, rhs = fn(a, b)
                if lhs != rhs:
                    rep.add(CheckResult(label, law_text(label), False, alg.n ** 2,
                                        (("%a", names[a]), ("%b", names[b])),
                                        names[lhs], names[rhs]))
                    return
        rep.add(CheckResult(label, law_text(label), True, alg.n ** 2))

    def law3(label: str, fn) -> None:
        for a in rng:
            for b in rng:
                for c in rng:
                    lhs, rhs = fn(a, b, c)
                    if lhs != rhs:
                        rep.add(CheckResult(label, law_text(label), False, alg.n ** 3,
                                            (("%a", names[a]), ("%b", names[b]),
                                             ("%c", names[c])), names[lhs], names[rhs]))
                        return
        rep.add(CheckResult(label, law_text(label), True, alg.n ** 3))

    law1("TFU-and-l", lambda a: (and_[alg.t][a], a))
    law1("TFU-and-r", lambda a: (and_[a][alg.t], a))
    law1("TFU-or-l", lambda a: (or_[alg.f][a], a))
    law1("TFU-or-r", lambda a: (or_[a][alg.f], a))
    u_fix = neg[alg.u] == alg.u
    rep.add(CheckResult("TFU-neg-u", law_text("TFU-neg-u"), u_fix, 1,
                        None if u_fix else (("U", names[alg.u]),),
                        None if u_fix else names[neg[alg.u]],
                        None if u_fix else names[alg.u]))

    law1("C1", lambda a: (neg[neg[a]], a))
    law2("C2", lambda a, b: (neg[and_[a][b]], or_[neg[a]][neg[b]]))
    law3("C3", lambda a, b, c: (and_[and_[a][b]][c], and_[a][and_[b][c]]))
    law3("C4", lambda a, b, c: (and_[a][or_[b][c]], or_[and_[a][b]][and_[a][c]]))
    law3("C5", lambda a, b, c: (and_[or_[a][b]][c],
                                or_[and_[a][c]][and_[and_[neg[a]][b]][c]]))
    law2("C6", lambda a, b: (or_[a][and_[a][b]], a))
    law2("C7", lambda a, b: (or_[and_[a][b]][and_[b][a]],
                             or_[and_[b][a]][and_[a][b]]))
    return rep


def check_ada(alg: Ada, max_carrier: int = DEFAULT_MAX_CARRIER) -> AxiomReport:
    """Base axioms plus the six halting-projection laws."""
    if not isinstance(alg, Ada):
        raise ModelError("check_ada needs an algebra with a halting projection")
    rep = check_c_algebra(alg, max_carrier)
    rep.subject = f"ada {_subject(alg)}"
    names = alg.elements
    neg, and_, or_, down = alg.neg, alg.and_, alg.or_, alg.down

    def const(label: str, lhs: int, rhs: int) -> None:
        rep.add(CheckResult(label, law_text(label), lhs == rhs, 1,
                            None if lhs == rhs else ((" ", names[lhs]),),
                            names[lhs], names[rhs]))

    const("A1", down[alg.f], alg.f)
    const("A2", down[alg.u], alg.f)
    const("A3", down[alg.t], alg.t)

    def law(label: str, arity: int, fn) -> None:
        if arity == 1:
            gen = ((a,) for a in range(alg.n))
            cases = alg.n
        else:
            gen = ((a, b) for a in range(alg.n) for b in range(alg.n))
            cases = alg.n ** 2
        for args in gen:
            lhs, rhs = fn(*args)
            if lhs != rhs:
                wit = tuple((v, names[x]) for v, x in zip(("%a", "%b"), args))
                rep.add(CheckResult(label, law_text(label), False, cases, wit,
                                    names[lhs], names[rhs]))
                return
        rep.add(CheckResult(label, law_text(label), True, cases))

    law("A4", 2, lambda a, b: (and_[a][down[b]], and_[a][down[and_[a][b]]]))
    law("A5", 1, lambda a: (or_[down[a]][neg[down[a]]], alg.t))
    law("A6", 1, lambda a: (a, or_[down[a]][a]))
    return rep


def check_bool(alg: BoolAlg, max_carrier: int = DEFAULT_MAX_CARRIER) -> AxiomReport:
    """Standard Boolean-algebra identities, exhaustively."""
    guard_carrier(alg.n, "boolean axiom sweep", max_carrier)
    rep = AxiomReport(f"boolean algebra {_subject(alg)}")
    rng = range(alg.n)
    neg, and_, or_ = alg.neg, alg.and_, alg.or_
    names = alg.elements

    def law(label: str, arity: int, fn) -> None:
        if arity == 1:
            gen = ((a,) for a in rng)
        elif arity == 2:
            gen = ((a, b) for a in rng for b in rng)
        else:
            gen = ((a, b, c) for a in rng for b in rng for c in rng)
        cases = alg.n ** arity
        for args in gen:
            lhs, rhs = fn(*args)
            if lhs != rhs:
                wit = tuple((v, names[x]) for v, x in zip(("%a", "%b", "%c"), args))
                rep.add(CheckResult(label, law_text(label), False, cases, wit,
                                    names[lhs], names[rhs]))
                return
        rep.add(CheckResult(label, law_text(label), True, cases))

    law("BA1", 2, lambda a, b: (and_[a][b], and_[b][a]))
    law("BA2", 2, lambda a, b: (or_[a][b], or_[b][a]))
    law("BA3", 3, lambda a, b, c: (and_[and_[a][b]][c], and_[a][and_[b][c]]))
    law("BA4", 3, lambda a, b, c: (or_[or_[a][b]][c], or_[a][or_[b][c]]))
    law("BA5", 3, lambda a, b, c: (and_[a][or_[b][c]], or_[and_[a][b]][and_[a][c]]))
    law("BA6", 3, lambda a, b, c: (or_[a][and_[b][c]], and_[or_[a][b]][or_[a][c]]))
    law("BA7", 1, lambda a: (and_[a][alg.t], a))
    law("BA8", 1, lambda a: (or_[a][alg.f], a))
    law("BA9", 1, lambda a: (and_[a][neg[a]], alg.f))
    law("BA10", 1, lambda a: (or_[a][neg[a]], alg.t))
    law("BA11", 1, lambda a: (neg[neg[a]], a))
    return rep
