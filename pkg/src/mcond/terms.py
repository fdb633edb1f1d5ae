"""Two-sorted term language over program monoids and their tests, with a
parser, printer, evaluator, and bounded identity checking by exhaustive
counterexample search.

Grammar (program terms and test terms):

    prog := ident | "1" | "bot" | prog "." prog
          | test "[" prog "," prog "]" | "(" prog ")"
    test := "%"ident | "T" | "F" | "U" | "~" test | test "!"
          | test "&" test | test "|" test | prog "@" test | "(" test ")"

Postfix `!` and the action bracket bind tightest, then prefix `~`, then
`&`, then `|`; `.` is left-associative and binds tighter than `@`.  An
identity is `lhs = rhs`; a quasi-identity prefixes one hypothesis equation:
`hyp-lhs = hyp-rhs ==> lhs = rhs`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from . import laws
from .actions import BMonoid, CMonoid, CSet
from .algebras import Ada, DEFAULT_MAX_CARRIER
from .errors import EvalError, ParseError

PROG = "prog"
TEST = "test"


@dataclass(frozen=True)
class ProgVar:
    name: str


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Compose:
    left: "ProgTerm"
    right: "ProgTerm"


@dataclass(frozen=True)
class Ite:
    test: "TestTerm"
    then: "ProgTerm"
    els: "ProgTerm"


@dataclass(frozen=True)
class TestVar:
    name: str

    __test__ = False  # not a pytest class, despite the name


@dataclass(frozen=True)
class Const:
    which: str  # "T", "F" or "U"


@dataclass(frozen=True)
class Neg:
    arg: "TestTerm"


@dataclass(frozen=True)
class And:
    left: "TestTerm"
    right: "TestTerm"


@dataclass(frozen=True)
class Or:
    left: "TestTerm"
    right: "TestTerm"


@dataclass(frozen=True)
class Down:
    arg: "TestTerm"


@dataclass(frozen=True)
class Comp:
    prog: "ProgTerm"
    test: "TestTerm"


ProgTerm = ProgVar | One | Bot | Compose | Ite
TestTerm = TestVar | Const | Neg | And | Or | Down | Comp


def sort_of(term) -> str:
    return PROG if isinstance(term, (ProgVar, One, Bot, Compose, Ite)) else TEST


@dataclass(frozen=True)
class Identity:
    """lhs = rhs, both of `sort`; quasi-identities carry one hypothesis
    equation that filters assignments."""

    lhs: ProgTerm | TestTerm
    rhs: ProgTerm | TestTerm
    sort: str
    hyp: tuple[ProgTerm | TestTerm, ProgTerm | TestTerm, str] | None = None

    @property
    def quasi(self) -> bool:
        return self.hyp is not None


# ---------------------------------------------------------------------------
# tokenizer / parser

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<impl>==>)
  | (?P<testvar>%[A-Za-z_][A-Za-z0-9_]*)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<one>1)
  | (?P<sym>[~!&|.@\[\](),=])
""", re.VERBOSE)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        val = m.group()
        if kind != "ws":
            out.append((kind, val, pos))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, sym: str):
        kind, val, pos = self.next()
        if val != sym:
            raise ParseError(f"expected {sym!r}, got {val or 'end of input'!r}", pos)

    def _require(self, term, want: str, opname: str, pos: int):
        got = sort_of(term)
        if got != want:
            raise ParseError(
                f"{opname} needs a {want} term, got a {got} term", pos)
        return term

    def atom(self):
        kind, val, pos = self.next()
        if val == "(":
            term = self.expr(0)
            self.expect(")")
            return term
        if val == "~":
            arg = self.expr(60)
            return Neg(self._require(arg, TEST, "'~'", pos))
        if kind == "testvar":
            return TestVar(val[1:])
        if kind == "one":
            return One()
        if kind == "name":
            if val == "T":
                return Const("T")
            if val == "F":
                return Const("F")
            if val == "U":
                return Const("U")
            if val == "bot":
                return Bot()
            return ProgVar(val)
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)

    def expr(self, min_bp: int):
        term = self.atom()
        while True:
            kind, val, pos = self.peek()
            if val == "!" and 70 >= min_bp:
                self.next()
                term = Down(self._require(term, TEST, "'!'", pos))
            elif val == "[" and 70 >= min_bp:
                self.next()
                self._require(term, TEST, "the action bracket", pos)
                then = self.expr(0)
                self._require(then, PROG, "the action bracket", pos)
                self.expect(",")
                els = self.expr(0)
                self._require(els, PROG, "the action bracket", pos)
                self.expect("]")
                term = Ite(term, then, els)
            elif val == "&" and 50 >= min_bp:
                self.next()
                self._require(term, TEST, "'&'", pos)
                rhs = self.expr(51)
                term = And(term, self._require(rhs, TEST, "'&'", pos))
            elif val == "|" and 40 >= min_bp:
                self.next()
                self._require(term, TEST, "'|'", pos)
                rhs = self.expr(41)
                term = Or(term, self._require(rhs, TEST, "'|'", pos))
            elif val == "." and 30 >= min_bp:
                self.next()
                self._require(term, PROG, "'.'", pos)
                rhs = self.expr(31)
                term = Compose(term, self._require(rhs, PROG, "'.'", pos))
            elif val == "@" and 20 >= min_bp:
                self.next()
                self._require(term, PROG, "'@'", pos)
                rhs = self.expr(21)
                term = Comp(term, self._require(rhs, TEST, "'@'", pos))
            else:
                return term


def parse_term(text: str, sort: str | None = None):
    """Parse one term; when `sort` is given, reject terms of the other sort."""
    p = _Parser(text)
    term = p.expr(0)
    kind, val, pos = p.peek()
    if kind != "eof":
        raise ParseError(f"trailing input {val!r}", pos)
    if sort is not None and sort_of(term) != sort:
        raise ParseError(f"expected a {sort} term, got a {sort_of(term)} term", 0)
    return term


def _equation(p: _Parser):
    lhs = p.expr(0)
    p.expect("=")
    rhs = p.expr(0)
    if sort_of(lhs) != sort_of(rhs):
        raise ParseError(
            f"sides of '=' have different sorts: {sort_of(lhs)} vs {sort_of(rhs)}",
            0)
    return lhs, rhs


def parse_identity(text: str) -> Identity:
    p = _Parser(text)
    lhs, rhs = _equation(p)
    kind, val, pos = p.peek()
    hyp = None
    if val == "==>":
        p.next()
        hyp = (lhs, rhs, sort_of(lhs))
        lhs, rhs = _equation(p)
        kind, val, pos = p.peek()
    if kind != "eof":
        raise ParseError(f"trailing input {val!r}", pos)
    return Identity(lhs, rhs, sort_of(lhs), hyp)


# ---------------------------------------------------------------------------
# printer (minimal parentheses, inverse of the parser)

def _show(term, min_bp: int) -> str:
    if isinstance(term, ProgVar):
        return term.name
    if isinstance(term, One):
        return "1"
    if isinstance(term, Bot):
        return "bot"
    if isinstance(term, TestVar):
        return "%" + term.name
    if isinstance(term, Const):
        return term.which
    if isinstance(term, Down):
        s = _show(term.arg, 70) + "!"
        bp = 70
    elif isinstance(term, Ite):
        s = f"{_show(term.test, 70)}[{_show(term.then, 0)}, {_show(term.els, 0)}]"
        bp = 70
    elif isinstance(term, Neg):
        s = "~" + _show(term.arg, 60)
        bp = 60
    elif isinstance(term, And):
        s = f"{_show(term.left, 50)} & {_show(term.right, 51)}"
        bp = 50
    elif isinstance(term, Or):
        s = f"{_show(term.left, 40)} | {_show(term.right, 41)}"
        bp = 40
    elif isinstance(term, Compose):
        s = f"{_show(term.left, 30)} . {_show(term.right, 31)}"
        bp = 30
    elif isinstance(term, Comp):
        s = f"{_show(term.prog, 21)} @ {_show(term.test, 21)}"
        bp = 20
    else:
        raise TypeError(f"not a term: {term!r}")
    return f"({s})" if bp < min_bp else s


def term_text(term) -> str:
    return _show(term, 0)


def identity_text(ident: Identity) -> str:
    body = f"{term_text(ident.lhs)} = {term_text(ident.rhs)}"
    if ident.hyp is None:
        return body
    hl, hr, _ = ident.hyp
    return f"{term_text(hl)} = {term_text(hr)} ==> {body}"


# ---------------------------------------------------------------------------
# evaluation over a model

@dataclass(frozen=True)
class ModelOps:
    """Uniform view of a model for the evaluator; optional pieces are None
    when the model lacks them (halting baseline has no bot, U or down)."""

    name: str
    prog_names: tuple[str, ...]
    test_names: tuple[str, ...]
    one: int
    bot: int | None
    mul: tuple
    act: tuple
    comp: tuple
    t: int
    f: int
    u: int | None
    neg: tuple
    and_: tuple
    or_: tuple
    down: tuple | None


def model_ops(model: CMonoid | BMonoid) -> ModelOps:
    if isinstance(model, CMonoid):
        m = model.m
        return ModelOps(
            name=model.name or "<c-monoid>",
            prog_names=model.s.elements, test_names=m.elements,
            one=model.s.one, bot=model.s.bot,
            mul=model.s.mul, act=model.act, comp=model.comp,
            t=m.t, f=m.f, u=m.u,
            neg=m.neg, and_=m.and_, or_=m.or_,
            down=m.down if isinstance(m, Ada) else None,
        )
    if isinstance(model, BMonoid):
        q = model.q
        return ModelOps(
            name=model.name or "<b-monoid>",
            prog_names=model.elements, test_names=q.elements,
            one=model.one, bot=None,
            mul=model.mul, act=model.act, comp=model.comp,
            t=q.t, f=q.f, u=None,
            neg=q.neg, and_=q.and_, or_=q.or_, down=None,
        )
    raise EvalError(f"cannot evaluate terms over {type(model).__name__}")


def eval_term(term, ops: ModelOps, passign: dict[str, int],
              tassign: dict[str, int]) -> int:
    """Bottom-up evaluation; program terms yield carrier indices, test terms
    indices into the test algebra."""
    if isinstance(term, ProgVar):
        try:
            return passign[term.name]
        except KeyError:
            raise EvalError(f"unbound program variable {term.name!r}") from None
    if isinstance(term, TestVar):
        try:
            return tassign[term.name]
        except KeyError:
            raise EvalError(f"unbound test variable %{term.name!r}") from None
    if isinstance(term, One):
        return ops.one
    if isinstance(term, Bot):
        if ops.bot is None:
            raise EvalError(f"model {ops.name} has no bottom program")
        return ops.bot
    if isinstance(term, Const):
        if term.which == "T":
            return ops.t
        if term.which == "F":
            return ops.f
        if ops.u is None:
            raise EvalError(f"model {ops.name} has no test U")
        return ops.u
    if isinstance(term, Compose):
        return ops.mul[eval_term(term.left, ops, passign, tassign)][
            eval_term(term.right, ops, passign, tassign)]
    if isinstance(term, Ite):
        a = eval_term(term.test, ops, passign, tassign)
        return ops.act[a][eval_term(term.then, ops, passign, tassign)][
            eval_term(term.els, ops, passign, tassign)]
    if isinstance(term, Neg):
        return ops.neg[eval_term(term.arg, ops, passign, tassign)]
    if isinstance(term, And):
        return ops.and_[eval_term(term.left, ops, passign, tassign)][
            eval_term(term.right, ops, passign, tassign)]
    if isinstance(term, Or):
        return ops.or_[eval_term(term.left, ops, passign, tassign)][
            eval_term(term.right, ops, passign, tassign)]
    if isinstance(term, Down):
        if ops.down is None:
            raise EvalError(f"model {ops.name} has no halting projection")
        return ops.down[eval_term(term.arg, ops, passign, tassign)]
    if isinstance(term, Comp):
        return ops.comp[eval_term(term.prog, ops, passign, tassign)][
            eval_term(term.test, ops, passign, tassign)]
    raise TypeError(f"not a term: {term!r}")


def compile_term(term, ops: ModelOps):
    """Fold a term into a closure over the two assignment dicts; same
    semantics as `eval_term`, built once per identity check so exhaustive
    sweeps stay cheap."""
    if isinstance(term, ProgVar):
        name = term.name
        return lambda pa, ta: pa[name]
    if isinstance(term, TestVar):
        name = term.name
        return lambda pa, ta: ta[name]
    if isinstance(term, (One, Bot, Const)):
        value = eval_term(term, ops, {}, {})
        return lambda pa, ta: value
    if isinstance(term, Compose):
        left, right = compile_term(term.left, ops), compile_term(term.right, ops)
        mul = ops.mul
        return lambda pa, ta: mul[left(pa, ta)][right(pa, ta)]
    if isinstance(term, Ite):
        test = compile_term(term.test, ops)
        then = compile_term(term.then, ops)
        els = compile_term(term.els, ops)
        act = ops.act
        return lambda pa, ta: act[test(pa, ta)][then(pa, ta)][els(pa, ta)]
    if isinstance(term, Neg):
        arg = compile_term(term.arg, ops)
        neg = ops.neg
        return lambda pa, ta: neg[arg(pa, ta)]
    if isinstance(term, And):
        left, right = compile_term(term.left, ops), compile_term(term.right, ops)
        and_ = ops.and_
        return lambda pa, ta: and_[left(pa, ta)][right(pa, ta)]
    if isinstance(term, Or):
        left, right = compile_term(term.left, ops), compile_term(term.right, ops)
        or_ = ops.or_
        return lambda pa, ta: or_[left(pa, ta)][right(pa, ta)]
    if isinstance(term, Down):
        if ops.down is None:
            raise EvalError(f"model {ops.name} has no halting projection")
        arg = compile_term(term.arg, ops)
        down = ops.down
        return lambda pa, ta: down[arg(pa, ta)]
    if isinstance(term, Comp):
        prog, test = compile_term(term.prog, ops), compile_term(term.test, ops)
        comp = ops.comp
        return lambda pa, ta: comp[prog(pa, ta)][test(pa, ta)]
    raise TypeError(f"not a term: {term!r}")


def variables(term, progs: set[str], tests: set[str]) -> None:
    if isinstance(term, ProgVar):
        progs.add(term.name)
    elif isinstance(term, TestVar):
        tests.add(term.name)
    elif isinstance(term, Compose):
        variables(term.left, progs, tests)
        variables(term.right, progs, tests)
    elif isinstance(term, Ite):
        variables(term.test, progs, tests)
        variables(term.then, progs, tests)
        variables(term.els, progs, tests)
    elif isinstance(term, (Neg, Down)):
        variables(term.arg, progs, tests)
    elif isinstance(term, (And, Or)):
        variables(term.left, progs, tests)
        variables(term.right, progs, tests)
    elif isinstance(term, Comp):
        variables(term.prog, progs, tests)
        variables(term.test, progs, tests)


@dataclass(frozen=True)
class Counterexample:
    """A falsifying assignment; re-evaluating it reproduces lhs != rhs."""

    model_name: str
    prog_assign: tuple[tuple[str, str], ...]
    test_assign: tuple[tuple[str, str], ...]
    lhs_value: str
    rhs_value: str
    prog_indices: tuple[tuple[str, int], ...]
    test_indices: tuple[tuple[str, int], ...]

    def show(self) -> str:
        parts = [f"{v}={e}" for v, e in self.prog_assign]
        parts += [f"%{v}={e}" for v, e in self.test_assign]
        binding = ", ".join(parts) if parts else "(no variables)"
        return (f"model {self.model_name}: {binding}  "
                f"lhs={self.lhs_value} rhs={self.rhs_value}")


@dataclass(frozen=True)
class IdentityResult:
    holds: bool
    counterexample: Counterexample | None
    checked: int
    vacuous: int


def check_identity(model: CMonoid | BMonoid, ident: Identity) -> IdentityResult:
    """Exhaustive search over assignments, program variables before test
    variables, each in carrier index order; returns the first falsifying
    assignment in that order."""
    ops = model_ops(model)
    progs: set[str] = set()
    tests: set[str] = set()
    for t in (ident.lhs, ident.rhs):
        variables(t, progs, tests)
    if ident.hyp is not None:
        variables(ident.hyp[0], progs, tests)
        variables(ident.hyp[1], progs, tests)
    pvars = sorted(progs)
    tvars = sorted(tests)
    ns, nm = len(ops.prog_names), len(ops.test_names)

    lhs = compile_term(ident.lhs, ops)
    rhs = compile_term(ident.rhs, ops)
    hyp = None
    if ident.hyp is not None:
        hyp = (compile_term(ident.hyp[0], ops), compile_term(ident.hyp[1], ops))

    checked = vacuous = 0
    passign: dict[str, int] = dict.fromkeys(pvars, 0)
    tassign: dict[str, int] = dict.fromkeys(tvars, 0)
    for pvals in product(range(ns), repeat=len(pvars)):
        for name, v in zip(pvars, pvals):
            passign[name] = v
        for tvals in product(range(nm), repeat=len(tvars)):
            for name, v in zip(tvars, tvals):
                tassign[name] = v
            if hyp is not None:
                if hyp[0](passign, tassign) != hyp[1](passign, tassign):
                    vacuous += 1
                    continue
            checked += 1
            lv = lhs(passign, tassign)
            rv = rhs(passign, tassign)
            if lv != rv:
                names = ops.prog_names if ident.sort == PROG else ops.test_names
                cx = Counterexample(
                    model_name=ops.name,
                    prog_assign=tuple((v, ops.prog_names[passign[v]])
                                      for v in pvars),
                    test_assign=tuple((v, ops.test_names[tassign[v]])
                                      for v in tvars),
                    lhs_value=names[lv], rhs_value=names[rv],
                    prog_indices=tuple((v, passign[v]) for v in pvars),
                    test_indices=tuple((v, tassign[v]) for v in tvars),
                )
                return IdentityResult(False, cx, checked, vacuous)
    return IdentityResult(True, None, checked, vacuous)


# ---------------------------------------------------------------------------
# bounded universal checking

REFUTED = "REFUTED"
NO_COUNTEREXAMPLE = "NO-COUNTEREXAMPLE-UP-TO-BOUND"


@dataclass(frozen=True)
class UniversalResult:
    """Refutation is sound; the other verdict is explicitly bounded, not a
    validity proof."""

    status: str
    counterexample: Counterexample | None
    models: tuple[str, ...]
    checked: int

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED


def universal_models(x_max: int, family: str = "cmonoid",
                     max_carrier: int = DEFAULT_MAX_CARRIER):
    from .actions import (bundled_non_functional, functional_b_monoid,
                          functional_c_monoid)

    if family in ("cmonoid", "cset", "calgebra", "ada"):
        models = [functional_c_monoid(k, max_carrier) for k in range(1, x_max + 1)]
        models += list(bundled_non_functional())
        return models
    if family in ("bmonoid", "bset", "boolalg"):
        return [functional_b_monoid(k, max_carrier) for k in range(1, x_max + 1)]
    raise EvalError(f"unknown model family {family!r}")


def check_identity_universal(ident: Identity, x_max: int,
                             family: str = "cmonoid",
                             max_carrier: int = DEFAULT_MAX_CARRIER) -> UniversalResult:
    """Search the functional models up to the bound (plus the bundled
    finite examples, for the non-halting family) for a counterexample."""
    models = universal_models(x_max, family, max_carrier)
    checked = 0
    for model in models:
        res = check_identity(model, ident)
        checked += res.checked
        if not res.holds:
            return UniversalResult(REFUTED, res.counterexample,
                                   tuple(m.name for m in models), checked)
    return UniversalResult(NO_COUNTEREXAMPLE, None,
                           tuple(m.name for m in models), checked)


# ---------------------------------------------------------------------------
# the regression corpus of named laws

@dataclass(frozen=True)
class CorpusEntry:
    label: str
    family: str
    text: str
    identity: Identity


def builtin_corpus() -> tuple[CorpusEntry, ...]:
    """Every named law as a parsed identity or quasi-identity, keyed by the
    same labels the dedicated checkers report."""
    out = []
    for fam in laws.CORPUS_FAMILIES:
        for law in laws.family(fam):
            out.append(CorpusEntry(law.label, law.family, law.text,
                                   parse_identity(law.text)))
    return tuple(out)
