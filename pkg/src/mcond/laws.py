"""The named equational laws, written in the term-language surface syntax.

One table shared by two independent routes: the dedicated axiom checkers
display these texts next to their hand-written sweeps, and the term module
parses the same texts into its regression corpus.  Program variables are
bare identifiers, test variables carry a `%` prefix, `!` is the halting
projection, `@` composes a program with a test (program side first).

A `==>` marks a quasi-identity (single hypothesis equation).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Law:
    label: str
    family: str  # calgebra | ada | cset | cmonoid | bset | bmonoid | boolalg | tfu
    text: str

    @property
    def quasi(self) -> bool:
        return "==>" in self.text


LAWS: tuple[Law, ...] = (
    # conditional-logic algebra (three-valued, short-circuit)
    Law("C1", "calgebra", "~~%a = %a"),
    Law("C2", "calgebra", "~(%a & %b) = ~%a | ~%b"),
    Law("C3", "calgebra", "(%a & %b) & %c = %a & (%b & %c)"),
    Law("C4", "calgebra", "%a & (%b | %c) = (%a & %b) | (%a & %c)"),
    Law("C5", "calgebra", "(%a | %b) & %c = (%a & %c) | (~%a & %b & %c)"),
    Law("C6", "calgebra", "%a | (%a & %b) = %a"),
    Law("C7", "calgebra", "(%a & %b) | (%b & %a) = (%b & %a) | (%a & %b)"),
    # designated constants of a conditional-logic algebra
    Law("TFU-and-l", "tfu", "T & %a = %a"),
    Law("TFU-and-r", "tfu", "%a & T = %a"),
    Law("TFU-or-l", "tfu", "F | %a = %a"),
    Law("TFU-or-r", "tfu", "%a | F = %a"),
    Law("TFU-neg-u", "tfu", "~U = U"),
    # halting projection (algebra of disjoint alternatives)
    Law("A1", "ada", "F! = F"),
    Law("A2", "ada", "U! = F"),
    Law("A3", "ada", "T! = T"),
    Law("A4", "ada", "%a & %b! = %a & (%a & %b)!"),
    Law("A5", "ada", "%a! | ~(%a!) = T"),
    Law("A6", "ada", "%a = %a! | %a"),
    # Boolean algebra (halting-test baseline)
    Law("BA1", "boolalg", "%a & %b = %b & %a"),
    Law("BA2", "boolalg", "%a | %b = %b | %a"),
    Law("BA3", "boolalg", "(%a & %b) & %c = %a & (%b & %c)"),
    Law("BA4", "boolalg", "(%a | %b) | %c = %a | (%b | %c)"),
    Law("BA5", "boolalg", "%a & (%b | %c) = (%a & %b) | (%a & %c)"),
    Law("BA6", "boolalg", "%a | (%b & %c) = (%a | %b) & (%a | %c)"),
    Law("BA7", "boolalg", "%a & T = %a"),
    Law("BA8", "boolalg", "%a | F = %a"),
    Law("BA9", "boolalg", "%a & ~%a = F"),
    Law("BA10", "boolalg", "%a | ~%a = T"),
    Law("BA11", "boolalg", "~~%a = %a"),
    # if-then-else over halting programs and Boolean tests
    Law("B1", "bset", "%a[s, s] = s"),
    Law("B2", "bset", "%a[%a[s, t], u] = %a[s, u]"),
    Law("B3", "bset", "%a[s, %a[t, u]] = %a[s, u]"),
    Law("B4", "bset", "F[s, t] = t"),
    Law("B5", "bset", "(~%a)[s, t] = %a[t, s]"),
    Law("B6", "bset", "(%a & %b)[s, t] = %a[%b[s, t], t]"),
    # ... plus composition of halting programs and tests
    Law("BM1", "bmonoid", "s @ T = T"),
    Law("BM2", "bmonoid", "(s @ %a) & (s @ %b) = s @ (%a & %b)"),
    Law("BM3", "bmonoid", "s @ ~%a = ~(s @ %a)"),
    Law("BM4", "bmonoid", "s @ (t @ %a) = (s . t) @ %a"),
    Law("BM5", "bmonoid", "%a[s, t] . u = %a[s . u, t . u]"),
    Law("BM6", "bmonoid", "s . %a[t, u] = (s @ %a)[s . t, s . u]"),
    Law("BM7", "bmonoid", "%b[s, t] @ %a = (%b & (s @ %a)) | (~%b & (t @ %a))"),
    Law("BM8", "bmonoid", "1 @ %a = %a"),
    # if-then-else over possibly non-halting programs and tests
    Law("EC-U", "cset", "U[s, t] = bot"),
    Law("EC-F", "cset", "F[s, t] = t"),
    Law("EC-neg", "cset", "(~%a)[s, t] = %a[t, s]"),
    Law("EC-pos-red", "cset", "%a[%a[s, t], u] = %a[s, u]"),
    Law("EC-neg-red", "cset", "%a[s, %a[t, u]] = %a[s, u]"),
    Law("EC-and", "cset", "(%a & %b)[s, t] = %a[%b[s, t], t]"),
    Law("EC-swap", "cset", "%a[%b[s, t], %b[u, v]] = %b[%a[s, u], %a[t, v]]"),
    Law(
        "EC-and-compat",
        "cset",
        "%a[s, t] = %a[t, t] ==> (%a & %b)[s, t] = (%a & %b)[t, t]",
    ),
    # ... plus composition of programs and of programs with tests
    Law("EM-bot", "cmonoid", "bot @ %a = U"),
    Law("EM-U", "cmonoid", "s @ U = U"),
    Law("EM-one", "cmonoid", "1 @ %a = %a"),
    Law("EM-neg", "cmonoid", "s @ ~%a = ~(s @ %a)"),
    Law("EM-and", "cmonoid", "s @ (%a & %b) = (s @ %a) & (s @ %b)"),
    Law("EM-assoc", "cmonoid", "(s . t) @ %a = s @ (t @ %a)"),
    Law("EM-rmul", "cmonoid", "%a[s, t] . u = %a[s . u, t . u]"),
    Law("EM-lmul", "cmonoid", "s . %a[t, u] = (s @ %a)[s . t, s . u]"),
    Law("EM-ite", "cmonoid", "%a[s, t] @ %b = (%a & (s @ %b)) | (~%a & (t @ %b))"),
)

BY_LABEL: dict[str, Law] = {law.label: law for law in LAWS}

# families that form the term-module regression corpus
CORPUS_FAMILIES = ("bset", "bmonoid", "calgebra", "ada", "cset", "cmonoid")


def law_text(label: str) -> str:
    return BY_LABEL[label].text


def family(name: str) -> tuple[Law, ...]:
    return tuple(law for law in LAWS if law.family == name)
