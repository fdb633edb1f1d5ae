"""Plain-text model files.

A file holds one algebra section and, optionally, one structure section:

    [ada] | [calgebra] | [boolalg]     operation tables of the tests
    [cmonoid] | [cset] | [bmonoid]     carrier acted on by those tests

Within a section every line is `key = value`; `#` starts a comment.
Element lists are space-separated names.  Unary tables are one row in
element order; binary tables are rows separated by `/`.  The action table
has one row per (test, left argument) pair, rows ordered test-major; the
composition table has one row per program element, entries in test order.
"""

from __future__ import annotations

from pathlib import Path

from .actions import BMonoid, BSet, CMonoid, CSet, PointedCarrier
from .algebras import Ada, BoolAlg, CAlgebra
from .errors import ModelError, ParseError

ALGEBRA_SECTIONS = ("ada", "calgebra", "boolalg")
STRUCTURE_SECTIONS = ("cmonoid", "cset", "bmonoid")

Model = Ada | CAlgebra | BoolAlg | CMonoid | CSet | BMonoid


def _parse_sections(text: str):
    sections: dict[str, dict[str, tuple[str, int]]] = {}
    current: dict[str, tuple[str, int]] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name not in ALGEBRA_SECTIONS + STRUCTURE_SECTIONS:
                raise ParseError(f"unknown section [{name}]", line=lineno)
            if name in sections:
                raise ParseError(f"duplicate section [{name}]", line=lineno)
            current = {}
            sections[name] = current
            continue
        if "=" not in line:
            raise ParseError("expected `key = value`", line=lineno)
        if current is None:
            raise ParseError("content before any section header", line=lineno)
        key, value = line.split("=", 1)
        key = key.strip()
        if key in current:
            raise ParseError(f"duplicate key {key!r}", line=lineno)
        current[key] = (value.strip(), lineno)
    return sections


class _Section:
    def __init__(self, name: str, data: dict[str, tuple[str, int]]):
        self.name = name
        self.data = dict(data)
        self.header_line = min((ln for _, ln in data.values()), default=0)

    def take(self, key: str, required: bool = True):
        if key not in self.data:
            if required:
                raise ParseError(f"[{self.name}] is missing key {key!r}",
                                 line=self.header_line)
            return None, 0
        return self.data.pop(key)

    def finish(self) -> None:
        if self.data:
            key, (_, line) = next(iter(self.data.items()))
            raise ParseError(f"[{self.name}] has unexpected key {key!r}", line=line)


def _elements(sec: _Section):
    value, line = sec.take("elements")
    names = tuple(value.split())
    if not names:
        raise ParseError(f"[{sec.name}] has an empty element list", line=line)
    if len(set(names)) != len(names):
        raise ParseError(f"[{sec.name}] has duplicate element names", line=line)
    return names, {n: i for i, n in enumerate(names)}


def _element(sec: _Section, key: str, index: dict[str, int], required=True):
    value, line = sec.take(key, required)
    if value is None:
        return None
    if value not in index:
        raise ParseError(f"[{sec.name}] {key}: undeclared element {value!r}",
                         line=line)
    return index[value]


def _row(sec: _Section, key: str, text: str, line: int, index: dict[str, int],
         width: int):
    toks = text.split()
    if len(toks) != width:
        raise ParseError(
            f"[{sec.name}] {key}: row has {len(toks)} entries, expected {width}",
            line=line)
    out = []
    for tok in toks:
        if tok not in index:
            raise ParseError(
                f"[{sec.name}] {key}: undeclared element {tok!r}", line=line)
        out.append(index[tok])
    return tuple(out)


def _unary(sec: _Section, key: str, index: dict[str, int], n: int):
    value, line = sec.take(key)
    return _row(sec, key, value, line, index, n)


def _rows(sec: _Section, key: str, index: dict[str, int], width: int,
          count: int, required=True):
    value, line = sec.take(key, required)
    if value is None:
        return None
    rows = value.split("/")
    if len(rows) != count:
        raise ParseError(
            f"[{sec.name}] {key}: {len(rows)} rows, expected {count}", line=line)
    return tuple(_row(sec, key, r, line, index, width) for r in rows)


def _read_calgebra(sec: _Section, with_down: bool, name: str):
    names, index = _elements(sec)
    n = len(names)
    t = _element(sec, "true", index)
    f = _element(sec, "false", index)
    u = _element(sec, "undef", index)
    neg = _unary(sec, "neg", index, n)
    and_ = _rows(sec, "and", index, n, n)
    or_ = _rows(sec, "or", index, n, n)
    if with_down:
        down = _unary(sec, "down", index, n)
        sec.finish()
        return Ada(names, neg, and_, or_, t, f, u, name=name, down=down)
    sec.finish()
    return CAlgebra(names, neg, and_, or_, t, f, u, name=name)


def _read_boolalg(sec: _Section, name: str) -> BoolAlg:
    names, index = _elements(sec)
    n = len(names)
    t = _element(sec, "true", index)
    f = _element(sec, "false", index)
    neg = _unary(sec, "neg", index, n)
    and_ = _rows(sec, "and", index, n, n)
    or_ = _rows(sec, "or", index, n, n)
    sec.finish()
    return BoolAlg(names, neg, and_, or_, t, f, name=name)


def _read_act(sec: _Section, index, ns: int, nm: int):
    flat = _rows(sec, "act", index, ns, nm * ns)
    return tuple(tuple(flat[a * ns + s] for s in range(ns)) for a in range(nm))


def loads(text: str, name: str = "model") -> Model:
    """Parse a model file; the outermost structure wins (a bare algebra file
    yields the algebra itself)."""
    sections = _parse_sections(text)
    if not sections:
        raise ParseError("empty model file", line=1)

    algebra: Ada | CAlgebra | BoolAlg | None = None
    if "ada" in sections:
        algebra = _read_calgebra(_Section("ada", sections["ada"]), True, name)
    elif "calgebra" in sections:
        algebra = _read_calgebra(_Section("calgebra", sections["calgebra"]),
                                 False, name)
    elif "boolalg" in sections:
        algebra = _read_boolalg(_Section("boolalg", sections["boolalg"]), name)

    structures = [s for s in STRUCTURE_SECTIONS if s in sections]
    if len(structures) > 1:
        raise ParseError(f"more than one structure section: {structures}", line=1)
    if not structures:
        if algebra is None:
            raise ParseError("no recognized section found", line=1)
        return algebra
    kind = structures[0]
    sec = _Section(kind, sections[kind])

    if kind in ("cmonoid", "cset"):
        if algebra is None or isinstance(algebra, BoolAlg):
            raise ParseError(
                f"[{kind}] needs an [ada] or [calgebra] section", line=1)
        names, index = _elements(sec)
        ns, nm = len(names), algebra.n
        bot = _element(sec, "bot", index)
        one = _element(sec, "one", index, required=(kind == "cmonoid"))
        mul = _rows(sec, "mul", index, ns, ns, required=(kind == "cmonoid"))
        malg_index = {n: i for i, n in enumerate(algebra.elements)}
        act = _read_act(sec, index, ns, nm)
        if kind == "cmonoid":
            comp = _rows(sec, "comp", malg_index, nm, ns)
            sec.finish()
            carrier = PointedCarrier(names, bot, one, mul)
            return CMonoid(CSet(carrier, algebra, act, name=name), comp, name=name)
        sec.finish()
        carrier = PointedCarrier(names, bot, one, mul)
        return CSet(carrier, algebra, act, name=name)

    # bmonoid
    if algebra is None or not isinstance(algebra, BoolAlg):
        raise ParseError("[bmonoid] needs a [boolalg] section", line=1)
    names, index = _elements(sec)
    ns, nq = len(names), algebra.n
    one = _element(sec, "one", index)
    mul = _rows(sec, "mul", index, ns, ns)
    q_index = {n: i for i, n in enumerate(algebra.elements)}
    act = _read_act(sec, index, ns, nq)
    comp = _rows(sec, "comp", q_index, nq, ns)
    sec.finish()
    return BMonoid(BSet(names, algebra, act, name=name), one, mul, comp, name=name)


def load(path: str | Path) -> Model:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ModelError(f"cannot read {p}: {exc}") from None
    return loads(text, name=p.stem)


# ---------------------------------------------------------------------------
# writing


def _fmt_unary(names, table) -> str:
    return " ".join(names[v] for v in table)


def _fmt_rows(names, rows) -> str:
    return " / ".join(" ".join(names[v] for v in row) for row in rows)


def _algebra_lines(alg: Ada | CAlgebra | BoolAlg) -> list[str]:
    names = alg.elements
    if isinstance(alg, BoolAlg):
        lines = ["[boolalg]"]
    elif isinstance(alg, Ada):
        lines = ["[ada]"]
    else:
        lines = ["[calgebra]"]
    lines.append(f"elements = {' '.join(names)}")
    lines.append(f"true = {names[alg.t]}")
    lines.append(f"false = {names[alg.f]}")
    if not isinstance(alg, BoolAlg):
        lines.append(f"undef = {names[alg.u]}")
    lines.append(f"neg = {_fmt_unary(names, alg.neg)}")
    lines.append(f"and = {_fmt_rows(names, alg.and_)}")
    lines.append(f"or = {_fmt_rows(names, alg.or_)}")
    if isinstance(alg, Ada):
        lines.append(f"down = {_fmt_unary(names, alg.down)}")
    return lines


def _act_lines(snames, act) -> str:
    rows = []
    for block in act:
        for row in block:
            rows.append(" ".join(snames[v] for v in row))
    return " / ".join(rows)


def dumps(model: Model) -> str:
    """Serialize a model; `loads(dumps(m))` is structurally identical to m."""
    if isinstance(model, (Ada, CAlgebra, BoolAlg)):
        return "\n".join(_algebra_lines(model)) + "\n"
    if isinstance(model, (CMonoid, CSet)):
        cs = model.base if isinstance(model, CMonoid) else model
        lines = _algebra_lines(cs.m)
        lines.append("")
        lines.append("[cmonoid]" if isinstance(model, CMonoid) else "[cset]")
        snames = cs.s.elements
        lines.append(f"elements = {' '.join(snames)}")
        lines.append(f"bot = {snames[cs.s.bot]}")
        if cs.s.one is not None:
            lines.append(f"one = {snames[cs.s.one]}")
        if cs.s.mul is not None:
            lines.append(f"mul = {_fmt_rows(snames, cs.s.mul)}")
        lines.append(f"act = {_act_lines(snames, cs.act)}")
        if isinstance(model, CMonoid):
            lines.append(f"comp = {_fmt_rows(cs.m.elements, model.comp)}")
        return "\n".join(lines) + "\n"
    if isinstance(model, BMonoid):
        lines = _algebra_lines(model.q)
        lines.append("")
        lines.append("[bmonoid]")
        snames = model.elements
        lines.append(f"elements = {' '.join(snames)}")
        lines.append(f"one = {snames[model.one]}")
        lines.append(f"mul = {_fmt_rows(snames, model.mul)}")
        lines.append(f"act = {_act_lines(snames, model.act)}")
        lines.append(f"comp = {_fmt_rows(model.q.elements, model.comp)}")
        return "\n".join(lines) + "\n"
    raise ModelError(f"cannot serialize {type(model).__name__}")


def dump(model: Model, path: str | Path) -> None:
    Path(path).write_text(dumps(model))
