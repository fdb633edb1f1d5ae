"""Representation of a program monoid with ada tests inside a functional
model: per-congruence homomorphisms, the tagged disjoint-union ground set,
and machine verification that the assembled pair of maps is an embedding.

The target functional model over the assembled ground set is usually too
big to materialize, so its action, composition and product are computed on
demand from value vectors; `materialize_target` builds the dense model only
when it fits under the size cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .actions import CMonoid, functional_c_monoid
from .algebras import Ada, DEFAULT_MAX_CARRIER, PairOfSets, function_from_pair, \
    pair_and, pair_neg, pair_or
from .congruence import Congruence, Partition, blocks, e_theta, maximal_congruences
from .errors import ModelError, ModelInconsistencyError
from .report import AxiomReport, CheckResult


@dataclass(frozen=True)
class QuotientPointedSet:
    """Classes of the program carrier under an induced equivalence, ordered
    by least member, with the class of bot distinguished."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    bot_class: int
    names: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.classes)

    def nonbot(self) -> tuple[int, ...]:
        return tuple(c for c in range(self.n) if c != self.bot_class)


def quotient_pointed_set(elements: tuple[str, ...], bot: int,
                         part: Partition) -> QuotientPointedSet:
    blks = tuple(tuple(b) for b in blocks(part))
    index = {blk[0]: i for i, blk in enumerate(blks)}
    class_of = tuple(index[part[x]] for x in range(len(elements)))
    return QuotientPointedSet(
        classes=blks,
        class_of=class_of,
        bot_class=class_of[bot],
        names=tuple(elements[blk[0]] for blk in blks),
    )


def phi_theta(cm: CMonoid, theta: Congruence):
    """Right-multiplication on classes: s goes to the self-map sending the
    class of t to the class of t*s.  Raises when equivalent representatives
    disagree, which would mean the input is not a genuine model.

    Returns (quotient, table) with table[s][c] a class index."""
    sigma = e_theta(cm, theta)
    qps = quotient_pointed_set(cm.s.elements, cm.s.bot, sigma)
    mul = cm.s.mul
    table = []
    for s in range(cm.s.n):
        row = []
        for cls in qps.classes:
            images = {qps.class_of[mul[t][s]] for t in cls}
            if len(images) != 1:
                raise ModelInconsistencyError(
                    "right multiplication not constant on the class of "
                    f"{cm.s.elements[cls[0]]} (by {cm.s.elements[s]})")
            row.append(images.pop())
        table.append(tuple(row))
    return qps, tuple(table)


def rho_theta(cm: CMonoid, theta: Congruence):
    """Tests as pairs of class sets over the non-bot classes: a class lands
    in the first component when composing any representative with the test
    falls in the T-class, in the second for the F-class.

    Returns (quotient, ground names, pairs) with pairs[a] a PairOfSets."""
    m = cm.m
    sigma = e_theta(cm, theta)
    qps = quotient_pointed_set(cm.s.elements, cm.s.bot, sigma)
    nonbot = qps.nonbot()
    ground = tuple(qps.names[c] for c in nonbot)
    gpos = {c: i for i, c in enumerate(nonbot)}
    part = theta.part
    tcls, fcls = part[m.t], part[m.f]
    full = (1 << len(ground)) - 1

    pairs = []
    for a in range(m.n):
        if a == m.t:
            pairs.append(PairOfSets(ground, full, 0))
            continue
        if a == m.f:
            pairs.append(PairOfSets(ground, 0, full))
            continue
        abits = bbits = 0
        for c in nonbot:
            kinds = set()
            for t in qps.classes[c]:
                k = part[cm.comp[t][a]]
                kinds.add(0 if k == tcls else 1 if k == fcls else 2)
            if len(kinds) != 1:
                raise ModelInconsistencyError(
                    "test image depends on the representative of class "
                    f"{qps.names[c]}")
            kind = kinds.pop()
            if kind == 0:
                abits |= 1 << gpos[c]
            elif kind == 1:
                bbits |= 1 << gpos[c]
        for t in qps.classes[qps.bot_class]:
            if part[cm.comp[t][a]] in (tcls, fcls):
                raise ModelInconsistencyError(
                    "bot class composes to a halting test value")
        pairs.append(PairOfSets(ground, abits, bbits))
    return qps, ground, tuple(pairs)


def _quotient_act(pair: PairOfSets, gpos, bot_class, fs, ft, qps):
    """Functional action over the quotient: per class, pick from fs on the
    first component, ft on the second, bot class otherwise."""
    out = []
    for c in range(qps.n):
        if c == bot_class:
            out.append(bot_class)
        else:
            i = gpos[c]
            if pair.a >> i & 1:
                out.append(fs[c])
            elif pair.b >> i & 1:
                out.append(ft[c])
            else:
                out.append(bot_class)
    return tuple(out)


def _quotient_comp(fs, pair: PairOfSets, gpos, nonbot, ground):
    a = b = 0
    for i, c in enumerate(nonbot):
        img = fs[c]
        if img in gpos:
            j = gpos[img]
            if pair.a >> j & 1:
                a |= 1 << i
            elif pair.b >> j & 1:
                b |= 1 << i
    return PairOfSets(ground, a, b)


def check_phi_rho_theta_hom(cm: CMonoid, theta: Congruence) -> AxiomReport:
    """One congruence's pair of maps is a homomorphism into the functional
    model over the quotient: monoid structure, test-algebra structure, the
    action, and composition all carry over."""
    m = cm.m
    qps, phi = phi_theta(cm, theta)
    _, ground, rho = rho_theta(cm, theta)
    nonbot = qps.nonbot()
    gpos = {c: i for i, c in enumerate(nonbot)}
    rep = AxiomReport(
        f"per-congruence homomorphism on {cm.name or '<c-monoid>'}")
    sn, mn = cm.s.elements, m.elements
    ns, nm = cm.s.n, m.n
    full = (1 << len(ground)) - 1

    zeta = tuple(qps.bot_class for _ in range(qps.n))
    ident = tuple(range(qps.n))
    rep.add(CheckResult("phi-zero", "bot goes to the constant-bot map",
                        phi[cm.s.bot] == zeta, 1))
    rep.add(CheckResult("phi-one", "1 goes to the identity map",
                        phi[cm.s.one] == ident, 1))

    ok, wit = True, None
    for s in range(ns):
        for t in range(ns):
            prod = phi[cm.s.mul[s][t]]
            composed = tuple(phi[t][phi[s][c]] for c in range(qps.n))
            if prod != composed:
                ok, wit = False, (("s", sn[s]), ("t", sn[t]))
                break
        if not ok:
            break
    rep.add(CheckResult("phi-mul", "phi(s . t) = phi(s) then phi(t)",
                        ok, ns * ns, wit))

    rep.add(CheckResult("rho-T", "T goes to (all classes, none)",
                        (rho[m.t].a, rho[m.t].b) == (full, 0), 1))
    rep.add(CheckResult("rho-F", "F goes to (none, all classes)",
                        (rho[m.f].a, rho[m.f].b) == (0, full), 1))
    rep.add(CheckResult("rho-U", "U goes to (none, none)",
                        (rho[m.u].a, rho[m.u].b) == (0, 0), 1))

    ok, wit = True, None
    for a in range(nm):
        if rho[m.neg[a]] != pair_neg(rho[a]):
            ok, wit = False, (("%a", mn[a]),)
            break
    rep.add(CheckResult("rho-neg", "rho(~%a) = ~rho(%a)", ok, nm, wit))

    for label, law, table, op in (
        ("rho-and", "rho(%a & %b) = rho(%a) & rho(%b)", m.and_, pair_and),
        ("rho-or", "rho(%a | %b) = rho(%a) | rho(%b)", m.or_, pair_or),
    ):
        ok, wit = True, None
        for a in range(nm):
            for b in range(nm):
                if rho[table[a][b]] != op(rho[a], rho[b]):
                    ok, wit = False, (("%a", mn[a]), ("%b", mn[b]))
                    break
            if not ok:
                break
        rep.add(CheckResult(label, law, ok, nm * nm, wit))

    ok, wit = True, None
    for a in range(nm):
        for s in range(ns):
            for t in range(ns):
                lhs = phi[cm.act[a][s][t]]
                rhs = _quotient_act(rho[a], gpos, qps.bot_class, phi[s], phi[t], qps)
                if lhs != rhs:
                    ok, wit = False, (("%a", mn[a]), ("s", sn[s]), ("t", sn[t]))
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add(CheckResult("hom-action", "phi(%a[s,t]) = rho(%a)[phi(s), phi(t)]",
                        ok, nm * ns * ns, wit))

    ok, wit = True, None
    for s in range(ns):
        for a in range(nm):
            lhs = rho[cm.comp[s][a]]
            rhs = _quotient_comp(phi[s], rho[a], gpos, nonbot, ground)
            if lhs != rhs:
                ok, wit = False, (("s", sn[s]), ("%a", mn[a]))
                break
        if not ok:
            break
    rep.add(CheckResult("hom-comp", "rho(s @ %a) = phi(s) @ rho(%a)",
                        ok, ns * nm, wit))
    return rep


def check_separation(cm: CMonoid,
                     max_carrier: int = DEFAULT_MAX_CARRIER) -> AxiomReport:
    """Every distinct pair, in either sort, is told apart by some maximal
    congruence's maps; tests whose image is all-first or all-second are
    congruent to T resp. F."""
    m = cm.m
    if not isinstance(m, Ada):
        raise ModelError("separation needs tests drawn from an ada")
    thetas = maximal_congruences(m, max_carrier)
    rep = AxiomReport(f"separation on {cm.name or '<c-monoid>'}")
    sn, mn = cm.s.elements, m.elements
    phis, rhos = [], []
    for theta in thetas:
        _, phi = phi_theta(cm, theta)
        _, _, rho = rho_theta(cm, theta)
        phis.append(phi)
        rhos.append(rho)

    ok, wit = True, None
    for s in range(cm.s.n):
        for t in range(s + 1, cm.s.n):
            if all(phi[s] == phi[t] for phi in phis):
                ok, wit = False, (("s", sn[s]), ("t", sn[t]))
                break
        if not ok:
            break
    rep.add(CheckResult("sep-programs",
                        "distinct programs differ under some congruence",
                        ok, cm.s.n * (cm.s.n - 1) // 2, wit))

    ok, wit = True, None
    for a in range(m.n):
        for b in range(a + 1, m.n):
            if all(rho[a] == rho[b] for rho in rhos):
                ok, wit = False, (("%a", mn[a]), ("%b", mn[b]))
                break
        if not ok:
            break
    rep.add(CheckResult("sep-tests",
                        "distinct tests differ under some congruence",
                        ok, m.n * (m.n - 1) // 2, wit))

    ok, wit = True, None
    for i, theta in enumerate(thetas):
        for a in range(m.n):
            p = rhos[i][a]
            if p.b == 0 and p.a == p.full and not theta.related(a, m.t):
                ok, wit = False, (("theta", str(i)), ("%a", mn[a]))
                break
        if not ok:
            break
    rep.add(CheckResult("full-first-T",
                        "image (all, none) forces relation to T", ok,
                        len(thetas) * m.n, wit))

    ok, wit = True, None
    for i, theta in enumerate(thetas):
        for a in range(m.n):
            p = rhos[i][a]
            if p.a == 0 and p.b == p.full and not theta.related(a, m.f):
                ok, wit = False, (("theta", str(i)), ("%a", mn[a]))
                break
        if not ok:
            break
    rep.add(CheckResult("full-second-F",
                        "image (none, all) forces relation to F", ok,
                        len(thetas) * m.n, wit))
    return rep


@dataclass(frozen=True)
class TaggedPoint:
    """One ground point of the assembled representation: a non-bot class of
    one maximal congruence, tagged by that congruence's index."""

    theta_index: int
    rep: int  # least member of the class in the program carrier
    name: str


@dataclass(frozen=True)
class Morphism:
    """The assembled pair of maps into the functional model over the tagged
    disjoint union of all per-congruence class sets.

    phi[s] is a value vector over the ground points (0 = bot, i+1 = point i);
    rho[a] is a PairOfSets over the ground points."""

    source: CMonoid = field(compare=False)
    thetas: tuple[Congruence, ...] = field(compare=False)
    ground: tuple[TaggedPoint, ...]
    point_names: tuple[str, ...]
    phi: tuple[tuple[int, ...], ...]
    rho: tuple[PairOfSets, ...]

    @property
    def x_size(self) -> int:
        return len(self.ground)

    def identity_vector(self) -> tuple[int, ...]:
        return tuple(range(1, self.x_size + 1))

    def zero_vector(self) -> tuple[int, ...]:
        return (0,) * self.x_size

    def target_mul(self, fv, gv):
        # left-to-right composition of value vectors
        return tuple(0 if v == 0 else gv[v - 1] for v in fv)

    def target_act(self, pair: PairOfSets, fv, gv):
        out = []
        for j in range(self.x_size):
            if pair.a >> j & 1:
                out.append(fv[j])
            elif pair.b >> j & 1:
                out.append(gv[j])
            else:
                out.append(0)
        return tuple(out)

    def target_comp(self, fv, pair: PairOfSets) -> PairOfSets:
        a = b = 0
        for j, v in enumerate(fv):
            if v == 0:
                continue
            if pair.a >> (v - 1) & 1:
                a |= 1 << j
            elif pair.b >> (v - 1) & 1:
                b |= 1 << j
        return PairOfSets(self.point_names, a, b)

    def materialize_target(self, max_carrier: int = DEFAULT_MAX_CARRIER) -> CMonoid:
        """Dense functional model over the assembled ground set; refuses to
        build past the size cap (the embedding checks do not need it)."""
        return functional_c_monoid(self.x_size, max_carrier, self.point_names)

    def phi_index(self, s: int) -> int:
        """Index of phi[s] in the materialized target carrier."""
        idx = 0
        for v in self.phi[s]:
            idx = idx * (self.x_size + 1) + v
        return idx

    def rho_index(self, a: int) -> int:
        """Index of rho[a] in the materialized target test algebra."""
        idx = 0
        for v in function_from_pair(self.rho[a]):
            idx = idx * 3 + v
        return idx


def build_embedding(cm: CMonoid,
                    max_carrier: int = DEFAULT_MAX_CARRIER) -> Morphism:
    """Assemble the representation: one block of ground points per maximal
    congruence, the per-congruence maps glued pointwise, with every image
    class equal to bot re-pointed to the one fresh base point."""
    m = cm.m
    if not isinstance(m, Ada):
        raise ModelError("embedding needs tests drawn from an ada")
    if m.n < 2:
        raise ModelError("trivial test algebra has no maximal proper congruence")
    thetas = tuple(maximal_congruences(m, max_carrier))

    per = []
    ground: list[TaggedPoint] = []
    offsets = []
    for i, theta in enumerate(thetas):
        qps, phi = phi_theta(cm, theta)
        _, _, rho = rho_theta(cm, theta)
        nonbot = qps.nonbot()
        gpos = {c: k for k, c in enumerate(nonbot)}
        offsets.append(len(ground))
        for c in nonbot:
            rep_elem = qps.classes[c][0]
            ground.append(TaggedPoint(i, rep_elem,
                                      f"q{i}_{cm.s.elements[rep_elem]}"))
        per.append((qps, phi, rho, nonbot, gpos))

    point_names = tuple(p.name for p in ground)
    nx = len(ground)

    phi_vectors = []
    for s in range(cm.s.n):
        vec = []
        for k, pt in enumerate(ground):
            qps, phi, _, nonbot, gpos = per[pt.theta_index]
            c = nonbot[k - offsets[pt.theta_index]]
            image = phi[s][c]
            if image == qps.bot_class:
                vec.append(0)
            else:
                vec.append(1 + offsets[pt.theta_index] + gpos[image])
        phi_vectors.append(tuple(vec))

    rho_pairs = []
    for a in range(m.n):
        abits = bbits = 0
        for i, (qps, _, rho, nonbot, gpos) in enumerate(per):
            p = rho[a]
            for k in range(len(nonbot)):
                if p.a >> k & 1:
                    abits |= 1 << (offsets[i] + k)
                elif p.b >> k & 1:
                    bbits |= 1 << (offsets[i] + k)
        rho_pairs.append(PairOfSets(point_names, abits, bbits))

    return Morphism(source=cm, thetas=thetas, ground=tuple(ground),
                    point_names=point_names, phi=tuple(phi_vectors),
                    rho=tuple(rho_pairs))


def verify_embedding(cm: CMonoid, mor: Morphism) -> AxiomReport:
    """Injectivity in both sorts plus the eight preservation families,
    exhaustively, computing target operations on demand."""
    if mor.source is not cm and mor.source != cm:
        raise ModelError("morphism was built for a different model")
    m = cm.m
    rep = AxiomReport(f"embedding of {cm.name or '<c-monoid>'} "
                      f"into the functional model over {mor.x_size} points")
    sn, mn = cm.s.elements, m.elements
    ns, nm = cm.s.n, m.n

    rep.add(CheckResult("x-finite", f"ground set is finite: |X| = {mor.x_size}",
                        True, 1))

    ok, wit = True, None
    for s in range(ns):
        for t in range(s + 1, ns):
            if mor.phi[s] == mor.phi[t]:
                ok, wit = False, (("s", sn[s]), ("t", sn[t]))
                break
        if not ok:
            break
    rep.add(CheckResult("inj-programs", "phi is injective",
                        ok, ns * (ns - 1) // 2, wit))

    ok, wit = True, None
    for a in range(nm):
        for b in range(a + 1, nm):
            if mor.rho[a] == mor.rho[b]:
                ok, wit = False, (("%a", mn[a]), ("%b", mn[b]))
                break
        if not ok:
            break
    rep.add(CheckResult("inj-tests", "rho is injective",
                        ok, nm * (nm - 1) // 2, wit))

    ok, wit = True, None
    for s in range(ns):
        for t in range(ns):
            if mor.phi[cm.s.mul[s][t]] != mor.target_mul(mor.phi[s], mor.phi[t]):
                ok, wit = False, (("s", sn[s]), ("t", sn[t]))
                break
        if not ok:
            break
    rep.add(CheckResult("pres-mul", "phi(s . t) = phi(s) . phi(t)",
                        ok, ns * ns, wit))

    ok = mor.phi[cm.s.one] == mor.identity_vector() and \
        mor.phi[cm.s.bot] == mor.zero_vector()
    rep.add(CheckResult("pres-unit-zero",
                        "phi(1) = identity and phi(bot) = constant-bot", ok, 2))

    full = (1 << mor.x_size) - 1
    ok = ((mor.rho[m.t].a, mor.rho[m.t].b) == (full, 0)
          and (mor.rho[m.f].a, mor.rho[m.f].b) == (0, full)
          and (mor.rho[m.u].a, mor.rho[m.u].b) == (0, 0))
    rep.add(CheckResult("pres-constants",
                        "rho(T) = (X,{}), rho(F) = ({},X), rho(U) = ({},{})",
                        ok, 3))

    ok, wit = True, None
    for a in range(nm):
        if mor.rho[m.neg[a]] != pair_neg(mor.rho[a]):
            ok, wit = False, (("%a", mn[a]),)
            break
    rep.add(CheckResult("pres-neg", "rho(~%a) = ~rho(%a)", ok, nm, wit))

    for label, law, table, op in (
        ("pres-and", "rho(%a & %b) = rho(%a) & rho(%b)", m.and_, pair_and),
        ("pres-or", "rho(%a | %b) = rho(%a) | rho(%b)", m.or_, pair_or),
    ):
        ok, wit = True, None
        for a in range(nm):
            for b in range(nm):
                if mor.rho[table[a][b]] != op(mor.rho[a], mor.rho[b]):
                    ok, wit = False, (("%a", mn[a]), ("%b", mn[b]))
                    break
            if not ok:
                break
        rep.add(CheckResult(label, law, ok, nm * nm, wit))

    ok, wit = True, None
    for a in range(nm):
        pa = mor.rho[a]
        for s in range(ns):
            fs = mor.phi[s]
            for t in range(ns):
                lhs = mor.phi[cm.act[a][s][t]]
                if lhs != mor.target_act(pa, fs, mor.phi[t]):
                    ok, wit = False, (("%a", mn[a]), ("s", sn[s]), ("t", sn[t]))
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add(CheckResult("pres-action", "phi(%a[s,t]) = rho(%a)[phi(s), phi(t)]",
                        ok, nm * ns * ns, wit))

    ok, wit = True, None
    for s in range(ns):
        fs = mor.phi[s]
        for a in range(nm):
            if mor.rho[cm.comp[s][a]] != mor.target_comp(fs, mor.rho[a]):
                ok, wit = False, (("s", sn[s]), ("%a", mn[a]))
                break
        if not ok:
            break
    rep.add(CheckResult("pres-comp", "rho(s @ %a) = phi(s) @ rho(%a)",
                        ok, ns * nm, wit))
    return rep
