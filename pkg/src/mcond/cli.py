"""Command-line front end.

Verbs: check, congruences, embed, identity, gen, selftest.
Exit codes: 0 all checks pass, 1 an axiom or property fails (or an identity
is refuted), 2 usage/parse/structural error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import modelfile
from .actions import (
    BMonoid,
    CMonoid,
    CSet,
    PointedCarrier,
    basic_c_monoid,
    bundled_c_monoids,
    check_b_monoid,
    check_c_monoid,
    check_c_set,
    functional_b_monoid,
    functional_c_monoid,
    pointwise_c_monoid,
)
from .algebras import (
    Ada,
    BoolAlg,
    CAlgebra,
    DEFAULT_MAX_CARRIER,
    check_ada,
    check_bool,
    check_c_algebra,
    mk_three,
    power_ada,
)
from .congruence import all_congruences, blocks, maximal_congruences
from .embedding import build_embedding, check_phi_rho_theta_hom, check_separation, \
    verify_embedding
from .congruence import check_induced_equivalence_props, check_domain_props
from .errors import EvalError, ModelError, ModelInconsistencyError, ParseError, \
    SizeCapError
from .terms import check_identity, parse_identity

DEFAULT_MAX_X = 3


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _check_reports(model, max_carrier: int):
    if isinstance(model, Ada):
        return [check_ada(model, max_carrier)]
    if isinstance(model, BoolAlg):
        return [check_bool(model, max_carrier)]
    if isinstance(model, CAlgebra):
        return [check_c_algebra(model, max_carrier)]
    if isinstance(model, CMonoid):
        alg = check_ada(model.m, max_carrier) if isinstance(model.m, Ada) \
            else check_c_algebra(model.m, max_carrier)
        return [alg, check_c_monoid(model, max_carrier)]
    if isinstance(model, CSet):
        alg = check_ada(model.m, max_carrier) if isinstance(model.m, Ada) \
            else check_c_algebra(model.m, max_carrier)
        return [alg, check_c_set(model, max_carrier)]
    if isinstance(model, BMonoid):
        return [check_bool(model.q, max_carrier), check_b_monoid(model, max_carrier)]
    raise ModelError(f"no checker for {type(model).__name__}")


def cmd_check(args) -> int:
    model = modelfile.load(args.file)
    ok = True
    for rep in _check_reports(model, args.max_carrier):
        _out(rep.format())
        ok = ok and rep.ok
    return 0 if ok else 1


def _ada_of(model) -> Ada:
    if isinstance(model, Ada):
        return model
    if isinstance(model, (CMonoid, CSet)) and isinstance(model.m, Ada):
        return model.m
    raise ModelError("this command needs an [ada] section (possibly via a "
                     "c-monoid or c-set over an ada)")


def cmd_congruences(args) -> int:
    model = modelfile.load(args.file)
    ada = _ada_of(model)
    subject = ada.name or "ada"
    if args.maximal:
        cs = maximal_congruences(ada, args.max_carrier)
        _out(f"maximal congruences of {subject} (carrier {ada.n})")
    else:
        cs = all_congruences(ada, args.max_carrier)
        _out(f"congruences of {subject} (carrier {ada.n})")
    for i, c in enumerate(cs):
        _out(f"  {i}: {c.num_blocks} blocks  {c.show()}")
    _out(f"count: {len(cs)}")
    return 0


def cmd_embed(args) -> int:
    model = modelfile.load(args.file)
    if not isinstance(model, CMonoid):
        raise ModelError("embed needs a [cmonoid] section")
    if not isinstance(model.m, Ada):
        raise ModelError("embed needs tests drawn from an [ada]")
    mor = build_embedding(model, args.max_carrier)
    _out(f"embedding of {model.name or 'c-monoid'}: "
         f"{len(mor.thetas)} maximal congruence(s), |X| = {mor.x_size}")
    _out("ground points: " + " ".join(mor.point_names))
    for s, name in enumerate(model.s.elements):
        vec = mor.phi[s]
        shown = " ".join(
            "bot" if v == 0 else mor.point_names[v - 1] for v in vec)
        _out(f"  phi({name}) = [{shown}]")
    for a, name in enumerate(model.m.elements):
        _out(f"  rho({name}) = {mor.rho[a].show()}")
    ok = True
    if args.verify:
        rep = verify_embedding(model, mor)
        _out(rep.format())
        ok = rep.ok
    if args.out:
        target = mor.materialize_target(args.max_carrier)
        modelfile.dump(target, args.out)
        _out(f"image model written to {args.out}")
    return 0 if ok else 1


def cmd_identity(args) -> int:
    ident = parse_identity(args.identity)
    if args.functional is not None and args.file is not None:
        raise ModelError("give either a model file or --functional, not both")
    if args.functional is not None:
        if args.functional > args.max_x:
            raise SizeCapError(
                f"--functional {args.functional} exceeds --max-x {args.max_x}")
        model = functional_c_monoid(args.functional, args.max_carrier)
    elif args.file is not None:
        model = modelfile.load(args.file)
        if not isinstance(model, (CMonoid, BMonoid)):
            raise ModelError("identity checking needs a [cmonoid] or [bmonoid]")
    else:
        raise ModelError("give a model file or --functional K")
    res = check_identity(model, ident)
    if res.holds:
        extra = f", {res.vacuous} vacuous" if res.vacuous else ""
        _out(f"holds on {model.name}: {res.checked} assignments{extra}")
        return 0
    _out("refuted: " + res.counterexample.show())
    return 1


def _carrier_from_names(names: list[str]) -> PointedCarrier:
    if "1" not in names or "bot" not in names:
        raise ModelError("element list must contain '1' and 'bot'")
    if len(set(names)) != len(names):
        raise ModelError("duplicate element names")
    one, bot = names.index("1"), names.index("bot")
    n = len(names)

    # zero-divisor-free default: identity and zero as required, any other
    # pair multiplies to its right factor
    def prod(i: int, j: int) -> int:
        if i == one:
            return j
        if j == one:
            return i
        if i == bot or j == bot:
            return bot
        return j

    mul = tuple(tuple(prod(i, j) for j in range(n)) for i in range(n))
    return PointedCarrier(tuple(names), bot, one, mul)


def cmd_gen(args) -> int:
    if args.kind == "functional":
        if args.x_size is None:
            raise ModelError("gen functional needs --x-size")
        if args.x_size > args.max_x:
            raise SizeCapError(f"--x-size {args.x_size} exceeds --max-x {args.max_x}")
        model = functional_c_monoid(args.x_size, args.max_carrier)
    elif args.kind == "basic":
        if args.elements is None:
            raise ModelError("gen basic needs --elements")
        model = basic_c_monoid(_carrier_from_names(args.elements.split(",")))
    elif args.kind == "pointwise":
        if args.elements is None or args.x_size is None:
            raise ModelError("gen pointwise needs --elements and --x-size")
        if args.x_size > args.max_x:
            raise SizeCapError(f"--x-size {args.x_size} exceeds --max-x {args.max_x}")
        model = pointwise_c_monoid(_carrier_from_names(args.elements.split(",")),
                                   args.x_size, args.max_carrier)
    else:
        raise ModelError(f"unknown kind {args.kind!r}")
    text = modelfile.dumps(model)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        _out(f"model written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_selftest(args) -> int:
    max_carrier = args.max_carrier
    ok = True

    def run(rep) -> None:
        nonlocal ok
        _out(rep.format())
        _out()
        ok = ok and rep.ok

    _out("== axiom suites: test algebras ==")
    run(check_ada(mk_three(), max_carrier))
    for k in (1, 2, 3):
        run(check_ada(power_ada(k, max_carrier), max_carrier))

    _out("== axiom suites: bundled program models ==")
    models = bundled_c_monoids()
    for cm in models:
        run(check_c_monoid(cm, max_carrier))

    _out("== axiom suites: halting baseline ==")
    for k in (1, 2):
        run(check_b_monoid(functional_b_monoid(k, max_carrier), max_carrier))

    _out("== induced-equivalence suites ==")
    for cm in models:
        run(check_induced_equivalence_props(cm, max_carrier))

    _out("== domain-test suites ==")
    for cm in models:
        run(check_domain_props(cm, max_carrier))

    _out("== separation suites ==")
    for cm in models:
        run(check_separation(cm, max_carrier))

    _out("== per-congruence homomorphisms ==")
    for cm in models:
        for theta in maximal_congruences(cm.m, max_carrier):
            run(check_phi_rho_theta_hom(cm, theta))

    _out("== embeddings ==")
    for cm in models:
        mor = build_embedding(cm, max_carrier)
        _out(f"{cm.name}: |X| = {mor.x_size}")
        run(verify_embedding(cm, mor))

    _out(f"selftest: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcond",
        description="Workbench for finite if-then-else program algebras "
                    "with three-valued tests.")
    parser.add_argument("--max-carrier", type=int, default=DEFAULT_MAX_CARRIER,
                        help="largest carrier admitted in exhaustive sweeps")
    parser.add_argument("--max-x", type=int, default=DEFAULT_MAX_X,
                        help="largest ground-set size for generated "
                             "functional models")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the matching axiom checkers on a model file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("congruences", help="congruence lattice of the ada in a model file")
    p.add_argument("file")
    p.add_argument("--maximal", action="store_true",
                   help="list only maximal proper congruences")
    p.set_defaults(fn=cmd_congruences)

    p = sub.add_parser("embed", help="build the functional representation of a c-monoid")
    p.add_argument("file")
    p.add_argument("--verify", action="store_true",
                   help="verify injectivity and every preservation family")
    p.add_argument("--out", help="write the materialized image model here")
    p.set_defaults(fn=cmd_embed)

    p = sub.add_parser("identity", help="decide an identity on one finite model")
    p.add_argument("identity", help="e.g. '(f @ T)[f, f] = f'")
    p.add_argument("file", nargs="?", help="model file with a [cmonoid] or [bmonoid]")
    p.add_argument("--functional", type=int, metavar="K",
                   help="use the functional model over K points instead of a file")
    p.set_defaults(fn=cmd_identity)

    p = sub.add_parser("gen", help="generate a model file")
    p.add_argument("kind", choices=("functional", "basic", "pointwise"))
    p.add_argument("--x-size", type=int)
    p.add_argument("--elements", help="comma-separated names incl. '1' and 'bot'")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("selftest", help="run the bundled verification suites")
    p.set_defaults(fn=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ModelInconsistencyError as exc:
        print(f"model inconsistency: {exc}", file=sys.stderr)
        return 1
    except (ModelError, ParseError, EvalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
