"""Workbench for finite if-then-else program algebras: McCarthy three-valued
tests, program monoids acted on by them, congruence machinery, and the
embedding of every such monoid with ada tests into a functional model."""

from .algebras import (
    Ada,
    BoolAlg,
    CAlgebra,
    DEFAULT_MAX_CARRIER,
    PairOfSets,
    check_ada,
    check_bool,
    check_c_algebra,
    function_from_pair,
    mk_three,
    mk_two,
    pair_and,
    pair_down,
    pair_from_function,
    pair_neg,
    pair_or,
    power_ada,
)
from .actions import (
    BMonoid,
    BSet,
    CMonoid,
    CSet,
    PointedCarrier,
    basic_c_monoid,
    bundled_c_monoids,
    bundled_non_functional,
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
    power_bool,
    three_element_carrier,
    two_element_carrier,
)
from .congruence import (
    Congruence,
    all_congruences,
    check_induced_equivalence_props,
    check_constants_separated,
    check_cset_congruence,
    check_domain_props,
    congruence_closure,
    e_theta,
    iso_to_three,
    maximal_congruences,
    quotient_ada,
)
from .embedding import (
    Morphism,
    build_embedding,
    check_phi_rho_theta_hom,
    check_separation,
    phi_theta,
    rho_theta,
    verify_embedding,
)
from .errors import (
    EvalError,
    ModelError,
    ModelInconsistencyError,
    ParseError,
    SizeCapError,
)
from .report import AxiomReport, CheckResult
from .terms import (
    Counterexample,
    Identity,
    builtin_corpus,
    check_identity,
    compile_term,
    check_identity_universal,
    eval_term,
    identity_text,
    parse_identity,
    parse_term,
    term_text,
)

__all__ = [name for name in dir() if not name.startswith("_")]
