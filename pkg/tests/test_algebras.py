import pytest

from mcond.algebras import (
    Ada,
    BoolAlg,
    CAlgebra,
    check_ada,
    check_bool,
    check_c_algebra,
    mk_three,
    mk_two,
)
from mcond.actions import power_bool
from mcond.errors import ModelError, SizeCapError

T, F, U = 0, 1, 2


def test_three_tables_match_the_short_circuit_logic(three):
    assert three.elements == ("T", "F", "U")
    assert three.and_[T][U] == U
    assert three.neg[U] == U
    assert three.down[U] == F
    # T-row selects the other argument; F and U rows are constant
    assert three.and_[T] == (T, F, U)
    assert three.and_[F] == (F, F, F)
    assert three.and_[U] == (U, U, U)
    assert three.or_[T] == (T, T, T)
    assert three.or_[F] == (T, F, U)
    assert three.or_[U] == (U, U, U)
    assert three.down == (T, F, F)


def test_two_is_boolean():
    two = mk_two()
    assert two.and_[two.t][two.f] == two.f
    assert two.neg[two.neg[two.t]] == two.t
    assert two.or_[two.f][two.f] == two.f
    assert check_bool(two).ok


def test_three_passes_all_c_axioms(three):
    rep = check_c_algebra(three.as_c_algebra())
    assert rep.ok
    assert {e.label for e in rep.entries} >= {f"C{i}" for i in range(1, 8)}


def test_one_element_algebra_is_degenerate_but_legal():
    one = CAlgebra(("e",), (0,), ((0,),), ((0,),), 0, 0, 0)
    assert check_c_algebra(one).ok


def test_patched_or_table_fails_with_witness(three):
    or_ = [list(r) for r in three.or_]
    or_[U][T] = T
    bad = CAlgebra(three.elements, three.neg, three.and_,
                   tuple(tuple(r) for r in or_), three.t, three.f, three.u)
    rep = check_c_algebra(bad)
    assert not rep.ok
    broken = [e for e in rep.failures() if e.label.startswith("C")]
    assert broken and broken[0].witness is not None


def test_ada_axioms_on_three_and_powers(three, three_sq):
    assert check_ada(three).ok
    assert check_ada(three_sq).ok


def test_patched_down_fails_projection_of_u(three):
    bad = Ada(three.elements, three.neg, three.and_, three.or_,
              three.t, three.f, three.u, down=(T, F, U))
    rep = check_ada(bad)
    assert not rep.ok
    assert not rep["A2"].holds


def test_check_ada_rejects_plain_c_algebra(three):
    with pytest.raises(ModelError):
        check_ada(three.as_c_algebra())


def test_bool_neg_swapped_on_f_only_fails():
    two = mk_two()
    bad = BoolAlg(two.elements, (1, 1), two.and_, two.or_, two.t, two.f)
    rep = check_bool(bad)
    assert not rep.ok
    wit = rep.failures()[0].witness
    assert wit is not None and wit[0][1] == "F"


def test_square_of_two_is_boolean():
    # pointwise oracle: build 2x2 by applying the two-element tables per slot
    two = mk_two()
    elems = [(a, b) for a in range(2) for b in range(2)]
    idx = {e: i for i, e in enumerate(elems)}
    neg = tuple(idx[(two.neg[a], two.neg[b])] for a, b in elems)
    and_ = tuple(tuple(idx[(two.and_[a][c], two.and_[b][d])] for c, d in elems)
                 for a, b in elems)
    or_ = tuple(tuple(idx[(two.or_[a][c], two.or_[b][d])] for c, d in elems)
                for a, b in elems)
    square = BoolAlg(tuple("TF"[a] + "TF"[b] for a, b in elems), neg, and_, or_,
                     t=idx[(0, 0)], f=idx[(1, 1)])
    assert check_bool(square).ok
    assert square == power_bool(2)


def test_malformed_tables_name_the_offender():
    with pytest.raises(ModelError, match="neg"):
        CAlgebra(("T", "F", "U"), (1, 0), ((0,) * 3,) * 3, ((0,) * 3,) * 3, 0, 1, 2)
    with pytest.raises(ModelError, match=r"and: row 1"):
        CAlgebra(("T", "F", "U"), (1, 0, 2),
                 ((0, 1, 2), (1, 1), (2, 2, 2)), ((0,) * 3,) * 3, 0, 1, 2)
    with pytest.raises(ModelError, match=r"\(2,0\)"):
        CAlgebra(("T", "F", "U"), (1, 0, 2),
                 ((0, 1, 2), (1, 1, 1), (9, 2, 2)), ((0,) * 3,) * 3, 0, 1, 2)


def test_sweeps_refuse_oversized_carriers():
    n = 65
    big = CAlgebra(tuple(f"e{i}" for i in range(n)), tuple(range(n)),
                   tuple(tuple(i for _ in range(n)) for i in range(n)),
                   tuple(tuple(i for _ in range(n)) for i in range(n)),
                   0, 1, 2)
    with pytest.raises(SizeCapError):
        check_c_algebra(big)
