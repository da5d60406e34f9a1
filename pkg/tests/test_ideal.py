from fractions import Fraction

import pytest

from fixtures import (
    chord_cycle_identified,
    chord_cycle_monomial,
    cycle_fork_tail,
    loop_meets_twocycle,
    loop_spur,
    petal_hub,
    two_loops_line,
)
from quiverump.errors import (
    InvalidPresentation,
    NotAdmissible,
    PathInIdeal,
    TrivialPath,
)
from quiverump.ideal import (
    admissibility_bound,
    algebra,
    combination_in_ideal,
    coset_paths,
    is_special_multiserial,
    linear_relation,
    live_paths,
    minimalize_relations,
    path_in_ideal,
    zero_relation,
)
from quiverump.quiver import quiver


def test_relation_validation():
    q = quiver(["1", "2"], [("a", "1", "1"), ("b", "1", "2")])
    with pytest.raises(InvalidPresentation):
        zero_relation(q, "a")  # too short
    with pytest.raises(InvalidPresentation):
        linear_relation(q, [(1, "aa")])  # one term
    with pytest.raises(InvalidPresentation):
        linear_relation(q, [(1, "aa"), (-1, "ab")])  # not parallel
    with pytest.raises(InvalidPresentation):
        linear_relation(q, [(1, "aa"), (0, "aaa")])  # zero coefficient
    with pytest.raises(InvalidPresentation):
        linear_relation(q, [(1, "aa"), (-1, "aa")])  # repeated term


def test_linear_relation_normalization():
    q = quiver(["1"], [("a", "1", "1"), ("b", "1", "1")])
    rel = linear_relation(q, [(2, "bb"), (-2, "aa")])
    assert rel.paths == (q.path("aa"), q.path("bb"))
    assert rel.coefficients == (Fraction(1), Fraction(-1))
    assert str(rel) == "aa - bb"


def test_admissibility_bounds_of_examples():
    assert cycle_fork_tail().bound == 4
    assert two_loops_line().bound == 4
    assert petal_hub().bound == 7
    assert loop_spur().bound == 4
    assert chord_cycle_monomial().bound == 5
    assert chord_cycle_identified().bound == 5
    assert loop_meets_twocycle().bound == 3


def test_admissibility_trivial_cases():
    acyclic = quiver(["1", "2"], [("a", "1", "2")])
    assert admissibility_bound(acyclic) == 2
    no_arrows = quiver(["1"], [])
    assert admissibility_bound(no_arrows) == 2


def test_unbounded_cycle_is_rejected():
    loop = quiver(["1"], [("a", "1", "1")])
    with pytest.raises(NotAdmissible) as err:
        admissibility_bound(loop, cap=10)
    assert err.value.cap == 10
    with pytest.raises(NotAdmissible):
        algebra(loop, cap=10)


def test_membership_monomial():
    A = cycle_fork_tail()
    q = A.quiver
    assert not path_in_ideal(A, q.path("dab"))
    assert path_in_ideal(A, q.path("abc"))
    assert path_in_ideal(A, q.path("cd"))
    assert path_in_ideal(A, q.path("dabc"))  # length 4 hits the bound
    assert path_in_ideal(A, q.path("dabce"))
    assert not path_in_ideal(A, q.path("e"))
    with pytest.raises(TrivialPath):
        path_in_ideal(A, q.trivial("1"))


def test_membership_with_identifications():
    A = two_loops_line()
    q = A.quiver
    assert not path_in_ideal(A, q.path("aa"))
    assert path_in_ideal(A, q.path("aaa"))
    assert path_in_ideal(A, q.path("bbb"))
    assert path_in_ideal(A, q.path("ab"))
    assert not path_in_ideal(A, q.path("cde"))

    B = loop_meets_twocycle()
    qb = B.quiver
    assert not path_in_ideal(B, qb.path("aa"))
    assert not path_in_ideal(B, qb.path("bc"))
    assert not path_in_ideal(B, qb.path("cb"))
    assert path_in_ideal(B, qb.path("aaa"))
    assert path_in_ideal(B, qb.path("bcb"))
    assert path_in_ideal(B, qb.path("cbc"))


def test_coset_paths():
    A = two_loops_line()
    q = A.quiver
    assert coset_paths(A, q.path("aa")) == {q.path("aa"), q.path("bb")}
    assert coset_paths(A, q.path("cde")) == {q.path("cde")}
    with pytest.raises(PathInIdeal):
        coset_paths(A, q.path("ab"))

    B = chord_cycle_identified()
    qb = B.quiver
    gd = qb.path(["gm", "dl"])
    abd = qb.path(["al", "bt", "dl"])
    assert coset_paths(B, gd) == {gd, abd}
    egd = qb.path(["ep", "gm", "dl"])
    eabd = qb.path(["ep", "al", "bt", "dl"])
    assert coset_paths(B, egd) == {egd, eabd}

    C = loop_meets_twocycle()
    qc = C.quiver
    assert coset_paths(C, qc.path("aa")) == {qc.path("aa"), qc.path("bc")}
    assert coset_paths(C, qc.path("cb")) == {qc.path("cb")}


def test_combination_membership():
    A = two_loops_line()
    q = A.quiver
    one = Fraction(1)
    assert combination_in_ideal(A, {q.path("aa"): one, q.path("bb"): -one})
    assert not combination_in_ideal(A, {q.path("aa"): one, q.path("bb"): one})
    assert combination_in_ideal(A, {})
    assert combination_in_ideal(A, {q.path("aa"): Fraction(0)})
    B = loop_meets_twocycle()
    qb = B.quiver
    assert combination_in_ideal(B, {qb.path("aa"): one, qb.path("bc"): -one})


def test_live_paths_enumeration():
    B = loop_meets_twocycle()
    qb = B.quiver
    got = set(live_paths(B))
    assert got == {qb.path(w) for w in ("a", "b", "c", "aa", "bc", "cb")}


def test_minimalize_drops_divisible_monomial():
    q = quiver(["1", "2", "3", "4"],
               [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")])
    short = zero_relation(q, "ab")
    longer = zero_relation(q, "abc")
    zs, ls, removed = minimalize_relations(q, [short, longer], [], bound=3)
    assert zs == (short,)
    assert ls == ()
    assert removed == (longer,)


def test_minimalize_drops_power_implied_by_identification():
    # with aa identified to bb and mixed products zero, the cube of the loop
    # is already inside the ideal, so listing it separately is redundant
    q = two_loops_line().quiver
    zero = [zero_relation(q, w) for w in ("ab", "ac", "ba", "bc", "ed")]
    cube = zero_relation(q, "aaa")
    lin = [linear_relation(q, [(1, "aa"), (-1, "bb")])]
    built = algebra(q, zero + [cube], lin)
    assert built == two_loops_line()
    zs, ls, removed = minimalize_relations(q, zero + [cube], lin, bound=4)
    assert removed == (cube,)
    assert set(zs) == set(zero)
    assert ls == tuple(lin)


def test_minimalize_keeps_lone_power():
    q = quiver(["1"], [("a", "1", "1")])
    cube = zero_relation(q, "aaa")
    zs, ls, removed = minimalize_relations(q, [cube], [], bound=3)
    assert zs == (cube,) and removed == ()


def test_minimalize_is_idempotent():
    A = petal_hub()
    zs, ls, removed = minimalize_relations(A.quiver, A.ideal.zero, A.ideal.linear, A.bound)
    assert removed == ()
    assert zs == A.ideal.zero and ls == A.ideal.linear


def test_special_multiserial_detection():
    assert is_special_multiserial(cycle_fork_tail())
    assert is_special_multiserial(two_loops_line())
    assert is_special_multiserial(petal_hub())
    assert is_special_multiserial(loop_meets_twocycle())

    res = is_special_multiserial(loop_spur())
    assert not res
    assert res.witness.arrow == "a"
    assert res.witness.side == "right"
    assert set(res.witness.pair) == {"a", "d"}

    res1 = is_special_multiserial(chord_cycle_monomial())
    assert not res1
    res2 = is_special_multiserial(chord_cycle_identified())
    assert not res2


def test_arrow_membership_and_lengths():
    A = petal_hub()
    q = A.quiver
    for a in q.arrows:
        assert not path_in_ideal(A, q.path([a.id]))
    # the long survivor of length six, one shy of the bound
    assert not path_in_ideal(A, q.path("bcdabc"))
    assert path_in_ideal(A, q.path("bcdabcd"))
    assert path_in_ideal(A, q.path("abcda"))
    assert path_in_ideal(A, q.path("dabcd"))
    assert not path_in_ideal(A, q.path("abcd"))
    assert coset_paths(A, q.path("abcd")) == {q.path("abcd"), q.path("ef")}
