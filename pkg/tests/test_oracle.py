import pytest

from fixtures import (
    ALL_FIXTURES,
    chord_cycle_identified,
    chord_cycle_monomial,
    cycle_fork_tail,
    loop_meets_twocycle,
    loop_spur,
    petal_hub,
    two_loops_line,
)
from quiverump.oracle import (
    dimension_bruteforce,
    maximal_classes,
    maximal_paths,
    nonzero_paths,
    ump_bruteforce,
)


def _classes_as_sets(alg):
    return {frozenset(str(p) for p in c.paths) for c in maximal_classes(alg)}


def test_maximal_paths_cycle_fork_tail():
    A = cycle_fork_tail()
    assert {str(p) for p in maximal_paths(A)} == {"dab", "bce", "fgh"}
    assert _classes_as_sets(A) == {frozenset({"dab"}), frozenset({"bce"}), frozenset({"fgh"})}


def test_maximal_classes_two_loops_line():
    A = two_loops_line()
    assert _classes_as_sets(A) == {frozenset({"aa", "bb"}), frozenset({"cde"})}


def test_maximal_classes_petal_hub():
    A = petal_hub()
    assert _classes_as_sets(A) == {
        frozenset({"abcd", "ef"}),
        frozenset({"bcdabc"}),
        frozenset({"fe"}),
    }


def test_maximal_classes_loop_spur():
    assert _classes_as_sets(loop_spur()) == {frozenset({"aad"}), frozenset({"cbc"})}


def test_maximal_classes_chord_cycle():
    mono = chord_cycle_monomial()
    assert _classes_as_sets(mono) == {
        frozenset({"ep.al.bt.dl"}),
        frozenset({"ep.gm"}),
    }
    ident = chord_cycle_identified()
    assert _classes_as_sets(ident) == {frozenset({"ep.al.bt.dl", "ep.gm.dl"})}


def test_maximal_classes_loop_meets_twocycle():
    assert _classes_as_sets(loop_meets_twocycle()) == {
        frozenset({"aa", "bc"}),
        frozenset({"cb"}),
    }


def test_ump_verdicts():
    assert not ump_bruteforce(cycle_fork_tail()).is_ump
    assert ump_bruteforce(two_loops_line()).is_ump
    assert not ump_bruteforce(petal_hub()).is_ump
    assert ump_bruteforce(loop_spur()).is_ump
    assert not ump_bruteforce(chord_cycle_monomial()).is_ump
    assert ump_bruteforce(chord_cycle_identified()).is_ump
    assert not ump_bruteforce(loop_meets_twocycle()).is_ump


def test_ump_witnesses_share_an_arrow():
    res = ump_bruteforce(cycle_fork_tail())
    p1, p2, arrow = res.witness
    assert arrow in p1.arrows and arrow in p2.arrows
    assert {str(p1), str(p2)} == {"dab", "bce"} and arrow == "b"

    res = ump_bruteforce(loop_meets_twocycle())
    p1, p2, arrow = res.witness
    assert {str(p1), str(p2)} == {"bc", "cb"}
    assert arrow in p1.arrows and arrow in p2.arrows

    res = ump_bruteforce(chord_cycle_monomial())
    _, _, arrow = res.witness
    assert arrow == "ep"


def test_dimensions():
    assert dimension_bruteforce(cycle_fork_tail()) == 24
    assert dimension_bruteforce(two_loops_line()) == 12
    assert dimension_bruteforce(petal_hub()) == 26
    assert dimension_bruteforce(loop_spur()) == 13
    assert dimension_bruteforce(chord_cycle_monomial()) == 16
    assert dimension_bruteforce(chord_cycle_identified()) == 16
    assert dimension_bruteforce(loop_meets_twocycle()) == 7
    assert (
        dimension_bruteforce(loop_meets_twocycle(), include_trivial=False) == 5
    )


def test_nonzero_path_counts():
    assert len(nonzero_paths(cycle_fork_tail())) == 17
    assert len(nonzero_paths(two_loops_line())) == 10
    assert len(nonzero_paths(petal_hub())) == 23
    assert len(nonzero_paths(loop_spur())) == 10


@pytest.mark.parametrize("name", sorted(ALL_FIXTURES))
def test_longest_nonzero_is_one_below_bound(name):
    alg = ALL_FIXTURES[name]()
    longest = max(len(p) for p in nonzero_paths(alg))
    assert longest == alg.bound - 1
