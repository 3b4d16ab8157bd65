from itertools import chain, combinations

import pytest

from conepol import (
    is_balanced,
    is_interval_connected,
    is_one_balanced,
    is_semimodular_lattice,
    mobius,
    subposet_from_sets,
    weisner_check,
)
from conepol.errors import HypothesisViolation, InvalidParams, NotGraded
from conepol.poset import (
    disconnection_witness,
    flats_axioms_hold,
    interval_flats_axioms_hold,
)
from conepol.subsets import from_elements


def boolean_lattice(n):
    sets = [
        from_elements(c)
        for c in chain.from_iterable(
            combinations(range(n), r) for r in range(n + 1)
        )
    ]
    return subposet_from_sets(n, sets)


def two_tower_poset():
    """Graded lattice with a disconnected open interval; not balanced,
    not semimodular."""
    sets = [0, from_elements([0]), from_elements([0, 1]), from_elements([2]),
            from_elements([2, 3]), from_elements([0, 1, 2, 3])]
    return subposet_from_sets(4, sets)


def test_boolean_lattice_is_graded():
    B3 = boolean_lattice(3)
    assert B3.interval_rank(0, from_elements([0, 1, 2])) == 3
    assert len(B3) == 8


def test_flats_of_u23_grade(lattices):
    L = lattices["u23"]
    assert L.interval_rank(L.bottom, L.top) == 2


def test_not_graded_counterexample():
    sets = [0, from_elements([0]), from_elements([0, 1]), from_elements([2]),
            from_elements([0, 1, 2])]
    with pytest.raises(NotGraded):
        subposet_from_sets(3, sets)


def test_duplicate_elements_rejected():
    with pytest.raises(InvalidParams):
        subposet_from_sets(2, [0, 0])


def test_mobius_values(lattices):
    B3 = boolean_lattice(3)
    t = mobius(B3)
    assert t.mu(0, from_elements([0, 1, 2])) == -1
    L = lattices["u23"]
    assert mobius(L).mu(L.bottom, L.top) == 2
    for P in (B3, L):
        for a in P.elements:
            assert mobius(P).mu(a, a) == 1


def test_mobius_recursion_sums_to_zero(lattices):
    for L in lattices.values():
        t = mobius(L)
        for K, top in L.comparable_pairs():
            total = sum(t.mu(K, c) for c in L.interval(K, top))
            assert total == 0


def test_mobius_sign_alternation(lattices):
    for L in lattices.values():
        t = mobius(L)
        for a, b in L.comparable_pairs():
            r = L.interval_rank(a, b)
            assert (-1) ** r * t.mu(a, b) >= 0


def test_weisner_u23(lattices):
    L = lattices["u23"]
    atom = L.elements[1]
    assert weisner_check(L, L.bottom, atom, L.top)


def test_weisner_b3():
    B3 = boolean_lattice(3)
    assert weisner_check(B3, 0, from_elements([0]), from_elements([0, 1, 2]))


def test_weisner_all_valid_triples(lattices):
    for L in lattices.values():
        table = mobius(L)
        for x in L.elements:
            for a in L.upper_covers(x):
                for y in L.elements:
                    if L.lt(a, y):
                        assert weisner_check(L, x, a, y, table)


def test_weisner_hypothesis_violations(lattices):
    L = lattices["u23"]
    atom = L.elements[1]
    with pytest.raises(HypothesisViolation):
        weisner_check(L, L.bottom, L.top, L.top)  # top does not cover bottom
    with pytest.raises(HypothesisViolation):
        weisner_check(L, L.bottom, atom, atom)  # need a < y


def test_balanced_predicates(lattices):
    for L in lattices.values():
        assert is_one_balanced(L)
        assert is_balanced(L)
    assert is_balanced(boolean_lattice(3))


def test_unbalanced_counterexample():
    P = subposet_from_sets(2, [0, from_elements([0]), from_elements([0, 1])])
    assert not is_balanced(P)
    assert not is_one_balanced(P)


def test_interval_connected(lattices):
    assert is_interval_connected(lattices["k4"])
    assert is_interval_connected(boolean_lattice(3))


def test_two_tower_poset_is_disconnected():
    P = two_tower_poset()
    assert not is_interval_connected(P)
    parts = disconnection_witness(P, 0, from_elements([0, 1, 2, 3]))
    assert parts is not None
    left, right = parts
    assert len(left) == 2 and len(right) == 2


def test_two_tower_poset_is_not_semimodular_nor_balanced():
    P = two_tower_poset()
    assert not is_semimodular_lattice(P)
    assert not is_balanced(P)


def test_semimodularity(lattices):
    for L in lattices.values():
        assert is_semimodular_lattice(L)
    assert is_semimodular_lattice(boolean_lattice(3))


def test_flats_axioms(lattices):
    for L in lattices.values():
        assert flats_axioms_hold(L, L.top)


def test_intervals_are_again_lattices_of_flats(lattices):
    for L in lattices.values():
        for K, top in L.comparable_pairs():
            assert interval_flats_axioms_hold(L, K, top)


def test_reextracted_interval_passes_flats_axioms(lattices):
    # rebuild the interval as a standalone poset and check the axioms
    # relative to its own top
    L = lattices["fano"]
    for K, top in L.comparable_pairs():
        sub = subposet_from_sets(L.n, L.interval(K, top))
        assert flats_axioms_hold(sub, top)
        assert is_one_balanced(sub)
