import itertools
import math
from collections import Counter

import pytest

from exactcomb.core import BiPoly, Permutation, perm_stats
from exactcomb.parking import (
    Board,
    ParkingFailure,
    excedance_polynomial,
    induced_parking,
    insert_forward,
    insert_inverse,
    is_parking_function,
    mu,
    outcome_descent_polynomial,
    park,
    parking_contents,
    parking_functions,
    parking_stats,
    phi,
    rook_numbers,
    rook_placements,
    verify_fixed_content,
)

WORKED_B = (1, 1, 2, 4, 5, 6)
WORKED_ROOKS = frozenset({(1, 3), (2, 6), (4, 5)})


def test_park_examples():
    assert park((6, 2, 1, 5, 4, 1)).one_line == (6, 2, 1, 5, 4, 3)
    for n in range(1, 6):
        assert park(tuple(range(1, n + 1))) == Permutation(range(1, n + 1))
    with pytest.raises(ParkingFailure) as err:
        park((2, 2))
    assert err.value.car == 2


def test_park_succeeds_iff_sorted_criterion():
    for n in range(1, 6):
        for prefs in itertools.product(range(1, n + 1), repeat=n):
            criterion = is_parking_function(prefs)
            try:
                park(prefs)
                parked = True
            except ParkingFailure:
                parked = False
            assert parked == criterion, prefs


def test_parking_function_counts():
    for n in range(1, 6):
        assert sum(1 for _ in parking_functions(n)) == (n + 1) ** (n - 1)


def test_stats_examples():
    s = parking_stats((6, 2, 1, 5, 4, 1))
    assert s.cosum == 21 - 19 == 2
    assert s.exced == 2  # positions 1 and 4
    assert parking_stats(tuple(range(1, 8))) == (0, 0)
    assert parking_stats((1, 1)) == (1, 0)


def test_cosum_constant_on_content_classes():
    for n in range(1, 6):
        for b in parking_contents(n):
            base = math.comb(n + 1, 2) - sum(b)
            for w in itertools.permutations(range(1, n + 1)):
                prefs, _ = induced_parking(b, Permutation(w))
                assert parking_stats(prefs).cosum == base


def test_induced_parking_examples():
    prefs, outcome = induced_parking(WORKED_B, Permutation((6, 3, 2, 5, 4, 1)))
    assert prefs == (6, 2, 1, 5, 4, 1)
    assert outcome.one_line == (6, 2, 1, 5, 4, 3)
    b = (1, 2)
    prefs, outcome = induced_parking(b, Permutation((2, 1)))
    assert prefs == (2, 1) and outcome.one_line == (2, 1)
    prefs, _ = induced_parking((1, 1, 3), Permutation((1, 2, 3)))
    assert prefs == (1, 1, 3)


def test_contents_are_catalan():
    for n, catalan in ((1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)):
        assert sum(1 for _ in parking_contents(n)) == catalan


def test_mu():
    assert mu((1, 2, 3)) == 1
    assert mu((1, 1, 1)) == 6
    assert mu(WORKED_B) == 2


def test_boards_and_rook_numbers():
    assert rook_numbers(Board.from_content((1, 1, 1))) == (1, 0, 0, 0)
    assert rook_numbers(Board.from_content((1, 2))) == (1, 1, 0)
    # frozen from the brute-force placement enumerator
    assert rook_numbers(Board.from_content(WORKED_B)) == (1, 13, 46, 46, 8, 0, 0)


def test_rook_dp_matches_enumerator():
    for n in range(1, 6):
        for b in parking_contents(n):
            board = Board.from_content(b)
            counted = Counter()
            for placement in rook_placements(board):
                counted[len(placement)] += 1
            dp = rook_numbers(board)
            assert dp == tuple(counted.get(k, 0) for k in range(n + 1)), b


def test_excedance_polynomial_examples():
    t = BiPoly.t()
    assert excedance_polynomial((1, 1)) == BiPoly.constant(2)
    assert excedance_polynomial((1, 2)) == 1 + t
    for b in ((1, 1, 2), (1, 2, 3), (1, 1, 1)):
        assert excedance_polynomial(b, "direct") == excedance_polynomial(b, "rook")


def test_excedance_equals_rook_formula_all_small_contents():
    for n in range(1, 6):
        for b in parking_contents(n):
            assert excedance_polynomial(b, "direct") == excedance_polynomial(b, "rook")
            assert excedance_polynomial(b) == outcome_descent_polynomial(b)


def test_phi_examples():
    w = Permutation((6, 3, 2, 5, 4, 1))
    assert phi(WORKED_B, w, {1, 2, 4}) == WORKED_ROOKS
    assert phi(WORKED_B, w, ()) == frozenset()
    assert phi((1, 2), Permutation((2, 1)), {1}) == frozenset({(1, 2)})
    with pytest.raises(ValueError):
        phi((1, 2), Permutation((1, 2)), {1})  # outcome 12 has no descent


def test_insert_forward_worked_instance():
    w, a_set = insert_forward(WORKED_B, WORKED_ROOKS, (2, 4, 1))
    assert w.one_line == (6, 3, 2, 5, 4, 1)
    assert a_set == frozenset({1, 2, 4})


def test_insert_forward_small():
    w, a_set = insert_forward((1, 2), {(1, 2)}, (1,))
    assert w.one_line == (2, 1) and a_set == frozenset({1})
    # no rooks: the word passes through untouched
    w, a_set = insert_forward((1, 1, 2), frozenset(), (3, 1, 2))
    assert w.one_line == (3, 1, 2) and a_set == frozenset()
    with pytest.raises(ValueError):
        insert_forward((1, 2), {(1, 2)}, (2,))  # u0 must order the rook-free columns


def test_insert_inverse():
    w = Permutation((6, 3, 2, 5, 4, 1))
    assert insert_inverse(WORKED_B, WORKED_ROOKS, w, {1, 2, 4}) == (2, 4, 1)
    assert insert_inverse((1, 2), {(1, 2)}, Permutation((2, 1)), {1}) == (1,)
    w = Permutation((3, 1, 2))
    assert insert_inverse((1, 1, 2), frozenset(), w, ()) == (3, 1, 2)
    with pytest.raises(ValueError):
        insert_inverse((1, 2), {(1, 2)}, Permutation((1, 2)), {1})


def test_round_trip_exhaustive_small():
    for n in range(1, 5):
        for b in parking_contents(n):
            board = Board.from_content(b)
            for placement in rook_placements(board):
                k = len(placement)
                free = sorted(set(range(1, n + 1)) - {c for _, c in placement})
                for u0 in itertools.permutations(free):
                    w, a_set = insert_forward(b, placement, u0)
                    assert insert_inverse(b, placement, w, a_set) == u0


def test_phi_preimage_count():
    # every k-rook placement has exactly (n-k)! preimages among (w, A) pairs
    for n in range(1, 5):
        for b in parking_contents(n):
            fibers = Counter()
            for w in itertools.permutations(range(1, n + 1)):
                perm = Permutation(w)
                _, outcome = induced_parking(b, perm)
                des = perm_stats(outcome).descents
                for r in range(len(des) + 1):
                    for a_subset in itertools.combinations(sorted(des), r):
                        fibers[phi(b, perm, a_subset)] += 1
            for placement, hits in fibers.items():
                assert hits == math.factorial(n - len(placement)), (b, placement)


def test_verify_fixed_content_report():
    r = verify_fixed_content(3)
    assert r.status == "verified"
    assert r.instances == 5  # Catalan(3) contents
    assert verify_fixed_content(1).status == "verified"
    with pytest.raises(ValueError):
        verify_fixed_content(9)
