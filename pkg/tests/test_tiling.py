import pytest

from dimer_residues.errors import WidthCapExceeded
from dimer_residues.tiling import a_n, b_from_count, count_matchings

from oracles import count_tilings_naive, fibonacci


@pytest.mark.parametrize("rows, cols, expected", [(2, 2, 2), (6, 6, 6728), (8, 8, 12988816)])
def test_known_counts(rows, cols, expected):
    assert count_matchings(rows, cols) == expected


def test_naive_enumerator_agrees_on_known_values():
    assert count_tilings_naive(8, 8) == 12988816
    assert count_tilings_naive(4, 4) == 36


def test_dp_agrees_with_naive_on_square_boards():
    for n in range(1, 5):
        assert a_n(n) == count_tilings_naive(2 * n, 2 * n)


def test_dp_agrees_with_naive_on_rectangles():
    for r in range(1, 7):
        for c in range(1, 7):
            assert count_matchings(r, c) == count_tilings_naive(r, c), (r, c)


def test_transpose_symmetry():
    for r in range(1, 13):
        for c in range(r, 13):
            assert count_matchings(r, c) == count_matchings(c, r), (r, c)


def test_single_row_and_two_row_strips():
    for k in range(1, 11):
        assert count_matchings(1, 2 * k) == 1
        assert count_matchings(2 * k, 1) == 1
    for k in range(1, 31):
        assert count_matchings(k, 2) == fibonacci(k + 1)
        if k <= 20:
            assert count_matchings(2, k) == fibonacci(k + 1)


def test_odd_area_is_zero():
    assert count_matchings(3, 3) == 0
    assert count_matchings(5, 7) == 0


def test_width_cap():
    with pytest.raises(WidthCapExceeded):
        count_matchings(2, 22)
    with pytest.raises(WidthCapExceeded):
        a_n(3, width_cap=4)
    assert count_matchings(2, 6, width_cap=6) == 13


def test_a_n_examples():
    assert a_n(1) == 2
    assert a_n(2) == 36
    assert a_n(5) == 2**5 * 89893**2


@pytest.mark.parametrize("n, b", [(1, 1), (3, 29), (6, 28793575)])
def test_b_from_count(n, b):
    assert b_from_count(n) == b


def test_square_structure_up_to_8():
    for n in range(1, 9):
        a = a_n(n)
        assert a % 2**n == 0
        b = b_from_count(n, a)
        assert b * b * 2**n == a
