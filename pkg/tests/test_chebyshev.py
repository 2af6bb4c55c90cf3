import math
from fractions import Fraction

import pytest

from dimer_residues.chebyshev import (
    ChebFamily,
    p_from_s,
    p_poly,
    q_poly,
    reverse_coeffs_closed,
    reverse_monic,
    reverse_poly,
    s_coeffs_closed,
    s_last,
    s_poly,
)
from dimer_residues.polynomial import IntPoly

X = IntPoly.x()


def P(*desc):
    return IntPoly.from_descending(desc)


def from_s_coeffs(s):
    n = len(s) - 1
    return IntPoly.from_descending([(-1) ** nu * c for nu, c in enumerate(s)])


@pytest.mark.parametrize("n, expected", [(0, P(1)), (1, P(1, 1)), (2, P(1, 1, -1))])
def test_s_poly_small(n, expected):
    assert s_poly(n) == expected


def test_s_coeffs_n2():
    assert s_coeffs_closed(2) == [1, -1, -1]


def test_closed_form_matches_recurrence():
    for n in range(101):
        assert from_s_coeffs(s_coeffs_closed(n)) == s_poly(n), n


def test_closed_form_satisfies_recurrence():
    for n in range(1, 101):
        nxt, cur, prev = (from_s_coeffs(s_coeffs_closed(m)) for m in (n + 1, n, n - 1))
        assert nxt - X * cur + prev == IntPoly()


def test_last_coefficient_parity_rule():
    for n in range(0, 60):
        assert s_coeffs_closed(n)[n] == s_last(n)
    assert [s_last(n) for n in range(1, 9)] == [-1, -1, 1, 1, -1, -1, 1, 1]


def test_reverse_n2_by_hand():
    assert reverse_poly(2) == P(1, -1, -1)


def test_reverse_matches_closed_coefficients():
    for n in range(1, 40):
        sbar = reverse_coeffs_closed(n)
        assert reverse_poly(n) == from_s_coeffs(sbar)


def test_g_is_second_reverse_coefficient():
    for n in range(2, 30):
        s = s_coeffs_closed(n)
        assert reverse_coeffs_closed(n)[2] == s[n] * s[n - 2]


def test_reverse_is_an_involution():
    for n in range(1, 11):
        assert reverse_monic(reverse_poly(n)) == s_poly(n)


@pytest.mark.parametrize(
    "n, expected", [(1, P(1, -1)), (2, P(1, -3, 1)), (3, P(1, -5, 6, -1))]
)
def test_p_poly_small(n, expected):
    assert p_poly(n) == expected


def test_p_from_s_by_hand():
    assert s_poly(2) * s_poly(2).reflect() == P(1, 0, -3, 0, 1)
    assert p_from_s(2) == P(1, -3, 1)
    assert p_from_s(1) == P(1, -1)


def test_p_from_s_equals_binomial_form():
    for n in range(1, 51):
        assert p_from_s(n) == p_poly(n)


@pytest.mark.parametrize("n, expected", [(1, P(1, -1)), (2, P(1, -7, 1))])
def test_q_poly_small(n, expected):
    assert q_poly(n) == expected


def test_constant_terms():
    for n in range(1, 51):
        # Q_n(0) = (-1)**n * prod v_k**4 and the product is 1
        assert q_poly(n).coeff(0) == (-1) ** n
        assert abs(p_poly(n).coeff(0)) == 1


def test_family_shapes():
    for n in range(1, 20):
        fam = ChebFamily.build(n)
        assert fam.s_poly.degree == fam.p_poly.degree == fam.q_poly.degree == n


# -- floating-point transcription checks (validation only) -------------------------------
# Roots are double-precision cosines; the integer polynomial is evaluated exactly at
# that double so that coefficient cancellation cannot swamp the residual.


def _eval_at_double(poly, x: float) -> float:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(poly.coeffs):
        acc = acc * x + c
    return float(acc)


def test_float_roots_of_s_and_p():
    for n in range(1, 21):
        s, p = s_poly(n), p_poly(n)
        for k in range(1, n + 1):
            theta = 2 * k * math.pi / (2 * n + 1)
            assert abs(_eval_at_double(s, 2 * math.cos(theta))) <= 1e-8
            assert abs(_eval_at_double(p, 4 * math.cos(theta) ** 2)) <= 1e-8


def test_float_u_values_are_roots_of_s_times_reflection():
    # u_k = 2cos(k pi/(2n+1)) is +-v_j, so it annihilates S_n(x) S_n(-x)
    for n in range(1, 21):
        ss = s_poly(n) * s_poly(n).reflect()
        for k in range(1, n + 1):
            assert abs(_eval_at_double(ss, 2 * math.cos(k * math.pi / (2 * n + 1)))) <= 1e-8

