"""Exit criteria.  Each test prints one PASS/FAIL line in the terminal summary."""
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb

import pytest

from dimer_residues.chebyshev import p_from_s, p_poly, q_poly, s_poly
from dimer_residues.engine import b_counting, b_discriminant, b_symmetric, compute_record
from dimer_residues.indices import pair_identity_13
from dimer_residues.polynomial import discriminant, integer_sqrt_exact
from dimer_residues.residues import (
    minimal_period,
    theorem_a_predict,
    theorem_b_predict,
    verify,
    verify_closed_forms,
)
from dimer_residues.symmetric import h_poly, monomial_symmetric_sum


@contextmanager
def criterion(log, number, text):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        log.append(f"[AC{number}] FAIL  {text}  ({type(exc).__name__}: {exc})"[:300])
        raise
    log.append(f"[AC{number}] PASS  {text}  ({time.perf_counter() - t0:.1f}s)")


def test_ac1_known_values(acceptance_log):
    expected = [1, 3, 29, 901, 89893, 28793575]
    with criterion(acceptance_log, 1, "B_1..B_6 exact by all three routes, < 10 s"):
        t0 = time.perf_counter()
        got = [compute_record(n, "all").b for n in range(1, 7)]
        elapsed = time.perf_counter() - t0
        assert got == expected
        assert elapsed < 10


def test_ac2_route_equivalence(acceptance_log, b_table, warm_cache):
    with criterion(acceptance_log, 2, "dp = symmetric = discriminant for n <= 8 (< 60 s); "
                   "symmetric = discriminant for n <= 32 (< 10 min); discriminant reaches n = 128"):
        t0 = time.perf_counter()
        for n in range(1, 9):
            _, b_dp = b_counting(n)
            assert b_dp == b_symmetric(n) == b_discriminant(n), n
        assert time.perf_counter() - t0 < 60

        t0 = time.perf_counter()
        for n in range(1, 33):
            assert b_symmetric(n) == b_discriminant(n), n
        assert time.perf_counter() - t0 < 600

        b128 = b_table[128]
        assert b128 > 0 and b128 % 2 == 1
        assert b_discriminant(128) == b128


def test_ac3_theorem_b(acceptance_log, b_table):
    with criterion(acceptance_log, 3, "B_n mod 64 formula holds for n = 1..128, zero mismatches"):
        sub = {n: b_table[n] for n in range(1, 129)}
        rep = verify("theoremB", sub)
        assert rep.mismatches == [] and rep.passed
        assert all(theorem_b_predict(n) == b_table[n] % 64 for n in range(1, 129))


def test_ac4_theorem_a(acceptance_log, b_table):
    with criterion(acceptance_log, 4, "parity rule holds mod 32 for n = 1..128; fails mod 64 at n = 3, 5, 6"):
        sub = {n: b_table[n] for n in range(1, 129)}
        assert verify("theoremA", sub, r=5).mismatches == []
        rep6 = verify("theoremA", sub, r=6)
        assert {3, 5, 6} <= set(rep6.mismatches) and rep6.passed
        assert (b_table[3] % 64, theorem_a_predict(3, 6)) == (29, 61)
        assert (b_table[5] % 64, theorem_a_predict(5, 6)) == (37, 5)
        assert (b_table[6] % 64, theorem_a_predict(6, 6)) == (39, 7)
        assert [n for n in range(1, 7) if theorem_a_predict(n, 6) != b_table[n] % 64] == [3, 5, 6]


def test_ac5_corollaries(acceptance_log, b_table):
    with criterion(acceptance_log, 5, "all B_n odd (n <= 128); B_{n+32} = B_n + 32 mod 64 "
                   "(n <= 96); mod-64 sequence has primitive period 64 on n <= 192"):
        assert all(b_table[n] % 2 == 1 for n in range(1, 129))
        assert all((b_table[n + 32] - b_table[n] - 32) % 64 == 0 for n in range(1, 97))
        seq = [b_table[n] % 64 for n in range(1, 193)]
        assert seq[64:] == seq[:-64]
        assert seq[32:] != seq[:-32]
        assert minimal_period(seq, 64) == 64
        assert verify("cor2", b_table).passed


def test_ac6_closed_form_layer(acceptance_log):
    with criterion(acceptance_log, 6, "closed U, G, H equal sigma-derived values (n <= 12); "
                   "16W + 4V + U = h_n(4) mod 64 (n = 2..12)"):
        summaries = [h_poly(n) for n in range(1, 13)]
        ok, rows = verify_closed_forms(summaries)
        assert ok, [r for r in rows if not r["match"]]
        for s in summaries[1:]:
            assert (16 * s.W + 4 * s.V + s.U - s.h(4)) % 64 == 0


def test_ac7_identity_suite(acceptance_log):
    with criterion(acceptance_log, 7, "pair-index identity n <= 50; bracket identity on 200+ "
                   "tuples; term count n <= 100; even-part contractions n <= 50; float residuals <= 1e-8"):
        assert all(pair_identity_13(n) for n in range(2, 51))

        rng = random.Random(24)
        for _ in range(200):
            vals = [rng.randint(-20, 20) for _ in range(rng.randint(4, 8))]
            lhs = monomial_symmetric_sum([1], vals) * monomial_symmetric_sum([1, 1, 1], vals)
            rhs = monomial_symmetric_sum([2, 1, 1], vals) + 4 * monomial_symmetric_sum([1, 1, 1, 1], vals)
            assert lhs == rhs

        for n in range(2, 101):
            assert 3 * comb(n, 4) + 3 * comb(n, 3) == comb(comb(n, 2), 2)

        for n in range(1, 51):
            assert p_from_s(n) == p_poly(n)
            assert q_poly(n).degree == n

        def at(poly, x):
            x, acc = Fraction(x), Fraction(0)
            for c in reversed(poly.coeffs):
                acc = acc * x + c
            return abs(float(acc))

        worst = 0.0
        for n in range(1, 21):
            s, p = s_poly(n), p_poly(n)
            for k in range(1, n + 1):
                v = 2 * math.cos(2 * k * math.pi / (2 * n + 1))
                worst = max(worst, at(s, v), at(p, v * v))
        assert worst <= 1e-8


def test_ac8_discriminant_micro_oracle(acceptance_log):
    with criterion(acceptance_log, 8, "disc(P_2) = 5, disc(Q_2) = 45, ratio 9, root 3"):
        dp, dq = discriminant(p_poly(2)), discriminant(q_poly(2))
        assert (dp, dq) == (5, 45)
        assert dq % dp == 0 and dq // dp == 9
        assert integer_sqrt_exact(9) == 3 == b_discriminant(2)
