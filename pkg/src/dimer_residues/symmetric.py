"""The pair polynomial ``h_n`` and the coefficients that drive B_n mod 64.

``h_n(x) = prod over pairs j<k of (x - 4 + t_j + t_k)`` where the ``t_i``
are the roots of ``P_n``.  It is assembled from power sums, never from
roots:

    power sums of t  ->  power sums of pair sums  ->  elementary symmetric
    functions of pair sums  ->  coefficients of h_n.

Every division on the way is exact and is checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb, factorial
from collections import Counter
from typing import Sequence

import gmpy2

from .chebyshev import p_poly
from .errors import HalvingNotExact, InexactNewtonDivision, NonPositive, UnexpectedU
from .polynomial import IntPoly

__all__ = [
    "PairSummary",
    "power_sums_from_poly",
    "pair_sum_power_sums",
    "elementary_from_power_sums",
    "h_poly",
    "uvw",
    "b_from_h",
    "monomial_symmetric_sum",
]


def power_sums_from_poly(f: IntPoly, K: int) -> list[int]:
    """Power sums ``p_0..p_K`` of the roots of monic ``f`` (``p_0 = deg f``).

    Newton's identities with ``f = x**n + a_1 x**(n-1) + ... + a_n``:
    ``p_k = -(k a_k + sum_{i<k} a_i p_{k-i})``, where ``a_i = 0`` for i > n.
    """
    if not f.is_monic() or f.degree < 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    n = f.degree
    a = [f.coeff(n - i) for i in range(n + 1)]
    p = [n]
    for k in range(1, K + 1):
        acc = k * a[k] if k <= n else 0
        for i in range(1, min(k - 1, n) + 1):
            acc += a[i] * p[k - i]
        p.append(-acc)
    return p


def pair_sum_power_sums(p: Sequence[int], n: int, K: int) -> list[int]:
    """``pi_k = sum_{i<j} (t_i + t_j)**k`` for k = 0..K.

    ``p`` holds ``p_0..p_K`` of the n values ``t_i``.  Uses
    ``2 pi_k = sum_m C(k, m) p_m p_{k-m} - 2**k p_k``.
    """
    if len(p) < K + 1:
        raise ValueError("need power sums p_0..p_K")
    if p[0] != n:
        raise ValueError(f"p_0 = {p[0]} but n = {n}")
    pm = [gmpy2.mpz(v) for v in p[: K + 1]]
    out = []
    for k in range(K + 1):
        # terms m and k-m are equal, so sum the lower half twice
        acc = gmpy2.mpz(0)
        binom = gmpy2.mpz(1)
        for m in range((k + 1) // 2):
            acc += binom * pm[m] * pm[k - m]
            binom = binom * (k - m) // (m + 1)
        acc *= 2
        if k % 2 == 0:
            acc += binom * pm[k // 2] ** 2
        acc -= pm[k] << k
        if acc % 2:
            raise HalvingNotExact(f"odd numerator at k={k}")
        out.append(int(acc >> 1))
    return out


def elementary_from_power_sums(pi: Sequence[int], q: int) -> list[int]:
    """``e_0..e_q`` from power sums ``pi_1..pi_q`` (``pi[0]`` is ignored).

    ``j e_j = sum_{i=1..j} (-1)**(i-1) e_{j-i} pi_i``; each division by j
    is required to be exact.
    """
    pim = [gmpy2.mpz(v) for v in pi[: q + 1]]
    e = [gmpy2.mpz(1)]
    for j in range(1, q + 1):
        acc = gmpy2.mpz(0)
        for i in range(1, j + 1):
            term = e[j - i] * pim[i]
            acc = acc + term if i % 2 else acc - term
        quo, rem = gmpy2.f_divmod(acc, j)
        if rem:
            raise InexactNewtonDivision(f"e_{j}: {j} does not divide the Newton sum")
        e.append(quo)
    return [int(v) for v in e]


@dataclass(frozen=True)
class PairSummary:
    n: int
    q: int
    h: IntPoly
    sigma: tuple[int, ...]
    U: int
    V: int
    W: int
    G: int
    H: int

    def sigma_at(self, j: int) -> int:
        """``sigma_j`` with ``sigma_0 = 1`` and zero outside ``0..q``."""
        if 0 <= j <= self.q:
            return self.sigma[j]
        return 0


def uvw(summary: PairSummary) -> tuple[int, int, int]:
    """``(U, V, W) = (sigma_q, sigma_{q-1}, sigma_{q-2})``."""
    q = summary.q
    return summary.sigma_at(q), summary.sigma_at(q - 1), summary.sigma_at(q - 2)


def h_poly(n: int) -> PairSummary:
    """Build ``h_n`` and its normalized low-order coefficients."""
    if n < 1:
        raise ValueError("n must be positive")
    q = comb(n, 2)
    if q == 0:
        h = IntPoly.constant(1)
    else:
        p = power_sums_from_poly(p_poly(n), q)
        pi = pair_sum_power_sums(p, n, q)
        e = elementary_from_power_sums(pi, q)
        # prod (y + r) = sum e_j y**(q-j) with y = x - 4
        h = IntPoly(reversed(e)).shift(-4)
    sigma = tuple(h.coeff(q - j) for j in range(q + 1))

    partial = PairSummary(n, q, h, sigma, 0, 0, 0, 0, 0)
    U, V, W = uvw(partial)
    if U not in (1, -1):
        raise UnexpectedU(f"sigma_q = {U} for n={n}; expected +1 or -1")
    return PairSummary(n, q, h, sigma, U, V, W, V * U, W * U)


def b_from_h(summary: PairSummary) -> int:
    """``B_n = h_n(4)``."""
    b = summary.h(4)
    if b <= 0:
        raise NonPositive(f"h_{summary.n}(4) = {b}")
    return b


def monomial_symmetric_sum(exponents: Sequence[int], values: Sequence) -> object:
    """Bracket sum ``[x_1**e_1 ... x_t**e_t]`` over ``values``.

    Sums every distinct monomial obtained by assigning the exponents to
    distinct variables, e.g. ``[x_1**2 x_2]`` over three values has six
    terms and ``[x_1 x_2]`` has three.
    """
    exps = list(exponents)
    if any(e <= 0 for e in exps):
        raise ValueError("exponents must be positive")
    t, n = len(exps), len(values)
    if t > n:
        raise ValueError("more exponents than variables")
    total = 0
    for idx in permutations(range(n), t):
        term = 1
        for i, e in zip(idx, exps):
            term *= values[i] ** e
        total += term
    # each distinct monomial was hit once per rearrangement of equal exponents
    redundancy = 1
    for mult in Counter(exps).values():
        redundancy *= factorial(mult)
    if isinstance(total, int):
        quo, rem = divmod(total, redundancy)
        assert rem == 0
        return quo
    return total / redundancy
