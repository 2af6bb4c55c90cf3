"""The integer polynomial family attached to the 2n x 2n board.

``S_n`` has the roots ``v_k = 2cos(2k*pi/(2n+1))``, k = 1..n.  ``P_n`` and
``Q_n`` have roots ``v_k**2`` and ``v_k**4``.  None of these roots is ever
computed here: every statement about them is carried by integer
coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import InexactDivision
from .polynomial import IntPoly

__all__ = [
    "ChebFamily",
    "s_poly",
    "s_coeffs_closed",
    "s_last",
    "reverse_monic",
    "reverse_poly",
    "reverse_coeffs_closed",
    "p_poly",
    "p_from_s",
    "q_poly",
]


@lru_cache(maxsize=None)
def _s_pair(n: int) -> tuple[IntPoly, IntPoly]:
    # (S_{n-1}, S_n)
    x = IntPoly.x()
    prev, cur = IntPoly.constant(-1), IntPoly.constant(1)
    for _ in range(n):
        prev, cur = cur, x * cur - prev
    return prev, cur


def s_poly(n: int) -> IntPoly:
    """``S_n`` from ``S_{n+1} = x S_n - S_{n-1}``, ``S_{-1} = -1``, ``S_0 = 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _s_pair(n)[1]


def s_coeffs_closed(n: int) -> list[int]:
    """Closed-form ``s_0..s_n`` with ``S_n(x) = sum (-1)**v s_v x**(n-v)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for nu in range(n + 1):
        rho, odd = divmod(nu, 2)
        if odd:
            out.append((-1) ** (rho + 1) * comb(n - 1 - rho, rho))
        else:
            out.append((-1) ** rho * comb(n - rho, rho))
    return out


def s_last(n: int) -> int:
    """``s_n``, the product of the roots of ``S_n``; always +1 or -1."""
    if n % 2 == 0:
        return (-1) ** (n // 2)
    return (-1) ** ((n + 1) // 2)


def reverse_monic(f: IntPoly) -> IntPoly:
    """Monic polynomial whose roots are the reciprocals of the roots of ``f``.

    Computed as ``x**d f(1/x) / f(0)``; requires ``f(0)`` to divide every
    coefficient, which holds for the unit constant terms used here.
    """
    c0 = f.coeff(0)
    if c0 == 0:
        raise ZeroDivisionError("constant term is zero; 0 is a root")
    out = []
    for c in reversed(f.coeffs):
        q, r = divmod(c, c0)
        if r:
            raise InexactDivision(f"constant term {c0} does not divide {c}")
        out.append(q)
    return IntPoly(out)


def reverse_poly(n: int) -> IntPoly:
    """The reverse polynomial of ``S_n``, with roots ``1/v_k``."""
    if n < 1:
        raise ValueError("n must be positive")
    return reverse_monic(s_poly(n))


def reverse_coeffs_closed(n: int) -> list[int]:
    """``sbar_0..sbar_n`` with ``sbar_k = s_n**-1 * s_{n-k}`` (``sbar_0 = 1``).

    The reverse polynomial is ``sum (-1)**k sbar_k x**(n-k)``.
    """
    s = s_coeffs_closed(n)
    sn = s[n]
    return [s[n - k] * sn for k in range(n + 1)]  # sn == 1/sn


def p_poly(n: int) -> IntPoly:
    """``P_n`` from its binomial coefficients ``(-1)**v C(2n-v, v)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return IntPoly((-1) ** (n - i) * comb(n + i, n - i) for i in range(n + 1))


def p_from_s(n: int) -> IntPoly:
    """``P_n`` recomputed as the even contraction of ``(-1)**n S_n(x) S_n(-x)``."""
    if n < 1:
        raise ValueError("n must be positive")
    s = s_poly(n)
    return (s * s.reflect() * (-1) ** n).contract_even()


def q_poly(n: int) -> IntPoly:
    """``Q_n``: even contraction of ``(-1)**n P_n(x) P_n(-x)``."""
    p = p_poly(n)
    return (p * p.reflect() * (-1) ** n).contract_even()


@dataclass(frozen=True)
class ChebFamily:
    n: int
    s_poly: IntPoly
    p_poly: IntPoly
    q_poly: IntPoly

    @classmethod
    def build(cls, n: int) -> ChebFamily:
        fam = cls(n, s_poly(n), p_poly(n), q_poly(n))
        for poly in (fam.s_poly, fam.p_poly, fam.q_poly):
            assert poly.degree == n and poly.is_monic()
        return fam
