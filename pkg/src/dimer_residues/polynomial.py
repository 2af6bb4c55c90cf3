"""Exact integer and integer-polynomial arithmetic.

Everything here works on Python ``int`` at the API boundary.  The
subresultant resultant converts to ``gmpy2.mpz`` internally, which is an
order of magnitude faster once coefficients reach thousands of digits.

Resultant sign convention
-------------------------
For ``f`` of degree m and ``g`` of degree k::

    resultant(f, g) = lc(g)**m * prod(f(beta) for beta in roots(g))

so ``resultant(x - a, x - b) == b - a``.  This is ``det Sylvester(g, f)``,
i.e. ``(-1)**(m*k)`` times the textbook ``Res(f, g)``.  The two agree
whenever ``m*k`` is even, in particular for ``resultant(f, f')``, so the
discriminant is unaffected by the choice.
"""
from __future__ import annotations

import math
from typing import Iterable, Sequence

import gmpy2

from .errors import (
    InexactDivision,
    NotAPerfectSquare,
    NotMonic,
    OddCoefficientNonzero,
    ZeroPolynomial,
)

__all__ = [
    "IntPoly",
    "resultant",
    "sylvester_resultant",
    "discriminant",
    "integer_sqrt_exact",
    "exact_div",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Dense univariate polynomial over the integers.

    ``coeffs[i]`` is the coefficient of ``x**i``.  The zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> IntPoly:
        """Build from coefficients listed highest degree first."""
        return cls(reversed(list(coeffs)))

    # -- basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def coeff(self, i: int) -> int:
        """Coefficient of ``x**i``; zero outside the stored range."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x: int) -> int:
        """Horner evaluation at an integer (or any ring element)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def derivative(self) -> IntPoly:
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, c: int) -> IntPoly:
        """Return ``f(x + c)``."""
        lin = IntPoly((c, 1))
        acc = IntPoly()
        for a in reversed(self.coeffs):
            acc = acc * lin + a
        return acc

    def reflect(self) -> IntPoly:
        """Return ``f(-x)``."""
        return IntPoly(-a if i % 2 else a for i, a in enumerate(self.coeffs))

    def contract_even(self) -> IntPoly:
        """Return ``g`` with ``g(x**2) == f(x)``.

        Odd-degree coefficients must be exactly zero; they are checked, not
        discarded.
        """
        odd = [i for i in range(1, len(self.coeffs), 2) if self.coeffs[i]]
        if odd:
            raise OddCoefficientNonzero(
                f"nonzero odd-degree coefficients at degrees {odd[:5]}"
            )
        return IntPoly(self.coeffs[::2])

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def exact_div(a: int, b: int, exc=InexactDivision) -> int:
    q, r = divmod(a, b)
    if r:
        raise exc(f"{b} does not divide {a}")
    return q


def integer_sqrt_exact(v: int) -> int:
    """Nonnegative ``s`` with ``s*s == v``; raises if ``v`` is not a square."""
    if v < 0:
        raise NotAPerfectSquare(f"negative value {v}")
    s, rem = gmpy2.isqrt_rem(gmpy2.mpz(v))
    if rem:
        raise NotAPerfectSquare("value is not a perfect square")
    return int(s)


# -- resultants -------------------------------------------------------------


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder of ``lc(b)**(deg a - deg b + 1) * a`` by ``b``.

    Lists are ascending and trimmed.  Returns a trimmed list.
    """
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i in range(db + 1):
            r[shift + i] -= c * b[i]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if r and e > 0:
        f = lb**e
        r = [x * f for x in r]
    return r


def _content(a: list):
    g = gmpy2.mpz(0)
    for x in a:
        g = gmpy2.gcd(g, x)
        if g == 1:
            break
    return g


def _res_textbook(a: list, b: list):
    """Textbook Res(a, b) by the subresultant PRS (Collins/Brown)."""
    da, db = len(a) - 1, len(b) - 1
    s = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da % 2 and db % 2:
            s = -s
    if db == 0:
        return s * b[0] ** da
    ca, cb = _content(a), _content(b)
    a = [gmpy2.divexact(x, ca) for x in a]
    b = [gmpy2.divexact(x, cb) for x in b]
    t = ca**db * cb**da
    g = h = gmpy2.mpz(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        if not r:
            return gmpy2.mpz(0)
        a = b
        den = g * h**delta
        b = [gmpy2.divexact(x, den) for x in r]
        g = a[-1]
        if delta:
            h = gmpy2.divexact(g**delta, h ** (delta - 1))
        if len(b) == 1:
            break
    da = len(a) - 1
    return s * t * gmpy2.divexact(b[0] ** da, h ** (da - 1))


def _check_nonzero(f: IntPoly, g: IntPoly):
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial is undefined")


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Exact resultant via the subresultant polynomial remainder sequence.

    See the module docstring for the sign convention.
    """
    _check_nonzero(f, g)
    a = [gmpy2.mpz(c) for c in f.coeffs]
    b = [gmpy2.mpz(c) for c in g.coeffs]
    r = _res_textbook(a, b)
    if (f.degree * g.degree) % 2:
        r = -r
    return int(r)


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant as a fraction-free (Bareiss) Sylvester determinant.

    Cubic in the degree; meant as a cross-check for small inputs.  Uses the
    same convention as :func:`resultant`.
    """
    _check_nonzero(f, g)
    m, k = f.degree, g.degree
    size = m + k
    if size == 0:
        return 1
    rows = []
    # g rows first gives det = lc(g)**m * prod f(roots of g)
    gd = list(reversed(g.coeffs))
    fd = list(reversed(f.coeffs))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - i - len(gd)))
    for i in range(k):
        rows.append([0] * i + fd + [0] * (size - i - len(fd)))
    return _bareiss_det(rows)


def discriminant(f: IntPoly) -> int:
    """Discriminant of a monic polynomial: the product of squared root
    differences, computed as ``(-1)**(d(d-1)/2) * resultant(f, f')``.

    Degree 0 and 1 return 1 (empty product).
    """
    if f.is_zero():
        raise ZeroPolynomial("discriminant of the zero polynomial")
    if not f.is_monic():
        raise NotMonic(f"leading coefficient is {f.lc}, expected 1")
    d = f.degree
    if d <= 1:
        return 1
    r = resultant(f, f.derivative())
    return -r if (d * (d - 1) // 2) % 2 else r
