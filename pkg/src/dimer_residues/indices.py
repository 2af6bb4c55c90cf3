"""Index arithmetic modulo 2n+1 for the cosine families ``u_k`` and ``v_k``.

``v_k = 2cos(2k*pi/(2n+1))`` is invariant under ``k -> -k`` and
``k -> 2n+1-k``, so every integer index has a canonical representative in
``0..n``.  The checks here work on index multisets, not on real values.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

__all__ = ["NormalizedIndex", "normalize", "u_to_v", "pair_identity_13", "pair_multisets"]


@dataclass(frozen=True, order=True)
class NormalizedIndex:
    n: int
    k: int

    def __int__(self):
        return self.k


def normalize(k: int, n: int) -> NormalizedIndex:
    if n < 1:
        raise ValueError("n must be positive")
    m = 2 * n + 1
    r = k % m
    return NormalizedIndex(n, min(r, m - r))


def u_to_v(k: int, n: int) -> tuple[int, NormalizedIndex]:
    """Write ``u_k = 2cos(k*pi/(2n+1))`` as ``sign * v_j``.

    Uses ``u_{2j} = v_j`` and ``u_{2j+1} = -v_{n-j}``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k0 = k % (2 * (2 * n + 1))
    j, odd = divmod(k0, 2)
    if odd:
        return -1, normalize(n - j, n)
    return 1, normalize(j, n)


def pair_multisets(n: int) -> tuple[Counter, Counter]:
    """Index pairs ``{k+j, k-j}`` and ``{j, k}`` over all 1 <= j < k <= n,
    each pair normalized and sorted."""
    shifted, plain = Counter(), Counter()
    for k in range(1, n + 1):
        for j in range(1, k):
            a, b = normalize(k + j, n).k, normalize(k - j, n).k
            shifted[(min(a, b), max(a, b))] += 1
            plain[(j, k)] += 1
    return shifted, plain


def pair_identity_13(n: int) -> bool:
    """True when the products ``w_{k+j} w_{k-j}`` over all pairs are a
    rearrangement of the products ``w_j w_k``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    shifted, plain = pair_multisets(n)
    return shifted == plain
