"""Exact domino-tiling counts by broken-profile dynamic programming.

Cells are scanned row-major.  Bit ``c`` of the profile says whether the
cell in column ``c`` at the scan front is already covered: for ``c < j``
that is the cell one row down (covered by a vertical domino hanging from
the current row), for ``c >= j`` it is the cell in the current row.

Counts outgrow int64 at modest sizes (A_8 has 33 digits), so state layers
are numpy object arrays of Python ints.  Each cell update is three
scatter-adds with collision-free targets.
"""
from __future__ import annotations

import numpy as np

from .errors import DivisibilityFailure, WidthCapExceeded
from .polynomial import integer_sqrt_exact

__all__ = ["DEFAULT_WIDTH_CAP", "count_matchings", "a_n", "b_from_count"]

DEFAULT_WIDTH_CAP = 20


def _cell_moves(width: int):
    states = np.arange(1 << width, dtype=np.int64)
    moves = []
    for j in range(width):
        bit = 1 << j
        covered = states[(states & bit) != 0]
        free = states[(states & bit) == 0]
        if j + 1 < width:
            horiz = free[(free & (bit << 1)) == 0]
        else:
            horiz = free[:0]
        moves.append((bit, covered, free, horiz))
    return moves


def count_matchings(rows: int, cols: int, width_cap: int = DEFAULT_WIDTH_CAP) -> int:
    """Number of domino tilings (perfect matchings) of a rows x cols grid.

    Odd-area boards return 0.  ``cols`` is the profile width and must not
    exceed ``width_cap``.
    """
    if rows < 1 or cols < 1:
        raise ValueError("board dimensions must be positive")
    if cols > width_cap:
        raise WidthCapExceeded(cols, width_cap)
    if (rows * cols) % 2:
        return 0

    size = 1 << cols
    moves = _cell_moves(cols)
    cur = np.zeros(size, dtype=object)
    cur[0] = 1
    for i in range(rows):
        last_row = i == rows - 1
        for bit, covered, free, horiz in moves:
            nxt = np.zeros(size, dtype=object)
            nxt[covered ^ bit] += cur[covered]
            if not last_row:
                nxt[free | bit] += cur[free]
            if len(horiz):
                nxt[horiz | (bit << 1)] += cur[horiz]
            cur = nxt
    return int(cur[0])


def a_n(n: int, width_cap: int = DEFAULT_WIDTH_CAP) -> int:
    """Tilings of the 2n x 2n board."""
    if n < 1:
        raise ValueError("n must be positive")
    return count_matchings(2 * n, 2 * n, width_cap)


def b_from_count(n: int, a: int | None = None, width_cap: int = DEFAULT_WIDTH_CAP) -> int:
    """B_n from a tiling count via ``A_n = 2**n B_n**2``."""
    if a is None:
        a = a_n(n, width_cap)
    if a % (1 << n):
        raise DivisibilityFailure(f"2^{n} does not divide A_{n} = {a}")
    return integer_sqrt_exact(a >> n)
