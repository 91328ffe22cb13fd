"""Plactic monoid products in row and column generators.

A row is a non-decreasing word stored as letter counts ``(r_1, ..., r_n)``; a
column is a strictly decreasing word stored as 0/1 indicators.  Letters are
0-based internally and printed 1-based.
"""

from __future__ import annotations

from itertools import accumulate
from typing import Sequence

from .errors import InternalContradictionError
from .words import Word

ROW = "row"
COLUMN = "column"


def row_from_word(w: Word, n: int) -> tuple:
    if any(b < a for a, b in zip(w, w[1:])):
        raise ValueError(f"{w} is not a row")
    return tuple(w.count(i) for i in range(n))


def column_from_word(w: Word, n: int) -> tuple:
    if any(b >= a for a, b in zip(w, w[1:])):
        raise ValueError(f"{w} is not a column")
    return tuple(1 if i in w else 0 for i in range(n))


def row_word(r: Sequence[int]) -> Word:
    return tuple(i for i, k in enumerate(r) for _ in range(k))


def column_word(c: Sequence[int]) -> Word:
    return tuple(i for i in reversed(range(len(c))) if c[i])


def format_letters(w: Word, n: int) -> str:
    sep = " " if n > 9 else ""
    return sep.join(str(a + 1) for a in w)


def plactic_row_product(W: Sequence[int], Z: Sequence[int]) -> tuple:
    """``W * Z = W' * Z'`` with ``W'`` the bumped (dominating) row, possibly empty."""
    n = len(W)
    if len(Z) != n:
        raise ValueError("rows over different alphabets")
    Zs = list(accumulate(Z))
    wp = [0] * n
    Wp = 0  # running W'_{p-1}
    for p in range(1, n):
        Wp += wp[p - 1]
        wp[p] = min(Zs[p - 1] - Wp, W[p])
    zp = [W[q] + Z[q] - wp[q] for q in range(n)]
    if any(x < 0 for x in wp + zp):
        raise InternalContradictionError(f"negative count in row product of {W} and {Z}")
    return tuple(wp), tuple(zp)


def plactic_column_product(W: Sequence[int], Z: Sequence[int]) -> tuple:
    """``W * Z = W' * Z'`` with ``W'`` the longer (left) column."""
    n = len(W)
    if len(Z) != n:
        raise ValueError("columns over different alphabets")
    Ws = list(accumulate(W))
    zp = [0] * n
    zp[0] = min(W[0], Z[0])
    Zp = zp[0]
    for p in range(1, n):
        zp[p] = min(Ws[p] - Zp, Z[p])
        Zp += zp[p]
    wp = [W[q] + Z[q] - zp[q] for q in range(n)]
    if any(x not in (0, 1) for x in wp + zp):
        raise InternalContradictionError(f"column product of {W} and {Z} left the 0/1 range")
    return tuple(wp), tuple(zp)


def _product(mode):
    if mode == ROW:
        return plactic_row_product
    if mode == COLUMN:
        return plactic_column_product
    raise ValueError(f"unknown tableau mode {mode!r}")


def normalize_factors(factors: list, mode: str) -> list:
    """Rewrite adjacent pairs by the product table until no pair changes."""
    product = _product(mode)
    fs = [f for f in factors if any(f)]
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 2, -1, -1):
            if i + 1 >= len(fs):
                continue
            a, b = product(fs[i], fs[i + 1])
            if (a, b) != (fs[i], fs[i + 1]):
                fs[i:i + 2] = [f for f in (a, b) if any(f)]
                changed = True
    return fs


def tableau_normal_form(w: Word, n: int, mode: str = ROW) -> list:
    """Tableau factorization of ``w``: rows top to bottom, or columns left to right."""
    unit = [tuple(1 if i == a else 0 for i in range(n)) for a in range(n)]
    fs: list = []
    for a in w:
        if not 0 <= a < n:
            raise ValueError(f"letter {a} outside alphabet of size {n}")
        fs = normalize_factors(fs + [unit[a]], mode)
    return fs


def tableau_word(factors: Sequence, mode: str = ROW) -> Word:
    to_word = row_word if mode == ROW else column_word
    out: tuple = ()
    for f in factors:
        out += to_word(f)
    return out


def tableau_strings(factors: Sequence, mode: str = ROW) -> list:
    n = len(factors[0]) if factors else 0
    to_word = row_word if mode == ROW else column_word
    return [format_letters(to_word(f), n) for f in factors]


def dominates(R: Sequence[int], S: Sequence[int]) -> bool:
    """``|R| <= |S|`` and each letter of ``R`` exceeds the letter below it in ``S``."""
    r, s = row_word(R), row_word(S)
    return len(r) <= len(s) and all(a > b for a, b in zip(r, s))


def content(factors: Sequence) -> tuple:
    if not factors:
        return ()
    return tuple(sum(col) for col in zip(*factors))
