"""Exact linear algebra over the rationals and over prime fields.

Everything here works on plain lists of ints / Fractions so that ranks and
kernels feeding verdicts are never trusted to floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple


Matrix = List[List[Fraction]]


def to_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rank_rational(rows: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    m = to_fraction_matrix(rows)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = m[row][col]
        for r in range(row + 1, nrows):
            if m[r][col] != 0:
                factor = m[r][col] / inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def kernel_dimension_rational(rows: Sequence[Sequence]) -> int:
    """dim ker over Q of the matrix (as a map on column vectors)."""
    if not rows:
        return 0
    return len(rows[0]) - rank_rational(rows)


def solve_rational(rows: Sequence[Sequence], rhs: Sequence) -> List[Fraction] | None:
    """One exact solution of A x = b, or None when inconsistent.

    Free variables are set to 0.
    """
    m = to_fraction_matrix(rows)
    b = [Fraction(x) for x in rhs]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: List[Tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        b[row], b[piv] = b[piv], b[row]
        inv = m[row][col]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                factor = m[r][col] / inv
                m[r] = [a - factor * c for a, c in zip(m[r], m[row])]
                b[r] -= factor * b[row]
        pivots.append((row, col))
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if b[r] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, c in pivots:
        x[c] = b[r] / m[r][c]
    return x


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) by elimination with modular inverses."""
    m = [[int(x) % p for x in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [(a * inv) % p for a in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank
