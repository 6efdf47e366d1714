"""Exact linear algebra over the rationals.

Ranks use fraction-free (Bareiss) elimination on integer matrices; bases
and solutions come out of Gauss-Jordan elimination over ``Fraction`` so
they are reduced row echelon forms and therefore canonical.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    """Rank by Bareiss elimination; every intermediate entry is an integer."""
    a = integer_rows(rows)
    if not a:
        return 0
    ncols = len(a[0]) if ncols is None else ncols
    nrows = len(a)
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, ncols):
                q, rem = divmod(p * ai[j] - f * a[r][j], prev)
                assert rem == 0, "Bareiss division must be exact"
                ai[j] = q
            ai[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def _gauss_jordan(m: Matrix, pivot_cols: int) -> list[int]:
    """In-place RREF, choosing pivots among the first ``pivot_cols`` columns."""
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(pivot_cols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Nonzero rows of the reduced row echelon form, and the pivot columns."""
    m = to_fractions(rows)
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = _gauss_jordan(m, ncols)
    return m[: len(pivots)], pivots


def row_basis(rows: Sequence[Sequence], ncols: int) -> Matrix:
    return rref(rows, ncols)[0]


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of ``{x : A x = 0}``, one vector per free column."""
    r, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int):
    """Solve ``A x = b``.

    Returns ``(x, None)`` with free variables set to 0, or ``(None, y)``
    where ``y A = 0`` and ``y b != 0`` certifies that there is no solution.
    """
    nrows = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = _gauss_jordan(m, ncols)
    if all(m[i][ncols] == 0 for i in range(len(pivots), nrows)):
        x = [Fraction(0)] * ncols
        for i, p in enumerate(pivots):
            x[p] = m[i][ncols]
        return x, None
    # inconsistent: redo with row-operation tracking to extract y
    m = [
        [Fraction(x) for x in row] + [Fraction(b)] + [Fraction(int(i == j)) for j in range(nrows)]
        for i, (row, b) in enumerate(zip(rows, rhs))
    ]
    pivots = _gauss_jordan(m, ncols)
    for i in range(len(pivots), nrows):
        if m[i][ncols] != 0:
            return None, m[i][ncols + 1:]
    raise AssertionError("inconsistency vanished on re-elimination")


def matvec(rows: Sequence[Sequence], x: Sequence) -> list:
    return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in rows]
