"""Exact rank and null-space computation over the rationals.

Matrices come in as sequences of rows with int or Fraction entries.  Rows
are first cleared to primitive integer form, then eliminated fraction-free
with full pivoting: the pivot is the first entry of maximal absolute value
in the remaining submatrix, which makes ranks and null bases reproducible
bit for bit.  Each updated row is divided by its content gcd to keep the
integers small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def _integer_row(row: Sequence[Fraction | int]) -> list[int]:
    """Scale a rational row to primitive integers (empty rows stay empty)."""
    fracs = [Fraction(v) for v in row]
    denom = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * denom) for f in fracs]
    content = gcd(*ints) if ints else 0
    if content > 1:
        ints = [v // content for v in ints]
    return ints


def _eliminate(rows: Sequence[Sequence[Fraction | int]], cols: int):
    """Echelonize a copy of `rows`.

    Returns (echelon, col_perm, rank):  echelon is upper triangular in the
    permuted column order, col_perm[i] gives the original index of permuted
    column i, and the first `rank` permuted columns are the pivot columns.
    """
    work = [_integer_row(r) for r in rows]
    for r in work:
        if len(r) != cols:
            raise ValueError("ragged matrix")
    col_perm = list(range(cols))
    m = len(work)
    rank = 0
    while rank < m and rank < cols:
        # Full pivoting: first maximal-absolute entry of the submatrix.
        best_i = best_j = -1
        best = 0
        for i in range(rank, m):
            row = work[i]
            for j in range(rank, cols):
                v = abs(row[j])
                if v > best:
                    best, best_i, best_j = v, i, j
        if best == 0:
            break
        if best_i != rank:
            work[rank], work[best_i] = work[best_i], work[rank]
        if best_j != rank:
            for row in work:
                row[rank], row[best_j] = row[best_j], row[rank]
            col_perm[rank], col_perm[best_j] = col_perm[best_j], col_perm[rank]
        pivot_row = work[rank]
        pivot = pivot_row[rank]
        for i in range(rank + 1, m):
            row = work[i]
            factor = row[rank]
            if factor == 0:
                continue
            row[rank] = 0
            for j in range(rank + 1, cols):
                row[j] = pivot * row[j] - factor * pivot_row[j]
            content = gcd(*row)
            if content > 1:
                for j in range(rank + 1, cols):
                    row[j] //= content
        rank += 1
    return work, col_perm, rank


def rank(rows: Sequence[Sequence[Fraction | int]], cols: int | None = None) -> int:
    """Exact rank over the rationals."""
    cols = _infer_cols(rows, cols)
    if cols == 0 or not rows:
        return 0
    _, _, r = _eliminate(rows, cols)
    return r


def nullspace(rows: Sequence[Sequence[Fraction | int]], cols: int | None = None) -> list[list[int]]:
    """Basis of the right null space, one primitive integer vector per free column.

    Each basis vector is scaled to coprime integers with a positive first
    nonzero entry; rank(m) + len(basis) == cols.
    """
    cols = _infer_cols(rows, cols)
    if cols == 0:
        return []
    if not rows:
        return [_unit_vector(cols, k) for k in range(cols)]
    echelon, col_perm, r = _eliminate(rows, cols)
    basis = []
    for free in range(r, cols):
        permuted = [Fraction(0)] * cols
        permuted[free] = Fraction(1)
        for p in range(r - 1, -1, -1):
            row = echelon[p]
            s = sum((row[q] * permuted[q] for q in range(p + 1, cols)), Fraction(0))
            permuted[p] = -s / row[p]
        vector = [Fraction(0)] * cols
        for pos, value in enumerate(permuted):
            vector[col_perm[pos]] = value
        basis.append(_primitive(vector))
    return basis


def row_reduce(rows: Sequence[Sequence[Fraction | int]], cols: int | None = None) -> list[list[int]]:
    """Independent integer rows spanning the same row space (echelon, un-permuted)."""
    cols = _infer_cols(rows, cols)
    if cols == 0 or not rows:
        return []
    echelon, col_perm, r = _eliminate(rows, cols)
    reduced = []
    for i in range(r):
        out = [0] * cols
        for pos, value in enumerate(echelon[i]):
            out[col_perm[pos]] = value
        reduced.append(out)
    return reduced


def _infer_cols(rows, cols: int | None) -> int:
    if cols is not None:
        return cols
    if not rows:
        raise ValueError("column count required for an empty matrix")
    return len(rows[0])


def _unit_vector(cols: int, k: int) -> list[int]:
    v = [0] * cols
    v[k] = 1
    return v


def _primitive(vector: list[Fraction]) -> list[int]:
    """Clear denominators, divide by the gcd, make the first nonzero entry positive."""
    denom = lcm(*(f.denominator for f in vector))
    ints = [int(f * denom) for f in vector]
    content = gcd(*ints)
    if content > 1:
        ints = [v // content for v in ints]
    lead = next((v for v in ints if v != 0), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints
