"""Exact linear algebra over QQ, ZZ and F_p.

The heavy lifting (rank, determinant, solving) goes through FLINT's exact
matrix types.  :func:`bareiss_determinant` and :func:`fraction_rank` are small
pure-Python routines kept as independent cross-checks for tests.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import flint

from .errors import DomainError
from .field import QQ, Field


def _fmpq(x) -> flint.fmpq:
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def _to_flint(rows: Sequence[Sequence], ncols: int, field: Field):
    m = len(rows)
    if field.characteristic == 0:
        flat = [_fmpq(x) for row in rows for x in row]
        return flint.fmpq_mat(m, ncols, flat)
    p = field.characteristic
    flat = [int(field(x)) for row in rows for x in row]
    return flint.nmod_mat(m, ncols, flat, p)


def _check_shape(rows: Sequence[Sequence], ncols: int | None) -> int:
    if ncols is None:
        if not rows:
            raise DomainError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DomainError("ragged matrix")
    return ncols


def rank(rows: Sequence[Sequence], field: Field = QQ, ncols: int | None = None) -> int:
    ncols = _check_shape(rows, ncols)
    if not rows or ncols == 0:
        return 0
    return _to_flint(rows, ncols, field).rank()


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("determinant needs a square matrix")
    if n == 0:
        return 1
    return int(flint.fmpz_mat(n, n, [int(x) for r in rows for x in r]).det())


def solve(matrix: Sequence[Sequence], rhs: Sequence, field: Field = QQ) -> list:
    """Unique ``x`` with ``matrix @ x == rhs`` for square invertible ``matrix``."""
    n = len(matrix)
    if any(len(r) != n for r in matrix) or len(rhs) != n:
        raise DomainError("solve needs a square system")
    a = _to_flint(matrix, n, field)
    b = _to_flint([[v] for v in rhs], 1, field)
    try:
        x = a.solve(b)
    except ZeroDivisionError:
        raise DomainError("singular system") from None
    if field.characteristic == 0:
        return [Fraction(int(x[i, 0].p), int(x[i, 0].q)) for i in range(n)]
    return [field(int(x[i, 0])) for i in range(n)]


def in_row_span(rows: Sequence[Sequence], vector: Sequence, field: Field = QQ, base_rank: int | None = None) -> bool:
    """Is ``vector`` a linear combination of ``rows``?"""
    ncols = len(vector)
    if base_rank is None:
        base_rank = rank(rows, field, ncols)
    return rank(list(rows) + [list(vector)], field, ncols) == base_rank


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; every intermediate stays an integer."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def fraction_rank(rows: Sequence[Sequence], field: Field = QQ) -> int:
    """Row reduction with Python scalars (Fraction or ModP)."""
    work = [[field(x) for x in r] for r in rows]
    if not work:
        return 0
    r = 0
    for c in range(len(work[0])):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = field.one / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
    return r

