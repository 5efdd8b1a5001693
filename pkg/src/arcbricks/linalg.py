"""Small exact linear algebra over the rationals.

Matrices are tuples of row tuples of ``fractions.Fraction``.  Everything here
is sized for the tiny systems this package produces (a handful of rows and
columns), so clarity and exactness win over vectorization.  An ``r x 0`` or
``0 x c`` matrix is a legitimate value; it is represented by ``r`` empty rows
plus an explicit column count where one is needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def mat(rows: Sequence[Sequence]) -> Matrix:
    """Normalize nested sequences of numbers into a Matrix."""
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def zeros(nrows: int, ncols: int) -> Matrix:
    return tuple(tuple(ZERO for _ in range(ncols)) for _ in range(nrows))


def identity(size: int) -> Matrix:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(size)) for i in range(size)
    )


def shape(m: Matrix, ncols: int | None = None) -> tuple[int, int]:
    """(rows, cols); ``ncols`` disambiguates a matrix with zero rows."""
    if m:
        return len(m), len(m[0])
    return 0, 0 if ncols is None else ncols


def matmul(a: Matrix, b: Matrix, b_ncols: int | None = None) -> Matrix:
    """Product ``a @ b``.

    When ``b`` has zero rows its column count is unrecoverable, so ``b_ncols``
    must supply it if the caller needs a correctly shaped (all-zero) result.
    """
    if a and b:
        assert len(a[0]) == len(b)
    k = len(b)
    ncols = len(b[0]) if b else (b_ncols or 0)
    out = []
    for row in a:
        out.append(
            tuple(sum((row[t] * b[t][j] for t in range(k)), ZERO) for j in range(ncols))
        )
    return tuple(out)


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for row in m for x in row)


def transpose(m: Matrix, ncols: int | None = None) -> Matrix:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0])))


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    rows = [list(row) for row in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix, ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Canonical kernel basis of ``m`` (acting on column vectors).

    Each free column, in increasing index order, contributes one basis vector
    with a 1 in that coordinate; the result is the standard reduced echelon
    parametrization, so callers get a deterministic basis.
    """
    n = ncols if ncols is not None else (len(m[0]) if m else 0)
    if not m or n == 0:
        return [
            tuple(ONE if j == i else ZERO for j in range(n)) for i in range(n)
        ]
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [ZERO] * n
        vec[f] = ONE
        for r, p in enumerate(pivots):
            vec[p] = -red[r][f]
        basis.append(tuple(vec))
    return basis


def column_space_basis(m: Matrix) -> Matrix:
    """Pivot columns of ``m``, as a matrix whose columns span the image."""
    _, pivots = rref(m)
    return tuple(tuple(row[c] for c in pivots) for row in m)


def solve_matrix(a: Matrix, b: Matrix, a_cols: int | None = None) -> Matrix:
    """One exact solution ``x`` of ``a @ x = b``; raises if inconsistent."""
    nrows = len(a)
    ncols = a_cols if a_cols is not None else (len(a[0]) if a else 0)
    bcols = len(b[0]) if b else 0
    if nrows == 0:
        return zeros(ncols, bcols)
    aug = tuple(tuple(a[i]) + tuple(b[i]) for i in range(nrows))
    red, pivots = rref(aug)
    if any(p >= ncols for p in pivots):
        raise ValueError("inconsistent linear system")
    x = [[ZERO] * bcols for _ in range(ncols)]
    for r, p in enumerate(pivots):
        for j in range(bcols):
            x[p][j] = red[r][ncols + j]
    return tuple(tuple(row) for row in x)
