"""Exact linear algebra over a field (Fraction or RatFunc entries).

Only the handful of primitives the library needs: incremental sparse row
echelon for ranks of morphism spans, and dense elimination for determinants,
ranks and nullspaces of Gram matrices.  Entries may be any field elements
supporting +, -, *, / and truthiness as a zero test.
"""

from __future__ import annotations

from typing import Callable, Hashable, Sequence


class SparseEchelon:
    """Incremental row echelon over sparse dict rows with hashable keys."""

    def __init__(self, key_order: Callable[[Hashable], object] = repr):
        self._key_order = key_order
        self._rows: dict[Hashable, dict] = {}  # pivot key -> row with pivot 1

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, row: dict) -> bool:
        """Reduce a row against the basis; returns True if the rank grew."""
        row = {k: v for k, v in row.items() if v}
        while row:
            pivot = min(row, key=self._key_order)
            basis_row = self._rows.get(pivot)
            if basis_row is None:
                pval = row[pivot]
                self._rows[pivot] = {k: v / pval for k, v in row.items()}
                return True
            factor = row[pivot]
            new_row = dict(row)
            for k, v in basis_row.items():
                delta = factor * v
                cur = new_row.get(k)
                val = (cur - delta) if cur is not None else -delta
                if val:
                    new_row[k] = val
                else:
                    new_row.pop(k, None)
            row = new_row
        return False


def span_rank(rows: Sequence[dict], key_order: Callable = repr) -> int:
    ech = SparseEchelon(key_order)
    for row in rows:
        ech.add(row)
    return ech.rank


def dense_rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a dense matrix by fraction-based Gaussian elimination."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(rows):
        pivot_row = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot_row is None:
            col += 1
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pval = rows[rank][col]
        rows[rank] = [v / pval for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def determinant(matrix: Sequence[Sequence]):
    """Determinant over a field by elimination with row swaps."""
    n = len(matrix)
    if n == 0:
        raise ValueError("determinant of an empty matrix is undefined here")
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant needs a square matrix")
    rows = [list(r) for r in matrix]
    sign = 1
    det = None
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot_row is None:
            zero = rows[0][0] - rows[0][0]
            return zero
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        pval = rows[col][col]
        det = pval if det is None else det * pval
        for i in range(col + 1, n):
            if rows[i][col]:
                f = rows[i][col] / pval
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return det if sign == 1 else -det


def right_nullspace(matrix: Sequence[Sequence]) -> list[list]:
    """Basis of {v : A v = 0} for a dense matrix over a field."""
    rows = [list(r) for r in matrix]
    if not rows:
        return []
    ncols = len(rows[0])
    # reduced row echelon form, tracking pivot columns
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pval = rows[r][col]
        rows[r] = [v / pval for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    one = None
    for row in rows:
        for v in row:
            if v:
                one = v / v
                break
        if one is not None:
            break
    if one is None:
        one = 1  # zero matrix: caller's entries may be any field; 1 works with Fraction
    zero = one - one
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for free in free_cols:
        vec = [zero] * ncols
        vec[free] = one
        for prow, pcol in zip(rows, pivots):
            vec[pcol] = -prow[free]
        basis.append(vec)
    return basis
