"""
Sparse Gaussian elimination over GF(p).

Two eliminators live here. ``rank`` only needs a count, so it picks pivots
Markowitz-style (fewest entries in the pivot column, then the sparsest row)
to keep fill low. ``row_reduce`` builds the reduced row echelon form of a
span, which is unique for the span and therefore independent of input order.
"""

from typing import Iterable

from loguru import logger

from .field import inverse
from .matrix import FieldMatrix, SparseVector, add_scaled, scale_vector


def rank(m: FieldMatrix) -> int:
    """Rank of a matrix over GF(m.p)."""
    p = m.p
    rows: dict[int, SparseVector] = {r: dict(row) for r, row in m.nonzero_rows()}
    col_rows: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            col_rows.setdefault(c, set()).add(r)

    result = 0
    while col_rows:
        col = min(col_rows, key=lambda c: (len(col_rows[c]), c))
        pivot_row_id = min(col_rows[col], key=lambda r: (len(rows[r]), r))
        pivot_row = rows.pop(pivot_row_id)
        for c in pivot_row:
            holders = col_rows[c]
            holders.discard(pivot_row_id)
        pivot_inv = inverse(pivot_row[col], p)

        for r in list(col_rows[col]):
            row = rows[r]
            factor = (-row[col] * pivot_inv) % p
            for c, v in pivot_row.items():
                new = (row.get(c, 0) + factor * v) % p
                if new:
                    if c not in row:
                        col_rows.setdefault(c, set()).add(r)
                    row[c] = new
                elif c in row:
                    del row[c]
                    col_rows[c].discard(r)
            if not row:
                del rows[r]

        for c in pivot_row:
            if not col_rows.get(c):
                col_rows.pop(c, None)
        result += 1

    logger.debug(f"rank of {m.nrows}x{m.ncols} matrix over GF({p}) is {result}")
    return result


class EchelonBasis:
    """Incrementally maintained reduced row echelon basis of a span.

    ``rows`` maps each pivot column to its normalised row; every row has a 1
    at its pivot and zeros at every other pivot column.
    """

    __slots__ = ("p", "rows")

    def __init__(self, p: int):
        self.p = p
        self.rows: dict[int, SparseVector] = {}

    def reduce(self, vector: SparseVector) -> SparseVector:
        """Remainder of ``vector`` after clearing every pivot column."""
        rest = dict(vector)
        for col in [c for c in rest if c in self.rows]:
            coeff = rest.get(col)
            if coeff:
                add_scaled(rest, self.rows[col], -coeff, self.p)
        return rest

    def insert(self, vector: SparseVector) -> bool:
        """Add a vector to the span; returns True if the dimension grew."""
        rest = self.reduce(vector)
        if not rest:
            return False
        pivot = min(rest)
        rest = scale_vector(rest, inverse(rest[pivot], self.p), self.p)
        for row in self.rows.values():
            coeff = row.get(pivot)
            if coeff:
                add_scaled(row, rest, -coeff, self.p)
        self.rows[pivot] = rest
        return True

    def sorted_rows(self) -> tuple[list[SparseVector], list[int]]:
        pivots = sorted(self.rows)
        return [self.rows[c] for c in pivots], pivots


def row_reduce(vectors: Iterable[SparseVector], p: int) -> tuple[list[SparseVector], list[int]]:
    """Reduced row echelon form of the span of ``vectors``.

    Returns:
        tuple: (rows ordered by pivot column, pivot columns).
    """
    basis = EchelonBasis(p)
    for vector in sorted((v for v in vectors if v), key=len):
        basis.insert(vector)
    return basis.sorted_rows()
