"""
Sparse matrices over GF(p).

Vectors are plain ``dict[int, int]`` maps from coordinate to a nonzero
residue. A FieldMatrix stores its rows that way and is never mutated after
construction.
"""

from typing import Iterable, Iterator, Sequence

from ..errors import DimensionMismatchError
from .field import FieldScalar

SparseVector = dict[int, int]


def add_scaled(target: SparseVector, source: SparseVector, factor: int, p: int) -> None:
    """In place: target += factor * source over GF(p)."""
    if factor % p == 0:
        return
    for col, value in source.items():
        new = (target.get(col, 0) + factor * value) % p
        if new:
            target[col] = new
        else:
            target.pop(col, None)


def scale_vector(vector: SparseVector, factor: int, p: int) -> SparseVector:
    factor %= p
    if factor == 0:
        return {}
    return {col: (value * factor) % p for col, value in vector.items()}


def dense_to_sparse(values: Sequence[int], p: int) -> SparseVector:
    return {i: v % p for i, v in enumerate(values) if v % p}


def sparse_to_dense(vector: SparseVector, length: int) -> list[int]:
    out = [0] * length
    for i, v in vector.items():
        out[i] = v
    return out


class FieldMatrix:
    """Immutable sparse matrix over GF(p), stored row-major."""

    __slots__ = ("nrows", "ncols", "p", "_rows")

    def __init__(self, nrows: int, ncols: int, p: int, rows: dict[int, SparseVector] | None = None):
        if nrows < 0 or ncols < 0:
            raise DimensionMismatchError(f"Negative matrix shape {nrows}x{ncols}")
        self.nrows = nrows
        self.ncols = ncols
        self.p = p
        self._rows: dict[int, SparseVector] = {}
        for r, row in (rows or {}).items():
            if not 0 <= r < nrows:
                raise DimensionMismatchError(f"Row index {r} out of range for {nrows} rows")
            clean = {}
            for c, v in row.items():
                if not 0 <= c < ncols:
                    raise DimensionMismatchError(f"Column index {c} out of range for {ncols} columns")
                v %= p
                if v:
                    clean[c] = v
            if clean:
                self._rows[r] = clean

    # --- constructors -------------------------------------------------

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, p: int,
                     entries: Iterable[tuple[int, int, int | FieldScalar]]) -> "FieldMatrix":
        """Build from (row, col, value) triples.

        Raises:
            DimensionMismatchError: On a repeated (row, col) pair, an index out of
                range or a scalar from another field.
        """
        rows: dict[int, SparseVector] = {}
        for r, c, value in entries:
            if isinstance(value, FieldScalar):
                if value.p != p:
                    raise DimensionMismatchError(f"Entry ({r}, {c}) lives in GF({value.p}), not GF({p})")
                value = value.value
            row = rows.setdefault(r, {})
            if c in row:
                raise DimensionMismatchError(f"Duplicate entry at ({r}, {c})")
            row[c] = value
        # Zero entries are accepted on input and simply not stored.
        return cls(nrows, ncols, p, rows)

    @classmethod
    def from_dense(cls, values: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> "FieldMatrix":
        nrows = len(values)
        if ncols is None:
            ncols = len(values[0]) if nrows else 0
        for row in values:
            if len(row) != ncols:
                raise DimensionMismatchError("Ragged dense matrix")
        return cls(nrows, ncols, p, {r: dense_to_sparse(row, p) for r, row in enumerate(values)})

    @classmethod
    def from_rows(cls, vectors: Sequence[SparseVector], ncols: int, p: int) -> "FieldMatrix":
        return cls(len(vectors), ncols, p, {r: v for r, v in enumerate(vectors)})

    @classmethod
    def from_columns(cls, vectors: Sequence[SparseVector], nrows: int, p: int) -> "FieldMatrix":
        rows: dict[int, SparseVector] = {}
        for c, vector in enumerate(vectors):
            for r, value in vector.items():
                rows.setdefault(r, {})[c] = value
        return cls(nrows, len(vectors), p, rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, p: int) -> "FieldMatrix":
        return cls(nrows, ncols, p)

    @classmethod
    def identity(cls, n: int, p: int) -> "FieldMatrix":
        return cls(n, n, p, {i: {i: 1} for i in range(n)})

    # --- access -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def row(self, r: int) -> SparseVector:
        return dict(self._rows.get(r, {}))

    def rows(self) -> list[SparseVector]:
        """All rows, including empty ones, as fresh dicts."""
        return [dict(self._rows.get(r, {})) for r in range(self.nrows)]

    def nonzero_rows(self) -> Iterator[tuple[int, SparseVector]]:
        for r in sorted(self._rows):
            yield r, self._rows[r]

    def columns(self) -> list[SparseVector]:
        cols: list[SparseVector] = [{} for _ in range(self.ncols)]
        for r, row in self._rows.items():
            for c, v in row.items():
                cols[c][r] = v
        return cols

    def entries(self) -> list[tuple[int, int, FieldScalar]]:
        return [
            (r, c, FieldScalar(v, self.p))
            for r in sorted(self._rows)
            for c, v in sorted(self._rows[r].items())
        ]

    def __getitem__(self, index: tuple[int, int]) -> int:
        r, c = index
        return self._rows.get(r, {}).get(c, 0)

    def to_dense(self) -> list[list[int]]:
        return [sparse_to_dense(self._rows.get(r, {}), self.ncols) for r in range(self.nrows)]

    # --- algebra ------------------------------------------------------

    def _check_field(self, other: "FieldMatrix") -> None:
        if other.p != self.p:
            raise DimensionMismatchError(f"Matrices over GF({self.p}) and GF({other.p}) cannot be combined")

    def transpose(self) -> "FieldMatrix":
        cols = self.columns()
        return FieldMatrix(self.ncols, self.nrows, self.p, {c: v for c, v in enumerate(cols) if v})

    @property
    def T(self) -> "FieldMatrix":
        return self.transpose()

    def apply(self, vector: SparseVector) -> SparseVector:
        """Matrix-vector product ``self @ vector``."""
        out: SparseVector = {}
        p = self.p
        for r, row in self._rows.items():
            total = 0
            if len(row) < len(vector):
                for c, v in row.items():
                    w = vector.get(c)
                    if w:
                        total += v * w
            else:
                for c, w in vector.items():
                    v = row.get(c)
                    if v:
                        total += v * w
            total %= p
            if total:
                out[r] = total
        return out

    def matmul(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        rows: dict[int, SparseVector] = {}
        for r, row in self._rows.items():
            acc: SparseVector = {}
            for k, v in row.items():
                other_row = other._rows.get(k)
                if other_row:
                    add_scaled(acc, other_row, v, self.p)
            if acc:
                rows[r] = acc
        return FieldMatrix(self.nrows, other.ncols, self.p, rows)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        return self.matmul(other)

    def scale(self, factor: int) -> "FieldMatrix":
        return FieldMatrix(self.nrows, self.ncols, self.p,
                           {r: scale_vector(row, factor, self.p) for r, row in self._rows.items()})

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}")
        rows = {r: dict(row) for r, row in self._rows.items()}
        for r, row in other._rows.items():
            add_scaled(rows.setdefault(r, {}), row, 1, self.p)
        return FieldMatrix(self.nrows, self.ncols, self.p, rows)

    def vstack(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_field(other)
        if self.ncols != other.ncols:
            raise DimensionMismatchError(f"Cannot stack {self.shape} over {other.shape}")
        rows = dict(self._rows)
        rows.update({r + self.nrows: row for r, row in other._rows.items()})
        return FieldMatrix(self.nrows + other.nrows, self.ncols, self.p, rows)

    def hstack(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_field(other)
        if self.nrows != other.nrows:
            raise DimensionMismatchError(f"Cannot place {self.shape} beside {other.shape}")
        rows = {r: dict(row) for r, row in self._rows.items()}
        for r, row in other._rows.items():
            target = rows.setdefault(r, {})
            for c, v in row.items():
                target[c + self.ncols] = v
        return FieldMatrix(self.nrows, self.ncols + other.ncols, self.p, rows)

    def select_columns(self, columns: Sequence[int]) -> "FieldMatrix":
        position = {c: i for i, c in enumerate(columns)}
        rows = {}
        for r, row in self._rows.items():
            picked = {position[c]: v for c, v in row.items() if c in position}
            if picked:
                rows[r] = picked
        return FieldMatrix(self.nrows, len(columns), self.p, rows)

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.shape == other.shape and self.p == other.p and self._rows == other._rows

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.p, tuple(sorted((r, tuple(sorted(row.items())))
                                                                   for r, row in self._rows.items()))))

    def __repr__(self) -> str:
        return f"FieldMatrix({self.nrows}x{self.ncols} over GF({self.p}), nnz={self.nnz})"


def stack_vertically(blocks: Sequence[FieldMatrix], ncols: int, p: int) -> FieldMatrix:
    """Stack matrices with equal column count; an empty list gives a 0 x ncols matrix."""
    result = FieldMatrix.zeros(0, ncols, p)
    for block in blocks:
        result = result.vstack(block)
    return result


def stack_horizontally(blocks: Sequence[FieldMatrix], nrows: int, p: int) -> FieldMatrix:
    result = FieldMatrix.zeros(nrows, 0, p)
    for block in blocks:
        result = result.hstack(block)
    return result
