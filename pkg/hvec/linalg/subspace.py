"""
Subspaces of GF(p)^n in canonical reduced row echelon form, and the
subspace arithmetic built on them: kernels, sums, intersections, images
and preimages.
"""

from typing import Iterable, Sequence

from ..errors import DimensionMismatchError
from .eliminate import row_reduce
from .matrix import FieldMatrix, SparseVector, add_scaled


class Subspace:
    """A subspace of GF(p)^ambient_dim.

    The basis is the unique reduced row echelon basis of the span, so two
    Subspace objects are equal exactly when they span the same space.
    """

    __slots__ = ("ambient_dim", "p", "_rows", "_pivots", "_pivot_pos", "_complement")

    def __init__(self, ambient_dim: int, p: int, rows: list[SparseVector], pivots: list[int]):
        self.ambient_dim = ambient_dim
        self.p = p
        self._rows = rows
        self._pivots = pivots
        self._pivot_pos = {c: i for i, c in enumerate(pivots)}
        self._complement: dict[int, int] | None = None

    @classmethod
    def span(cls, vectors: Iterable[SparseVector], ambient_dim: int, p: int) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if v and (min(v) < 0 or max(v) >= ambient_dim):
                raise DimensionMismatchError(f"Vector coordinate out of range for ambient dimension {ambient_dim}")
        rows, pivots = row_reduce(vectors, p)
        return cls(ambient_dim, p, rows, pivots)

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, p, [], [])

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, p, [{i: 1} for i in range(ambient_dim)], list(range(ambient_dim)))

    @classmethod
    def column_space(cls, m: FieldMatrix) -> "Subspace":
        return cls.span(m.columns(), m.nrows, m.p)

    # --- queries ------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._pivots)

    @property
    def basis(self) -> FieldMatrix:
        """Basis rows as a dim x ambient_dim matrix."""
        return FieldMatrix.from_rows(self._rows, self.ambient_dim, self.p)

    def vectors(self) -> list[SparseVector]:
        return [dict(row) for row in self._rows]

    def reduce(self, vector: SparseVector) -> SparseVector:
        """Canonical representative of ``vector`` modulo this subspace."""
        rest = dict(vector)
        for col in [c for c in rest if c in self._pivot_pos]:
            coeff = rest.get(col)
            if coeff:
                add_scaled(rest, self._rows[self._pivot_pos[col]], -coeff, self.p)
        return rest

    def contains(self, vector: SparseVector) -> bool:
        return not self.reduce(vector)

    def __contains__(self, vector: SparseVector) -> bool:
        return self.contains(vector)

    def coordinates(self, vector: SparseVector) -> list[int]:
        """Coefficients of a member vector in the echelon basis.

        Raises:
            ValueError: If the vector is not in the subspace.
        """
        if not self.contains(vector):
            raise ValueError("Vector is not in the subspace")
        return [vector.get(c, 0) for c in self._pivots]

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(other.contains(row) for row in self._rows)

    def __le__(self, other: "Subspace") -> bool:
        return self.is_subspace_of(other)

    # --- quotient -----------------------------------------------------

    @property
    def complement_columns(self) -> tuple[int, ...]:
        """Non-pivot coordinates; their unit vectors give a basis of the quotient."""
        return tuple(self._complement_index())

    def _complement_index(self) -> dict[int, int]:
        if self._complement is None:
            free = [c for c in range(self.ambient_dim) if c not in self._pivot_pos]
            self._complement = {c: i for i, c in enumerate(free)}
        return self._complement

    def quotient_coordinates(self, vector: SparseVector) -> SparseVector:
        """Coordinates of the class of ``vector`` in GF(p)^ambient / self."""
        index = self._complement_index()
        return {index[c]: v for c, v in self.reduce(vector).items()}

    def quotient_map(self, m: FieldMatrix) -> FieldMatrix:
        """Compose a map into the ambient space with the projection onto the quotient."""
        if m.nrows != self.ambient_dim:
            raise DimensionMismatchError(
                f"Map with {m.nrows} rows does not land in ambient dimension {self.ambient_dim}")
        columns = [self.quotient_coordinates(col) for col in m.columns()]
        return FieldMatrix.from_columns(columns, self.codim, self.p)

    def project(self, sub: "Subspace") -> "Subspace":
        """Image of ``sub`` in the quotient by self, in quotient coordinates."""
        _check_compatible(self, sub)
        return Subspace.span((self.quotient_coordinates(v) for v in sub._rows), self.codim, self.p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.p == other.p
                and self._pivots == other._pivots and self._rows == other._rows)

    def __hash__(self):
        return hash((self.ambient_dim, self.p, tuple(tuple(sorted(r.items())) for r in self._rows)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in GF({self.p})^{self.ambient_dim})"


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"Ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    if a.p != b.p:
        raise DimensionMismatchError(f"Fields differ: GF({a.p}) vs GF({b.p})")


def kernel_basis(m: FieldMatrix) -> Subspace:
    """Null space {v : m v = 0} as a Subspace of GF(p)^m.ncols."""
    rows, pivots = row_reduce((row for _, row in m.nonzero_rows()), m.p)
    pivot_set = set(pivots)
    vectors = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = {free: 1}
        for row, pivot in zip(rows, pivots):
            coeff = row.get(free)
            if coeff:
                v[pivot] = (-coeff) % m.p
        vectors.append(v)
    return Subspace.span(vectors, m.ncols, m.p)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return Subspace.span(a.vectors() + b.vectors(), a.ambient_dim, a.p)


def sum_of_subspaces(spaces: Sequence[Subspace], ambient_dim: int, p: int) -> Subspace:
    vectors: list[SparseVector] = []
    for s in spaces:
        if s.ambient_dim != ambient_dim or s.p != p:
            raise DimensionMismatchError("Summands live in different spaces")
        vectors.extend(s.vectors())
    return Subspace.span(vectors, ambient_dim, p)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b from the kernel of the stacked system [A | -B]."""
    _check_compatible(a, b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim, a.p)
    p = a.p
    a_vectors = a.vectors()
    minus_b = [{c: (-v) % p for c, v in row.items()} for row in b.vectors()]
    system = FieldMatrix.from_columns(a_vectors + minus_b, a.ambient_dim, p)
    combination = kernel_basis(system)
    meets = []
    for coeffs in combination.vectors():
        x: SparseVector = {}
        for i, c in coeffs.items():
            if i < a.dim:
                add_scaled(x, a_vectors[i], c, p)
        meets.append(x)
    return Subspace.span(meets, a.ambient_dim, p)


def image_of_subspace(f: FieldMatrix, s: Subspace) -> Subspace:
    if f.ncols != s.ambient_dim or f.p != s.p:
        raise DimensionMismatchError(f"Map {f.shape} cannot act on {s!r}")
    return Subspace.span((f.apply(v) for v in s.vectors()), f.nrows, f.p)


def preimage_of_subspace(f: FieldMatrix, w: Subspace) -> Subspace:
    """{v : f v ∈ w}, the kernel of f followed by the projection onto the quotient by w."""
    if f.p != w.p:
        raise DimensionMismatchError(f"Fields differ: GF({f.p}) vs GF({w.p})")
    return kernel_basis(w.quotient_map(f))
