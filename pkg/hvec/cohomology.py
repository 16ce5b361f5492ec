"""
Simplicial cohomology over GF(p).

Cochains live on oriented faces (vertices in increasing index order). The
augmented complex includes the empty face in degree -1, so reduced
cohomology of {∅} is concentrated in degree -1. Relative cochains of a pair
(Δ, Γ) are supported on the faces of Δ that are not in Γ, which is an
upward-closed family, so the absolute coboundary restricts to it.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from loguru import logger

from .complexes import Face, SimplicialComplex, sign
from .errors import NotASubcomplexError
from .linalg import FieldMatrix, SparseVector, Subspace, kernel_basis, rank


@dataclass(frozen=True)
class BettiSequence:
    """Betti numbers indexed from degree -1; any other degree reads as 0."""

    values: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        index = degree + 1
        if 0 <= index < len(self.values):
            return self.values[index]
        return 0

    @property
    def top_degree(self) -> int:
        return len(self.values) - 2

    def as_tuple(self) -> tuple[int, ...]:
        return self.values

    def total(self) -> int:
        return sum(self.values)


class CochainComplex:
    """Augmented cochain complex on an upward-closed family of faces."""

    def __init__(self, complex_: SimplicialComplex, faces: list[Face], p: int):
        self.complex = complex_
        self.p = p
        self.top = complex_.dimension
        self.basis: dict[int, list[Face]] = {k: [] for k in range(-1, self.top + 1)}
        for face in faces:
            self.basis[len(face) - 1].append(face)
        self.index: dict[int, dict[Face, int]] = {
            k: {f: i for i, f in enumerate(fs)} for k, fs in self.basis.items()
        }

    @classmethod
    def reduced(cls, cx: SimplicialComplex, p: int) -> "CochainComplex":
        return cls(cx, cx.faces(), p)

    @classmethod
    def relative(cls, cx: SimplicialComplex, excluded: Callable[[Face], bool], p: int) -> "CochainComplex":
        return cls(cx, [f for f in cx.faces() if not excluded(f)], p)

    def size(self, k: int) -> int:
        return len(self.basis.get(k, ()))

    def coboundary(self, k: int) -> FieldMatrix:
        """δ^k : C^k → C^(k+1); the sign for dropping the vertex at position t is (-1)^t."""
        return _coboundary(self, k)

    def betti(self) -> BettiSequence:
        ranks = {k: rank(self.coboundary(k)) for k in range(-2, self.top + 1)}
        values = tuple(
            self.size(k) - ranks[k] - ranks[k - 1]
            for k in range(-1, self.top + 1)
        )
        return BettiSequence(values)

    def cohomology_basis(self, k: int) -> "CohomologyBasis":
        cocycles = kernel_basis(self.coboundary(k))
        boundaries = Subspace.column_space(self.coboundary(k - 1))
        classes = Subspace.span((boundaries.reduce(z) for z in cocycles.vectors()), self.size(k), self.p)
        return CohomologyBasis(degree=k, boundaries=boundaries, classes=classes)


def _coboundary(cc: CochainComplex, k: int) -> FieldMatrix:
    rows_faces = cc.basis.get(k + 1, [])
    cols = cc.index.get(k, {})
    p = cc.p
    rows: dict[int, SparseVector] = {}
    for r, face in enumerate(rows_faces):
        row = {}
        for t in range(len(face)):
            sub = face[:t] + face[t + 1:]
            c = cols.get(sub)
            if c is not None:
                row[c] = 1 if t % 2 == 0 else p - 1
        if row:
            rows[r] = row
    return FieldMatrix(len(rows_faces), len(cc.basis.get(k, [])), p, rows)


@dataclass
class CohomologyBasis:
    """Representative cocycles for a basis of H^k.

    Representatives are the rows of a reduced echelon basis of cocycles
    taken modulo coboundaries; the coordinates of a class are read off at
    their pivot columns.
    """

    degree: int
    boundaries: Subspace
    classes: Subspace
    _pivots: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        self._pivots = self.classes.pivots

    @property
    def dim(self) -> int:
        return self.classes.dim

    @property
    def representatives(self) -> list[SparseVector]:
        return self.classes.vectors()

    def coordinates(self, cocycle: SparseVector) -> list[int]:
        rest = self.boundaries.reduce(cocycle)
        return [rest.get(c, 0) for c in self._pivots]


# --- cached entry points ----------------------------------------------

@lru_cache(maxsize=None)
def _reduced_cochains(cx: SimplicialComplex, p: int) -> CochainComplex:
    return CochainComplex.reduced(cx, p)


@lru_cache(maxsize=None)
def _contrastar_cochains(cx: SimplicialComplex, face: Face, p: int) -> CochainComplex:
    fs = set(face)
    return CochainComplex.relative(cx, lambda g: not fs <= set(g), p)


def reduced_betti(cx: SimplicialComplex, p: int) -> BettiSequence:
    """β̃_{-1}, ..., β̃_{d-1} over GF(p).

    Raises:
        VoidComplexError: For the void complex.
    """
    cx.require_nonvoid()
    return _reduced_betti(cx, p)


@lru_cache(maxsize=None)
def _reduced_betti(cx: SimplicialComplex, p: int) -> BettiSequence:
    betti = _reduced_cochains(cx, p).betti()
    logger.debug(f"reduced Betti numbers over GF({p}) of {cx.describe()}: {betti.values}")
    return betti


def contrastar_betti(cx: SimplicialComplex, face: Face, p: int) -> BettiSequence:
    """Betti numbers of the pair (Δ, cost_Δ F); F = ∅ gives reduced cohomology."""
    cx.require_nonvoid()
    face = tuple(sorted(face))
    if face not in cx.face_set:
        cx.link(face)  # raises FaceNotInComplexError
    return _contrastar_betti(cx, face, p)


@lru_cache(maxsize=None)
def _contrastar_betti(cx: SimplicialComplex, face: Face, p: int) -> BettiSequence:
    return _contrastar_cochains(cx, face, p).betti()


def relative_betti(cx: SimplicialComplex, sub: SimplicialComplex, p: int) -> BettiSequence:
    """Betti numbers of the pair (Δ, Γ); Γ void gives reduced cohomology.

    Raises:
        NotASubcomplexError: If Γ is not contained in Δ.
    """
    cx.require_nonvoid()
    if sub.is_void:
        return reduced_betti(cx, p)
    translated: set[Face] = set()
    for face in sub.faces():
        labels = sub.labels_of(face)
        if any(label not in cx.labels for label in labels):
            raise NotASubcomplexError(f"Vertex of {labels} is not a vertex of Δ")
        image = tuple(sorted(cx.labels.index(label) for label in labels))
        if image not in cx.face_set:
            raise NotASubcomplexError(f"{labels} is a face of Γ but not of Δ")
        translated.add(image)
    return CochainComplex.relative(cx, translated.__contains__, p).betti()


@dataclass(frozen=True)
class LinkContrastarReport:
    face: Face
    relative: tuple[int, ...]
    link: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.relative == self.link


def link_contrastar_check(cx: SimplicialComplex, face: Face, p: int) -> LinkContrastarReport:
    """Compare dim H^m(Δ, cost F) with β̃_{m-|F|}(lk F) for m = -1..dim Δ."""
    face = tuple(sorted(face))
    rel = contrastar_betti(cx, face, p)
    lk = reduced_betti(cx.link(face), p)
    degrees = range(-1, cx.dimension + 1)
    return LinkContrastarReport(
        face=face,
        relative=tuple(rel[m] for m in degrees),
        link=tuple(lk[m - len(face)] for m in degrees),
    )


def truncated_euler(cx: SimplicialComplex, i: int, p: int) -> int:
    """χ̃_i(Δ) = Σ_{j=-1}^{i} (-1)^j β̃_j(Δ); 0 for i = -2.

    Raises:
        ValueError: If ``i < -2``.
    """
    if i < -2:
        raise ValueError(f"Truncated Euler characteristic needs i >= -2, got {i}")
    betti = reduced_betti(cx, p)
    return sum(sign(j) * betti[j] for j in range(-1, i + 1))


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """Σ_{j>=-1} (-1)^j f_j, field independent."""
    return sum(sign(k - 1) * count for k, count in enumerate(cx.f_vector()))


def unreduced_betti(cx: SimplicialComplex, p: int) -> BettiSequence:
    """β_k: β_0 counts components, β_k = β̃_k above degree 0, nothing at -1."""
    betti = reduced_betti(cx, p)
    values = list(betti.values)
    values[0] = 0
    if len(values) > 1:
        values[1] = cx.n_components()
    return BettiSequence(tuple(values))


def inclusion_induced_map(cx: SimplicialComplex, vertex: int, i: int, p: int) -> FieldMatrix:
    """Matrix of H^i(Δ, cost v) → H̃^i(Δ) in the canonical cohomology bases.

    Relative cocycles are extended by zero to all faces, which keeps them
    cocycles; their classes are then written in the target basis.
    """
    cx.require_nonvoid()
    if not 0 <= vertex < cx.n_vertices:
        raise ValueError(f"Vertex index {vertex} out of range")
    return _inclusion_induced_map(cx, vertex, i, p)


@lru_cache(maxsize=None)
def _inclusion_induced_map(cx: SimplicialComplex, vertex: int, i: int, p: int) -> FieldMatrix:
    if i < -1 or i > cx.dimension:
        return FieldMatrix.zeros(0, 0, p)
    source = _contrastar_cochains(cx, (vertex,), p)
    target = _reduced_cochains(cx, p)
    src_basis = source.cohomology_basis(i)
    tgt_basis = target.cohomology_basis(i)
    position = target.index[i]
    columns = []
    for rep in src_basis.representatives:
        extended = {position[source.basis[i][c]]: v for c, v in rep.items()}
        coords = tgt_basis.coordinates(extended)
        columns.append({r: v for r, v in enumerate(coords) if v})
    return FieldMatrix.from_columns(columns, tgt_basis.dim, p)


def is_buchsbaum(cx: SimplicialComplex, p: int) -> bool:
    """Pure, and β_i(Δ, cost F) = 0 for all i < d-1 and all faces F ≠ ∅."""
    cx.require_nonvoid()
    if not cx.is_pure():
        return False
    return _vanishes_below_top(cx, cx.nonempty_faces(), p)


def is_cohen_macaulay(cx: SimplicialComplex, p: int) -> bool:
    """The Buchsbaum condition extended to F = ∅."""
    cx.require_nonvoid()
    if not cx.is_pure():
        return False
    return _vanishes_below_top(cx, cx.faces(), p)


def _vanishes_below_top(cx: SimplicialComplex, faces: list[Face], p: int) -> bool:
    d = cx.d
    for face in faces:
        betti = _contrastar_betti(cx, face, p)
        if any(betti[i] for i in range(-1, d - 1)):
            logger.debug(f"relative cohomology of cost {cx.labels_of(face)} is nonzero below degree {d - 1}")
            return False
    return True
