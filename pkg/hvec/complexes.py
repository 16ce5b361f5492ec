"""
Finite simplicial complexes.

A complex is stored by its facets only. Vertex labels are interned to dense
integer indices in a canonical order, and every other module works with
faces as sorted tuples of those indices.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from string import ascii_lowercase
from typing import Hashable, Iterable

from loguru import logger

from .errors import FaceNotInComplexError, VoidComplexError

Face = tuple[int, ...]


def binomial(n: int, k: int) -> int:
    """C(n, k), taken to be 0 whenever k < 0, n < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def sign(k: int) -> int:
    """(-1)^k as an int, for any integer k."""
    return -1 if k % 2 else 1


def _label_key(label: str) -> tuple:
    # numeric labels sort numerically, everything else alphabetically after them
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def default_labels(n: int) -> list[str]:
    if n <= len(ascii_lowercase):
        return list(ascii_lowercase[:n])
    return [str(i) for i in range(1, n + 1)]


def _fresh_label(taken: Iterable[str], stem: str) -> str:
    taken = set(taken)
    if stem not in taken:
        return stem
    i = 1
    while f"{stem}{i}" in taken:
        i += 1
    return f"{stem}{i}"


@dataclass(frozen=True, eq=True)
class SimplicialComplex:
    """A simplicial complex given by vertex labels and facets.

    The void complex has no facets at all; the empty complex {∅} has the
    single facet ``()``.
    """

    labels: tuple[str, ...]
    facets: tuple[Face, ...]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Hashable]],
                    vertices: Iterable[Hashable] = ()) -> "SimplicialComplex":
        """Build a complex from facet vertex lists.

        Dominated facets are dropped and vertices are inferred. Any extra
        ``vertices`` that lie in no facet become isolated vertices.

        Args:
            facets: Iterable of faces, each an iterable of vertex labels.
            vertices: Optional additional vertex labels.

        Returns:
            SimplicialComplex: The canonical complex; an empty iterable gives the void complex.
        """
        label_sets = [frozenset(str(v) for v in facet) for facet in facets]
        extra = [str(v) for v in vertices]
        if not label_sets and not extra:
            return cls(labels=(), facets=())

        all_labels = set(extra).union(*label_sets) if label_sets else set(extra)
        labels = tuple(sorted(all_labels, key=_label_key))
        index = {label: i for i, label in enumerate(labels)}

        candidates = {tuple(sorted(index[v] for v in s)) for s in label_sets}
        candidates.update((index[v],) for v in extra)
        kept: list[Face] = []
        for face in sorted(candidates, key=len, reverse=True):
            face_set = set(face)
            if not any(face_set <= set(other) for other in kept):
                kept.append(face)
        return cls(labels=labels, facets=tuple(sorted(kept)))

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(labels=(), facets=())

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        """The complex {∅}."""
        return cls(labels=(), facets=((),))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.labels, self.facets))

    def __reduce__(self):
        # the cached hash is process specific
        return (SimplicialComplex, (self.labels, self.facets))

    # --- basic attributes ---------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        return self.facets == ((),)

    def require_nonvoid(self) -> None:
        if self.is_void:
            raise VoidComplexError("Operation requires a nonvoid complex")

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def dimension(self) -> int:
        """dim Δ; -1 for {∅}."""
        self.require_nonvoid()
        return max(len(f) for f in self.facets) - 1

    @property
    def d(self) -> int:
        """dim Δ + 1, the Krull dimension of the face ring."""
        return self.dimension + 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    # --- faces --------------------------------------------------------

    @cached_property
    def _faces_by_size(self) -> dict[int, tuple[Face, ...]]:
        faces: set[Face] = set()
        for facet in self.facets:
            for size in range(len(facet) + 1):
                faces.update(combinations(facet, size))
        by_size: dict[int, list[Face]] = {}
        for face in faces:
            by_size.setdefault(len(face), []).append(face)
        logger.debug(f"enumerated {len(faces)} faces of a complex with {len(self.facets)} facets")
        return {size: tuple(sorted(group)) for size, group in by_size.items()}

    @cached_property
    def face_set(self) -> frozenset[Face]:
        return frozenset(f for group in self._faces_by_size.values() for f in group)

    def faces_of_dim(self, i: int) -> tuple[Face, ...]:
        """All faces of dimension ``i``, sorted.

        Raises:
            ValueError: If ``i < -1``.
        """
        if i < -1:
            raise ValueError(f"Face dimension must be at least -1, got {i}")
        return self._faces_by_size.get(i + 1, ())

    def faces(self) -> list[Face]:
        """Every face, ordered by size and then lexicographically."""
        return [f for size in sorted(self._faces_by_size) for f in self._faces_by_size[size]]

    def nonempty_faces(self) -> list[Face]:
        return [f for f in self.faces() if f]

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.face_set

    def vertex_index(self, label: Hashable) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise FaceNotInComplexError(f"'{label}' is not a vertex of the complex") from None

    def face_of(self, *labels: Hashable) -> Face:
        """Face given by vertex labels, checked for membership."""
        face = tuple(sorted(self.vertex_index(label) for label in labels))
        if face not in self.face_set:
            raise FaceNotInComplexError(f"{{{','.join(str(v) for v in labels)}}} is not a face")
        return face

    def labels_of(self, face: Face) -> tuple[str, ...]:
        return tuple(self.labels[v] for v in face)

    def _require_face(self, face: Face) -> Face:
        face = tuple(sorted(face))
        if face not in self.face_set:
            raise FaceNotInComplexError(f"{face} is not a face of the complex")
        return face

    # --- counting -----------------------------------------------------

    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_{d-1})."""
        self.require_nonvoid()
        return tuple(len(self._faces_by_size.get(size, ())) for size in range(self.d + 1))

    def h_vector(self) -> tuple[int, ...]:
        """(h_0, ..., h_d) with h_i = Σ_j (-1)^(i-j) C(d-j, i-j) f_{j-1}."""
        f = self.f_vector()
        d = self.d
        return tuple(
            sum((-1) ** (i - j) * binomial(d - j, i - j) * f[j] for j in range(i + 1))
            for i in range(d + 1)
        )

    def n_components(self) -> int:
        parent = list(range(self.n_vertices))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in self.faces_of_dim(1) if not self.is_void else ():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        return len({find(v) for v in range(self.n_vertices)})

    def is_connected(self) -> bool:
        return self.n_components() == 1

    # --- constructions ------------------------------------------------

    def _label_facets(self, facets: Iterable[Face]) -> list[tuple[str, ...]]:
        return [self.labels_of(f) for f in facets]

    def link(self, face: Face) -> "SimplicialComplex":
        """lk F = {G : F ∪ G ∈ Δ, F ∩ G = ∅}."""
        face = self._require_face(face)
        if not face:
            return self
        fs = set(face)
        rest = [tuple(v for v in facet if v not in fs) for facet in self.facets if fs <= set(facet)]
        return SimplicialComplex.from_facets(self._label_facets(rest))

    def contrastar(self, face: Face) -> "SimplicialComplex":
        """cost F = {G ∈ Δ : F ⊄ G}; the void complex when F = ∅."""
        face = self._require_face(face)
        if not face:
            return SimplicialComplex.void()
        fs = set(face)
        pieces: list[Face] = []
        for facet in self.facets:
            if fs <= set(facet):
                pieces.extend(tuple(u for u in facet if u != v) for v in face)
            else:
                pieces.append(facet)
        return SimplicialComplex.from_facets(self._label_facets(pieces))

    def star_count(self, face: Face) -> int:
        """Number of faces containing ``face``."""
        face = self._require_face(face)
        fs = set(face)
        return sum(1 for g in self.face_set if fs <= set(g))

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Δ * Γ on disjoint vertex sets."""
        self.require_nonvoid()
        other.require_nonvoid()
        clash = set(self.labels) & set(other.labels)
        if clash:
            raise ValueError(f"Join needs disjoint vertex labels, shared: {sorted(clash)}")
        return SimplicialComplex.from_facets(
            a + b for a in self._label_facets(self.facets) for b in other._label_facets(other.facets)
        )

    def cone(self, apex: str | None = None) -> "SimplicialComplex":
        self.require_nonvoid()
        apex = apex or _fresh_label(self.labels, "apex")
        return self.join(SimplicialComplex.from_facets([[apex]]))

    def suspension(self, apexes: tuple[str, str] | None = None) -> "SimplicialComplex":
        """Join with S⁰ on two new apex vertices."""
        self.require_nonvoid()
        if apexes is None:
            north = _fresh_label(self.labels, "north")
            apexes = (north, _fresh_label(list(self.labels) + [north], "south"))
        return self.join(SimplicialComplex.from_facets([[apexes[0]], [apexes[1]]]))

    def describe(self) -> str:
        if self.is_void:
            return "void complex"
        return f"dim {self.dimension}, {self.n_vertices} vertices, {len(self.facets)} facets"

    def __repr__(self) -> str:
        return f"SimplicialComplex({self.describe()})"


def simplex(n_vertices: int, labels: list[str] | None = None) -> SimplicialComplex:
    """The full simplex on ``n_vertices`` vertices (n_vertices = 0 gives {∅})."""
    labels = labels or default_labels(n_vertices)
    return SimplicialComplex.from_facets([labels[:n_vertices]])


def boundary_simplex(d: int) -> SimplicialComplex:
    """All proper subsets of a (d+1)-set: a (d-1)-sphere.

    Raises:
        ValueError: If ``d < 1``.
    """
    if d < 1:
        raise ValueError(f"boundary_simplex needs d >= 1, got {d}")
    labels = default_labels(d + 1)
    return SimplicialComplex.from_facets(combinations(labels, d))


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError(f"A cycle needs at least 3 vertices, got {n}")
    labels = default_labels(n)
    return SimplicialComplex.from_facets((labels[i], labels[(i + 1) % n]) for i in range(n))
