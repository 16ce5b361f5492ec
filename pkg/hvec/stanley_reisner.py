"""
Graded pieces of the Stanley-Reisner ring 𝕜[Δ].

𝕜[Δ]_i has the monomials of degree i whose support is a face as a basis.
Multiplication by a linear form is a matrix between consecutive graded
pieces; a product whose support leaves Δ is zero.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import sympy as sp
from loguru import logger

from .complexes import SimplicialComplex, binomial
from .errors import DimensionMismatchError
from .linalg import FieldMatrix, Subspace, sum_of_subspaces

Monomial = tuple[int, ...]  # dense exponent vector indexed by vertex


@dataclass(frozen=True)
class LinearForm:
    """θ = Σ_v θ[v] x_v over GF(p)."""

    coefficients: tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) % self.p for c in self.coefficients))

    @classmethod
    def variable(cls, n: int, v: int, p: int) -> "LinearForm":
        return cls(tuple(1 if u == v else 0 for u in range(n)), p)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, v: int) -> int:
        return self.coefficients[v]

    def support(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.coefficients) if c)


@dataclass(frozen=True)
class MonomialBasis:
    """Monomials of 𝕜[Δ]_i in canonical order (descending lexicographic)."""

    degree: int
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    @cached_property
    def index(self) -> dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.monomials)}

    def position(self, monomial: Monomial) -> int | None:
        return self.index.get(monomial)

    @staticmethod
    def support(monomial: Monomial) -> tuple[int, ...]:
        return tuple(v for v, e in enumerate(monomial) if e)


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    """Ordered ways to write ``total`` as ``parts`` positive integers."""
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[k + 1] - bounds[k] for k in range(parts))


def monomial_basis(cx: SimplicialComplex, i: int) -> MonomialBasis:
    """Basis of 𝕜[Δ]_i.

    Raises:
        ValueError: If ``i < 0``.
    """
    if i < 0:
        raise ValueError(f"Degree must be nonnegative, got {i}")
    cx.require_nonvoid()
    return _monomial_basis(cx, i)


@lru_cache(maxsize=None)
def _monomial_basis(cx: SimplicialComplex, i: int) -> MonomialBasis:
    n = cx.n_vertices
    if i == 0:
        return MonomialBasis(0, ((0,) * n,))
    monomials: list[Monomial] = []
    for face in cx.nonempty_faces():
        if len(face) > i:
            continue
        for exponents in _compositions(i, len(face)):
            m = [0] * n
            for v, e in zip(face, exponents):
                m[v] = e
            monomials.append(tuple(m))
    monomials.sort(reverse=True)
    logger.debug(f"monomial basis in degree {i}: {len(monomials)} monomials")
    return MonomialBasis(i, tuple(monomials))


def hilbert_function(cx: SimplicialComplex, i: int) -> int:
    """dim 𝕜[Δ]_i = Σ_{F ≠ ∅} C(i-1, |F|-1) for i > 0, and 1 in degree 0."""
    if i < 0:
        return 0
    if i == 0:
        return 1
    return sum(binomial(i - 1, size - 1) * count for size, count in enumerate(cx.f_vector()) if size)


@dataclass(frozen=True)
class HilbertSeriesReport:
    up_to: int
    counts: tuple[int, ...]
    expected: tuple[int, ...]

    @property
    def first_failure(self) -> int | None:
        for i, (got, want) in enumerate(zip(self.counts, self.expected)):
            if got != want:
                return i
        return None

    @property
    def holds(self) -> bool:
        return self.first_failure is None


def hilbert_series_check(cx: SimplicialComplex, up_to: int | None = None) -> HilbertSeriesReport:
    """Compare basis counts with the expansion of h(t) / (1-t)^d.

    Raises:
        ValueError: If ``up_to`` is below d.
    """
    d = cx.d
    up_to = d if up_to is None else up_to
    if up_to < d:
        raise ValueError(f"Hilbert series check needs up_to >= d = {d}")
    t = sp.Symbol("t")
    numerator = sum(h * t**i for i, h in enumerate(cx.h_vector()))
    expansion = sp.Poly(sp.series(numerator / (1 - t) ** d, t, 0, up_to + 1).removeO(), t)
    expected = tuple(int(expansion.coeff_monomial(t**i)) for i in range(up_to + 1))
    counts = tuple(len(monomial_basis(cx, i)) for i in range(up_to + 1))
    return HilbertSeriesReport(up_to=up_to, counts=counts, expected=expected)


def _check_form(cx: SimplicialComplex, theta: LinearForm) -> None:
    if len(theta) != cx.n_vertices:
        raise DimensionMismatchError(
            f"Linear form has {len(theta)} coefficients, the complex has {cx.n_vertices} vertices")


def mult_matrix(cx: SimplicialComplex, theta: LinearForm, i: int) -> FieldMatrix:
    """Matrix of ·θ : 𝕜[Δ]_i → 𝕜[Δ]_{i+1} in monomial basis coordinates."""
    _check_form(cx, theta)
    return _mult_matrix(cx, theta, i)


@lru_cache(maxsize=4096)
def _mult_matrix(cx: SimplicialComplex, theta: LinearForm, i: int) -> FieldMatrix:
    source = monomial_basis(cx, i)
    target = monomial_basis(cx, i + 1)
    support = theta.support()
    columns = []
    for m in source:
        column = {}
        for v in support:
            shifted = m[:v] + (m[v] + 1,) + m[v + 1:]
            row = target.position(shifted)
            if row is not None:
                column[row] = theta[v]
        columns.append(column)
    matrix = FieldMatrix.from_columns(columns, len(target), theta.p)
    logger.debug(f"multiplication matrix in degree {i}: shape {matrix.shape}, {matrix.nnz} nonzeros")
    return matrix


def ideal_slice(cx: SimplicialComplex, forms: Sequence[LinearForm], i: int, p: int | None = None) -> Subspace:
    """Degree-i part of the ideal generated by ``forms`` inside 𝕜[Δ]_i.

    ``p`` is only needed when ``forms`` is empty.
    """
    if i < 0:
        raise ValueError(f"Degree must be nonnegative, got {i}")
    forms = tuple(forms)
    for theta in forms:
        _check_form(cx, theta)
    return _ideal_slice(cx, forms, i, _field_of(forms, p))


def _field_of(forms: Sequence[LinearForm], p: int | None) -> int:
    moduli = {theta.p for theta in forms}
    if p is not None:
        moduli.add(p)
    if len(moduli) > 1:
        raise DimensionMismatchError(f"Linear forms over different fields: {sorted(moduli)}")
    if not moduli:
        raise ValueError("The field is unknown for an empty list of forms")
    return moduli.pop()


@lru_cache(maxsize=4096)
def _ideal_slice(cx: SimplicialComplex, forms: tuple[LinearForm, ...], i: int, p: int) -> Subspace:
    dim = len(monomial_basis(cx, i))
    if i == 0 or not forms:
        return Subspace.zero(dim, p)
    images = [Subspace.column_space(mult_matrix(cx, theta, i - 1)) for theta in forms]
    return sum_of_subspaces(images, dim, p)
