"""
Linear systems of parameters and the algebraic h-vector.

A generic l.s.o.p. over GF(p) is emulated by drawing coefficients from a
seeded numpy stream and redrawing until the facet-rank criterion holds.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
import sympy as sp
from loguru import logger

from .complexes import SimplicialComplex
from .errors import DimensionMismatchError, GenericityError, NotAnLsopError
from .linalg import FieldMatrix, Subspace, check_prime, preimage_of_subspace, rank
from .stanley_reisner import LinearForm, ideal_slice, monomial_basis, mult_matrix

DEFAULT_MAX_RETRIES = 4096


@dataclass(frozen=True)
class LsopSystem:
    """Θ = (θ_1, ..., θ_d); ``seed`` is None for hand-written systems."""

    forms: tuple[LinearForm, ...]
    p: int
    seed: Optional[int] = None

    @property
    def d(self) -> int:
        return len(self.forms)

    def theta(self, j: int) -> LinearForm:
        """θ_j, 1-based."""
        if not 1 <= j <= self.d:
            raise ValueError(f"Form index {j} outside 1..{self.d}")
        return self.forms[j - 1]

    def without(self, j: int) -> tuple[LinearForm, ...]:
        """Θ̂_j: every form except θ_j."""
        self.theta(j)
        return self.forms[:j - 1] + self.forms[j:]

    def matrix(self, n_vertices: int) -> FieldMatrix:
        return FieldMatrix.from_dense([f.coefficients for f in self.forms], self.p, ncols=n_vertices)

    def rows(self) -> list[list[int]]:
        return [list(f.coefficients) for f in self.forms]


@dataclass(frozen=True)
class GradedDims:
    """Dimensions indexed by degree; degrees past the end read as 0."""

    dims: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.dims):
            return self.dims[degree]
        return 0

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def polynomial(self, t: sp.Symbol) -> sp.Expr:
        return sum((c * t**i for i, c in enumerate(self.dims)), sp.Integer(0))


def _forms_from_rows(rows: Sequence[Sequence[int]], p: int) -> tuple[LinearForm, ...]:
    return tuple(LinearForm(tuple(int(c) for c in row), p) for row in rows)


def is_lsop(cx: SimplicialComplex, forms: Sequence[LinearForm] | LsopSystem) -> bool:
    """Facet-rank criterion: every facet F sees a rank |F| submatrix of Θ.

    Raises:
        NotAnLsopError: If the number of forms is not d.
        DimensionMismatchError: If a form has the wrong length.
    """
    forms = tuple(forms.forms if isinstance(forms, LsopSystem) else forms)
    d = cx.d
    if len(forms) != d:
        raise NotAnLsopError(f"Expected {d} linear forms, got {len(forms)}")
    n = cx.n_vertices
    for theta in forms:
        if len(theta) != n:
            raise DimensionMismatchError(f"Linear form has {len(theta)} coefficients, expected {n}")
    if not forms:
        return True
    return _facet_ranks_full(cx, forms)


@lru_cache(maxsize=1024)
def _facet_ranks_full(cx: SimplicialComplex, forms: tuple[LinearForm, ...]) -> bool:
    p = forms[0].p
    theta = FieldMatrix.from_dense([f.coefficients for f in forms], p, ncols=cx.n_vertices)
    for facet in cx.facets:
        if rank(theta.select_columns(facet)) != len(facet):
            logger.debug(f"facet {cx.labels_of(facet)} has a rank-deficient submatrix")
            return False
    return True


def require_lsop(cx: SimplicialComplex, system: LsopSystem) -> LsopSystem:
    if not is_lsop(cx, system):
        raise NotAnLsopError("The linear forms are not a system of parameters for this complex")
    return system


def lsop_from_rows(cx: SimplicialComplex, rows: Sequence[Sequence[int]], p: int,
                   seed: Optional[int] = None) -> LsopSystem:
    """Wrap an explicit coefficient matrix, rejecting anything that is not an l.s.o.p."""
    check_prime(p)
    system = LsopSystem(_forms_from_rows(rows, p), p, seed)
    return require_lsop(cx, system)


def generate_lsop(cx: SimplicialComplex, seed: int, p: int,
                  max_retries: int = DEFAULT_MAX_RETRIES) -> LsopSystem:
    """Draw a random l.s.o.p. over GF(p), deterministic in (Δ, seed, p).

    Raises:
        GenericityError: If no draw within ``max_retries`` passes the criterion.
    """
    check_prime(p)
    cx.require_nonvoid()
    d, n = cx.d, cx.n_vertices
    if d == 0:
        return LsopSystem((), p, seed)
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_retries + 1):
        draw = rng.integers(0, p, size=(d, n), dtype=np.int64).tolist()
        forms = _forms_from_rows(draw, p)
        if is_lsop(cx, forms):
            logger.info(f"l.s.o.p. over GF({p}) accepted after {attempt} draw(s) (seed {seed})")
            return LsopSystem(forms, p, seed)
    logger.error(f"No l.s.o.p. over GF({p}) in {max_retries} draws for {cx.describe()}")
    raise GenericityError(
        f"No linear system of parameters over GF({p}) found in {max_retries} draws (seed {seed}); "
        "the field is probably too small for this complex")


# --- algebraic h-vector ---------------------------------------------------

def h_alg(cx: SimplicialComplex, system: LsopSystem, i: int) -> int:
    """dim (𝕜[Δ]/(Θ))_i."""
    require_lsop(cx, system)
    if i < 0:
        return 0
    return len(monomial_basis(cx, i)) - ideal_slice(cx, system.forms, i, system.p).dim


def h_alg_vector(cx: SimplicialComplex, system: LsopSystem, up_to: int | None = None) -> tuple[int, ...]:
    """(h^a_0, ..., h^a_up_to), up_to defaulting to d."""
    up_to = cx.d if up_to is None else up_to
    return tuple(h_alg(cx, system, i) for i in range(up_to + 1))


def kernel_K0(cx: SimplicialComplex, system: LsopSystem, j: int, i: int) -> Subspace:
    """Kernel of ·θ_j on (𝕜[Δ]/(θ_1, ..., θ_{j-1}))_i in quotient coordinates."""
    require_lsop(cx, system)
    theta = system.theta(j)
    p = system.p
    if i < 0:
        return Subspace.zero(0, p)
    earlier = system.forms[:j - 1]
    ideal_here = ideal_slice(cx, earlier, i, p)
    ideal_next = ideal_slice(cx, earlier, i + 1, p)
    ambient = preimage_of_subspace(mult_matrix(cx, theta, i), ideal_next)
    kernel = ideal_here.project(ambient)
    logger.debug(f"K0({j}) in degree {i}: dim {kernel.dim}")
    return kernel


def kernel_dims(cx: SimplicialComplex, system: LsopSystem, j: int, up_to: int) -> GradedDims:
    return GradedDims(tuple(kernel_K0(cx, system, j, i).dim for i in range(up_to + 1)))


@dataclass(frozen=True)
class HilbertDecompositionReport:
    """Coefficients of both sides of h^a(t) = h(t) + Σ_j (1-t)^(d-j) t Hilb(K0(j), t)."""

    lhs: tuple[int, ...]
    rhs: tuple[int, ...]
    corrections: tuple[tuple[int, ...], ...]

    @property
    def residuals(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.lhs, self.rhs))

    @property
    def holds(self) -> bool:
        return not any(self.residuals)


def hilbert_decomposition_check(cx: SimplicialComplex, system: LsopSystem,
                                up_to: int | None = None) -> HilbertDecompositionReport:
    """Compare both sides coefficientwise for degrees 0..up_to (default d + 1)."""
    d = cx.d
    up_to = d + 1 if up_to is None else up_to
    t = sp.Symbol("t")
    h_poly = sum((h * t**i for i, h in enumerate(cx.h_vector())), sp.Integer(0))
    corrections = []
    for j in range(1, d + 1):
        kernel = kernel_dims(cx, system, j, max(up_to - 1, 0))
        corrections.append(sp.expand((1 - t) ** (d - j) * t * kernel.polynomial(t)))
    rhs = sp.Poly(h_poly + sum(corrections, sp.Integer(0)), t)
    lhs = h_alg_vector(cx, system, up_to)

    def coefficients(expr) -> tuple[int, ...]:
        poly = sp.Poly(expr, t)
        return tuple(int(poly.coeff_monomial(t**i)) for i in range(up_to + 1))

    return HilbertDecompositionReport(
        lhs=lhs,
        rhs=coefficients(rhs.as_expr()),
        corrections=tuple(coefficients(c) for c in corrections),
    )


# --- genericity guard -----------------------------------------------------

@dataclass(frozen=True)
class GuardResult:
    values: tuple[int, ...]
    seeds: tuple[int, ...]
    samples: tuple[tuple[int, ...], ...]
    flagged: bool


def _guard(samples: list[tuple[int, ...]], labels: list[int]) -> GuardResult:
    if len(set(samples)) == 1:
        return GuardResult(samples[0], tuple(labels), tuple(samples), flagged=False)
    minimum = tuple(min(column) for column in zip(*samples))
    logger.warning(f"genericity guard: samples disagree {samples}; using coordinatewise minimum {minimum}")
    return GuardResult(minimum, tuple(labels), tuple(samples), flagged=True)


def genericity_guard(cx: SimplicialComplex,
                     computation: Callable[[LsopSystem], Iterable[int]],
                     seeds: Sequence[int], p: int,
                     max_resamples: int = 4,
                     max_retries: int = DEFAULT_MAX_RETRIES) -> GuardResult:
    """Run ``computation`` under several seeds and compare the outputs.

    Generic dimensions are the minimal ones, so on disagreement up to
    ``max_resamples`` extra seeds are drawn and the coordinatewise minimum
    is returned with ``flagged`` set.

    Raises:
        ValueError: With fewer than two seeds.
    """
    if len(seeds) < 2:
        raise ValueError("The genericity guard needs at least two seeds")
    used = list(seeds)
    samples = [tuple(computation(generate_lsop(cx, s, p, max_retries))) for s in used]
    if len(set(samples)) > 1:
        extra = max(used) + 1
        for offset in range(max_resamples):
            used.append(extra + offset)
            samples.append(tuple(computation(generate_lsop(cx, extra + offset, p, max_retries))))
    return _guard(samples, used)


def genericity_guard_systems(cx: SimplicialComplex,
                             computation: Callable[[LsopSystem], Iterable[int]],
                             systems: Sequence[LsopSystem]) -> GuardResult:
    """The guard over explicit systems; each one is validated first."""
    if len(systems) < 2:
        raise ValueError("The genericity guard needs at least two systems")
    for system in systems:
        require_lsop(cx, system)
    samples = [tuple(computation(system)) for system in systems]
    return _guard(samples, [s.seed if s.seed is not None else -1 for s in systems])
