"""
Topological side of the h-vector identities.

Local cohomology of 𝕜[Δ] is read off relative simplicial cohomology of the
pairs (Δ, cost F). Degree -1 of H^i_𝔪 is ⊕_v H^{i-1}(Δ, cost v), and
multiplication by x_v into degree 0 is the map induced by inclusion on the
v-component and zero elsewhere. The closed-form predictors below combine
these dimensions with face counts and truncated Euler characteristics.
"""

from dataclasses import dataclass, field

from loguru import logger

from .cohomology import (
    contrastar_betti,
    inclusion_induced_map,
    reduced_betti,
    reduced_euler_characteristic,
    truncated_euler,
    unreduced_betti,
)
from .complexes import SimplicialComplex, binomial, sign
from .errors import DimensionMismatchError
from .linalg import FieldMatrix, Subspace, kernel_basis
from .lsop import DEFAULT_MAX_RETRIES, LsopSystem, generate_lsop, h_alg_vector, kernel_K0
from .sigma import h_sigma


@dataclass(frozen=True)
class GrabeDegreeMap:
    """·x_v from degree -1 to degree 0 of H^i_𝔪(𝕜[Δ]) for one vertex."""

    vertex: int
    index: int
    matrix: FieldMatrix

    @property
    def source_dim(self) -> int:
        return self.matrix.ncols

    @property
    def target_dim(self) -> int:
        return self.matrix.nrows


@dataclass(frozen=True)
class LModuleSlice:
    """Degree -1 of L^i_j inside ⊕_v H^{i-1}(Δ, cost v)."""

    index: int
    depth: int
    subspace: Subspace
    offsets: tuple[int, ...] = field(default=())

    @property
    def dim(self) -> int:
        return self.subspace.dim


def grabe_degree_maps(cx: SimplicialComplex, i: int, p: int) -> list[GrabeDegreeMap]:
    return [GrabeDegreeMap(v, i, inclusion_induced_map(cx, v, i - 1, p)) for v in range(cx.n_vertices)]


def local_cohomology_hilbert(cx: SimplicialComplex, i: int, a: int, p: int) -> int:
    """dim H^i_𝔪(𝕜[Δ])_{-a}.

    Raises:
        ValueError: If ``a < 0``.
    """
    if a < 0:
        raise ValueError(f"Only nonpositive degrees carry local cohomology here, got a = {a}")
    if a == 0:
        return reduced_betti(cx, p)[i - 1]
    return sum(
        binomial(a - 1, len(face) - 1) * contrastar_betti(cx, face, p)[i - 1]
        for face in cx.nonempty_faces()
    )


def l_module_slice(cx: SimplicialComplex, system: LsopSystem, i: int, j: int) -> LModuleSlice:
    """∩_{q ≤ j} Ker Φ_q with Φ_q acting on the v-component as θ_q[v]·ι_v.

    Raises:
        ValueError: If ``j`` is outside 0..d.
        DimensionMismatchError: If Θ does not match the vertex set.
    """
    if not 0 <= j <= system.d:
        raise ValueError(f"Depth {j} outside 0..{system.d}")
    if system.forms and len(system.forms[0]) != cx.n_vertices:
        raise DimensionMismatchError("Θ does not match the vertex set of the complex")
    p = system.p
    maps = grabe_degree_maps(cx, i, p)
    offsets = []
    total = 0
    for m in maps:
        offsets.append(total)
        total += m.source_dim
    target = max((m.target_dim for m in maps), default=0)
    rows: dict[int, dict[int, int]] = {}
    for q in range(j):
        theta = system.forms[q]
        for m, offset in zip(maps, offsets):
            coeff = theta[m.vertex]
            if not coeff or not m.source_dim:
                continue
            for r, row in m.matrix.nonzero_rows():
                out = rows.setdefault(q * target + r, {})
                for c, value in row.items():
                    out[offset + c] = (out.get(offset + c, 0) + coeff * value) % p
    stacked = FieldMatrix(j * target, total, p, {r: {c: v for c, v in row.items() if v} for r, row in rows.items()})
    kernel = kernel_basis(stacked)
    logger.debug(f"L^{i}_{j} in degree -1: dim {kernel.dim} of {total}")
    return LModuleSlice(i, j, kernel, tuple(offsets))


def l_dim(cx: SimplicialComplex, system: LsopSystem, i: int, j: int) -> int:
    return l_module_slice(cx, system, i, j).dim


def face_sum(cx: SimplicialComplex, k: int, c: int, p: int, full_sum: bool = False) -> int:
    """Σ_F C(d-|F|, k) χ̃_{c-|F|}(lk F).

    Only F = ∅ and vertices are summed unless ``full_sum`` is set; larger
    faces vanish in the penultimate-degree formulas anyway.
    """
    d = cx.d
    total = 0
    for face in cx.faces():
        size = len(face)
        if size > 1 and not full_sum:
            break
        weight = binomial(d - size, k)
        index = c - size
        if not weight or index < -1:
            continue
        total += weight * truncated_euler(cx.link(face), index, p)
    return total


# --- closed-form predictors -------------------------------------------

def _require_positive_d(cx: SimplicialComplex) -> int:
    d = cx.d
    if d < 1:
        raise ValueError("Penultimate-degree formulas need d >= 1")
    return d


def predict_h_alg_penultimate(cx: SimplicialComplex, system: LsopSystem, p: int) -> int:
    """h_{d-1} + dim(L^{d-1}_d)_{-1} + (-1)^(d-1) Σ_F C(d-|F|, d-1) χ̃_{d-3-|F|}(lk F)."""
    d = _require_positive_d(cx)
    return (cx.h_vector()[d - 1] + l_dim(cx, system, d - 1, d)
            + (-1) ** (d - 1) * face_sum(cx, d - 1, d - 3, p))


def predict_h_sigma_penultimate(cx: SimplicialComplex, p: int, full_sum: bool = False) -> int:
    """h_{d-1} + (-1)^(d-1) Σ_F C(d-|F|, d-1) χ̃_{d-2-|F|}(lk F)."""
    d = _require_positive_d(cx)
    return cx.h_vector()[d - 1] + (-1) ** (d - 1) * face_sum(cx, d - 1, d - 2, p, full_sum)


def predict_stanley(cx: SimplicialComplex) -> tuple[int, ...]:
    return cx.h_vector()


def _check_degree(cx: SimplicialComplex, i: int) -> None:
    if not 0 <= i <= cx.d:
        raise ValueError(f"Degree {i} outside 0..{cx.d}")


def predict_schenzel(cx: SimplicialComplex, i: int, p: int) -> int:
    """h_i + (-1)^i C(d, i) χ̃_{i-2}."""
    _check_degree(cx, i)
    return cx.h_vector()[i] + (-1) ** i * binomial(cx.d, i) * truncated_euler(cx, i - 2, p)


def predict_mny(cx: SimplicialComplex, i: int, p: int) -> int:
    """h_i + (-1)^i C(d, i) χ̃_{i-1} below the top degree, β̃_{d-1} in degree d."""
    _check_degree(cx, i)
    d = cx.d
    if i == d:
        return reduced_betti(cx, p)[d - 1]
    return cx.h_vector()[i] + (-1) ** i * binomial(d, i) * truncated_euler(cx, i - 1, p)


def predict_tau(cx: SimplicialComplex, i: int, p: int) -> int:
    """h_i + (-1)^i Σ_F C(d-|F|, i) χ̃_{i-1-|F|}(lk F), summed over all faces."""
    _check_degree(cx, i)
    return cx.h_vector()[i] + (-1) ** i * face_sum(cx, i, i - 1, p, full_sum=True)


def predict_suspension(cx: SimplicialComplex, i: int, p: int) -> int:
    """h^a_i of a suspension of a Buchsbaum complex:
    h_i + (-1)^i [C(d-2, i-2) χ̃_{i-2} - C(d-2, i) χ̃_{i-1}].
    """
    _check_degree(cx, i)
    d = cx.d
    correction = (binomial(d - 2, i - 2) * truncated_euler(cx, i - 2, p)
                  - binomial(d - 2, i) * truncated_euler(cx, i - 1, p))
    return cx.h_vector()[i] + (-1) ** i * correction


@dataclass(frozen=True)
class SuspensionReport:
    """Computed and predicted h^a of ΣΓ, plus the kernel dimension pattern."""

    h_alg: tuple[int, ...]
    predicted: tuple[int, ...]
    corollary: tuple[int, ...]
    kernel_dims: dict[int, tuple[int, ...]]
    kernel_expected: dict[int, tuple[int, ...]]

    @property
    def holds(self) -> bool:
        return (self.h_alg == self.predicted == self.corollary
                and self.kernel_dims == self.kernel_expected)


def suspension_kernel_pattern(cx: SimplicialComplex, p: int, up_to: int) -> dict[int, tuple[int, ...]]:
    """Expected dim K0(j)_i, i = 0..up_to, for a suspension of a Buchsbaum complex.

    K0(1) and K0(2) vanish; K0(j+1)_i = C(j-2, i) β̃_i + C(j-2, i-2) β̃_{i-1}.
    """
    betti = reduced_betti(cx, p)
    pattern = {1: (0,) * (up_to + 1), 2: (0,) * (up_to + 1)}
    for j in range(2, cx.d):
        pattern[j + 1] = tuple(
            binomial(j - 2, i) * betti[i] + binomial(j - 2, i - 2) * betti[i - 1]
            for i in range(up_to + 1)
        )
    return {j: pattern[j] for j in range(1, cx.d + 1)}


def suspension_corollary_check(base: SimplicialComplex, p: int, seed: int,
                               max_retries: int = DEFAULT_MAX_RETRIES,
                               suspended: SimplicialComplex | None = None) -> SuspensionReport:
    """Compare h^a(ΣΓ) with the closed form and with h^a(Γ) shifted.

    h^a_i(ΣΓ) = h^a_i(Γ) + h^a_{i-1}(Γ) - C(d-2, i-1) β̃_{i-2}(Γ), d = d(ΣΓ).
    """
    cx = suspended if suspended is not None else base.suspension()
    d = cx.d
    system = generate_lsop(cx, seed, p, max_retries)
    base_system = generate_lsop(base, seed, p, max_retries)
    computed = h_alg_vector(cx, system)
    base_h = h_alg_vector(base, base_system)
    base_betti = reduced_betti(base, p)

    def shifted(i: int) -> int:
        below = base_h[i - 1] if i >= 1 else 0
        here = base_h[i] if i < len(base_h) else 0
        return here + below - binomial(d - 2, i - 1) * base_betti[i - 2]

    up_to = d + 1
    kernels = {
        j: tuple(kernel_K0(cx, system, j, i).dim for i in range(up_to + 1))
        for j in range(1, d + 1)
    }
    return SuspensionReport(
        h_alg=computed,
        predicted=tuple(predict_suspension(cx, i, p) for i in range(d + 1)),
        corollary=tuple(shifted(i) for i in range(d + 1)),
        kernel_dims=kernels,
        kernel_expected=suspension_kernel_pattern(cx, p, up_to),
    )


@dataclass(frozen=True)
class DsReport:
    """h_{d-j} - h_j against the link Euler characteristic sum, j = 0..d."""

    lhs: tuple[int, ...]
    rhs: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def ds_relation_check(cx: SimplicialComplex) -> DsReport:
    """Raises ValueError for a non-pure complex."""
    cx.require_nonvoid()
    if not cx.is_pure():
        raise ValueError("The relation needs a pure complex")
    d = cx.d
    h = cx.h_vector()
    defects = [
        (len(face), reduced_euler_characteristic(cx.link(face)) - sign(d - 1 - len(face)))
        for face in cx.faces()
    ]
    lhs = tuple(h[d - j] - h[j] for j in range(d + 1))
    rhs = tuple(
        (-1) ** j * sum(binomial(d - size, j) * defect for size, defect in defects)
        for j in range(d + 1)
    )
    return DsReport(lhs, rhs)


@dataclass(frozen=True)
class SymmetryReport:
    lhs: int
    rhs: int
    h_sigma: tuple[int, int]

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def symmetry_check(cx: SimplicialComplex, system: LsopSystem, p: int) -> SymmetryReport:
    """h^s_1 - h^s_{d-1} against Σ_F C(d-|F|, d-1)(β_{d-1-|F|}(lk F) - β_0(lk F)) with unreduced β."""
    d = cx.d
    if d < 2:
        raise ValueError("The symmetry relation needs d >= 2")
    first, penultimate = h_sigma(cx, system, 1), h_sigma(cx, system, d - 1)
    total = 0
    for face in cx.faces():
        size = len(face)
        if size > 1:
            break
        betti = unreduced_betti(cx.link(face), p)
        total += binomial(d - size, d - 1) * (betti[d - 1 - size] - betti[0])
    return SymmetryReport(first - penultimate, (-1) ** (d - 1) * total, (first, penultimate))
