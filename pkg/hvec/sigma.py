"""
The Sigma submodule Σ(Θ; 𝕜[Δ]) and the saturation-based τ submodule.

Both are computed one graded piece at a time as subspaces of 𝕜[Δ]_i that
contain the ideal slice (Θ)_i.
"""

from dataclasses import dataclass
from typing import Sequence

from loguru import logger

from .complexes import SimplicialComplex
from .errors import NotAnLsopError, SaturationError
from .linalg import Subspace, preimage_of_subspace, sum_of_subspaces
from .lsop import LsopSystem, is_lsop, require_lsop
from .stanley_reisner import LinearForm, ideal_slice, monomial_basis, mult_matrix


@dataclass(frozen=True)
class SigmaSlice:
    degree: int
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim


@dataclass(frozen=True)
class TauSlice:
    degree: int
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim


def colon_kernel(cx: SimplicialComplex, system: LsopSystem, j: int, i: int) -> Subspace:
    """{m ∈ 𝕜[Δ]_i : θ_j m ∈ (Θ̂_j)_{i+1}}."""
    require_lsop(cx, system)
    theta = system.theta(j)
    if i < 0:
        return Subspace.zero(0, system.p)
    target = ideal_slice(cx, system.without(j), i + 1, system.p)
    return preimage_of_subspace(mult_matrix(cx, theta, i), target)


def sigma_slice(cx: SimplicialComplex, system: LsopSystem, i: int) -> SigmaSlice:
    """(Θ)_i plus the colon kernels of every θ_j."""
    require_lsop(cx, system)
    if i < 0:
        return SigmaSlice(i, Subspace.zero(0, system.p))
    parts = [ideal_slice(cx, system.forms, i, system.p)]
    parts.extend(colon_kernel(cx, system, j, i) for j in range(1, system.d + 1))
    return SigmaSlice(i, sum_of_subspaces(parts, len(monomial_basis(cx, i)), system.p))


def h_sigma(cx: SimplicialComplex, system: LsopSystem, i: int) -> int:
    """dim (𝕜[Δ]/Σ(Θ; 𝕜[Δ]))_i."""
    if i < 0:
        return 0
    return len(monomial_basis(cx, i)) - sigma_slice(cx, system, i).dim


def h_sigma_vector(cx: SimplicialComplex, system: LsopSystem, up_to: int | None = None) -> tuple[int, ...]:
    up_to = cx.d if up_to is None else up_to
    return tuple(h_sigma(cx, system, i) for i in range(up_to + 1))


# --- saturation -----------------------------------------------------------

class _SaturationChain:
    """K_N(k) = {m ∈ 𝕜[Δ]_k : θ^N m ∈ (S)_{k+N}}, memoized over (N, k)."""

    def __init__(self, cx: SimplicialComplex, forms: tuple[LinearForm, ...], theta: LinearForm, p: int):
        self.cx = cx
        self.forms = forms
        self.theta = theta
        self.p = p
        self._memo: dict[tuple[int, int], Subspace] = {}

    def level(self, power: int, k: int) -> Subspace:
        key = (power, k)
        if key not in self._memo:
            if power == 0:
                space = ideal_slice(self.cx, self.forms, k, self.p)
            else:
                space = preimage_of_subspace(mult_matrix(self.cx, self.theta, k), self.level(power - 1, k + 1))
            self._memo[key] = space
        return self._memo[key]


def _saturated_subspace(cx: SimplicialComplex, forms: Sequence[LinearForm], theta: LinearForm,
                        i: int, p: int) -> Subspace:
    """Stable member of the kernel chain in 𝕜[Δ]_i, lifted so it contains (S)_i.

    Raises:
        SaturationError: If the chain is still growing at the cap.
    """
    chain = _SaturationChain(cx, tuple(forms), theta, p)
    cap = max(2, cx.d + 2 - i)
    previous = chain.level(cap - 1, i)
    last = chain.level(cap, i)
    if previous != last:
        logger.error(f"saturation chain in degree {i} still grows at power {cap}")
        raise SaturationError(f"Kernel chain of θ^N in degree {i} did not stabilise by N = {cap}")
    return last


def saturation_kernel(cx: SimplicialComplex, forms: Sequence[LinearForm], theta: LinearForm, i: int) -> Subspace:
    """H⁰ of 𝕜[Δ]/(S) in degree i, as ∪_N Ker(·θ^N), in quotient coordinates.

    Raises:
        NotAnLsopError: If (S, θ) is not a system of parameters.
        SaturationError: If the kernel chain does not stabilise.
    """
    forms = tuple(forms)
    if not is_lsop(cx, forms + (theta,)):
        raise NotAnLsopError("The forms together with θ are not a system of parameters")
    p = theta.p
    if i < 0:
        return Subspace.zero(0, p)
    lifted = _saturated_subspace(cx, forms, theta, i, p)
    return ideal_slice(cx, forms, i, p).project(lifted)


def tau_slice(cx: SimplicialComplex, system: LsopSystem, i: int) -> TauSlice:
    """(Θ)_i plus the lifts of π_j(M⁰(Θ̂_j))_i over all j."""
    require_lsop(cx, system)
    p = system.p
    if i < 0:
        return TauSlice(i, Subspace.zero(0, p))
    parts = [ideal_slice(cx, system.forms, i, p)]
    for j in range(1, system.d + 1):
        parts.append(_saturated_subspace(cx, system.without(j), system.theta(j), i, p))
    return TauSlice(i, sum_of_subspaces(parts, len(monomial_basis(cx, i)), p))


def h_tau(cx: SimplicialComplex, system: LsopSystem, i: int) -> int:
    """dim (𝕜[Δ]/τ(Θ; 𝕜[Δ]))_i."""
    if i < 0:
        return 0
    return len(monomial_basis(cx, i)) - tau_slice(cx, system, i).dim


def h_tau_vector(cx: SimplicialComplex, system: LsopSystem, up_to: int | None = None) -> tuple[int, ...]:
    up_to = cx.d if up_to is None else up_to
    return tuple(h_tau(cx, system, i) for i in range(up_to + 1))
