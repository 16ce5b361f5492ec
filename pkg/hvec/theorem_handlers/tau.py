"""Handlers for the saturation-based τ submodule."""

from ..grabe import predict_tau
from ..schemas import VerificationReport
from ..sigma import h_sigma, h_sigma_vector, h_tau, h_tau_vector, sigma_slice, tau_slice
from ..theorem_defs import TheoremContext, TheoremId
from .utils import positive_d_reason, run_check


def handle_tau_sigma_penultimate(ctx: TheoremContext) -> VerificationReport:
    """h^τ_{d-1} = h^s_{d-1}, and Σ ⊆ τ in every degree 0..d.

    Each side is h_{d-1} followed by one containment flag per degree.
    """
    cx = ctx.complex

    def compute():
        system = ctx.system()
        d = cx.d
        contained = [sigma_slice(cx, system, i).subspace <= tau_slice(cx, system, i).subspace
                     for i in range(d + 1)]
        lhs = [h_tau(cx, system, d - 1), *(int(c) for c in contained)]
        rhs = [h_sigma(cx, system, d - 1), *([1] * (d + 1))]
        return lhs, rhs, {"sigma_in_tau": contained}

    return run_check(ctx, TheoremId.TAU_SIGMA_PENULTIMATE, compute, requirements=[positive_d_reason(ctx)])


def handle_tau_conjecture(ctx: TheoremContext) -> VerificationReport:
    """h^τ against h_i + (-1)^i Σ_F C(d-|F|, i) χ̃_{i-1-|F|}(lk F); never asserted."""
    cx, p = ctx.complex, ctx.p

    def compute():
        system = ctx.system()
        predicted = [predict_tau(cx, i, p) for i in range(cx.d + 1)]
        return h_tau_vector(cx, system), predicted, {"h_sigma": list(h_sigma_vector(cx, system))}

    return run_check(ctx, TheoremId.TAU_CONJECTURE, compute)
