"""Handlers for the penultimate entries of h^a and h^s."""

from ..grabe import predict_h_alg_penultimate, predict_h_sigma_penultimate
from ..lsop import h_alg
from ..schemas import VerificationReport
from ..sigma import h_sigma
from ..theorem_defs import TheoremContext, TheoremId
from .utils import positive_d_reason, run_check


def handle_h_alg_penultimate(ctx: TheoremContext) -> VerificationReport:
    cx, p = ctx.complex, ctx.p

    def compute():
        system = ctx.system()
        d = cx.d
        return [h_alg(cx, system, d - 1)], [predict_h_alg_penultimate(cx, system, p)], {"d": d}

    return run_check(ctx, TheoremId.H_ALG_PENULTIMATE, compute, requirements=[positive_d_reason(ctx)])


def handle_h_sigma_penultimate(ctx: TheoremContext) -> VerificationReport:
    cx, p = ctx.complex, ctx.p

    def compute():
        d = cx.d
        return [h_sigma(cx, ctx.system(), d - 1)], [predict_h_sigma_penultimate(cx, p)], {"d": d}

    return run_check(ctx, TheoremId.H_SIGMA_PENULTIMATE, compute, requirements=[positive_d_reason(ctx)])
