"""Handlers for the identities that hold for every l.s.o.p. and for the purely topological ones."""

from ..cohomology import link_contrastar_check, reduced_betti
from ..grabe import ds_relation_check, predict_mny, predict_schenzel, predict_stanley
from ..lsop import h_alg, h_alg_vector, hilbert_decomposition_check
from ..schemas import VerificationReport
from ..sigma import h_sigma_vector
from ..theorem_defs import TheoremContext, TheoremId
from .utils import buchsbaum_reason, cohen_macaulay_reason, run_check


def handle_stanley(ctx: TheoremContext) -> VerificationReport:
    """h^a = h for Cohen-Macaulay complexes."""
    def compute():
        return h_alg_vector(ctx.complex, ctx.system()), predict_stanley(ctx.complex), {}

    return run_check(ctx, TheoremId.STANLEY, compute, hypotheses=[cohen_macaulay_reason(ctx)])


def handle_schenzel(ctx: TheoremContext) -> VerificationReport:
    """h^a_i = h_i + (-1)^i C(d, i) χ̃_{i-2} for Buchsbaum complexes."""
    cx, p = ctx.complex, ctx.p

    def compute():
        predicted = [predict_schenzel(cx, i, p) for i in range(cx.d + 1)]
        return h_alg_vector(cx, ctx.system()), predicted, {"h": list(cx.h_vector())}

    return run_check(ctx, TheoremId.SCHENZEL, compute, hypotheses=[buchsbaum_reason(ctx)])


def handle_mny(ctx: TheoremContext) -> VerificationReport:
    """h^s_i = h_i + (-1)^i C(d, i) χ̃_{i-1} below the top degree, β̃_{d-1} at the top."""
    cx, p = ctx.complex, ctx.p

    def compute():
        predicted = [predict_mny(cx, i, p) for i in range(cx.d + 1)]
        return h_sigma_vector(cx, ctx.system()), predicted, {"h": list(cx.h_vector())}

    return run_check(ctx, TheoremId.MNY, compute, hypotheses=[buchsbaum_reason(ctx)])


def handle_top_entry(ctx: TheoremContext) -> VerificationReport:
    """h^a_d = β̃_{d-1}."""
    cx = ctx.complex

    def compute():
        d = cx.d
        return [h_alg(cx, ctx.system(), d)], [reduced_betti(cx, ctx.p)[d - 1]], {}

    return run_check(ctx, TheoremId.TOP_ENTRY, compute)


def handle_hilbert_decomposition(ctx: TheoremContext) -> VerificationReport:
    def compute():
        up_to = ctx.complex.d + ctx.settings.degree_slack
        report = hilbert_decomposition_check(ctx.complex, ctx.system(), up_to)
        return report.lhs, report.rhs, {"corrections": [list(c) for c in report.corrections]}

    return run_check(ctx, TheoremId.HILBERT_DECOMPOSITION, compute)


def handle_link_contrastar(ctx: TheoremContext) -> VerificationReport:
    """dim H^m(Δ, cost F) = β̃_{m-|F|}(lk F) over every nonempty face, all degrees concatenated."""
    cx = ctx.complex

    def compute():
        lhs, rhs, mismatched = [], [], []
        for face in cx.nonempty_faces():
            report = link_contrastar_check(cx, face, ctx.p)
            lhs.extend(report.relative)
            rhs.extend(report.link)
            if not report.holds:
                mismatched.append(",".join(cx.labels_of(face)))
        return lhs, rhs, {"faces": len(cx.nonempty_faces()), "mismatched_faces": mismatched}

    return run_check(ctx, TheoremId.LINK_CONTRASTAR, compute)


def handle_ds(ctx: TheoremContext) -> VerificationReport:
    """h_{d-j} - h_j against the link Euler characteristic defects, pure complexes only."""
    cx = ctx.complex
    requirement = None if cx.is_pure() else "complex is not pure"

    def compute():
        report = ds_relation_check(cx)
        return report.lhs, report.rhs, {}

    return run_check(ctx, TheoremId.DS, compute, requirements=[requirement])
