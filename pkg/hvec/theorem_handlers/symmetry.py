"""Handler for the h^s_1 - h^s_{d-1} relation."""

from ..grabe import symmetry_check
from ..schemas import VerificationReport
from ..theorem_defs import TheoremContext, TheoremId
from .utils import positive_d_reason, run_check


def _link_reasons(ctx: TheoremContext) -> list[str]:
    cx = ctx.complex
    reasons = []
    if not cx.is_pure():
        reasons.append("complex is not pure")
    if not cx.is_connected():
        reasons.append("complex is not connected")
    disconnected = [cx.labels[v] for v in range(cx.n_vertices) if not cx.link((v,)).is_connected()]
    if disconnected:
        reasons.append(f"links of {', '.join(disconnected)} are not connected")
    return reasons


def handle_symmetry(ctx: TheoremContext) -> VerificationReport:
    requirement = positive_d_reason(ctx, minimum=2)
    hypotheses = [] if requirement else _link_reasons(ctx)

    def compute():
        report = symmetry_check(ctx.complex, ctx.system(), ctx.p)
        return [report.lhs], [report.rhs], {"h_sigma_1": report.h_sigma[0], "h_sigma_d_minus_1": report.h_sigma[1]}

    return run_check(ctx, TheoremId.SYMMETRY, compute, hypotheses=hypotheses, requirements=[requirement])
