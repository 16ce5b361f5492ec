"""Handler for h^a of a suspension of a Buchsbaum complex."""

from ..cohomology import is_buchsbaum
from ..grabe import suspension_corollary_check
from ..schemas import VerificationReport
from ..theorem_defs import TheoremContext, TheoremId
from .utils import positive_d_reason, run_check


def handle_suspension(ctx: TheoremContext) -> VerificationReport:
    """Closed form, the shift relation to h^a(Γ) and the K0 pattern, checked together.

    lhs repeats the computed h^a once per prediction, then lists dim K0(j)_i
    for j = 1..d; rhs lists the closed form, the shift relation and the
    expected kernel dimensions in the same order.
    """
    base = ctx.suspension_base
    requirements = [
        None if base is not None else "complex is not recorded as a suspension",
        positive_d_reason(ctx, minimum=2),
    ]
    hypotheses = []
    if base is not None:
        hypotheses.append(None if is_buchsbaum(base, ctx.p) else f"suspension base is not Buchsbaum over GF({ctx.p})")

    def compute():
        ctx.system()
        report = suspension_corollary_check(base, ctx.p, ctx.seed, ctx.settings.max_retries, suspended=ctx.complex)
        kernels = [x for j in sorted(report.kernel_dims) for x in report.kernel_dims[j]]
        expected = [x for j in sorted(report.kernel_expected) for x in report.kernel_expected[j]]
        lhs = list(report.h_alg) + list(report.h_alg) + kernels
        rhs = list(report.predicted) + list(report.corollary) + expected
        details = {
            "h_alg": list(report.h_alg),
            "closed_form": list(report.predicted),
            "shift_relation": list(report.corollary),
        }
        return lhs, rhs, details

    return run_check(ctx, TheoremId.SUSPENSION, compute, hypotheses=hypotheses, requirements=requirements)
