"""Handler comparing the kernels K0(j) with their local cohomology expressions."""

from ..cohomology import contrastar_betti, reduced_betti
from ..grabe import l_dim
from ..lsop import kernel_K0
from ..schemas import VerificationReport
from ..theorem_defs import TheoremContext, TheoremId
from .utils import run_check


def handle_kernel_dim(ctx: TheoremContext) -> VerificationReport:
    """Two identities per j = 1..d, asserted together.

    dim K0(j)_{j-2} = (j-1)β̃_{j-3} + dim(L^{j-1}_j)_{-1} + dim(L^{j-2}_{j-1})_{-1} - Σ_v β_{j-3}(Δ, cost v)
    dim K0(j)_{j-1} = β̃_{j-2}

    Each side lists the j-2 entries for every j, then the j-1 entries.
    """
    cx, p = ctx.complex, ctx.p

    def compute():
        system = ctx.system()
        betti = reduced_betti(cx, p)
        lower, formula, upper, upper_betti = [], [], [], []
        for j in range(1, cx.d + 1):
            lower.append(kernel_K0(cx, system, j, j - 2).dim)
            vertex_sum = sum(contrastar_betti(cx, (v,), p)[j - 3] for v in range(cx.n_vertices))
            formula.append((j - 1) * betti[j - 3]
                           + l_dim(cx, system, j - 1, j)
                           + l_dim(cx, system, j - 2, j - 1)
                           - vertex_sum)
            upper.append(kernel_K0(cx, system, j, j - 1).dim)
            upper_betti.append(betti[j - 2])
        details = {"kernel_in_degree_j_minus_1": upper, "betti_j_minus_2": upper_betti}
        return lower + upper, formula + upper_betti, details

    return run_check(ctx, TheoremId.KERNEL_DIM, compute)
