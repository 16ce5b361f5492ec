"""Helpers shared by the theorem handlers."""

from typing import Any, Callable, Iterable, Optional, Sequence

from loguru import logger

from ..cohomology import is_buchsbaum, is_cohen_macaulay
from ..schemas import HypothesisState, HypothesisStatus, Verdict, VerificationReport
from ..theorem_defs import GENERIC_THEOREMS, OBSERVATIONAL_THEOREMS, TheoremContext, TheoremId

Computation = Callable[[], tuple[Sequence[int], Sequence[int], dict[str, Any]]]


def _report(ctx: TheoremContext, theorem: TheoremId, status: HypothesisStatus, verdict: Verdict,
            lhs: Sequence[int] = (), rhs: Sequence[int] = (), details: Optional[dict] = None) -> VerificationReport:
    seed = ctx.seed if ctx.drew_system else None
    return VerificationReport(
        theorem=theorem.value,
        complex_name=ctx.name,
        p=ctx.p,
        seed=seed,
        hypothesis=status,
        lhs=[int(x) for x in lhs],
        rhs=[int(x) for x in rhs],
        verdict=verdict,
        details=details or {},
    )


def skip(ctx: TheoremContext, theorem: TheoremId, reason: str) -> VerificationReport:
    logger.debug(f"{theorem.value} on {ctx.name} over GF({ctx.p}): SKIP ({reason})")
    return _report(ctx, theorem, HypothesisStatus(state=HypothesisState.SKIP, reason=reason), Verdict.SKIP)


def generic_field_reason(ctx: TheoremContext, theorem: TheoremId) -> Optional[str]:
    if theorem in GENERIC_THEOREMS and not ctx.generic:
        return f"GF({ctx.p}) is below the genericity threshold {ctx.settings.generic_min_prime}"
    return None


def buchsbaum_reason(ctx: TheoremContext) -> Optional[str]:
    if not is_buchsbaum(ctx.complex, ctx.p):
        return f"not Buchsbaum over GF({ctx.p})"
    return None


def cohen_macaulay_reason(ctx: TheoremContext) -> Optional[str]:
    if not is_cohen_macaulay(ctx.complex, ctx.p):
        return f"not Cohen-Macaulay over GF({ctx.p})"
    return None


def positive_d_reason(ctx: TheoremContext, minimum: int = 1) -> Optional[str]:
    if ctx.complex.d < minimum:
        return f"needs d >= {minimum}, complex has d = {ctx.complex.d}"
    return None


def run_check(ctx: TheoremContext, theorem: TheoremId, compute: Computation,
              hypotheses: Iterable[Optional[str]] = (),
              requirements: Iterable[Optional[str]] = ()) -> VerificationReport:
    """Gate on hypotheses, then compare both sides.

    ``requirements`` are conditions without which the computation itself is
    impossible; ``hypotheses`` only gate the assertion, so in explore mode
    the sides are still computed and reported as OBSERVED.
    """
    for reason in requirements:
        if reason:
            return skip(ctx, theorem, reason)
    failed = [r for r in (generic_field_reason(ctx, theorem), *hypotheses) if r]
    if failed and not ctx.explore:
        return skip(ctx, theorem, "; ".join(failed))

    lhs, rhs, details = compute()
    lhs, rhs = list(lhs), list(rhs)
    if failed:
        status = HypothesisStatus(state=HypothesisState.SKIP, reason="; ".join(failed))
        verdict = Verdict.OBSERVED
    else:
        status = HypothesisStatus(state=HypothesisState.PASS)
        if theorem in OBSERVATIONAL_THEOREMS:
            verdict = Verdict.OBSERVED
        else:
            verdict = Verdict.PASS if lhs == rhs else Verdict.FAIL
    if verdict == Verdict.FAIL:
        logger.warning(f"{theorem.value} FAILED on {ctx.name} over GF({ctx.p}): lhs {lhs} != rhs {rhs}")
    return _report(ctx, theorem, status, verdict, lhs, rhs, details)
