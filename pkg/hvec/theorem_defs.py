from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .complexes import SimplicialComplex
from .errors import UnknownTheoremError
from .lsop import LsopSystem, generate_lsop
from .schemas import HvecSettings


class TheoremId(str, Enum):
    """Identities the harness can verify."""
    STANLEY = "stanley"
    SCHENZEL = "schenzel"
    MNY = "mny"
    TOP_ENTRY = "top-entry"
    HILBERT_DECOMPOSITION = "hilbert-decomposition"
    KERNEL_DIM = "kernel-dim"
    H_ALG_PENULTIMATE = "h-alg-penultimate"
    H_SIGMA_PENULTIMATE = "h-sigma-penultimate"
    SUSPENSION = "suspension"
    DS = "ds"
    SYMMETRY = "symmetry"
    TAU_SIGMA_PENULTIMATE = "tau-sigma-penultimate"
    TAU_CONJECTURE = "tau-conjecture"
    LINK_CONTRASTAR = "link-contrastar"

    @classmethod
    def parse(cls, value: str) -> "TheoremId":
        if value in THEOREM_ALIASES:
            return cls(THEOREM_ALIASES[value])
        try:
            return cls(value)
        except ValueError:
            known = ", ".join(t.value for t in cls)
            raise UnknownTheoremError(f"Unknown theorem '{value}'; known ids: {known}") from None


# Older ids still accepted on the command line and in suites.
THEOREM_ALIASES = {
    "thm-3.6": "h-alg-penultimate",
    "thm-3.7": "h-sigma-penultimate",
}

# Identities whose proofs need a generic Θ, not merely some l.s.o.p.
GENERIC_THEOREMS = frozenset({
    TheoremId.KERNEL_DIM,
    TheoremId.H_ALG_PENULTIMATE,
    TheoremId.H_SIGMA_PENULTIMATE,
    TheoremId.SUSPENSION,
    TheoremId.SYMMETRY,
    TheoremId.TAU_SIGMA_PENULTIMATE,
    TheoremId.TAU_CONJECTURE,
})

OBSERVATIONAL_THEOREMS = frozenset({TheoremId.TAU_CONJECTURE})


@dataclass
class TheoremContext:
    """Everything a handler needs for one (complex, p, seed) item."""
    name: str
    complex: SimplicialComplex
    p: int
    seed: int
    settings: HvecSettings = field(default_factory=HvecSettings)
    explore: bool = False
    suspension_base: Optional[SimplicialComplex] = None
    _system: Optional[LsopSystem] = field(default=None, init=False, repr=False)

    def system(self) -> LsopSystem:
        """The shared Θ for this item, drawn on first use."""
        if self._system is None:
            self._system = generate_lsop(self.complex, self.seed, self.p, self.settings.max_retries)
        return self._system

    @property
    def generic(self) -> bool:
        return self.p >= self.settings.generic_min_prime

    @property
    def drew_system(self) -> bool:
        return self._system is not None
