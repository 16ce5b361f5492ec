"""
Suite execution: expands a suite configuration into (complex, p, seed)
items and dispatches every requested theorem to its handler.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Union

from loguru import logger

from .catalog import Catalog, default_catalog
from .complex_io import load_complex
from .complexes import SimplicialComplex
from .config_loader import PROJECT_ROOT
from .errors import GenericityError
from .random_complexes import from_spec, random_population, spec_name
from .schemas import HvecSettings, SuiteConfig, VerificationReport
from .theorem_defs import TheoremContext, TheoremId
from .theorem_handlers import (
    handle_ds,
    handle_h_alg_penultimate,
    handle_h_sigma_penultimate,
    handle_hilbert_decomposition,
    handle_kernel_dim,
    handle_link_contrastar,
    handle_mny,
    handle_schenzel,
    handle_stanley,
    handle_suspension,
    handle_symmetry,
    handle_tau_conjecture,
    handle_tau_sigma_penultimate,
    handle_top_entry,
)
from .theorem_handlers.utils import skip

Handler = Callable[[TheoremContext], VerificationReport]


@dataclass(frozen=True)
class SuiteItem:
    name: str
    complex: SimplicialComplex
    suspension_base: Optional[SimplicialComplex] = None


def _theorem_map() -> Dict[TheoremId, Handler]:
    return {
        TheoremId.STANLEY: handle_stanley,
        TheoremId.SCHENZEL: handle_schenzel,
        TheoremId.MNY: handle_mny,
        TheoremId.TOP_ENTRY: handle_top_entry,
        TheoremId.HILBERT_DECOMPOSITION: handle_hilbert_decomposition,
        TheoremId.KERNEL_DIM: handle_kernel_dim,
        TheoremId.H_ALG_PENULTIMATE: handle_h_alg_penultimate,
        TheoremId.H_SIGMA_PENULTIMATE: handle_h_sigma_penultimate,
        TheoremId.SUSPENSION: handle_suspension,
        TheoremId.DS: handle_ds,
        TheoremId.SYMMETRY: handle_symmetry,
        TheoremId.TAU_SIGMA_PENULTIMATE: handle_tau_sigma_penultimate,
        TheoremId.TAU_CONJECTURE: handle_tau_conjecture,
        TheoremId.LINK_CONTRASTAR: handle_link_contrastar,
    }


def _dispatch(theorem_map: Dict[TheoremId, Handler], theorem: TheoremId, ctx: TheoremContext) -> VerificationReport:
    start = time.perf_counter()
    try:
        report = theorem_map[theorem](ctx)
    except GenericityError as e:
        logger.warning(f"{theorem.value} on {ctx.name} over GF({ctx.p}): {e}")
        report = skip(ctx, theorem, str(e))
    elapsed = time.perf_counter() - start
    logger.info(f"{theorem.value} on {ctx.name} over GF({ctx.p}), seed {ctx.seed}: "
                f"{report.verdict.value} in {elapsed:.3f}s")
    return report.model_copy(update={"wall_time": round(elapsed, 6)})


def _run_group(settings: HvecSettings, item: SuiteItem, p: int, seed: int,
               theorems: Sequence[TheoremId], explore: bool) -> List[VerificationReport]:
    """All theorems of one (complex, p, seed) item, sharing a single Θ."""
    theorem_map = _theorem_map()
    ctx = TheoremContext(item.name, item.complex, p, seed, settings, explore, item.suspension_base)
    return [_dispatch(theorem_map, theorem, ctx) for theorem in theorems]


def _run_group_args(args) -> List[VerificationReport]:
    return _run_group(*args)


class SuiteRunner:
    """Runs single verifications and whole suites."""

    def __init__(self, settings: Optional[HvecSettings] = None, catalog: Optional[Catalog] = None):
        self.settings = settings or HvecSettings()
        self.catalog = catalog or default_catalog()
        self._setup_theorem_map()
        logger.debug(f"suite runner ready with {self.settings.threads} worker(s)")

    def _setup_theorem_map(self):
        """Initializes the mapping from TheoremId to handler functions."""
        self.theorem_map = _theorem_map()
        logger.debug(f"Theorem map: {[(t.value, f.__name__) for t, f in self.theorem_map.items()]}")

    # --- single items ---------------------------------------------------

    def catalog_item(self, name: str) -> SuiteItem:
        entry = self.catalog.get(name)
        base = self.catalog.get(entry.suspension_of).complex if entry.suspension_of else None
        return SuiteItem(entry.name, entry.complex, base)

    def verify(self, theorem: Union[str, TheoremId], item: SuiteItem, p: int, seed: int,
               explore: bool = False) -> VerificationReport:
        """Verify one theorem on one item.

        Raises:
            UnknownTheoremError: For an unknown theorem id.
        """
        theorem_id = theorem if isinstance(theorem, TheoremId) else TheoremId.parse(theorem)
        ctx = TheoremContext(item.name, item.complex, p, seed, self.settings, explore, item.suspension_base)
        return _dispatch(self.theorem_map, theorem_id, ctx)

    # --- suites -----------------------------------------------------------

    def expand_sources(self, suite: SuiteConfig) -> List[SuiteItem]:
        cap = self.settings.random_vertex_cap
        items: List[SuiteItem] = []
        for source in suite.complexes:
            if source.catalog is not None:
                items.append(self.catalog_item(source.catalog))
            elif source.file is not None:
                path = Path(source.file)
                if not path.is_absolute() and not path.exists():
                    path = PROJECT_ROOT / path
                items.append(SuiteItem(source.file, load_complex(path)))
            elif source.random is not None:
                items.append(SuiteItem(spec_name(source.random), from_spec(source.random, cap)))
            else:
                items.extend(SuiteItem(name, cx) for name, cx in random_population(source.random_population, cap))
        return items

    def theorems_for(self, suite: SuiteConfig) -> List[TheoremId]:
        if suite.theorems == "all":
            return list(TheoremId)
        return [TheoremId.parse(t) for t in suite.theorems]

    def run_suite(self, suite: SuiteConfig) -> List[VerificationReport]:
        """Run the full cross product; results come back in configuration order."""
        theorems = self.theorems_for(suite)
        items = self.expand_sources(suite)
        groups = [
            (self.settings, item, p, seed, theorems, suite.explore)
            for item in items for p in suite.primes for seed in suite.seeds
        ]
        logger.info(f"Suite '{suite.name}': {len(items)} complexes, {len(groups)} items, "
                    f"{len(groups) * len(theorems)} verifications")
        if self.settings.threads > 1 and len(groups) > 1:
            with ProcessPoolExecutor(max_workers=self.settings.threads) as pool:
                batches = list(pool.map(_run_group_args, groups))
        else:
            batches = [_run_group_args(g) for g in groups]
        results = [report for batch in batches for report in batch]
        logger.info(f"Suite '{suite.name}' finished with {len(results)} reports")
        return results
