"""
The built-in complex catalog.

Entries live in data/catalog.yaml, either as explicit facet lists or as
builder recipes (boundary of a simplex, cycle, suspension, cone, join)
that refer to entries defined earlier in the file.
"""

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Optional, Union

from loguru import logger
from pydantic import ValidationError

from .cohomology import is_buchsbaum, is_cohen_macaulay
from .complexes import SimplicialComplex, boundary_simplex, cycle, simplex
from .config_loader import PROJECT_ROOT, ConfigLoader
from .errors import ConfigError, UnknownCatalogEntryError
from .schemas import BuilderKind, CatalogBuilder, CatalogDocument, CatalogEntrySpec

CATALOG_YAML = PROJECT_ROOT / "data" / "catalog.yaml"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    complex: SimplicialComplex
    description: str = ""
    pure: bool = True
    cohen_macaulay: frozenset[int] = frozenset()
    buchsbaum: frozenset[int] = frozenset()
    checked_primes: tuple[int, ...] = ()
    suspension_of: Optional[str] = None
    cone_of: Optional[str] = None

    def flags(self, p: int) -> dict[str, Optional[bool]]:
        """Stored flags over GF(p); None where p is not one of the recorded primes."""
        if p not in self.checked_primes:
            return {"pure": self.pure, "cohen_macaulay": None, "buchsbaum": None}
        return {"pure": self.pure, "cohen_macaulay": p in self.cohen_macaulay, "buchsbaum": p in self.buchsbaum}


@dataclass(frozen=True)
class CatalogMismatch:
    name: str
    flag: str
    p: Optional[int]
    stored: bool
    computed: bool

    def __str__(self) -> str:
        over = f" over GF({self.p})" if self.p is not None else ""
        return f"{self.name}: stored {self.flag}={self.stored}{over}, recomputed {self.computed}"


def _build(builder: CatalogBuilder, built: dict[str, SimplicialComplex]) -> SimplicialComplex:
    if builder.kind == BuilderKind.BOUNDARY_SIMPLEX:
        return boundary_simplex(builder.size)
    if builder.kind == BuilderKind.SIMPLEX:
        return simplex(builder.size)
    if builder.kind == BuilderKind.CYCLE:
        return cycle(builder.size)
    sources = [built[name] for name in builder.of]
    if builder.kind == BuilderKind.SUSPENSION:
        return sources[0].suspension()
    if builder.kind == BuilderKind.CONE:
        return sources[0].cone()
    return sources[0].join(sources[1])


class Catalog:
    """Ordered collection of catalog entries."""

    def __init__(self, document: CatalogDocument):
        self.primes = tuple(document.primes)
        self._entries: dict[str, CatalogEntry] = {}
        built: dict[str, SimplicialComplex] = {}
        for spec in document.entries:
            cx = self._complex_for(spec, built)
            built[spec.name] = cx
            kind = spec.builder.kind if spec.builder else None
            self._entries[spec.name] = CatalogEntry(
                name=spec.name,
                complex=cx,
                description=spec.description,
                pure=spec.pure,
                cohen_macaulay=frozenset(spec.cohen_macaulay),
                buchsbaum=frozenset(spec.buchsbaum),
                checked_primes=self.primes,
                suspension_of=spec.builder.of[0] if kind == BuilderKind.SUSPENSION else None,
                cone_of=spec.builder.of[0] if kind == BuilderKind.CONE else None,
            )
        logger.debug(f"catalog holds {len(self._entries)} entries")

    @staticmethod
    def _complex_for(spec: CatalogEntrySpec, built: dict[str, SimplicialComplex]) -> SimplicialComplex:
        if spec.facets is not None:
            return SimplicialComplex.from_facets(spec.facets)
        return _build(spec.builder, built)

    @classmethod
    def load(cls, path: Union[str, Path] = CATALOG_YAML) -> "Catalog":
        """Load and validate a catalog file.

        Raises:
            ConfigError: If the file is missing or invalid.
        """
        loader = ConfigLoader()
        try:
            data = loader.load_file(path)
        except FileNotFoundError:
            raise ConfigError(f"Catalog file not found: {path}") from None
        try:
            document = CatalogDocument.model_validate(data)
        except ValidationError as e:
            logger.error(f"Invalid catalog {path}: {e}")
            raise ConfigError(f"Invalid catalog {path}: {e.errors()[0]['msg']}") from e
        return cls(document)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self._entries.values())

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def names(self) -> list[str]:
        return list(self._entries)

    def get(self, name: str) -> CatalogEntry:
        try:
            return self._entries[name]
        except KeyError:
            raise UnknownCatalogEntryError(
                f"Unknown catalog entry '{name}'; available: {', '.join(self._entries)}") from None

    def check(self, primes: Optional[tuple[int, ...]] = None) -> list[CatalogMismatch]:
        """Recompute purity, CM and Buchsbaum flags; return every disagreement."""
        primes = primes or self.primes
        mismatches = []
        for entry in self:
            cx = entry.complex
            if entry.pure != cx.is_pure():
                mismatches.append(CatalogMismatch(entry.name, "pure", None, entry.pure, cx.is_pure()))
            for p in primes:
                for flag, stored_set, predicate in (
                    ("cohen_macaulay", entry.cohen_macaulay, is_cohen_macaulay),
                    ("buchsbaum", entry.buchsbaum, is_buchsbaum),
                ):
                    stored, computed = p in stored_set, predicate(cx, p)
                    if stored != computed:
                        mismatches.append(CatalogMismatch(entry.name, flag, p, stored, computed))
        for m in mismatches:
            logger.warning(f"catalog flag mismatch: {m}")
        return mismatches


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    return Catalog.load()


def catalog() -> list[CatalogEntry]:
    return list(default_catalog())


def get_entry(name: str) -> CatalogEntry:
    return default_catalog().get(name)
