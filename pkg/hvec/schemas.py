from enum import Enum
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, constr, field_validator, model_validator

from .linalg.field import DEFAULT_PRIME, check_prime


class HypothesisState(str, Enum):
    PASS = "PASS"
    SKIP = "SKIP"


class Verdict(str, Enum):
    """Outcome of a single verification."""
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"
    OBSERVED = "OBSERVED"  # exploratory, never gating


class OutputFormat(str, Enum):
    JSON = "json"
    MARKDOWN = "markdown"
    CSV = "csv"


def _prime(v: int) -> int:
    check_prime(v)
    return v


class HypothesisStatus(BaseModel):
    """Whether a theorem's hypotheses hold for the complex at hand"""
    state: HypothesisState = Field(..., description="PASS if all hypotheses hold")
    reason: str = Field("", description="Why the hypotheses failed, if they did")


class VerificationReport(BaseModel):
    """Both sides of one identity for one complex, field and seed"""
    theorem: constr(min_length=1) = Field(..., description="Theorem id")
    complex_name: constr(min_length=1) = Field(..., description="Catalog name, file path or random spec")
    p: int = Field(..., description="Field modulus")
    seed: Optional[int] = Field(None, description="Seed of the l.s.o.p. draw, if one was used")
    hypothesis: HypothesisStatus
    lhs: List[int] = Field(default_factory=list, description="Algebraic side")
    rhs: List[int] = Field(default_factory=list, description="Topological / closed-form side")
    verdict: Verdict
    wall_time: float = Field(0.0, ge=0.0, description="Seconds spent on this item")
    details: Dict[str, Any] = Field(default_factory=dict, description="Auxiliary values, deterministic")

    @field_validator('p')
    @classmethod
    def validate_p(cls, v: int) -> int:
        return _prime(v)

    @model_validator(mode='after')
    def validate_verdict(self) -> 'VerificationReport':
        """FAIL and PASS both need satisfied hypotheses; FAIL needs a mismatch"""
        if self.verdict in (Verdict.PASS, Verdict.FAIL) and self.hypothesis.state != HypothesisState.PASS:
            raise ValueError(f"Verdict {self.verdict.value} requires satisfied hypotheses")
        if self.verdict == Verdict.FAIL and self.lhs == self.rhs:
            raise ValueError("Verdict FAIL requires lhs != rhs")
        if self.verdict == Verdict.PASS and self.lhs != self.rhs:
            raise ValueError("Verdict PASS requires lhs == rhs")
        return self


class ReportSummary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    observed: int = 0
    wall_time: float = 0.0

    @classmethod
    def from_results(cls, results: List[VerificationReport]) -> 'ReportSummary':
        counts = {verdict: 0 for verdict in Verdict}
        for r in results:
            counts[r.verdict] += 1
        return cls(
            total=len(results),
            passed=counts[Verdict.PASS],
            failed=counts[Verdict.FAIL],
            skipped=counts[Verdict.SKIP],
            observed=counts[Verdict.OBSERVED],
            wall_time=round(sum(r.wall_time for r in results), 6),
        )


class ReportDocument(BaseModel):
    """Top-level JSON report: {"summary": ..., "results": [...]}"""
    summary: ReportSummary
    results: List[VerificationReport] = Field(default_factory=list)

    @classmethod
    def from_results(cls, results: List[VerificationReport]) -> 'ReportDocument':
        return cls(summary=ReportSummary.from_results(results), results=list(results))

    @property
    def has_failures(self) -> bool:
        return self.summary.failed > 0


class ComplexDocument(BaseModel):
    """JSON complex input: {"vertices": [...], "facets": [[...], ...]}"""
    vertices: List[Union[str, int]] = Field(default_factory=list)
    facets: List[List[Union[str, int]]] = Field(..., description="Facet vertex lists")

    @field_validator('vertices')
    @classmethod
    def validate_vertices(cls, v: List[Union[str, int]]) -> List[str]:
        labels = [str(x) for x in v]
        if len(set(labels)) != len(labels):
            raise ValueError("Duplicate entries in vertex list")
        return labels

    @field_validator('facets')
    @classmethod
    def validate_facets(cls, v: List[List[Union[str, int]]]) -> List[List[str]]:
        facets = []
        for position, facet in enumerate(v):
            labels = [str(x) for x in facet]
            if len(set(labels)) != len(labels):
                raise ValueError(f"Facet {position} repeats a vertex: {labels}")
            facets.append(labels)
        return facets

    @model_validator(mode='after')
    def validate_vertex_cover(self) -> 'ComplexDocument':
        if self.vertices:
            known = set(self.vertices)
            for facet in self.facets:
                missing = [x for x in facet if x not in known]
                if missing:
                    raise ValueError(f"Facet vertices {missing} are not in the vertex list")
        return self


class RandomComplexSpec(BaseModel):
    n: int = Field(..., ge=1, description="Number of vertices")
    dim: int = Field(..., ge=0, description="Facet dimension")
    density: Optional[float] = Field(None, gt=0.0, le=1.0, description="Facet inclusion probability")
    count: Optional[int] = Field(None, ge=1, description="Exact number of facets (pure sampler)")
    seed: int = 0
    pure: bool = False

    @model_validator(mode='after')
    def validate_sampler(self) -> 'RandomComplexSpec':
        if self.dim > self.n - 1:
            raise ValueError(f"dim {self.dim} exceeds n - 1 = {self.n - 1}")
        if self.pure and self.count is None:
            raise ValueError("Pure random complexes need 'count'")
        if not self.pure and self.density is None:
            raise ValueError("Random complexes need 'density' unless pure")
        return self


class RandomPopulationSpec(BaseModel):
    count: int = Field(..., ge=0)
    n_max: int = Field(9, ge=2)
    dim_max: int = Field(3, ge=1, description="Largest facet dimension drawn")
    pure: bool = True
    density: float = Field(0.5, gt=0.0, le=1.0)
    seed: int = 0


class ComplexSource(BaseModel):
    """One suite item source; exactly one field is set"""
    catalog: Optional[str] = None
    file: Optional[str] = None
    random: Optional[RandomComplexSpec] = None
    random_population: Optional[RandomPopulationSpec] = None

    @model_validator(mode='after')
    def validate_single_source(self) -> 'ComplexSource':
        given = [k for k in ('catalog', 'file', 'random', 'random_population') if getattr(self, k) is not None]
        if len(given) != 1:
            raise ValueError(f"Exactly one complex source is required, got {given or 'none'}")
        return self


class SuiteConfig(BaseModel):
    model_config = ConfigDict(extra='forbid')

    name: str = "suite"
    complexes: List[ComplexSource] = Field(default_factory=list)
    primes: List[int] = Field(default_factory=lambda: [DEFAULT_PRIME])
    seeds: List[int] = Field(default_factory=lambda: [1])
    theorems: Union[str, List[str]] = "all"
    explore: bool = False

    @field_validator('primes')
    @classmethod
    def validate_primes(cls, v: List[int]) -> List[int]:
        return [_prime(p) for p in v]

    @field_validator('theorems')
    @classmethod
    def validate_theorems(cls, v: Union[str, List[str]]) -> Union[str, List[str]]:
        if isinstance(v, str) and v != "all":
            return [v]
        return v


class HvecSettings(BaseModel):
    """Contents of hvec_config.yaml"""
    model_config = ConfigDict(extra='forbid')

    field: int = DEFAULT_PRIME
    seed: int = 1
    max_retries: int = Field(4096, ge=1)
    generic_min_prime: int = Field(1_000_003, ge=2)
    degree_slack: int = Field(1, ge=0)
    random_vertex_cap: int = Field(12, ge=1)
    guard_seeds: List[int] = Field(default_factory=lambda: [1, 2, 3])
    max_resamples: int = Field(4, ge=0)
    threads: int = Field(1, ge=1)

    @field_validator('field')
    @classmethod
    def validate_field(cls, v: int) -> int:
        return _prime(v)

    @field_validator('guard_seeds')
    @classmethod
    def validate_guard_seeds(cls, v: List[int]) -> List[int]:
        if len(v) < 2:
            raise ValueError("At least two guard seeds are required")
        return v


class CliConfig(BaseModel):
    """Parsed command line for one invocation"""
    command: constr(min_length=1)
    input_path: Optional[str] = None
    catalog: Optional[str] = None
    p: int = DEFAULT_PRIME
    seed: int = 1
    degree_bound: Optional[int] = Field(None, ge=0)
    output_format: OutputFormat = OutputFormat.JSON
    theorem: Optional[str] = None
    explore: bool = False

    @field_validator('p')
    @classmethod
    def validate_p(cls, v: int) -> int:
        return _prime(v)

    @model_validator(mode='after')
    def validate_input(self) -> 'CliConfig':
        if self.command in ('analyze', 'verify'):
            if (self.input_path is None) == (self.catalog is None):
                raise ValueError("Exactly one of an input path or --catalog is required")
        if self.command == 'verify' and not self.theorem:
            raise ValueError("verify needs --theorem")
        return self


class BuilderKind(str, Enum):
    BOUNDARY_SIMPLEX = "boundary_simplex"
    SIMPLEX = "simplex"
    CYCLE = "cycle"
    SUSPENSION = "suspension"
    CONE = "cone"
    JOIN = "join"


class CatalogBuilder(BaseModel):
    """Recipe for a catalog complex that is not listed facet by facet"""
    kind: BuilderKind
    size: Optional[int] = Field(None, ge=0, description="d for boundary_simplex, vertex count otherwise")
    of: List[str] = Field(default_factory=list, description="Catalog names the construction starts from")

    @field_validator('of', mode='before')
    @classmethod
    def validate_of(cls, v: Union[str, List[str]]) -> List[str]:
        return [v] if isinstance(v, str) else v

    @model_validator(mode='after')
    def validate_arguments(self) -> 'CatalogBuilder':
        needs_size = self.kind in (BuilderKind.BOUNDARY_SIMPLEX, BuilderKind.SIMPLEX, BuilderKind.CYCLE)
        if needs_size and self.size is None:
            raise ValueError(f"Builder '{self.kind.value}' needs 'size'")
        expected = {BuilderKind.SUSPENSION: 1, BuilderKind.CONE: 1, BuilderKind.JOIN: 2}.get(self.kind, 0)
        if len(self.of) != expected:
            raise ValueError(f"Builder '{self.kind.value}' takes {expected} catalog name(s), got {len(self.of)}")
        return self


class CatalogEntrySpec(BaseModel):
    """One entry of data/catalog.yaml"""
    name: constr(pattern=r'^[a-z0-9_]+$')
    description: str = ""
    facets: Optional[List[List[Union[str, int]]]] = None
    builder: Optional[CatalogBuilder] = None
    pure: bool = True
    cohen_macaulay: List[int] = Field(default_factory=list, description="Primes over which the entry is CM")
    buchsbaum: List[int] = Field(default_factory=list, description="Primes over which the entry is Buchsbaum")

    @model_validator(mode='after')
    def validate_source(self) -> 'CatalogEntrySpec':
        if (self.facets is None) == (self.builder is None):
            raise ValueError(f"Entry '{self.name}' needs exactly one of 'facets' or 'builder'")
        if not set(self.cohen_macaulay) <= set(self.buchsbaum):
            raise ValueError(f"Entry '{self.name}': Cohen-Macaulay primes must also be Buchsbaum primes")
        return self


class CatalogDocument(BaseModel):
    primes: List[int] = Field(..., min_length=1, description="Primes the stored flags refer to")
    entries: List[CatalogEntrySpec]

    @field_validator('primes')
    @classmethod
    def validate_primes(cls, v: List[int]) -> List[int]:
        return [_prime(p) for p in v]

    @model_validator(mode='after')
    def validate_names(self) -> 'CatalogDocument':
        seen = set()
        for entry in self.entries:
            if entry.name in seen:
                raise ValueError(f"Duplicate catalog entry '{entry.name}'")
            for ref in (entry.builder.of if entry.builder else []):
                if ref not in seen:
                    raise ValueError(f"Entry '{entry.name}' refers to '{ref}', which is not defined above it")
            seen.add(entry.name)
        return self


class AnalysisReport(BaseModel):
    """Everything `hvec analyze` prints for one complex"""
    complex_name: str
    p: int
    seed: int
    description: str = ""
    pure: bool
    cohen_macaulay: bool
    buchsbaum: bool
    f_vector: List[int]
    h_vector: List[int]
    reduced_betti: List[int] = Field(..., description="β̃_{-1}, ..., β̃_{d-1}")
    h_alg: List[int]
    h_sigma: List[int]
    h_tau: List[int] = Field(..., description="Experimental")
    guard_flagged: bool = False
