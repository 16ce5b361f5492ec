import pytest
from pydantic import ValidationError

from hvec.schemas import (
    CatalogBuilder,
    CatalogDocument,
    CatalogEntrySpec,
    CliConfig,
    HvecSettings,
    HypothesisState,
    HypothesisStatus,
    RandomComplexSpec,
    RandomPopulationSpec,
    ReportDocument,
    SuiteConfig,
    Verdict,
    VerificationReport,
)


def _report(verdict, lhs, rhs, state=HypothesisState.PASS, **extra):
    return VerificationReport(
        theorem="stanley",
        complex_name="point",
        p=3,
        seed=1,
        hypothesis=HypothesisStatus(state=state),
        lhs=lhs,
        rhs=rhs,
        verdict=verdict,
        **extra,
    )


def test_valid_reports():
    """Test that consistent verdicts pass validation"""
    assert _report(Verdict.PASS, [1, 2], [1, 2]).verdict == Verdict.PASS
    assert _report(Verdict.FAIL, [1, 2], [1, 3]).verdict == Verdict.FAIL
    assert _report(Verdict.SKIP, [], [], state=HypothesisState.SKIP).verdict == Verdict.SKIP
    observed = _report(Verdict.OBSERVED, [1], [2], state=HypothesisState.SKIP)
    assert observed.hypothesis.state == HypothesisState.SKIP


def test_fail_requires_satisfied_hypotheses():
    """Test that a FAIL cannot be recorded off-hypothesis"""
    with pytest.raises(ValidationError, match="requires satisfied hypotheses"):
        _report(Verdict.FAIL, [1], [2], state=HypothesisState.SKIP)


def test_verdict_must_match_sides():
    with pytest.raises(ValidationError, match="lhs != rhs"):
        _report(Verdict.FAIL, [1], [1])
    with pytest.raises(ValidationError, match="lhs == rhs"):
        _report(Verdict.PASS, [1], [2])


def test_report_rejects_composite_modulus():
    with pytest.raises(ValidationError, match="not prime"):
        VerificationReport(theorem="ds", complex_name="x", p=6,
                           hypothesis=HypothesisStatus(state=HypothesisState.PASS), verdict=Verdict.PASS)


def test_report_document_summary():
    results = [
        _report(Verdict.PASS, [1], [1], wall_time=0.5),
        _report(Verdict.FAIL, [1], [0], wall_time=0.25),
        _report(Verdict.SKIP, [], [], state=HypothesisState.SKIP),
    ]
    document = ReportDocument.from_results(results)
    assert document.summary.total == 3
    assert (document.summary.passed, document.summary.failed, document.summary.skipped) == (1, 1, 1)
    assert document.summary.wall_time == 0.75
    assert document.has_failures
    assert not ReportDocument.from_results([]).has_failures


def test_random_spec_validation():
    assert RandomComplexSpec(n=5, dim=2, density=0.5).pure is False
    with pytest.raises(ValidationError, match="exceeds"):
        RandomComplexSpec(n=3, dim=3, density=0.5)
    with pytest.raises(ValidationError, match="need 'count'"):
        RandomComplexSpec(n=5, dim=2, pure=True)
    with pytest.raises(ValidationError, match="need 'density'"):
        RandomComplexSpec(n=5, dim=2)
    with pytest.raises(ValidationError):
        RandomComplexSpec(n=5, dim=2, density=1.5)


def test_population_needs_positive_dimension():
    assert RandomPopulationSpec(count=3, dim_max=1).dim_max == 1
    with pytest.raises(ValidationError, match="greater than or equal to 1"):
        RandomPopulationSpec(count=3, dim_max=0)


def test_suite_config_defaults():
    suite = SuiteConfig()
    assert suite.primes == [2147483647]
    assert suite.theorems == "all"
    assert SuiteConfig(theorems="mny").theorems == ["mny"]
    with pytest.raises(ValidationError):
        SuiteConfig(colour="blue")


def test_settings_guard_seeds():
    with pytest.raises(ValidationError, match="two guard seeds"):
        HvecSettings(guard_seeds=[1])
    with pytest.raises(ValidationError):
        HvecSettings(threads=0)


def test_cli_config_input():
    """Test that analyze and verify need exactly one input"""
    assert CliConfig(command="analyze", catalog="point").p == 2147483647
    with pytest.raises(ValidationError, match="Exactly one"):
        CliConfig(command="analyze")
    with pytest.raises(ValidationError, match="Exactly one"):
        CliConfig(command="analyze", catalog="point", input_path="x.facets")
    with pytest.raises(ValidationError, match="--theorem"):
        CliConfig(command="verify", catalog="point")
    with pytest.raises(ValidationError, match="not prime"):
        CliConfig(command="analyze", catalog="point", p=1)


def test_catalog_builder_arguments():
    assert CatalogBuilder(kind="suspension", of="rp2_6").of == ["rp2_6"]
    with pytest.raises(ValidationError, match="needs 'size'"):
        CatalogBuilder(kind="cycle")
    with pytest.raises(ValidationError, match="takes 2"):
        CatalogBuilder(kind="join", of=["a"])


def test_catalog_entry_and_document():
    with pytest.raises(ValidationError, match="exactly one of"):
        CatalogEntrySpec(name="x")
    with pytest.raises(ValidationError, match="also be Buchsbaum"):
        CatalogEntrySpec(name="x", facets=[[1]], cohen_macaulay=[2])
    with pytest.raises(ValidationError):
        CatalogEntrySpec(name="Not Valid", facets=[[1]])

    point = {"name": "point", "facets": [[1]]}
    cone = {"name": "cone_point", "builder": {"kind": "cone", "of": "point"}}
    assert len(CatalogDocument(primes=[2], entries=[point, cone]).entries) == 2
    with pytest.raises(ValidationError, match="not defined above"):
        CatalogDocument(primes=[2], entries=[cone, point])
    with pytest.raises(ValidationError, match="Duplicate"):
        CatalogDocument(primes=[2], entries=[point, point])
