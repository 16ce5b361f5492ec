"""
Tests for report rendering.
"""

import csv
import io
import json

import pytest
from colorama import Fore

from hvec.reporting import RESULT_COLUMNS, print_summary, render_analysis, render_results
from hvec.schemas import (
    AnalysisReport,
    HypothesisState,
    HypothesisStatus,
    OutputFormat,
    Verdict,
    VerificationReport,
)


@pytest.fixture
def results():
    passed = HypothesisStatus(state=HypothesisState.PASS)
    skipped = HypothesisStatus(state=HypothesisState.SKIP, reason="not Buchsbaum over GF(2)")
    return [
        VerificationReport(theorem="stanley", complex_name="boundary_simplex_3", p=2, seed=1,
                           hypothesis=passed, lhs=[1, 1, 1, 1], rhs=[1, 1, 1, 1],
                           verdict=Verdict.PASS, wall_time=0.25),
        VerificationReport(theorem="schenzel", complex_name="a|b", p=2,
                           hypothesis=skipped, verdict=Verdict.SKIP),
        VerificationReport(theorem="tau-conjecture", complex_name="torus_7", p=2147483647, seed=3,
                           hypothesis=passed, lhs=[1, 4, 4, 1], rhs=[1, 4, 4, 0],
                           verdict=Verdict.OBSERVED, wall_time=1.5),
    ]


@pytest.fixture
def analysis():
    return AnalysisReport(
        complex_name="torus_7", p=2147483647, seed=1, pure=True, cohen_macaulay=False, buchsbaum=True,
        f_vector=[1, 7, 21, 14], h_vector=[1, 4, 10, -1], reduced_betti=[0, 0, 2, 1],
        h_alg=[1, 4, 10, 1], h_sigma=[1, 4, 4, 1], h_tau=[1, 4, 4, 1],
    )


def test_json_results(results):
    document = json.loads(render_results(results, OutputFormat.JSON))
    assert document["summary"]["total"] == 3
    assert document["summary"]["observed"] == 1
    assert document["summary"]["wall_time"] == 1.75
    assert [r["verdict"] for r in document["results"]] == ["PASS", "SKIP", "OBSERVED"]
    assert document["results"][1]["seed"] is None


def test_csv_results(results):
    rows = list(csv.reader(io.StringIO(render_results(results, OutputFormat.CSV))))
    assert rows[0] == RESULT_COLUMNS
    assert rows[1] == ["stanley", "boundary_simplex_3", "2", "1", "PASS",
                       "(1, 1, 1, 1)", "(1, 1, 1, 1)", "", "0.250"]
    assert rows[2][3] == ""
    assert rows[2][7] == "not Buchsbaum over GF(2)"
    assert len(rows) == 4


def test_markdown_results(results):
    text = render_results(results, OutputFormat.MARKDOWN)
    lines = text.splitlines()
    assert lines[0].startswith("| theorem | complex |")
    assert "a\\|b" in text
    assert lines[-1] == "**3 results**: 1 PASS, 0 FAIL, 1 SKIP, 1 OBSERVED"


def test_render_analysis(analysis):
    assert json.loads(render_analysis(analysis, OutputFormat.JSON))["h_sigma"] == [1, 4, 4, 1]
    markdown = render_analysis(analysis, OutputFormat.MARKDOWN)
    assert markdown.startswith("### torus_7 over GF(2147483647), seed 1")
    assert "| h^a | (1, 4, 10, 1) |" in markdown
    assert "| Cohen-Macaulay | no |" in markdown
    assert "coordinatewise minimum" not in markdown
    flagged = render_analysis(analysis.model_copy(update={"guard_flagged": True}), OutputFormat.MARKDOWN)
    assert "coordinatewise minimum" in flagged
    rows = list(csv.reader(io.StringIO(render_analysis(analysis, OutputFormat.CSV))))
    assert ["h", "(1, 4, 10, -1)"] in rows
    assert ["Buchsbaum", "True"] in rows


def test_print_summary(results):
    stream = io.StringIO()
    print_summary(results, stream)
    lines = stream.getvalue().splitlines()
    assert len(lines) == 3
    assert lines[0].startswith(Fore.YELLOW + "SKIP")
    assert "schenzel on a|b over GF(2) (not Buchsbaum over GF(2))" in lines[0]
    assert lines[1].startswith(Fore.CYAN + "OBSERVED")
    assert "1 PASS" in lines[2]
    assert lines[2].endswith("in 1.75s")
