"""
Tests for the hvec command line.
"""

import json

import pytest

from hvec import __version__
from hvec.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from hvec.complex_io import load_complex
from hvec.schemas import HypothesisState, HypothesisStatus, Verdict, VerificationReport

K4_FACETS = "a b\na c\na d\nb c\nb d\nc d\n"


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_version(capsys):
    assert main(["--version"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == f"hvec {__version__}"


def test_analyze_catalog_entry(capsys):
    assert main(["analyze", "--catalog", "torus_7"]) == EXIT_OK
    report = _json(capsys)
    assert report["f_vector"] == [1, 7, 21, 14]
    assert report["h_vector"] == [1, 4, 10, -1]
    assert report["reduced_betti"] == [0, 0, 2, 1]
    assert report["h_alg"] == [1, 4, 10, 1]
    assert report["h_sigma"] == [1, 4, 4, 1]
    assert report["buchsbaum"] is True
    assert report["cohen_macaulay"] is False
    assert report["guard_flagged"] is False


def test_analyze_file_and_emit(capsys, data_dir, tmp_path):
    out = tmp_path / "copy.facets"
    code = main(["analyze", str(data_dir / "complexes" / "bowtie.json"), "--format", "markdown",
                 "--emit-facets", str(out)])
    assert code == EXIT_OK
    text = capsys.readouterr().out
    assert "| h | (1, 2, -1, 0) |" in text
    assert load_complex(out) == load_complex(data_dir / "complexes" / "bowtie.json")


def test_analyze_empty_face(capsys, data_dir):
    assert main(["analyze", str(data_dir / "complexes" / "empty_face.facets"), "--format", "csv"]) == EXIT_OK
    assert "h^a,(1)" in capsys.readouterr().out


def test_analyze_degree_bound(capsys):
    assert main(["analyze", "--catalog", "boundary_simplex_2", "--degree-bound", "4", "--field", "5"]) == EXIT_OK
    report = _json(capsys)
    assert report["h_alg"] == [1, 1, 1, 0, 0]
    assert report["p"] == 5


@pytest.mark.parametrize("argv, message", [
    (["analyze", "x.facets", "--catalog", "point"], "Exactly one"),
    (["analyze", "--catalog", "point", "--field", "4"], "not prime"),
    (["analyze", "--catalog", "klein_bottle"], "Unknown catalog entry"),
    (["analyze", "missing.facets"], "file not found"),
    (["verify", "--theorem", "lefschetz", "--catalog", "point"], "Unknown theorem"),
    (["suite", "--config", "no_such_suite"], "not found"),
])
def test_usage_errors(capsys, argv, message):
    assert main(argv) == EXIT_USAGE
    assert message in capsys.readouterr().err


def test_argparse_errors(capsys):
    assert main(["verify", "--catalog", "point"]) == EXIT_USAGE
    assert main(["frobnicate"]) == EXIT_USAGE
    assert "usage: hvec" in capsys.readouterr().err


def test_void_input(capsys, tmp_path):
    path = tmp_path / "void.facets"
    path.write_text("# nothing here\n", encoding="utf-8")
    assert main(["analyze", str(path)]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_no_lsop_exit_code(capsys, tmp_path):
    path = tmp_path / "k4.facets"
    path.write_text(K4_FACETS, encoding="utf-8")
    assert main(["analyze", str(path), "--field", "2"]) == 3
    assert "GF(2)" in capsys.readouterr().err
    # inside a verification the same failure is a SKIP
    assert main(["verify", str(path), "--theorem", "stanley", "--field", "2"]) == EXIT_OK
    assert _json(capsys)["results"][0]["verdict"] == "SKIP"


def test_verify(capsys):
    assert main(["verify", "--catalog", "torus_7", "--theorem", "mny"]) == EXIT_OK
    document = _json(capsys)
    assert document["summary"]["passed"] == 1
    assert document["results"][0]["lhs"] == [1, 4, 4, 1]


def test_verify_older_theorem_id(capsys):
    assert main(["verify", "--theorem", "thm-3.7", "--catalog", "bowtie"]) == EXIT_OK
    [result] = _json(capsys)["results"]
    assert result["theorem"] == "h-sigma-penultimate"
    assert result["verdict"] == "PASS"
    assert result["lhs"] == result["rhs"] == [0]


def test_verify_explore(capsys):
    assert main(["verify", "--catalog", "torus_7", "--theorem", "stanley"]) == EXIT_OK
    assert _json(capsys)["results"][0]["verdict"] == "SKIP"
    assert main(["verify", "--catalog", "torus_7", "--theorem", "stanley", "--explore", "--format", "csv"]) == EXIT_OK
    assert ",OBSERVED," in capsys.readouterr().out


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(ctx):
        return VerificationReport(theorem="stanley", complex_name=ctx.name, p=ctx.p,
                                  hypothesis=HypothesisStatus(state=HypothesisState.PASS),
                                  lhs=[1], rhs=[2], verdict=Verdict.FAIL)

    monkeypatch.setattr("hvec.suite_runner.handle_stanley", broken)
    assert main(["verify", "--catalog", "point", "--theorem", "stanley"]) == EXIT_FAIL
    captured = capsys.readouterr()
    assert "FAIL" in captured.err
    assert json.loads(captured.out)["summary"]["failed"] == 1


def test_suite_to_file(capsys, tmp_path):
    config = tmp_path / "tiny.yaml"
    config.write_text(
        "name: tiny\n"
        "complexes:\n"
        "  - catalog: cycle_5\n"
        "  - file: data/complexes/bowtie.json\n"
        "primes: [3, 2147483647]\n"
        "theorems: [ds, top-entry]\n",
        encoding="utf-8",
    )
    out = tmp_path / "report.csv"
    assert main(["suite", "--config", str(config), "--format", "csv", "--output", str(out)]) == EXIT_OK
    rows = out.read_text(encoding="utf-8").splitlines()
    assert len(rows) == 1 + 2 * 2 * 2
    assert all(",PASS," in row for row in rows[1:])
    assert "8 PASS" in capsys.readouterr().err


def test_empty_suite(capsys):
    assert main(["suite", "--config", "empty"]) == EXIT_OK
    assert _json(capsys)["summary"]["total"] == 0


def test_catalog_commands(capsys):
    assert main(["catalog", "list"]) == EXIT_OK
    listing = capsys.readouterr().out.splitlines()
    assert len(listing) == 23
    assert listing[0].startswith("empty")
    assert any(line.startswith("rp2_6") and "cohen_macaulay" in line for line in listing)
    assert main(["catalog", "check"]) == EXIT_OK
    assert "All 23 catalog entries agree" in capsys.readouterr().out
