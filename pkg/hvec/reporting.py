"""
Rendering of verification and analysis reports as JSON, markdown or CSV,
plus the colored terminal summary.
"""

import csv
import io
from typing import List, TextIO

from colorama import Fore, Style

from .schemas import AnalysisReport, OutputFormat, ReportDocument, Verdict, VerificationReport

VERDICT_COLORS = {
    Verdict.PASS: Fore.GREEN,
    Verdict.FAIL: Fore.RED,
    Verdict.SKIP: Fore.YELLOW,
    Verdict.OBSERVED: Fore.CYAN,
}

RESULT_COLUMNS = ["theorem", "complex", "p", "seed", "verdict", "lhs", "rhs", "reason", "wall_time"]


def _vector(values: List[int]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _row(r: VerificationReport) -> list:
    return [r.theorem, r.complex_name, r.p, "" if r.seed is None else r.seed, r.verdict.value,
            _vector(r.lhs), _vector(r.rhs), r.hypothesis.reason, f"{r.wall_time:.3f}"]


def render_results(results: List[VerificationReport], fmt: OutputFormat) -> str:
    document = ReportDocument.from_results(results)
    if fmt == OutputFormat.JSON:
        return document.model_dump_json(indent=2)
    if fmt == OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(RESULT_COLUMNS)
        writer.writerows(_row(r) for r in results)
        return buffer.getvalue()
    lines = [
        "| " + " | ".join(RESULT_COLUMNS) + " |",
        "|" + "---|" * len(RESULT_COLUMNS),
    ]
    for r in results:
        lines.append("| " + " | ".join(str(c).replace("|", "\\|") for c in _row(r)) + " |")
    s = document.summary
    lines.append("")
    lines.append(f"**{s.total} results**: {s.passed} PASS, {s.failed} FAIL, "
                 f"{s.skipped} SKIP, {s.observed} OBSERVED")
    return "\n".join(lines) + "\n"


ANALYSIS_ROWS = [
    ("f", "f_vector"),
    ("h", "h_vector"),
    ("reduced Betti", "reduced_betti"),
    ("h^a", "h_alg"),
    ("h^s", "h_sigma"),
    ("h^tau (experimental)", "h_tau"),
]


def render_analysis(report: AnalysisReport, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.JSON:
        return report.model_dump_json(indent=2)
    flags = [("pure", report.pure), ("Cohen-Macaulay", report.cohen_macaulay), ("Buchsbaum", report.buchsbaum)]
    if fmt == OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["quantity", "value"])
        writer.writerow(["complex", report.complex_name])
        writer.writerow(["p", report.p])
        writer.writerow(["seed", report.seed])
        for label, key in ANALYSIS_ROWS:
            writer.writerow([label, _vector(getattr(report, key))])
        for label, value in flags:
            writer.writerow([label, value])
        return buffer.getvalue()
    lines = [
        f"### {report.complex_name} over GF({report.p}), seed {report.seed}",
        "",
        "| quantity | value |",
        "|---|---|",
    ]
    lines += [f"| {label} | {_vector(getattr(report, key))} |" for label, key in ANALYSIS_ROWS]
    lines += [f"| {label} | {'yes' if value else 'no'} |" for label, value in flags]
    if report.guard_flagged:
        lines += ["", "_h^a differed between seeds; the coordinatewise minimum is shown._"]
    return "\n".join(lines) + "\n"


def print_summary(results: List[VerificationReport], stream: TextIO) -> None:
    """One colored line per non-PASS result, then the totals."""
    document = ReportDocument.from_results(results)
    for r in results:
        if r.verdict == Verdict.PASS:
            continue
        color = VERDICT_COLORS[r.verdict]
        reason = f" ({r.hypothesis.reason})" if r.hypothesis.reason else ""
        print(f"{color}{r.verdict.value:<8}{Style.RESET_ALL} {r.theorem} on {r.complex_name} "
              f"over GF({r.p}){reason}", file=stream)
    s = document.summary
    print(f"{Fore.GREEN}{s.passed} PASS{Style.RESET_ALL}, {Fore.RED}{s.failed} FAIL{Style.RESET_ALL}, "
          f"{Fore.YELLOW}{s.skipped} SKIP{Style.RESET_ALL}, {Fore.CYAN}{s.observed} OBSERVED{Style.RESET_ALL} "
          f"in {s.wall_time:.2f}s", file=stream)
