"""
Command line interface.

    hvec analyze (--catalog NAME | PATH) [--field P] [--seed S] [--degree-bound B] [--format F] [--emit-facets PATH]
    hvec verify --theorem ID (--catalog NAME | PATH) [--field P] [--seed S] [--explore] [--format F]
    hvec suite --config (default | PATH) [--format F] [--output PATH]
    hvec catalog (list | check)

Exit codes: 0 success, 1 a verification FAILed, 2 usage or input error,
3 no l.s.o.p. found or a saturation chain did not stabilise.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from colorama import Fore, Style
from colorama import init as colorama_init
from loguru import logger
from pydantic import ValidationError

from . import __version__
from .cohomology import is_buchsbaum, is_cohen_macaulay, reduced_betti
from .complex_io import load_complex, write_complex
from .config_loader import DEFAULT_SETTINGS_YAML, ConfigLoader
from .errors import HvecError
from .lsop import generate_lsop, genericity_guard, h_alg_vector
from .reporting import print_summary, render_analysis, render_results
from .schemas import AnalysisReport, CliConfig, HvecSettings, OutputFormat, ReportDocument
from .sigma import h_sigma_vector, h_tau_vector
from .suite_runner import SuiteItem, SuiteRunner

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_stderr_sink: Optional[int] = None


def configure_logging(verbose: bool) -> None:
    """Route loguru to stderr at DEBUG with --verbose, WARNING otherwise."""
    global _stderr_sink
    try:
        logger.remove(0)
    except ValueError:
        pass
    if _stderr_sink is not None:
        logger.remove(_stderr_sink)
    _stderr_sink = logger.add(sys.stderr, level="DEBUG" if verbose else "WARNING",
                              format="<level>{level: <8}</level> | {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hvec", description="Exact h-vectors of simplicial complexes over GF(p).")
    parser.add_argument("--version", action="version", version=f"hvec {__version__}")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    parser.add_argument("--settings", default=DEFAULT_SETTINGS_YAML, help="settings YAML (default: hvec_config.yaml)")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_input(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("path", nargs="?", help="facet list (.facets/.txt) or JSON complex")
        sub.add_argument("--catalog", help="name of a built-in complex")
        sub.add_argument("--field", type=int, help="prime modulus p")
        sub.add_argument("--seed", type=int, help="seed for the l.s.o.p. draw")
        sub.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value)

    analyze = commands.add_parser("analyze", help="f, h, Betti numbers, h^a, h^s and h^tau of one complex")
    add_input(analyze)
    analyze.add_argument("--degree-bound", type=int, help="compute the algebraic vectors up to this degree")
    analyze.add_argument("--emit-facets", help="also write the complex to this path")

    verify = commands.add_parser("verify", help="verify one identity on one complex")
    add_input(verify)
    verify.add_argument("--theorem", required=True, help="theorem id, e.g. h-sigma-penultimate")
    verify.add_argument("--explore", action="store_true", help="evaluate even when hypotheses fail")

    suite = commands.add_parser("suite", help="run a suite configuration")
    suite.add_argument("--config", default="default", help="'default', a suite name under data/suites, or a path")
    suite.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value)
    suite.add_argument("--output", help="write the report here instead of stdout")

    catalog = commands.add_parser("catalog", help="list or check the built-in catalog")
    catalog.add_argument("action", choices=["list", "check"])
    return parser


def _cli_config(args: argparse.Namespace, settings: HvecSettings) -> CliConfig:
    return CliConfig(
        command=args.command,
        input_path=args.path,
        catalog=args.catalog,
        p=args.field if args.field is not None else settings.field,
        seed=args.seed if args.seed is not None else settings.seed,
        degree_bound=getattr(args, "degree_bound", None),
        output_format=OutputFormat(args.format),
        theorem=getattr(args, "theorem", None),
        explore=getattr(args, "explore", False),
    )


def _load_item(config: CliConfig, runner: SuiteRunner) -> SuiteItem:
    if config.catalog is not None:
        return runner.catalog_item(config.catalog)
    return SuiteItem(config.input_path, load_complex(config.input_path))


def cmd_analyze(config: CliConfig, settings: HvecSettings, runner: SuiteRunner,
                emit_facets: Optional[str] = None) -> int:
    item = _load_item(config, runner)
    cx, p, seed = item.complex, config.p, config.seed
    cx.require_nonvoid()
    up_to = cx.d if config.degree_bound is None else config.degree_bound
    seeds = [seed] + [s for s in settings.guard_seeds if s != seed]
    guard = genericity_guard(cx, lambda system: h_alg_vector(cx, system, up_to), seeds, p,
                             settings.max_resamples, settings.max_retries)
    system = generate_lsop(cx, seed, p, settings.max_retries)
    report = AnalysisReport(
        complex_name=item.name,
        p=p,
        seed=seed,
        description=cx.describe(),
        pure=cx.is_pure(),
        cohen_macaulay=is_cohen_macaulay(cx, p),
        buchsbaum=is_buchsbaum(cx, p),
        f_vector=list(cx.f_vector()),
        h_vector=list(cx.h_vector()),
        reduced_betti=list(reduced_betti(cx, p).as_tuple()),
        h_alg=list(guard.values),
        h_sigma=list(h_sigma_vector(cx, system, up_to)),
        h_tau=list(h_tau_vector(cx, system, up_to)),
        guard_flagged=guard.flagged,
    )
    print(render_analysis(report, config.output_format), end="")
    if emit_facets:
        write_complex(cx, emit_facets)
    return EXIT_OK


def cmd_verify(config: CliConfig, runner: SuiteRunner) -> int:
    item = _load_item(config, runner)
    report = runner.verify(config.theorem, item, config.p, config.seed, explore=config.explore)
    print(render_results([report], config.output_format), end="")
    print_summary([report], sys.stderr)
    return EXIT_FAIL if ReportDocument.from_results([report]).has_failures else EXIT_OK


def cmd_suite(config_name: str, fmt: OutputFormat, output: Optional[str],
              loader: ConfigLoader, runner: SuiteRunner) -> int:
    suite = loader.load_suite(config_name)
    results = runner.run_suite(suite)
    text = render_results(results, fmt)
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"Report written to {output}")
    else:
        print(text, end="")
    print_summary(results, sys.stderr)
    return EXIT_FAIL if ReportDocument.from_results(results).has_failures else EXIT_OK


def cmd_catalog_list(runner: SuiteRunner, p: int) -> int:
    for entry in runner.catalog:
        cx = entry.complex
        flags = entry.flags(p)
        marks = [name for name in ("pure", "cohen_macaulay", "buchsbaum") if flags[name]]
        print(f"{entry.name:<32} dim {cx.dimension:>2}  {cx.n_vertices:>2} vertices  {' '.join(marks)}")
    return EXIT_OK


def cmd_catalog_check(runner: SuiteRunner) -> int:
    mismatches = runner.catalog.check()
    for m in mismatches:
        print(f"{Fore.RED}MISMATCH{Style.RESET_ALL} {m}")
    if mismatches:
        return EXIT_FAIL
    print(f"{Fore.GREEN}All {len(runner.catalog)} catalog entries agree with their stored flags "
          f"over GF(p) for p in {list(runner.catalog.primes)}{Style.RESET_ALL}")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    colorama_init()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    configure_logging(args.verbose)

    try:
        loader = ConfigLoader()
        settings = loader.load_settings(args.settings)
        runner = SuiteRunner(settings)
        if args.command == "suite":
            return cmd_suite(args.config, OutputFormat(args.format), args.output, loader, runner)
        if args.command == "catalog":
            if args.action == "list":
                return cmd_catalog_list(runner, settings.field)
            return cmd_catalog_check(runner)
        try:
            config = _cli_config(args, settings)
        except ValidationError as e:
            print(f"{Fore.RED}error:{Style.RESET_ALL} {e.errors()[0]['msg']}", file=sys.stderr)
            return EXIT_USAGE
        if config.command == "analyze":
            return cmd_analyze(config, settings, runner, args.emit_facets)
        return cmd_verify(config, runner)
    except HvecError as e:
        logger.debug(f"{type(e).__name__}: {e}")
        print(f"{Fore.RED}error:{Style.RESET_ALL} {e}", file=sys.stderr)
        return e.exit_code
    except Exception:
        logger.exception("Unexpected error")
        raise


if __name__ == "__main__":
    sys.exit(main())
