"""
flift command line: build, spectrum, verify, sweep and table
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.basegraph.corpus import resolve_input
from src.config import Settings, load_settings
from src.errors import ConditionViolationError, EigenSolverError
from src.lift.builder import LiftBuilder
from src.lift.export import summary_line, to_edge_list, to_json_document
from src.models.base_graph import AdjacencyMode
from src.models.spectrum import complex_pair
from src.spectral.engine import SpectralEngine
from src.spectral.rendering import format_spectrum
from src.verify.checks import VerificationSuite
from src.verify.comparison import compare_multisets
from src.verify.oracles import direct_spectrum
from src.verify.sweep import RESTRICTIONS, random_sweep
from src.verify.table import render_rows, rows_from_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3
EXIT_NUMERICAL = 4


def dumps(document: Any) -> str:
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False)


def emit(text: str, output: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_build(args: argparse.Namespace, settings: Settings) -> int:
    base = resolve_input(args.input)
    lift = LiftBuilder(args.mode).build(base)
    if args.format == "json":
        document = to_json_document(lift)
        document["summary"] = summary_line(lift)
        emit(dumps(document), args.output)
    else:
        emit(summary_line(lift) + "\n" + to_edge_list(lift), args.output)
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace, settings: Settings) -> int:
    """
    polymat: per-r table and assembled spectrum; direct: oracle spectrum;
    both: the two plus their comparison
    """
    base = resolve_input(args.input)
    mode = AdjacencyMode(args.mode)
    report = None
    direct: Optional[List[complex]] = None
    document: Dict[str, Any] = {"input": args.input, "method": args.method, "mode": mode.value}
    lines: List[str] = []
    exit_code = EXIT_OK

    if args.method in ("polymat", "both"):
        report = SpectralEngine(settings).full_spectrum(base, mode)
        document["polymat"] = report.to_json_document()
        lines.append(render_rows(rows_from_report(report)))
        lines.append(f"polymat spectrum: {format_spectrum(report.spectrum)}")
        lines.append(f"complete: {'yes' if report.complete else 'INCOMPLETE'} ({len(report.spectrum)} of N={report.N})")
        if not report.complete:
            exit_code = EXIT_MISMATCH

    if args.method in ("direct", "both"):
        direct = direct_spectrum(LiftBuilder(mode).build(base))
        document["direct"] = [complex_pair(value) for value in direct]
        lines.append(f"direct spectrum: {format_spectrum(direct)}")

    if report is not None and direct is not None:
        comparison = compare_multisets(
            report.spectrum, direct, settings.compare_tol, left_label="polymat", right_label="direct",
        )
        document["comparison"] = comparison.to_json_document()
        lines.append(
            f"comparison: {comparison.verdict.value}, {len(comparison.pairs)} matched, "
            f"max gap {comparison.max_gap:.2e} (tol {settings.compare_tol:.0e})"
        )
        if not comparison.passed:
            exit_code = EXIT_MISMATCH

    emit(dumps(document) if args.format == "json" else "\n".join(lines), args.output)
    return exit_code


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    base = resolve_input(args.input)
    verification = VerificationSuite(settings).run(base, args.mode, label=args.input)
    if args.format == "json":
        emit(dumps(verification.to_json_document()), args.output)
    else:
        lines = [f"verify {verification.label} ({AdjacencyMode(args.mode).value} mode)"]
        for check in verification.checks:
            lines.append(f"  {'PASS' if check.passed else 'FAIL'}  {check.name}: {check.detail}")
        lines.append("result: " + ("pass" if verification.passed else "fail"))
        emit("\n".join(lines), args.output)
    return EXIT_OK if verification.passed else EXIT_MISMATCH


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    """Always exits 0; the report carries the pass counts"""
    report = random_sweep(
        seed=args.seed,
        trials=args.trials,
        max_m=args.max_m,
        max_n=args.max_n,
        restriction=args.restriction,
        settings=settings,
    )
    if args.format == "text":
        text = (
            f"sweep seed={report.seed} trials={report.trials} restriction={report.restriction}\n"
            f"multiplicity pass: {report.multiplicity_passes}/{report.trials}\n"
            f"simple pass: {report.simple_passes}/{report.trials}\n"
            f"modes agree: {report.mode_agreements}/{report.trials}"
        )
    else:
        text = dumps(report.to_json_document())
    emit(text, args.output)
    return EXIT_OK


def cmd_table(args: argparse.Namespace, settings: Settings) -> int:
    base = resolve_input(args.input)
    rows = rows_from_report(SpectralEngine(settings).full_spectrum(base))
    if args.format == "json":
        emit(dumps([{"label": label, "values": values} for label, values in rows]), args.output)
    else:
        emit(render_rows(rows), args.output)
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "table": cmd_table,
}


def add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["text", "json"], default="text", help="Output format (default: text)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--mode", choices=[m.value for m in AdjacencyMode], default=AdjacencyMode.MULTIPLICITY.value,
        help="Lift adjacency mode (default: multiplicity)",
    )
    common.add_argument("--tol", type=float, default=None, help="Multiset comparison tolerance (default: FLIFT_TOL or 1e-6)")
    common.add_argument("--output", default=None, help="Write output to this file instead of stdout")
    common.add_argument("--verbose", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="flift",
        description="Factored lifts of combined voltage graphs over Z_m and their spectra.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_build = subparsers.add_parser("build", parents=[common], help="Construct a lift and dump it")
    p_build.add_argument("input", help="Builtin name (f3c6, j42, c<m>) or .cvg file")
    add_format(p_build)

    p_spectrum = subparsers.add_parser("spectrum", parents=[common], help="Lift spectrum")
    p_spectrum.add_argument("input", help="Builtin name (f3c6, j42, c<m>) or .cvg file")
    add_format(p_spectrum)
    p_spectrum.add_argument(
        "--method", choices=["polymat", "direct", "both"], default="polymat",
        help="Polynomial-matrix pipeline, direct eigensolve, or both compared (default: polymat)",
    )

    p_verify = subparsers.add_parser("verify", parents=[common], help="Full verification suite")
    p_verify.add_argument("input", help="Builtin name (f3c6, j42, c<m>) or .cvg file")
    add_format(p_verify)

    p_sweep = subparsers.add_parser("sweep", parents=[common], help="Randomized cross-validation")
    p_sweep.add_argument("--seed", type=int, default=1, help="Sweep seed (default: 1)")
    p_sweep.add_argument("--trials", type=int, default=200, help="Number of random bases (default: 200)")
    p_sweep.add_argument("--max-m", type=int, default=12, help="Largest group order (default: 12)")
    p_sweep.add_argument("--max-n", type=int, default=5, help="Largest base vertex count (default: 5)")
    p_sweep.add_argument("--restriction", choices=list(RESTRICTIONS), default="none", help="Base family (default: none)")
    p_sweep.add_argument("--format", choices=["text", "json"], default="json", help="Output format (default: json)")

    p_table = subparsers.add_parser("table", parents=[common], help="Eigenvalues of every B(ζ^r)")
    p_table.add_argument("input", help="Builtin name (f3c6, j42, c<m>) or .cvg file")
    add_format(p_table)
    return parser


def configure_logging(verbose: bool, level: str) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else getattr(logging, level.upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_settings(compare_tol=args.tol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    configure_logging(args.verbose, settings.log_level)

    try:
        return COMMANDS[args.command](args, settings)
    except (EigenSolverError, ConditionViolationError) as exc:
        logger.error("numerical failure: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
