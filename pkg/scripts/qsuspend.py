#!/usr/bin/env python3
"""
qsuspend command-line interface.

Symbolic and numerical checks for the quantum even spheres and their classical
Poisson counterparts: normal forms, brackets, Fock representations, traces,
projectors, pairings and the verification suites.

Exit Codes:
    0: Success - Command completed and every verification case passed
    1: Input Error - Malformed expression, unknown preset or invalid option
    2: Verification Failed - At least one verification case failed
    3: Internal Error - Rewrite budget exceeded or an unexpected failure

Usage:
    python scripts/qsuspend.py COMMAND [OPTIONS]

Examples:
    # Normal form in the quantum even sphere
    python scripts/qsuspend.py normalize --n 2 --expr "a1 * t"

    # Character trace with its truncation bound
    python scripts/qsuspend.py trace --n 1 --q 1/2 --trunc 40 --expr "t"

    # Pairings of the projector G
    python scripts/qsuspend.py pair --n 2 --q 1/2 --trunc 60

    # Every verification suite, with CSV/JSON reports
    python scripts/qsuspend.py verify all --n 1 --output data/reports
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cli import (
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_SUCCESS,
    EXIT_VERIFICATION_FAILED,
    SUITE_NAMES,
    Command,
    CommandResult,
    exit_code_for,
    run,
)
from src.config import settings
from src.utils.exporters import ReportExporter

# Setup logging
logger = logging.getLogger(__name__)


# ============================================================================
# Argument Parsing
# ============================================================================

_COMMAND_HELP = {
    "normalize": "Normal form of an expression",
    "commutator": "Commutator [f, g] in normal form",
    "bracket": "Poisson bracket {f, g} of a classical structure",
    "rep": "Truncated Fock matrix of an element as JSON triplets",
    "trace": "Character trace with truncation bound",
    "projector": "Projector e_k over the odd plane, or G over the even sphere",
    "pair": "Epsilon and charge pairings of G",
    "verify": "Run a verification suite (or 'all')",
    "confluence": "Local confluence of a preset's rewrite rules",
    "jacobi": "Jacobi identity of a Poisson structure",
    "pfaffian": "Pfaffian of the chart structure matrix at a point",
    "classical": "Classical projector G at a point of the even sphere",
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", default="EvenSphere", help="Preset or Poisson structure (default: EvenSphere)")
    common.add_argument("--n", type=int, default=1, help="Dimension parameter (default: 1)")
    common.add_argument("--q", default=None, help=f"Deformation parameter p/r or float (default: {settings.default_q})")
    common.add_argument("--trunc", type=int, default=None, help=f"Fock levels per factor (default: {settings.default_trunc})")
    common.add_argument("--margin", type=int, default=None, help=f"Relation-check margin (default: {settings.default_margin})")
    common.add_argument("--seed", type=int, default=None, help=f"Random seed (default: {settings.random_seed})")
    common.add_argument("--format", choices=["json", "text"], default="json", help="Output format (default: json)")
    common.add_argument("--output", default=None, help="Directory for verify reports (CSV + JSON)")
    common.add_argument("--verbose", action="store_true", help="Enable verbose logging (default: False)")
    return common


def parse_arguments(args: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parse command-line arguments.

    Args:
        args: List of argument strings (None = use sys.argv)

    Returns:
        Parsed arguments namespace

    Example:
        >>> args = parse_arguments(["trace", "--expr", "t", "--n", "2"])
        >>> print(args.command, args.n)
        trace 2
    """
    parser = argparse.ArgumentParser(
        prog="qsuspend",
        description="Quantum even spheres: symbolic and numerical verification",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  qsuspend normalize --n 2 --expr "a1 * t"
  qsuspend bracket --preset ChartPlane --n 1 --expr z1 --expr2 "z1*"
  qsuspend pair --n 2 --q 1/2 --trunc 60
  qsuspend verify all --n 1
        """,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_options()

    for name, help_text in _COMMAND_HELP.items():
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        if name == "verify":
            sub.add_argument("suite", help=f"Suite name or 'all' ({', '.join(SUITE_NAMES)})")
        if name in ("normalize", "commutator", "bracket", "rep", "trace"):
            sub.add_argument("--expr", required=True, help="Expression")
        if name in ("commutator", "bracket"):
            sub.add_argument("--expr2", required=True, help="Second expression")
        if name == "normalize":
            sub.add_argument(
                "--strategy",
                choices=["leftmost", "rightmost"],
                default="leftmost",
                help="Redex selection (default: leftmost)",
            )
        if name == "projector":
            sub.add_argument("--k", type=int, default=None, help="Level k <= n over the odd plane")
        if name == "pair":
            sub.add_argument(
                "--via",
                choices=["scalar", "matrix"],
                default="scalar",
                help="Charge pairing from the scalar trace formula or the matrix entries",
            )
        if name in ("pfaffian", "classical"):
            sub.add_argument("--point", required=True, help="Point as JSON")

    return parser.parse_args(args)


def build_command(args: argparse.Namespace) -> Command:
    """
    Turn parsed arguments into a validated Command.

    Options left unset fall back to the Command defaults taken from settings.

    Raises:
        ValidationError: If an option is out of range or missing
    """
    fields = {
        key: value
        for key, value in vars(args).items()
        if key not in ("output", "verbose") and value is not None
    }
    return Command(**fields)


# ============================================================================
# Output
# ============================================================================


def emit(result: CommandResult, output_format: str) -> None:
    """Write JSON to stdout, or a human summary to stderr under --format text."""
    if output_format == "json":
        print(json.dumps(result.payload, indent=2, default=str))
        return
    if result.report is not None:
        report = result.report
        print(f"\nSuite {report.suite}: {len(report.cases)} cases", file=sys.stderr)
        for case in report.cases:
            mark = "✓" if case.passed else "❌"
            print(f"   {mark} {case.id}", file=sys.stderr)
        return
    for key, value in result.payload.items():
        print(f"{key}: {value}", file=sys.stderr)


# ============================================================================
# Main Function
# ============================================================================


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the qsuspend CLI.

    Args:
        argv: Command-line arguments (None = use sys.argv)

    Returns:
        Exit code:
        - 0: Success
        - 1: Input error
        - 2: Verification failed
        - 3: Internal error

    Example:
        >>> exit_code = main(["pair", "--n", "1"])
        >>> sys.exit(exit_code)
    """
    args = parse_arguments(argv)

    # Setup logging
    log_level = logging.DEBUG if args.verbose else logging.WARNING
    logging.basicConfig(level=log_level, format="%(levelname)s: %(message)s")

    try:
        cmd = build_command(args)
    except ValidationError as e:
        print(f"❌ Invalid options: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        result = run(cmd)
    except KeyboardInterrupt:
        print("\n\n⚠️  Interrupted by user", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    except Exception as e:
        code = exit_code_for(e)
        if code == EXIT_INTERNAL_ERROR:
            logger.exception(f"Unexpected error: {e}")
        print(f"❌ {type(e).__name__}: {e}", file=sys.stderr)
        return code

    emit(result, cmd.format)

    if args.output and result.report is not None:
        try:
            csv_path, json_path = ReportExporter(Path(args.output)).export_report(result.report)
            print(f"   ✓ Saved to: {csv_path} and {json_path}", file=sys.stderr)
        except (ValueError, IOError) as e:
            print(f"   ❌ Failed to save report: {e}", file=sys.stderr)
            return EXIT_INTERNAL_ERROR

    if result.exit_code == EXIT_VERIFICATION_FAILED and result.report is not None:
        print(f"❌ {len(result.report.failures)} case(s) failed", file=sys.stderr)
    elif result.exit_code == EXIT_SUCCESS and cmd.format == "text":
        print("✅ Done", file=sys.stderr)
    return result.exit_code


def run_cli() -> None:
    """Console-script entry point."""
    sys.exit(main())


# ============================================================================
# Entry Point
# ============================================================================

if __name__ == "__main__":
    run_cli()
