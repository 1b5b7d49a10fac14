"""Command-line layer: expression parser, validated commands, suites and dispatch."""

from src.cli.commands import SUITE_NAMES, Command
from src.cli.parser import parse_expression
from src.cli.runner import (
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_SUCCESS,
    EXIT_VERIFICATION_FAILED,
    CommandResult,
    exit_code_for,
    run,
)
from src.cli.suites import SUITES, SuiteOptions, run_suite, run_suites

__all__ = [
    "Command",
    "CommandResult",
    "EXIT_INPUT_ERROR",
    "EXIT_INTERNAL_ERROR",
    "EXIT_SUCCESS",
    "EXIT_VERIFICATION_FAILED",
    "SUITES",
    "SUITE_NAMES",
    "SuiteOptions",
    "exit_code_for",
    "parse_expression",
    "run",
    "run_suite",
    "run_suites",
]
