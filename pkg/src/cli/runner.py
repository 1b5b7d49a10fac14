"""
Command dispatch.

run(cmd) executes a validated Command and returns a CommandResult holding the
exit status, a JSON-ready payload, and the verification report for commands
that produce one. Errors propagate as exceptions; exit_code_for maps them to the
documented exit statuses.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional

from pydantic import ValidationError

from src.cli.commands import Command
from src.cli.parser import parse_expression
from src.cli.suites import SuiteOptions, run_suites
from src.exceptions import ExpressionSyntaxError, PresetMismatchError, QSuspendError
from src.fockrep import char_trace, represent
from src.ktheory import build_e, build_G, classical_G, matrix_trace, pair_charge, pair_epsilon
from src.models.report import VerificationReport
from src.ncalg import check_local_confluence, commutator, normalize
from src.poisson import bracket, check_jacobi, pfaffian_recursive, structure_matrix

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_INPUT_ERROR = 1
EXIT_VERIFICATION_FAILED = 2
EXIT_INTERNAL_ERROR = 3


@dataclass
class CommandResult:
    """Outcome of one command."""

    exit_code: int
    payload: dict
    report: Optional[VerificationReport] = None


def exit_code_for(error: BaseException) -> int:
    """
    Map an exception to an exit status.

    Parse, preset and option errors are input errors (1); QSuspendError subclasses
    not caused by input, and anything unexpected, are internal errors (3).
    """
    if isinstance(error, (ExpressionSyntaxError, PresetMismatchError, ValidationError)):
        return EXIT_INPUT_ERROR
    if isinstance(error, QSuspendError):
        return EXIT_INTERNAL_ERROR if isinstance(error, RuntimeError) else EXIT_INPUT_ERROR
    if isinstance(error, ValueError):
        return EXIT_INPUT_ERROR
    return EXIT_INTERNAL_ERROR


def _terms_payload(poly) -> list:
    if hasattr(poly, "preset"):
        return [
            {"word": poly.preset.word_text(word), "coefficient": str(coeff)}
            for word, coeff in poly.items()
        ]
    return []


# ============================================================================
# Command handlers
# ============================================================================


def _normalize(cmd: Command) -> CommandResult:
    A = cmd.algebra()
    poly = normalize(parse_expression(cmd.expr, A), A, strategy=cmd.strategy)
    return CommandResult(
        EXIT_SUCCESS,
        {"preset": A.label, "input": cmd.expr, "normal_form": str(poly), "terms": _terms_payload(poly)},
    )


def _commutator(cmd: Command) -> CommandResult:
    A = cmd.algebra()
    result = commutator(parse_expression(cmd.expr, A), parse_expression(cmd.expr2, A), A)
    return CommandResult(EXIT_SUCCESS, {"preset": A.label, "commutator": str(result)})


def _bracket(cmd: Command) -> CommandResult:
    P = cmd.structure()
    result = bracket(parse_expression(cmd.expr, P), parse_expression(cmd.expr2, P), P)
    return CommandResult(EXIT_SUCCESS, {"structure": P.label, "bracket": str(P.reduce(result))})


def _rep(cmd: Command) -> CommandResult:
    A = cmd.algebra()
    op = represent(parse_expression(cmd.expr, A), A, cmd.q_float, cmd.trunc)
    return CommandResult(
        EXIT_SUCCESS,
        {
            "preset": A.label,
            "q": cmd.q,
            "trunc": cmd.trunc,
            "dim": op.space.dim,
            "nnz": op.nnz,
            "entries": op.triplets(),
        },
    )


def _trace(cmd: Command) -> CommandResult:
    A = cmd.algebra()
    result = char_trace(parse_expression(cmd.expr, A), cmd.q_float, cmd.trunc, cmd.n)
    return CommandResult(EXIT_SUCCESS, {"preset": A.label, "q": cmd.q, "trunc": cmd.trunc, **result.to_dict()})


def _projector(cmd: Command) -> CommandResult:
    M = build_G(cmd.n) if cmd.k is None else build_e(cmd.n, cmd.k)
    return CommandResult(
        EXIT_SUCCESS,
        {
            "preset": M.preset.label,
            "n": cmd.n,
            "k": cmd.k,
            "size": M.size,
            "entries": M.to_text(),
            "trace": str(matrix_trace(M)),
        },
    )


def _pair(cmd: Command) -> CommandResult:
    charge = pair_charge(cmd.n, cmd.q_float, cmd.trunc, via=cmd.via)
    return CommandResult(
        EXIT_SUCCESS,
        {
            "n": cmd.n,
            "q": cmd.q,
            "trunc": cmd.trunc,
            "epsilon_pairing": pair_epsilon(cmd.n),
            "charge_pairing": charge.value,
            "tail_bound": charge.bound,
            "roundoff": charge.roundoff,
        },
    )


def _verify(cmd: Command) -> CommandResult:
    options = SuiteOptions(
        n=cmd.n, q0=cmd.q_float, trunc=cmd.trunc, margin=cmd.margin, seed=cmd.seed
    )
    report = run_suites([cmd.suite], options)
    code = EXIT_SUCCESS if report.passed else EXIT_VERIFICATION_FAILED
    return CommandResult(code, report.to_dict(), report)


def _confluence(cmd: Command) -> CommandResult:
    report = check_local_confluence(cmd.algebra())
    code = EXIT_SUCCESS if report.is_confluent else EXIT_VERIFICATION_FAILED
    return CommandResult(code, {**report.model_dump(), "confluent": report.is_confluent})


def _jacobi(cmd: Command) -> CommandResult:
    P = cmd.structure()
    table = check_jacobi(P)
    code = EXIT_SUCCESS if table.all_zero else EXIT_VERIFICATION_FAILED
    return CommandResult(
        code,
        {
            "structure": P.label,
            "triples": len(table.entries),
            "max_residual_terms": table.max_terms,
            "residuals": [entry.to_dict() for entry in table.nonzero()],
        },
    )


def _pfaffian(cmd: Command) -> CommandResult:
    point = cmd.point_values()
    matrix = structure_matrix(cmd.n, point)
    pf = pfaffian_recursive(cmd.n, point)
    det = matrix.determinant()
    return CommandResult(
        EXIT_SUCCESS,
        {
            "n": cmd.n,
            "pfaffian": pf,
            "determinant": [det.real, det.imag],
            "relative_error": abs(det - pf**2) / abs(det),
        },
    )


def _classical(cmd: Command) -> CommandResult:
    point = cmd.point_values()
    if not isinstance(point, dict) or "t" not in point or "a" not in point:
        raise ValueError('--point must be {"t": float, "a": [[re, im], ...]}')
    a = [complex(*entry) if isinstance(entry, list) else complex(entry) for entry in point["a"]]
    projector = classical_G(cmd.n, float(point["t"]), a)
    return CommandResult(
        EXIT_SUCCESS,
        {
            "n": cmd.n,
            "matrix": [[[z.real, z.imag] for z in row] for row in projector.matrix.tolist()],
            "idempotency_defect": projector.idempotency_defect,
            "trace": projector.trace,
            "rank": projector.rank,
        },
    )


HANDLERS: Dict[str, Callable[[Command], CommandResult]] = {
    "normalize": _normalize,
    "commutator": _commutator,
    "bracket": _bracket,
    "rep": _rep,
    "trace": _trace,
    "projector": _projector,
    "pair": _pair,
    "verify": _verify,
    "confluence": _confluence,
    "jacobi": _jacobi,
    "pfaffian": _pfaffian,
    "classical": _classical,
}


def run(cmd: Command) -> CommandResult:
    """
    Dispatch a validated command to the module that owns it.

    Args:
        cmd: Validated command

    Returns:
        CommandResult with exit status 0 (success) or 2 (verification failure)

    Raises:
        QSuspendError, ValueError: On bad input or internal failures; see exit_code_for

    Example:
        >>> run(Command(command="pair", n=1, q="1/2", trunc=60)).payload["epsilon_pairing"]
        1
    """
    logger.debug(f"Running {cmd.command} with {cmd.model_dump(exclude_none=True)}")
    result = HANDLERS[cmd.command](cmd)
    logger.info(f"{cmd.command} finished with exit code {result.exit_code}")
    return result
