"""
Pairings of the projector class [G_n] with the counit and with the character trace.

The counit pairing is the rank 2^(n-1); the character pairing evaluates the trace
functional on Tr(G_n) = 2^(n-1) - (1 - q^2)^n t and gives the charge -1.
"""

import logging
from fractions import Fraction
from typing import Dict, Literal

from src.fockrep import char_trace
from src.ktheory.projectors import build_G, matrix_trace
from src.models.numerics import TailBound
from src.ncalg import Word, epsilon
from src.poisson import ClassicalPoly
from src.scalars import laurent_eval
from src.semiclassical import DequantizationMap

logger = logging.getLogger(__name__)

PairingPath = Literal["scalar", "matrix"]


def pair_epsilon(n: int) -> int:
    """
    Counit pairing eps(Tr G_n), the rank 2^(n-1).

    Raises:
        ArithmeticError: If the counit of the trace is not an integer
    """
    value = epsilon(matrix_trace(build_G(n)))
    if not value.is_constant() or value.constant_term().denominator != 1:
        raise ArithmeticError(f"Counit pairing is not an integer: {value}")
    return int(value.constant_term())


def pair_charge(n: int, q0: float, N: int, via: PairingPath = "scalar") -> TailBound:
    """
    Character pairing tr_sigma(Tr G_n) on the truncated Fock space.

    Args:
        n: Sphere dimension parameter
        q0: Deformation parameter in (0, 1)
        N: Levels per tensor factor
        via: "scalar" evaluates the trace functional on the matrix trace polynomial;
             "matrix" evaluates it on every diagonal entry of G_n and sums

    Returns:
        TailBound whose value approximates -1

    Example:
        >>> pair_charge(1, 0.5, 60).contains(-1.0)
        True
    """
    G = build_G(n)
    if via == "scalar":
        result = char_trace(matrix_trace(G), q0, N)
    elif via == "matrix":
        result = TailBound(value=0.0, bound=0.0)
        for j in range(G.size):
            result = result + char_trace(G.entry(j, j), q0, N)
    else:
        raise ValueError(f"Unknown pairing path '{via}'. Valid paths: scalar, matrix")
    logger.info(f"Charge pairing n={n}, q0={q0}, N={N} via {via}: {result.value:.12f} +- {result.bound:.2e}")
    return result


def pairing_cross_check(n: int, q0: float, N: int) -> float:
    """Difference between the scalar and matrix evaluations of the charge pairing."""
    scalar = pair_charge(n, q0, N, via="scalar")
    matrix = pair_charge(n, q0, N, via="matrix")
    return abs(scalar.value - matrix.value)


def trace_at_q_one(n: int) -> ClassicalPoly:
    """
    Tr G_n with every coefficient evaluated at q = 1, as a classical polynomial.

    The (1 - q^2)^n t term vanishes, leaving the classical rank 2^(n-1).
    """
    trace = matrix_trace(build_G(n))
    limits: Dict[Word, Fraction] = {}
    for word, coeff in trace.items():
        value = laurent_eval(coeff, Fraction(1))
        if value:
            limits[word] = value
    return DequantizationMap(trace.preset)(limits)
