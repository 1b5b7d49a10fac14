"""Exact scalar arithmetic over Laurent polynomials in q."""

from src.scalars.laurent import (
    ONE,
    Q,
    ZERO,
    LaurentQ,
    Rational,
    laurent_div_one_minus_q,
    laurent_eval,
    parse_laurent,
    parse_q,
    parse_rational,
)

__all__ = [
    "LaurentQ",
    "Rational",
    "Q",
    "ONE",
    "ZERO",
    "laurent_eval",
    "laurent_div_one_minus_q",
    "parse_laurent",
    "parse_q",
    "parse_rational",
]
