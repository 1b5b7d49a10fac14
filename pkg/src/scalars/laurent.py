"""
Exact Laurent polynomials in the deformation parameter q.

This module provides LaurentQ, the scalar ring of every symbolic computation in
qsuspend: finite sums of rational multiples of q^k with k any integer. Arithmetic
is exact (fractions.Fraction coefficients) and values are immutable.

Usage:
    from src.scalars import Q, LaurentQ, laurent_div_one_minus_q

    p = 1 - Q**2
    r = laurent_div_one_minus_q(p)     # 1 + q
    p.evaluate(Fraction(1, 2))         # Fraction(3, 4)
"""

import logging
import re
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from src.exceptions import NotDivisibleError, ScalarDomainError

logger = logging.getLogger(__name__)

Rational = Fraction
ScalarLike = Union[int, Fraction, "LaurentQ"]
NumberLike = Union[int, Fraction, float]


def _as_fraction(value: Union[int, Fraction]) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational coefficient, got {type(value).__name__}")


class LaurentQ:
    """
    Immutable Laurent polynomial sum_k c_k q^k with rational coefficients.

    Zero coefficients are never stored, so two LaurentQ are equal exactly when
    their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, Union[int, Fraction]]] = None):
        cleaned: Dict[int, Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                c = _as_fraction(coeff)
                if c != 0:
                    cleaned[int(exp)] = c
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, terms: Dict[int, Fraction]) -> "LaurentQ":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # ---- constructors ----

    @classmethod
    def constant(cls, value: Union[int, Fraction]) -> "LaurentQ":
        """Return the constant polynomial `value`."""
        return cls({0: value})

    @classmethod
    def q_power(cls, exponent: int, coeff: Union[int, Fraction] = 1) -> "LaurentQ":
        """Return coeff * q^exponent."""
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, value: ScalarLike) -> "LaurentQ":
        """Convert ints, Fractions and LaurentQ into LaurentQ."""
        if isinstance(value, LaurentQ):
            return value
        return cls.constant(value)

    # ---- inspection ----

    @property
    def terms(self) -> Dict[int, Fraction]:
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Iterate (exponent, coefficient) pairs in increasing exponent order."""
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(exp == 0 for exp in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    @property
    def degree(self) -> Optional[int]:
        """Highest exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    @property
    def valuation(self) -> Optional[int]:
        """Lowest exponent, or None for the zero polynomial."""
        return min(self._terms) if self._terms else None

    # ---- arithmetic ----

    def __add__(self, other: ScalarLike) -> "LaurentQ":
        if not isinstance(other, (LaurentQ, int, Fraction)):
            return NotImplemented
        other = LaurentQ.coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        result = dict(self._terms)
        for exp, coeff in other._terms.items():
            total = result.get(exp, 0) + coeff
            if total:
                result[exp] = total
            else:
                result.pop(exp, None)
        return LaurentQ._trusted(result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQ":
        return LaurentQ._trusted({exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other: ScalarLike) -> "LaurentQ":
        if not isinstance(other, (LaurentQ, int, Fraction)):
            return NotImplemented
        return self + (-LaurentQ.coerce(other))

    def __rsub__(self, other: ScalarLike) -> "LaurentQ":
        if not isinstance(other, (LaurentQ, int, Fraction)):
            return NotImplemented
        return LaurentQ.coerce(other) + (-self)

    def __mul__(self, other: ScalarLike) -> "LaurentQ":
        if not isinstance(other, (LaurentQ, int, Fraction)):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentQ()
            return LaurentQ._trusted({exp: c * other for exp, c in self._terms.items()})
        if not self._terms or not other._terms:
            return LaurentQ()
        result: Dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                result[exp] = result.get(exp, 0) + c1 * c2
        return LaurentQ._trusted({exp: c for exp, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentQ":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if len(self._terms) != 1:
                raise ValueError("Only monomials c*q^k can be raised to negative powers")
            (exp, coeff), = self._terms.items()
            return LaurentQ({exp * exponent: Fraction(1) / coeff ** (-exponent)})
        result = LaurentQ.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def substitute_inverse(self) -> "LaurentQ":
        """Return p(1/q)."""
        return LaurentQ._trusted({-exp: c for exp, c in self._terms.items()})

    def evaluate(self, q0: NumberLike) -> NumberLike:
        """Evaluate at q = q0 (see laurent_eval)."""
        return laurent_eval(self, q0)

    # ---- comparison / hashing ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentQ):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: Fraction(other)} if other != 0 else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ---- text ----

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for index, (exp, coeff) in enumerate(sorted(self._terms.items())):
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if exp == 0:
                body = str(magnitude)
            else:
                power = "q" if exp == 1 else f"q^{exp}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if index == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentQ({str(self)!r})"


Q = LaurentQ.q_power(1)
ONE = LaurentQ.constant(1)
ZERO = LaurentQ()


def laurent_eval(p: LaurentQ, q0: NumberLike) -> NumberLike:
    """
    Evaluate a Laurent polynomial at a point.

    Exact when q0 is an int or Fraction, 64-bit float otherwise.

    Args:
        p: Polynomial to evaluate
        q0: Evaluation point

    Returns:
        sum_k c_k q0^k, of the same numeric kind as q0

    Raises:
        ScalarDomainError: If q0 == 0 and p has negative exponents

    Example:
        >>> laurent_eval(1 - Q**2, Fraction(1, 2))
        Fraction(3, 4)
    """
    if q0 == 0:
        if any(exp < 0 for exp in p._terms):
            raise ScalarDomainError(f"Cannot evaluate {p} at q = 0 (negative exponents present)")
        return type(q0)(p.constant_term()) if isinstance(q0, float) else p.constant_term()

    if isinstance(q0, float):
        return sum((float(c) * q0**exp for exp, c in p._terms.items()), 0.0)

    exact = Fraction(q0)
    return sum((c * exact**exp for exp, c in p._terms.items()), Fraction(0))


def laurent_div_one_minus_q(p: LaurentQ) -> LaurentQ:
    """
    Exact division by (1 - q).

    Args:
        p: Polynomial with p(1) = 0

    Returns:
        r with r * (1 - q) = p

    Raises:
        NotDivisibleError: If p(1) != 0

    Example:
        >>> str(laurent_div_one_minus_q(1 - Q**2))
        '1 + q'
    """
    if p.is_zero():
        return ZERO
    if sum(p._terms.values()) != 0:
        raise NotDivisibleError(f"{p} is not divisible by (1 - q): value at q = 1 is nonzero")

    # r_k = sum_{j <= k} c_j for k from valuation to degree - 1
    result: Dict[int, Fraction] = {}
    running = Fraction(0)
    for exp in range(p.valuation, p.degree):
        running += p.coefficient(exp)
        if running:
            result[exp] = running
    return LaurentQ._trusted(result)


# ============================================================================
# Parsing
# ============================================================================

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_TERM_RE = re.compile(
    r"""
    \s*(?P<sign>[+-])?\s*
    (?:(?P<coeff>\d+(?:/\d+)?)\s*(?P<times>\*)?\s*)?
    (?P<q>q(?:\s*\^\s*(?P<exp>[+-]?\d+))?)?
    \s*""",
    re.VERBOSE,
)


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/r" or "p" into a Fraction.

    Raises:
        ValueError: If the text is not a rational literal or the denominator is zero
    """
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"Not a rational literal: '{text}'")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in '{text}'")
    return Fraction(numerator, denominator)


def parse_q(text: str) -> Union[Fraction, float]:
    """
    Parse a deformation parameter: "p/r" gives an exact Fraction, decimals give a float.

    Raises:
        ValueError: If the text is neither form
    """
    stripped = text.strip()
    if _RATIONAL_RE.match(stripped):
        return parse_rational(stripped)
    try:
        return float(stripped)
    except ValueError as e:
        raise ValueError(f"Not a rational or float: '{text}'") from e


def parse_laurent(text: str) -> LaurentQ:
    """
    Parse the textual form produced by str(LaurentQ), e.g. "1 - q^2" or "-3/4*q^-1 + q".

    Raises:
        ValueError: On malformed input
    """
    stripped = text.strip()
    if stripped == "0":
        return ZERO
    result = ZERO
    pos = 0
    first = True
    while pos < len(stripped):
        match = _TERM_RE.match(stripped, pos)
        if not match or match.end() == pos:
            raise ValueError(f"Malformed Laurent polynomial '{text}' at position {pos}")
        sign, coeff, times, q_part = (
            match.group("sign"),
            match.group("coeff"),
            match.group("times"),
            match.group("q"),
        )
        if sign is None and not first:
            raise ValueError(f"Missing operator in '{text}' at position {pos}")
        if coeff is None and q_part is None:
            raise ValueError(f"Empty term in '{text}' at position {pos}")
        if times and q_part is None:
            raise ValueError(f"Dangling '*' in '{text}' at position {pos}")
        value = parse_rational(coeff) if coeff else Fraction(1)
        if sign == "-":
            value = -value
        exponent = 0
        if q_part is not None:
            exponent = int(match.group("exp")) if match.group("exp") else 1
        result = result + LaurentQ.q_power(exponent, value)
        pos = match.end()
        first = False
    return result
