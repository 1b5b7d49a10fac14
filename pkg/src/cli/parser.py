"""
Expression parser for quantum and classical polynomials.

Grammar:

    expr   := ["+" | "-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" uint)?
    atom   := gen | scalar | "(" expr ")" | "[" expr "," expr "]" | "{" expr "," expr "}"
    gen    := name uint? "*"?           (a1, a1*, x2, z1*, alpha1, tau1, t, y)
    scalar := uint ("/" uint)? | "q" ("^" int)?

A "*" directly after a generator name is the star suffix when it is followed by
whitespace, the end of the input or one of ^ ) ] , } + - *; otherwise it is
multiplication, so "a1*a2" is a product and "a1* * a2" starts with a1*.

"[f, g]" is the commutator fg - gf. "{f, g}" is the Poisson bracket and is only
available for classical structures; "q" is only available for quantum presets.
The canonical text printed by NCPoly and ClassicalPoly parses back to the same
element.
Exponents, of factors and of q, are limited to MAX_EXPONENT in absolute value.

Usage:
    from src.cli.parser import parse_expression

    parse_expression("a1 * t", even_sphere(2))     # q^2 * t * a1
    parse_expression("{z1, z1*}", chart_plane(1))  # 2 + 2 * z1 * z1*
"""

import logging
from fractions import Fraction
from typing import Callable, Union

from src.exceptions import ExpressionSyntaxError, PresetMismatchError
from src.ncalg import AlgebraPreset, NCPoly, commutator
from src.poisson import ClassicalPoly, PoissonStructure, bracket
from src.scalars import LaurentQ, Q

logger = logging.getLogger(__name__)

Target = Union[AlgebraPreset, PoissonStructure]
Element = Union[NCPoly, ClassicalPoly]

_STAR_FOLLOWERS = set("^)],}+-*")
MAX_EXPONENT = 64


class _Parser:
    """Recursive-descent parser evaluating directly into the target algebra."""

    def __init__(self, text: str, target: Target):
        self.text = text
        self.pos = 0
        self.target = target
        self.quantum = isinstance(target, AlgebraPreset)

    # ---- lexing helpers ----

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            found = self._peek() or "end of input"
            raise ExpressionSyntaxError(f"Expected '{char}', found '{found}'", self.pos)
        self.pos += 1

    def _uint(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ExpressionSyntaxError("Expected an unsigned integer", start)
        return int(self.text[start : self.pos])

    def _signed_int(self) -> int:
        sign = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        return sign * self._uint()

    def _exponent(self, signed: bool = False) -> int:
        self._skip()
        start = self.pos
        value = self._signed_int() if signed else self._uint()
        if abs(value) > MAX_EXPONENT:
            raise ExpressionSyntaxError(
                f"Exponent {value} exceeds the maximum of {MAX_EXPONENT}", start
            )
        return value

    # ---- element constructors ----

    def _scalar(self, value: Union[Fraction, LaurentQ], position: int) -> Element:
        if self.quantum:
            return NCPoly.scalar(self.target, value)
        if isinstance(value, LaurentQ):
            raise ExpressionSyntaxError("'q' is not available in classical expressions", position)
        return ClassicalPoly.constant(self.target.ring, value)

    def _generator(self, name: str, position: int) -> Element:
        if self.quantum:
            if not self.target.has_generator(name):
                raise PresetMismatchError(
                    f"Unknown generator '{name}' at position {position} for {self.target.label}"
                )
            return NCPoly.generator(self.target, name)
        if not self.target.ring.has_variable(name):
            raise PresetMismatchError(
                f"Unknown variable '{name}' at position {position} for {self.target.label}"
            )
        return self.target.variable(name)

    # ---- grammar ----

    def parse(self) -> Element:
        value = self.expr()
        if self._peek():
            raise ExpressionSyntaxError(f"Unexpected '{self._peek()}'", self.pos)
        return value

    def expr(self) -> Element:
        negate = False
        if self._peek() in ("+", "-"):
            negate = self.text[self.pos] == "-"
            self.pos += 1
        value = self.term()
        if negate:
            value = -value
        while self._peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Element:
        value = self.factor()
        while self._peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return value

    def factor(self) -> Element:
        value = self.atom()
        if self._peek() == "^":
            self.pos += 1
            value = value ** self._exponent()
        return value

    def atom(self) -> Element:
        char = self._peek()
        position = self.pos
        if not char:
            raise ExpressionSyntaxError("Unexpected end of input", position)
        if char == "(":
            self.pos += 1
            value = self.expr()
            self._expect(")")
            return value
        if char == "[":
            return self._pair("[", "]", lambda f, g: self._commutator(f, g))
        if char == "{":
            if self.quantum:
                raise ExpressionSyntaxError(
                    "Poisson brackets {f, g} need a classical structure", position
                )
            return self._pair("{", "}", lambda f, g: bracket(f, g, self.target))
        if char.isdigit():
            numerator = self._uint()
            denominator = 1
            if self._peek() == "/":
                self.pos += 1
                denominator = self._uint()
                if denominator == 0:
                    raise ExpressionSyntaxError("Zero denominator", self.pos)
            return self._scalar(Fraction(numerator, denominator), position)
        if char.isalpha():
            return self._name(position)
        raise ExpressionSyntaxError(f"Unexpected '{char}'", position)

    def _pair(self, opening: str, closing: str, combine: Callable[[Element, Element], Element]) -> Element:
        self._expect(opening)
        left = self.expr()
        self._expect(",")
        right = self.expr()
        self._expect(closing)
        return combine(left, right)

    def _commutator(self, f: Element, g: Element) -> Element:
        if self.quantum:
            return commutator(f, g, self.target)
        return f * g - g * f

    def _name(self, position: int) -> Element:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        name = self.text[start : self.pos]

        if name == "q" and not self._is_generator_name("q"):
            if not self.quantum:
                raise ExpressionSyntaxError("'q' is not available in classical expressions", position)
            exponent = 1
            if self._peek() == "^":
                self.pos += 1
                exponent = self._exponent(signed=True)
            return self._scalar(Q**exponent, position)

        if self._has_star_suffix():
            self.pos += 1
            name += "*"
        return self._generator(name, position)

    def _has_star_suffix(self) -> bool:
        if self.pos >= len(self.text) or self.text[self.pos] != "*":
            return False
        following = self.text[self.pos + 1] if self.pos + 1 < len(self.text) else ""
        return following == "" or following.isspace() or following in _STAR_FOLLOWERS

    def _is_generator_name(self, name: str) -> bool:
        if self.quantum:
            return self.target.has_generator(name)
        return self.target.ring.has_variable(name)


def parse_expression(text: str, target: Target) -> Element:
    """
    Parse text into an NCPoly (quantum preset) or ClassicalPoly (Poisson structure).

    Args:
        text: Expression in the grammar above
        target: AlgebraPreset or PoissonStructure the expression lives in

    Returns:
        The evaluated element, in normal form for quantum presets

    Raises:
        ExpressionSyntaxError: On malformed input (with the failing position), on
            "{,}" over a quantum preset, on "q" in a classical expression, or on an
            exponent larger than MAX_EXPONENT
        PresetMismatchError: On an unknown generator name

    Example:
        >>> str(parse_expression("q^2 * t - t", even_sphere(1)))
        '(-1 + q^2) * t'
    """
    if not text or not text.strip():
        raise ExpressionSyntaxError("Empty expression", 0)
    result = _Parser(text, target).parse()
    logger.debug(f"Parsed '{text}' -> {result}")
    return result
