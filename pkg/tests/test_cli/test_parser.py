"""
Unit tests for the expression parser (src/cli/parser.py).

Tests cover the quantum and classical grammars, the star-suffix rule, brackets,
canonical-text round trips and error positions.
"""

from fractions import Fraction

import pytest

from src.cli import parse_expression
from src.exceptions import ExpressionSyntaxError, PresetMismatchError
from src.ncalg import NCPoly, commutator, even_sphere, odd_plane, podles_product_power
from src.poisson import bracket, chart_plane, even_sphere_coinduced
from src.scalars import Q


@pytest.fixture
def sphere():
    return even_sphere(2)


def gen(A, name):
    return NCPoly.generator(A, name)


# ============================================================================
# Quantum expressions
# ============================================================================


def test_product_is_normalized(sphere):
    assert parse_expression("a1 * t", sphere) == Q**2 * gen(sphere, "t") * gen(sphere, "a1")
    assert str(parse_expression("a1 * t", sphere)) == "q^2 * t * a1"


def test_star_suffix_rule(sphere):
    a1, a1s, a2 = gen(sphere, "a1"), gen(sphere, "a1*"), gen(sphere, "a2")
    assert parse_expression("a1*a2", sphere) == a1 * a2
    assert parse_expression("a1* * a2", sphere) == a1s * a2
    assert parse_expression("a1*", sphere) == a1s
    assert parse_expression("(a1*)", sphere) == a1s
    assert parse_expression("a1*^2", sphere) == a1s * a1s


def test_scalars(sphere):
    t = gen(sphere, "t")
    assert parse_expression("1/2 * t", sphere) == Fraction(1, 2) * t
    assert parse_expression("q^-2 * t", sphere) == Q**-2 * t
    assert parse_expression("q * t", sphere) == Q * t
    assert parse_expression("-t + 3", sphere) == 3 - t


def test_precedence_and_powers(sphere):
    t = gen(sphere, "t")
    a1 = gen(sphere, "a1")
    assert parse_expression("(a1 + t)^2", sphere) == (a1 + t) * (a1 + t)
    assert parse_expression("t + t * t", sphere) == t + t * t
    assert parse_expression("2 * t^2", sphere) == 2 * t * t


def test_commutator_brackets(sphere):
    a1, t = gen(sphere, "a1"), gen(sphere, "t")
    assert parse_expression("[a1, t]", sphere) == commutator(a1, t, sphere)
    assert parse_expression("[a1, t]", sphere) == (Q**2 - 1) * t * a1


def test_modulus_relation_vanishes_in_text():
    A = even_sphere(1)
    assert parse_expression("q^2 * a1* * a1 - t + t^2", A).is_zero()
    assert not parse_expression("q^2 * x1* * x1 - y + y^2", odd_plane(1)).is_zero()


def test_product_preset_names():
    A = podles_product_power(2)
    parsed = parse_expression("alpha2 * tau1", A)
    assert parsed == gen(A, "tau1") * gen(A, "alpha2")


@pytest.mark.parametrize("text", ["a1 * a1*", "a2 * a1* * t", "q^-1 * a2* + 1/3 * t^3", "[a2, a1*]"])
def test_canonical_text_round_trip(sphere, text):
    value = parse_expression(text, sphere)
    assert parse_expression(str(value), sphere) == value


# ============================================================================
# Classical expressions
# ============================================================================


def test_poisson_bracket_syntax():
    P = chart_plane(1)
    z, z_star = P.variable("z1"), P.variable("z1*")
    assert parse_expression("{z1, z1*}", P) == 2 + 2 * z * z_star
    assert parse_expression("{z1, z1*}", P) == bracket(z, z_star, P)


def test_classical_polynomial():
    P = even_sphere_coinduced(1)
    t, a = P.variable("t"), P.variable("a1")
    assert parse_expression("2 * a1 * t - t^2", P) == 2 * a * t - t * t


def test_classical_commutator_vanishes():
    P = even_sphere_coinduced(1)
    assert parse_expression("[a1, a1*]", P).is_zero()


# ============================================================================
# Errors
# ============================================================================


@pytest.mark.parametrize("text", ["", "   ", "t +", "(t", "t )", "1/0", "t * * t", "t @ t", "[t t]"])
def test_syntax_errors(sphere, text):
    with pytest.raises(ExpressionSyntaxError):
        parse_expression(text, sphere)


def test_error_carries_position(sphere):
    with pytest.raises(ExpressionSyntaxError) as exc_info:
        parse_expression("t + )", sphere)
    assert exc_info.value.position == 4
    assert "position 4" in str(exc_info.value)


def test_unknown_generator(sphere):
    with pytest.raises(PresetMismatchError, match="b1"):
        parse_expression("b1 * t", sphere)
    with pytest.raises(PresetMismatchError):
        parse_expression("a3", sphere)


def test_poisson_bracket_needs_classical_target(sphere):
    with pytest.raises(ExpressionSyntaxError, match="classical"):
        parse_expression("{a1, t}", sphere)


def test_q_not_available_classically():
    with pytest.raises(ExpressionSyntaxError, match="'q'"):
        parse_expression("q * z1", chart_plane(1))


def test_unknown_classical_variable():
    with pytest.raises(PresetMismatchError):
        parse_expression("z2", chart_plane(1))


def test_huge_exponent_is_rejected(sphere):
    with pytest.raises(ExpressionSyntaxError, match="exceeds the maximum of 64") as exc_info:
        parse_expression("t^99999999", sphere)
    assert exc_info.value.position == 2


@pytest.mark.parametrize("text", ["q^-65", "q^100", "(a1 + t)^65"])
def test_exponents_beyond_limit(sphere, text):
    with pytest.raises(ExpressionSyntaxError, match="Exponent"):
        parse_expression(text, sphere)


def test_classical_exponent_limit():
    with pytest.raises(ExpressionSyntaxError, match="Exponent"):
        parse_expression("z1^100", chart_plane(1))


def test_exponents_at_limit_are_accepted(sphere):
    assert parse_expression("t^64", sphere) == gen(sphere, "t") ** 64
    assert parse_expression("q^-64", sphere) == Q**-64
