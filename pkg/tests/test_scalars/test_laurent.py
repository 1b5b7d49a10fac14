"""
Unit tests for exact Laurent polynomial scalars (src/scalars/laurent.py).

Tests cover arithmetic, canonical text, evaluation (exact and float), exact
division by (1 - q) and the parsers for q values and Laurent text.
"""

import random
from fractions import Fraction

import pytest

from src.exceptions import NotDivisibleError, ScalarDomainError
from src.scalars import (
    ONE,
    Q,
    ZERO,
    LaurentQ,
    laurent_div_one_minus_q,
    laurent_eval,
    parse_laurent,
    parse_q,
    parse_rational,
)


# ============================================================================
# Arithmetic
# ============================================================================


def test_zero_coefficients_are_dropped():
    """Cancelling terms leave the zero polynomial."""
    p = Q**2 - Q**2
    assert p.is_zero()
    assert p == ZERO
    assert p == 0
    assert not p


def test_multiplication_adds_exponents():
    p = (1 + Q) * (1 - Q)
    assert p == 1 - Q**2
    assert p.coefficient(2) == -1
    assert p.coefficient(1) == 0


def test_negative_power_of_monomial():
    assert Q**-2 == LaurentQ.q_power(-2)
    assert (LaurentQ.q_power(1, 2)) ** -1 == LaurentQ.q_power(-1, Fraction(1, 2))


def test_negative_power_of_binomial_raises():
    with pytest.raises(ValueError, match="monomials"):
        (1 + Q) ** -1


def test_mixing_with_fractions_and_ints():
    p = Fraction(1, 2) * Q + 3
    assert p.constant_term() == 3
    assert p.coefficient(1) == Fraction(1, 2)
    assert 3 - p == -Fraction(1, 2) * Q


def test_float_coefficients_are_rejected():
    with pytest.raises(TypeError):
        LaurentQ({0: 0.5})


def test_degree_and_valuation():
    p = Q**-1 + 2 * Q**3
    assert p.degree == 3
    assert p.valuation == -1
    assert ZERO.degree is None
    assert ZERO.valuation is None


def test_substitute_inverse():
    assert (1 + 2 * Q**3).substitute_inverse() == 1 + 2 * Q**-3


def test_equal_polynomials_hash_equal():
    assert hash(1 - Q**2) == hash(-(Q**2) + 1)
    assert len({1 - Q**2, -(Q**2) + 1, ONE}) == 2


def random_laurent(rng):
    """Up to four terms with exponents in -4..4 and small rational coefficients."""
    return LaurentQ(
        {
            rng.randint(-4, 4): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            for _ in range(rng.randint(0, 4))
        }
    )


@pytest.fixture
def random_triples():
    rng = random.Random(20240521)
    return [(random_laurent(rng), random_laurent(rng), random_laurent(rng)) for _ in range(200)]


def test_ring_laws_hold_on_random_triples(random_triples):
    for a, b, c in random_triples:
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_additive_and_multiplicative_identities_on_random_values(random_triples):
    for a, _, _ in random_triples:
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO
        assert a * ZERO == ZERO
        assert -(-a) == a


# ============================================================================
# Text
# ============================================================================


@pytest.mark.parametrize(
    "poly, text",
    [
        (ZERO, "0"),
        (ONE, "1"),
        (Q, "q"),
        (Q**2, "q^2"),
        (Q**2 - 1, "-1 + q^2"),
        (Fraction(3, 4) * Q**-1, "3/4*q^-1"),
        (1 - Q, "1 - q"),
    ],
)
def test_canonical_text(poly, text):
    assert str(poly) == text


@pytest.mark.parametrize(
    "poly",
    [ZERO, ONE, Q, Q**2 - 1, Fraction(3, 4) * Q**-1 + Q, -2 * Q**5 + Fraction(1, 3)],
)
def test_parse_laurent_reads_canonical_text(poly):
    assert parse_laurent(str(poly)) == poly


@pytest.mark.parametrize("text", ["q q", "* q", "1 +", "x"])
def test_parse_laurent_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_laurent(text)


# ============================================================================
# Evaluation
# ============================================================================


def test_exact_evaluation_at_fraction():
    assert laurent_eval(1 - Q**2, Fraction(1, 2)) == Fraction(3, 4)
    assert (Q**-1).evaluate(Fraction(1, 3)) == 3


def test_float_evaluation():
    value = laurent_eval(1 - Q**2, 0.5)
    assert isinstance(value, float)
    assert value == pytest.approx(0.75)


def test_evaluation_at_zero():
    assert laurent_eval(3 + Q, Fraction(0)) == 3
    with pytest.raises(ScalarDomainError):
        laurent_eval(Q**-1, 0.0)


def test_scalar_domain_error_is_value_error():
    with pytest.raises(ValueError):
        laurent_eval(Q**-2 + 1, 0)


# ============================================================================
# Division by (1 - q)
# ============================================================================


def test_division_by_one_minus_q():
    assert laurent_div_one_minus_q(1 - Q**2) == 1 + Q
    assert laurent_div_one_minus_q(Q**-1 - Q) == Q**-1 + 1
    assert laurent_div_one_minus_q(ZERO) == ZERO


def test_division_result_multiplies_back():
    p = 3 * Q**-2 - Q + 5 * Q**4 - 7
    r = laurent_div_one_minus_q(p)
    assert r * (1 - Q) == p


def test_division_requires_zero_at_one():
    with pytest.raises(NotDivisibleError):
        laurent_div_one_minus_q(1 + Q)


# ============================================================================
# Parsing q values
# ============================================================================


def test_parse_q_rational_is_exact():
    assert parse_q("1/2") == Fraction(1, 2)
    assert isinstance(parse_q(" 3/4 "), Fraction)


def test_parse_q_decimal_is_float():
    value = parse_q("0.3")
    assert isinstance(value, float)
    assert value == 0.3


def test_parse_q_rejects_garbage():
    with pytest.raises(ValueError):
        parse_q("half")


def test_parse_rational_zero_denominator():
    with pytest.raises(ValueError, match="Zero denominator"):
        parse_rational("1/0")
