"""
Unit tests for commutative polynomial rings (src/poisson/classical.py).
"""

from fractions import Fraction

import pytest

from src.exceptions import PresetMismatchError
from src.poisson import ClassicalPoly, ClassicalRing, even_sphere_coinduced, product_podles


@pytest.fixture
def ring():
    """Two conjugate variables z, z* and a real variable r with half-step exponents."""
    return ClassicalRing(
        label="Test",
        variables=("z", "z*", "r"),
        half_step=(False, False, True),
        conjugates=(1, 0, 2),
    )


def test_ring_rejects_mismatched_lengths():
    with pytest.raises(ValueError):
        ClassicalRing(label="Bad", variables=("x",), half_step=(False, True), conjugates=(0,))


def test_unknown_variable_raises(ring):
    with pytest.raises(PresetMismatchError):
        ring.index("w")
    assert ring.has_variable("z*")
    assert not ring.has_variable("w")


def test_arithmetic_and_text(ring):
    z = ClassicalPoly.variable(ring, "z")
    zs = ClassicalPoly.variable(ring, "z*")
    p = 2 + 3 * z * zs - z**2
    assert str(p) == "2 + 3 * z * z* - z^2"
    assert (p - p).is_zero()
    assert p * 0 == 0


def test_half_step_text(ring):
    root = ClassicalPoly.variable(ring, "r", half_steps=1)
    assert str(root) == "r^(1/2)"
    assert root * root == ClassicalPoly.variable(ring, "r")


def test_derivative(ring):
    z = ClassicalPoly.variable(ring, "z")
    zs = ClassicalPoly.variable(ring, "z*")
    p = z**3 * zs + Fraction(1, 2) * zs
    assert p.derivative(ring.index("z")) == 3 * z**2 * zs
    assert p.derivative(ring.index("z*")) == z**3 + Fraction(1, 2)
    assert p.derivative(ring.index("r")).is_zero()


def test_conjugate_swaps_partners(ring):
    z = ClassicalPoly.variable(ring, "z")
    zs = ClassicalPoly.variable(ring, "z*")
    r = ClassicalPoly.variable(ring, "r")
    assert (z**2 * r + zs).conjugate() == zs**2 * r + z


def test_evaluate_by_position_and_name(ring):
    z = ClassicalPoly.variable(ring, "z")
    zs = ClassicalPoly.variable(ring, "z*")
    root = ClassicalPoly.variable(ring, "r", half_steps=1)
    p = z * zs + root
    assert abs(p.evaluate([1 + 1j, 1 - 1j, 4.0]) - 4.0) < 1e-12
    assert abs(p.evaluate({"z": 2, "z*": 3, "r": 9}) - 9.0) < 1e-12


def test_evaluate_wrong_length_raises(ring):
    with pytest.raises(ValueError):
        ClassicalPoly.constant(ring, 1).evaluate([1.0])


def test_substitute_monomials():
    sphere = even_sphere_coinduced(1)
    product = product_podles(1)
    t = sphere.variable("t")
    image = (t * t).substitute_monomials(product.ring, [(2, 0, 0), (0, 2, 0), (0, 0, 2)])
    assert image == product.variable("tau1") ** 2


def test_mixing_rings_raises(ring):
    other = even_sphere_coinduced(1).variable("t")
    with pytest.raises(PresetMismatchError):
        ClassicalPoly.variable(ring, "z") + other


def test_monomial_length_checked(ring):
    with pytest.raises(ValueError, match="wrong length"):
        ClassicalPoly(ring, {(2, 0): 1})
