"""
Unit tests for the semiclassical limit (src/semiclassical/limit.py).
"""

from fractions import Fraction

import pytest

from src.exceptions import PresetMismatchError
from src.ncalg import NCPoly, PresetKind, even_sphere, odd_plane, podles_product_power, podles_sphere
from src.poisson import even_sphere_coinduced, podles_standard, product_podles
from src.semiclassical import (
    DequantizationMap,
    classical_structure_for,
    semiclassical_bracket,
    verify_semiclassical,
)


def test_limit_structures():
    assert classical_structure_for(even_sphere(2)) is even_sphere_coinduced(2)
    assert classical_structure_for(podles_sphere()) is podles_standard()
    assert classical_structure_for(podles_product_power(2)) is product_podles(2)


def test_odd_plane_has_no_limit_structure():
    with pytest.raises(PresetMismatchError):
        classical_structure_for(odd_plane(1))


def test_dequantization_counts_letters():
    A = even_sphere(1)
    dequantize = DequantizationMap(A)
    poly = dequantize({A.word_from(["t", "a1*"]): Fraction(2), (): Fraction(1)})
    P = even_sphere_coinduced(1)
    assert poly == 1 + 2 * P.variable("t") * P.variable("a1*")


def test_bracket_of_distinct_indices():
    A = even_sphere(2)
    a1, a2 = NCPoly.generator(A, "a1"), NCPoly.generator(A, "a2")
    assert str(semiclassical_bracket(a1, a2, A)) == "a1 * a2"


def test_bracket_of_a_and_t():
    A = even_sphere(1)
    t, a = NCPoly.generator(A, "t"), NCPoly.generator(A, "a1")
    P = even_sphere_coinduced(1)
    assert semiclassical_bracket(a, t, A) == -2 * P.variable("a1") * P.variable("t")


def test_bracket_of_a_and_a_star():
    """[a, a*] / (1 - q) tends to 4 t^2 - 2 t on the 2-sphere."""
    A = even_sphere(1)
    a, a_star = NCPoly.generator(A, "a1"), NCPoly.generator(A, "a1*")
    t = even_sphere_coinduced(1).variable("t")
    assert semiclassical_bracket(a, a_star, A) == 4 * t * t - 2 * t


@pytest.mark.parametrize("n", [1, 2, 3])
def test_even_sphere_limit_matches_coinduced_bracket(n):
    table = verify_semiclassical(n)
    assert table.all_zero, [entry.to_dict() for entry in table.nonzero()]


def test_podles_sphere_limit():
    assert verify_semiclassical(1, PresetKind.PODLES_SPHERE).all_zero


def test_product_limit():
    assert verify_semiclassical(2, PresetKind.PODLES_PRODUCT_POWER).all_zero
