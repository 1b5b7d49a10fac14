"""
Unit tests for the suspension map and the exact Poisson checks (src/poisson/suspension.py).
"""

import pytest

from src.exceptions import PresetMismatchError
from src.poisson import (
    chart_plane,
    check_jacobi,
    even_sphere_coinduced,
    generator_pairs,
    is_casimir_ideal,
    north_pole_degeneracy,
    phi_pushforward,
    podles_standard,
    product_podles,
    suspension_images,
    verify_poisson_map,
    verify_sphere_constraint,
)


# ============================================================================
# Suspension map
# ============================================================================


def test_images_for_n_equal_one_are_identity():
    assert suspension_images(1) == [(2, 0, 0), (0, 2, 0), (0, 0, 2)]


def test_images_for_n_equal_two():
    images = suspension_images(2)
    assert images[0] == (2, 0, 0, 2, 0, 0)  # t = tau1 tau2
    assert images[2] == (0, 0, 2, 2, 0, 0)  # a1 = alpha1 tau2
    assert images[4] == (1, 0, 0, 0, 0, 2)  # a2 = tau1^(1/2) alpha2


def test_pushforward_text():
    P = even_sphere_coinduced(2)
    assert str(phi_pushforward(P.variable("a2"))) == "tau1^(1/2) * alpha2"


def test_pushforward_is_multiplicative():
    P = even_sphere_coinduced(2)
    f = P.variable("a1") * P.variable("t") + 2
    g = P.variable("a2*") - P.variable("t")
    assert phi_pushforward(f * g) == phi_pushforward(f) * phi_pushforward(g)


def test_pushforward_rejects_other_rings():
    with pytest.raises(PresetMismatchError):
        phi_pushforward(chart_plane(1).variable("z1"))
    with pytest.raises(PresetMismatchError):
        phi_pushforward(podles_standard().variable("tau1"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_suspension_is_a_poisson_map(n):
    table = verify_poisson_map(n)
    assert table.all_zero, [entry.to_dict() for entry in table.nonzero()]
    assert len(table.entries) == len(generator_pairs(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_image_lies_on_the_sphere(n):
    assert verify_sphere_constraint(n).is_zero()


def test_generator_pairs_include_repetitions():
    assert generator_pairs(1) == [
        ("t", "t"),
        ("t", "a1*"),
        ("t", "a1"),
        ("a1*", "a1*"),
        ("a1*", "a1"),
        ("a1", "a1"),
    ]


# ============================================================================
# Jacobi identity and Poisson ideals
# ============================================================================


@pytest.mark.parametrize(
    "structure",
    [
        podles_standard(),
        product_podles(2),
        even_sphere_coinduced(1),
        even_sphere_coinduced(2),
        chart_plane(1),
        chart_plane(2),
        chart_plane(3),
    ],
    ids=lambda P: P.label,
)
def test_jacobi_identity(structure):
    table = check_jacobi(structure)
    assert table.all_zero, [entry.to_dict() for entry in table.nonzero()]
    assert table.max_terms == 0


@pytest.mark.slow
def test_jacobi_identity_even_sphere_n3():
    assert check_jacobi(even_sphere_coinduced(3)).all_zero


def test_jacobi_table_counts_triples():
    table = check_jacobi(even_sphere_coinduced(1))
    assert len(table.entries) == 1
    assert table.entries[0].label == "(t, a1*, a1)"


@pytest.mark.parametrize(
    "structure",
    [podles_standard(), product_podles(2), even_sphere_coinduced(1), even_sphere_coinduced(2)],
    ids=lambda P: P.label,
)
def test_relations_generate_poisson_ideals(structure):
    assert is_casimir_ideal(structure)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_north_pole_is_a_point_leaf(n):
    assert north_pole_degeneracy(n) == 0.0
