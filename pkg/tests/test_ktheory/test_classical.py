"""
Unit tests for the classical projector on the even sphere (src/ktheory/classical.py).
"""

import numpy as np
import pytest

from src.exceptions import OffSphereError
from src.ktheory import classical_G, random_sphere_point, sphere_defect


def test_north_pole():
    result = classical_G(1, 0.0, [0j])
    np.testing.assert_allclose(result.matrix, np.diag([1.0, 0.0]))
    assert result.trace == 1.0
    assert result.rank == 1


def test_explicit_point_n_one():
    result = classical_G(1, 0.5, [0.5 + 0j])
    expected = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
    np.testing.assert_allclose(result.matrix, expected)
    assert result.idempotency_defect < 1e-15


def test_conjugate_in_upper_block():
    a = 0.3 + 0.4j
    t = 0.5 * (1 + np.sqrt(1 - 4 * abs(a) ** 2))
    result = classical_G(1, t, [a])
    assert abs(result.matrix[0, 1] - np.conj(a)) < 1e-15
    assert abs(result.matrix[1, 0] - a) < 1e-15


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_random_points_give_projectors_of_half_rank(n):
    rng = np.random.default_rng(11)
    for _ in range(5):
        t, a = random_sphere_point(n, rng)
        result = classical_G(n, t, list(a))
        assert result.matrix.shape == (2**n, 2**n)
        assert result.idempotency_defect < 1e-12
        assert result.trace == pytest.approx(2 ** (n - 1))
        assert result.rank == 2 ** (n - 1)


def test_random_points_lie_on_the_sphere():
    rng = np.random.default_rng(3)
    for n in (1, 2, 5):
        t, a = random_sphere_point(n, rng)
        assert 0.0 <= t <= 1.0
        assert len(a) == n
        assert sphere_defect(t, a) < 1e-12


def test_random_point_default_generator_is_seeded():
    first = random_sphere_point(2)
    second = random_sphere_point(2)
    assert first[0] == second[0]
    np.testing.assert_array_equal(first[1], second[1])


def test_off_sphere_rejected():
    with pytest.raises(OffSphereError):
        classical_G(1, 0.5, [0j])


def test_coordinate_count_checked():
    with pytest.raises(ValueError, match="coordinates"):
        classical_G(2, 0.0, [0j])
