"""
Unit tests for the chart structure matrix and its Pfaffian (src/poisson/leaves.py).
"""

import numpy as np
import pytest

from src.poisson import (
    pfaffian_oracle_error,
    pfaffian_recursive,
    random_chart_point,
    structure_matrix,
)


def test_structure_matrix_at_origin():
    S = structure_matrix(2, [0, 0])
    expected = np.array(
        [[0, 2, 0, 0], [-2, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]], dtype=complex
    )
    np.testing.assert_allclose(S.matrix, expected)
    assert abs(S.determinant() - 16.0) < 1e-9


def test_structure_matrix_is_antisymmetric():
    S = structure_matrix(3, [1 + 2j, -0.5j, 0.3])
    np.testing.assert_allclose(S.matrix, -S.matrix.T)


def test_pfaffian_recursion_values():
    assert pfaffian_recursive(1, [0]) == 2.0
    assert pfaffian_recursive(1, [[1.0, 1.0]]) == pytest.approx(6.0)
    assert pfaffian_recursive(2, [1, 1j]) == pytest.approx(2 * 2 * 2 * 3)


def test_pfaffian_squares_to_determinant_n1():
    det = structure_matrix(1, [1 + 1j]).determinant()
    assert abs(det - 36.0) < 1e-9


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pfaffian_matches_determinant_at_random_points(n):
    rng = np.random.default_rng(20240521)
    for _ in range(20):
        point = random_chart_point(n, rng)
        assert pfaffian_oracle_error(n, point) < 1e-8


def test_point_entries_as_pairs():
    assert pfaffian_recursive(1, [(3.0, 4.0)]) == pytest.approx(2 * 26)


def test_point_length_checked():
    with pytest.raises(ValueError, match="Expected 2"):
        structure_matrix(2, [0])


def test_malformed_pair_rejected():
    with pytest.raises(ValueError, match="pairs"):
        structure_matrix(1, [[1.0, 2.0, 3.0]])


def test_random_points_are_reproducible():
    a = random_chart_point(3, np.random.default_rng(5))
    b = random_chart_point(3, np.random.default_rng(5))
    assert a == b
    assert len(a) == 3
