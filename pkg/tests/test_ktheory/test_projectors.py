"""
Unit tests for the recursive idempotents e_k and G_n (src/ktheory/projectors.py).

Tests cover the first levels explicitly, the defect identity, the commutation
lemma, idempotency over the even sphere and the closed trace formula.
"""

import pytest

from src.exceptions import IndexViolationError
from src.ktheory import (
    build_e,
    build_G,
    check_defect,
    check_idempotency,
    check_lemma_M,
    check_quotient_defect,
    defect_rhs,
    expected_trace,
    matrix_trace,
    omega,
)
from src.ncalg import NCPoly, even_sphere, modulus_element, odd_plane, rename_preset
from src.scalars import Q


# ============================================================================
# Explicit levels
# ============================================================================


def test_level_zero():
    assert build_e(2, 0).to_text() == [["1 - y"]]


def test_level_one():
    assert build_e(1, 1).to_text() == [["1 - y", "q * x1*"], ["q * x1", "q^2 * y"]]


def test_sphere_projector_for_n_equal_one():
    assert build_G(1).to_text() == [["1 - t", "q * a1*"], ["q * a1", "q^2 * t"]]


def test_sizes():
    assert build_e(3, 2).size == 4
    assert build_G(3).size == 8
    assert build_G(2).preset is even_sphere(2)
    assert build_e(2, 1).preset is odd_plane(2)


def test_cached():
    assert build_e(2, 2) is build_e(2, 2)


def test_level_out_of_range():
    with pytest.raises(IndexViolationError):
        build_e(1, 2)
    with pytest.raises(IndexViolationError):
        build_e(1, -1)
    with pytest.raises(IndexViolationError):
        build_G(0)


# ============================================================================
# Defect identity and idempotency
# ============================================================================


def test_omega_is_the_plane_modulus_element():
    assert omega(2, 2) == modulus_element(odd_plane(2))
    y = NCPoly.generator(odd_plane(1), "y")
    assert omega(1, 0) == y * y - y


def test_defect_rhs_diagonal():
    rhs = defect_rhs(1, 1)
    assert rhs.entry(0, 0) == omega(1, 1)
    assert rhs.entry(1, 1) == Q**2 * omega(1, 1)
    assert rhs.entry(0, 1).is_zero()


@pytest.mark.parametrize("n, k", [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 2)])
def test_defect_identity(n, k):
    assert check_defect(n, k).is_zero()


@pytest.mark.slow
def test_defect_identity_top_level_n_three():
    assert check_defect(3, 3).is_zero()


@pytest.mark.parametrize("n, k, l", [(1, 0, 1), (2, 0, 1), (2, 0, 2), (2, 1, 2), (3, 1, 3), (3, 2, 3)])
def test_lemma_residual_vanishes(n, k, l):
    assert check_lemma_M(n, k, l).is_zero()


def test_lemma_index_range():
    with pytest.raises(IndexViolationError):
        check_lemma_M(2, 1, 1)
    with pytest.raises(IndexViolationError):
        check_lemma_M(2, 1, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quotient_defect_vanishes(n):
    assert check_quotient_defect(n).is_zero()


@pytest.mark.parametrize("n", [1, 2])
def test_sphere_projector_is_idempotent(n):
    assert check_idempotency(n).is_zero()


def test_plane_projector_is_not_idempotent():
    e = build_e(1, 1)
    assert not (e @ e - e).is_zero()


# ============================================================================
# Traces
# ============================================================================


@pytest.mark.parametrize("n, k", [(1, 1), (2, 1), (2, 2), (3, 3)])
def test_trace_closed_form(n, k):
    assert matrix_trace(build_e(n, k)) == expected_trace(n, k)


def test_sphere_trace():
    A = even_sphere(2)
    t = NCPoly.generator(A, "t")
    assert matrix_trace(build_G(2)) == 2 - (1 - Q**2) ** 2 * t
    assert matrix_trace(build_G(2)) == rename_preset(expected_trace(2, 2), A)


def test_expected_trace_needs_positive_level():
    with pytest.raises(IndexViolationError):
        expected_trace(2, 0)
