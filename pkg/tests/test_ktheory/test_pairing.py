"""
Unit tests for the pairings of G_n (src/ktheory/pairing.py).
"""

import pytest

from src.ktheory import pair_charge, pair_epsilon, pairing_cross_check, trace_at_q_one


@pytest.mark.parametrize("n, rank", [(1, 1), (2, 2), (3, 4)])
def test_counit_pairing_is_rank(n, rank):
    assert pair_epsilon(n) == rank


CHARGE_GRID = [
    (n, q0, 80 if q0 == 0.8 else 60) for n in (1, 2, 3) for q0 in (0.3, 0.5, 0.8)
]


@pytest.mark.parametrize("n, q0, N", CHARGE_GRID)
def test_charge_pairing_is_minus_one(n, q0, N):
    result = pair_charge(n, q0, N)
    assert -1 - 1e-6 <= result.value <= -1 + 1e-6
    assert result.contains(-1.0)
    assert result.bound < 1e-6


def test_charge_pairing_at_another_deformation():
    result = pair_charge(1, 0.7, 80)
    assert result.value == pytest.approx(-1.0, abs=1e-10)


def test_both_paths_agree():
    assert pairing_cross_check(1, 0.5, 40) < 1e-12
    matrix = pair_charge(2, 0.5, 30, via="matrix")
    assert matrix.value == pytest.approx(-1.0, abs=1e-10)


def test_unknown_path():
    with pytest.raises(ValueError, match="pairing path"):
        pair_charge(1, 0.5, 10, via="other")


@pytest.mark.parametrize("n, rank", [(1, "1"), (2, "2"), (3, "4")])
def test_trace_at_q_one_is_classical_rank(n, rank):
    assert str(trace_at_q_one(n)) == rank
