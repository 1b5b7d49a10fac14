"""
Unit tests for the rewriting engine (src/ncalg/rewriting.py).
"""

import pytest

from src.exceptions import RewriteBudgetExceeded
from src.ncalg import even_sphere, odd_plane, reduce_word, rewrite_height, step_budget
from src.ncalg import rewriting
from src.scalars import ONE, Q


def test_normal_word_is_fixed():
    A = even_sphere(1)
    word = A.word_from(["t", "a1"])
    assert reduce_word(A, word) == {word: ONE}
    assert rewrite_height(A, word) == 0


def test_single_rule_application():
    A = even_sphere(2)
    result = reduce_word(A, A.word_from(["a1", "t"]))
    assert result == {A.word_from(["t", "a1"]): Q**2}
    assert rewrite_height(A, A.word_from(["a1", "t"])) == 1


def test_modulus_rule_in_even_sphere():
    A = even_sphere(1)
    result = reduce_word(A, A.word_from(["a1*", "a1"]))
    assert result == {(0,): Q**-2, (0, 0): -(Q**-2)}


def test_odd_plane_keeps_star_first_pairs():
    A = odd_plane(1)
    word = A.word_from(["x1*", "x1"])
    assert reduce_word(A, word) == {word: ONE}


@pytest.mark.parametrize("strategy", ["leftmost", "rightmost"])
def test_strategies_agree_on_long_word(strategy):
    A = even_sphere(2)
    word = A.word_from(["a2", "a1", "t", "a2*", "a1*", "t"])
    assert reduce_word(A, word, strategy) == reduce_word(A, word, "leftmost")


def test_unknown_strategy_raises():
    A = even_sphere(1)
    with pytest.raises(ValueError, match="strategy"):
        reduce_word(A, (2, 0), "middle")


def test_step_budget_grows_quadratically():
    assert step_budget(0) < step_budget(1) < step_budget(4)
    assert step_budget(3) == 16 * step_budget(0)


def test_height_stays_within_budget():
    A = even_sphere(3)
    word = A.word_from(["a3", "a2", "a1", "a1*", "a2*", "a3*", "t"])
    assert rewrite_height(A, word) <= step_budget(len(word))


def test_budget_exceeded_raises(monkeypatch):
    """A zero budget makes every reducible word fail."""
    A = even_sphere(1).with_rules({}, label="fresh-memo")
    monkeypatch.setattr(rewriting, "step_budget", lambda length: 0)
    with pytest.raises(RewriteBudgetExceeded):
        reduce_word(A, A.word_from(["a1", "t"]))


def test_budget_error_is_runtime_error(monkeypatch):
    A = even_sphere(1).with_rules({}, label="fresh-memo-2")
    monkeypatch.setattr(rewriting, "step_budget", lambda length: 0)
    with pytest.raises(RuntimeError):
        reduce_word(A, A.word_from(["a1", "a1*"]))
