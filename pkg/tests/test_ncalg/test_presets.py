"""
Unit tests for algebra presets (src/ncalg/presets.py).

Tests cover generator ranks and names, rule orientation, preset lookup and the
corrupted negative-control preset.
"""

import pytest

from src.exceptions import PresetMismatchError
from src.ncalg import (
    Family,
    GeneratorId,
    PresetKind,
    corrupted_preset,
    even_sphere,
    get_preset,
    odd_plane,
    podles_product_power,
    podles_sphere,
)


# ============================================================================
# Generators and ranks
# ============================================================================


def test_sphere_type_ranks():
    A = even_sphere(2)
    assert A.names == ("t", "a1*", "a1", "a2*", "a2")
    assert A.rank_of("t") == 0
    assert A.rank_of("a1*") == 1
    assert A.rank_of("a2") == 4
    assert A.rank_of(GeneratorId(Family.A, 1)) == 2


def test_odd_plane_names():
    assert odd_plane(1).names == ("y", "x1*", "x1")


def test_product_ranks_and_names():
    A = podles_product_power(2)
    assert A.names == ("tau1", "alpha1*", "alpha1", "tau2", "alpha2*", "alpha2")
    assert A.t_ranks() == [0, 3]
    assert A.a_ranks() == [2, 5]
    assert A.a_ranks(starred=True) == [1, 4]


def test_unknown_generator_raises():
    A = even_sphere(1)
    with pytest.raises(PresetMismatchError, match="a2"):
        A.rank_of("a2")
    with pytest.raises(PresetMismatchError):
        A.rank_of(7)
    with pytest.raises(PresetMismatchError):
        A.rank_of(True)


def test_star_ranks_are_an_involution():
    for A in (even_sphere(3), podles_product_power(2)):
        for rank in range(A.size):
            assert A.star_ranks[A.star_ranks[rank]] == rank


def test_star_word_reverses_and_stars():
    A = even_sphere(2)
    assert A.star_word(A.word_from(["t", "a1", "a2*"])) == A.word_from(["a2", "a1*", "t"])


def test_word_text_uses_powers_for_runs():
    A = even_sphere(2)
    assert A.word_text((0, 1, 2)) == "t * a1* * a1"
    assert A.word_text((0, 0, 2)) == "t^2 * a1"
    assert A.word_text(()) == "1"


# ============================================================================
# Rules
# ============================================================================


def test_rules_move_lower_ranks_left():
    """Every rule rewrites a descending pair into words that are smaller in deg-lex order."""
    for A in (even_sphere(3), odd_plane(3), podles_product_power(2)):
        for (first, second), rhs in A.rules.items():
            for word, _coeff in rhs:
                assert len(word) <= 2
                if len(word) == 2:
                    assert word < (first, second)


def test_even_sphere_has_exactly_one_extra_rule():
    for n in (1, 2, 3):
        assert len(even_sphere(n).rules) == len(odd_plane(n).rules) + 1
        assert (2 * n - 1, 2 * n) in even_sphere(n).rules
        assert (2 * n - 1, 2 * n) not in odd_plane(n).rules


def test_normal_words():
    A = even_sphere(1)
    assert A.is_normal(A.word_from(["t", "a1*"]))
    assert not A.is_normal(A.word_from(["a1", "t"]))
    assert not A.is_normal(A.word_from(["a1*", "a1"]))
    assert odd_plane(1).is_normal(odd_plane(1).word_from(["x1*", "x1"]))


# ============================================================================
# Lookup
# ============================================================================


def test_factories_are_cached():
    assert even_sphere(2) is even_sphere(2)
    assert get_preset("EvenSphere", 2) is even_sphere(2)
    assert get_preset(PresetKind.ODD_PLANE, 3) is odd_plane(3)


def test_lookup_is_case_insensitive():
    assert get_preset("podlesproductpower", 2) is podles_product_power(2)


def test_podles_sphere_is_single_copy():
    A = get_preset("PodlesSphere")
    assert A is podles_sphere()
    assert A.label == "PodlesSphere"
    assert A.kind is PresetKind.PODLES_SPHERE
    assert A.names == podles_product_power(1).names
    assert dict(A.rules) == dict(podles_product_power(1).rules)


def test_podles_sphere_rejects_n_above_one():
    with pytest.raises(PresetMismatchError):
        get_preset("PodlesSphere", 2)


def test_unknown_kind_raises():
    with pytest.raises(ValueError, match="Valid presets"):
        get_preset("Torus", 1)


@pytest.mark.parametrize("n", [0, -1])
def test_non_positive_n_raises(n):
    with pytest.raises(ValueError):
        even_sphere(n)


def test_corrupted_preset_changes_one_rule():
    base = even_sphere(1)
    broken = corrupted_preset(base)
    changed = [key for key in base.rules if base.rules[key] != broken.rules[key]]
    assert len(changed) == 1
    assert broken.label == "EvenSphere(1)[corrupted]"
    assert broken is not base
