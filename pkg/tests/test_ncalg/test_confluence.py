"""
Unit tests for the local-confluence checker (src/ncalg/confluence.py).
"""

import pytest

from src.ncalg import (
    check_local_confluence,
    corrupted_preset,
    even_sphere,
    odd_plane,
    podles_product_power,
    podles_sphere,
)


@pytest.mark.parametrize(
    "factory, n",
    [
        (even_sphere, 1),
        (even_sphere, 2),
        (even_sphere, 3),
        (odd_plane, 1),
        (odd_plane, 2),
        (odd_plane, 3),
        (podles_product_power, 1),
        (podles_product_power, 2),
    ],
)
def test_presets_are_locally_confluent(factory, n):
    report = check_local_confluence(factory(n))
    assert report.is_confluent, report.unresolved
    assert report.overlaps_checked > 0
    assert report.rules == len(factory(n).rules)


def test_podles_sphere_is_locally_confluent():
    report = check_local_confluence(podles_sphere())
    assert report.is_confluent
    assert report.preset == "PodlesSphere"


def test_corrupted_preset_is_detected():
    report = check_local_confluence(corrupted_preset(even_sphere(1)))
    assert not report.is_confluent
    failure = report.unresolved[0]
    assert failure.left != failure.right
    assert "a1" in failure.word


def test_corrupted_product_preset_is_detected():
    assert not check_local_confluence(corrupted_preset(podles_product_power(1))).is_confluent
