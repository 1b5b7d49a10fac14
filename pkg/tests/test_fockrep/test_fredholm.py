"""
Unit tests for the truncated Fredholm module (src/fockrep/fredholm.py).
"""

import numpy as np
import pytest

from src.exceptions import PresetMismatchError
from src.fockrep import FredholmModule, char_trace
from src.ncalg import NCPoly, even_sphere


@pytest.fixture
def module():
    return FredholmModule(1, 0.5, 30)


def test_dimension(module):
    assert module.dim == 60
    assert FredholmModule(2, 0.5, 5).dim == 50


def test_flip_and_grading(module):
    flip = module.flip.toarray()
    grading = module.grading.toarray()
    np.testing.assert_allclose(flip @ flip, np.eye(module.dim))
    np.testing.assert_allclose(grading @ flip, -flip @ grading)


def test_character_of_t(module):
    t = NCPoly.generator(module.preset, "t")
    assert module.character(t) == pytest.approx(4 / 3, abs=1e-12)


def test_character_matches_trace():
    module = FredholmModule(2, 0.5, 20)
    A = module.preset
    f = NCPoly.generator(A, "a1*") * NCPoly.generator(A, "a1") + 2 * NCPoly.generator(A, "t")
    assert module.character(f) == pytest.approx(char_trace(f, 0.5, 20).value, rel=1e-12)


def test_character_ignores_constants(module):
    t = NCPoly.generator(module.preset, "t")
    assert module.character(NCPoly.one(module.preset)) == 0.0
    assert module.character(t + 3) == pytest.approx(module.character(t), abs=1e-12)


def test_commutator_is_off_diagonal(module):
    t = NCPoly.generator(module.preset, "t")
    commutator = module.commutator(t).toarray()
    half = module.dim // 2
    assert np.abs(commutator[:half, :half]).max() == 0.0
    assert np.abs(commutator[half:, half:]).max() == 0.0


def test_pi_rejects_other_presets(module):
    with pytest.raises(PresetMismatchError):
        module.pi(NCPoly.generator(even_sphere(2), "t"))
