"""Semiclassical limit of the quantum algebras and its comparison with the classical brackets."""

from src.semiclassical.limit import (
    DequantizationMap,
    classical_structure_for,
    semiclassical_bracket,
    verify_semiclassical,
)

__all__ = [
    "DequantizationMap",
    "classical_structure_for",
    "semiclassical_bracket",
    "verify_semiclassical",
]
