"""Noncommutative polynomial algebras with confluent normal-form rewriting."""

from src.ncalg.confluence import check_local_confluence
from src.ncalg.generators import Family, GeneratorId, PresetKind
from src.ncalg.ncpoly import (
    NCPoly,
    commutator,
    epsilon,
    modulus_element,
    normalize,
    rename_preset,
    star,
)
from src.ncalg.presets import (
    AlgebraPreset,
    Word,
    corrupted_preset,
    even_sphere,
    get_preset,
    odd_plane,
    podles_product_power,
    podles_sphere,
)
from src.ncalg.rewriting import reduce_word, rewrite_height, step_budget

__all__ = [
    "AlgebraPreset",
    "Family",
    "GeneratorId",
    "NCPoly",
    "PresetKind",
    "Word",
    "check_local_confluence",
    "commutator",
    "corrupted_preset",
    "epsilon",
    "even_sphere",
    "get_preset",
    "modulus_element",
    "normalize",
    "odd_plane",
    "podles_product_power",
    "podles_sphere",
    "reduce_word",
    "rename_preset",
    "rewrite_height",
    "star",
    "step_budget",
]
