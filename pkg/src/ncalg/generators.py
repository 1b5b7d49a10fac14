"""
Generator identities and preset kinds for the noncommutative algebras.

A generator is identified by its family (t-like, a*-like, a-like) and, for the
a-families and product copies, a 1-based index. Within a preset every generator
also has a rank: its position in the word order used by the rewriting system.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional


class Family(str, Enum):
    """Generator family. The star map exchanges A and A_STAR and fixes T."""

    T = "t"
    A_STAR = "a*"
    A = "a"

    @property
    def starred(self) -> "Family":
        if self is Family.A:
            return Family.A_STAR
        if self is Family.A_STAR:
            return Family.A
        return Family.T


class PresetKind(str, Enum):
    """The four algebra presets."""

    PODLES_SPHERE = "PodlesSphere"
    PODLES_PRODUCT_POWER = "PodlesProductPower"
    EVEN_SPHERE = "EvenSphere"
    ODD_PLANE = "OddPlane"

    @classmethod
    def parse(cls, text: str) -> "PresetKind":
        """
        Look up a preset kind by its name, case-insensitively.

        Raises:
            ValueError: If the name is unknown
        """
        wanted = text.strip().lower()
        for kind in cls:
            if kind.value.lower() == wanted:
                return kind
        valid = ", ".join(kind.value for kind in cls)
        raise ValueError(f"Unknown preset '{text}'. Valid presets: {valid}")


@dataclass(frozen=True)
class GeneratorId:
    """
    One generator of an algebra preset.

    Attributes:
        family: t-like, a*-like or a-like
        index: 1-based index (None for the single t-like generator of sphere presets)
    """

    family: Family
    index: Optional[int] = None

    def star(self) -> "GeneratorId":
        """Return the starred generator (an involution)."""
        return GeneratorId(self.family.starred, self.index)
