"""
Certificate models for exact symbolic checks.

ConfluenceReport records the overlap ambiguities of a rewrite system that failed
to resolve. ResidualEntry/ResidualTable carry exact residual polynomials in their
canonical text form, one entry per checked generator pair or triple.
"""

from typing import List

from pydantic import BaseModel, Field


class OverlapFailure(BaseModel):
    """An overlap word whose two one-step reductions normalize differently."""

    word: str = Field(..., description="Overlap word, e.g. 'a1* * a1 * t'")
    left: str = Field(..., description="Normal form after rewriting the left pair first")
    right: str = Field(..., description="Normal form after rewriting the right pair first")


class ConfluenceReport(BaseModel):
    """
    Result of the local-confluence check of a preset.

    An empty `unresolved` list certifies local confluence of the rule table.
    """

    preset: str = Field(..., description="Preset label")
    rules: int = Field(..., ge=0, description="Number of rewrite rules")
    overlaps_checked: int = Field(..., ge=0, description="Number of overlap words examined")
    unresolved: List[OverlapFailure] = Field(default_factory=list)

    @property
    def is_confluent(self) -> bool:
        return not self.unresolved


class ResidualEntry(BaseModel):
    """Exact residual of one generator-level identity."""

    label: str = Field(..., description="Generator pair or triple, e.g. '(a1, a1*)'")
    residual: str = Field(..., description="Residual polynomial in canonical text ('0' if exact)")
    terms: int = Field(..., ge=0, description="Number of nonzero terms in the residual")

    @property
    def is_zero(self) -> bool:
        return self.terms == 0

    def to_dict(self) -> dict:
        return {"pair": self.label, "residual_polynomial": self.residual}


class ResidualTable(BaseModel):
    """Collection of residual entries produced by one symbolic check."""

    check: str = Field(..., description="Name of the check, e.g. 'poisson-map'")
    entries: List[ResidualEntry] = Field(default_factory=list)

    @property
    def all_zero(self) -> bool:
        return all(entry.is_zero for entry in self.entries)

    @property
    def max_terms(self) -> int:
        """Largest number of surviving terms (0 when every residual vanishes)."""
        return max((entry.terms for entry in self.entries), default=0)

    def nonzero(self) -> List[ResidualEntry]:
        return [entry for entry in self.entries if not entry.is_zero]
