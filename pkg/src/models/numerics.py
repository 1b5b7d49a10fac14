"""
Numeric result models.

TailBound is the result of every truncated trace computation; StructureMatrixPoint
and ClassicalProjector hold dense numpy matrices evaluated at a point together
with their diagnostics.
"""

from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


class TailBound(BaseModel):
    """
    A truncated trace value with a rigorous bound on the discarded tail.

    Attributes:
        value: Trace over the truncated Fock space
        bound: Upper bound on |infinite trace - value| from the geometric tail
        roundoff: Estimate of the floating-point summation error
    """

    model_config = ConfigDict(frozen=True)

    value: float = Field(..., description="Truncated trace")
    bound: float = Field(..., ge=0, description="Truncation error bound")
    roundoff: float = Field(0.0, ge=0, description="Floating-point summation error estimate")

    def contains(self, target: float) -> bool:
        """True if target lies within bound + roundoff of value."""
        return abs(self.value - target) <= self.bound + self.roundoff

    def __add__(self, other: "TailBound") -> "TailBound":
        return TailBound(
            value=self.value + other.value,
            bound=self.bound + other.bound,
            roundoff=self.roundoff + other.roundoff,
        )

    def to_dict(self) -> dict:
        return {"value": self.value, "tail_bound": self.bound, "roundoff": self.roundoff}


class StructureMatrixPoint(BaseModel):
    """
    Chart brackets {w_i, w_j} evaluated at a point, with w = (z_1, z1*, z_2, z2*, ...).
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(..., ge=1, description="Number of complex coordinates")
    point: List[complex] = Field(..., description="Values z_1..z_n")
    matrix: np.ndarray = Field(..., description="2n x 2n antisymmetric complex matrix")

    @field_validator("matrix")
    @classmethod
    def validate_antisymmetric(cls, value: np.ndarray) -> np.ndarray:
        """
        Validate the matrix is square and antisymmetric.

        Raises:
            ValueError: If the shape is wrong or S + S^T is not (numerically) zero
        """
        if value.ndim != 2 or value.shape[0] != value.shape[1]:
            raise ValueError(f"Structure matrix must be square, got shape {value.shape}")
        scale = max(1.0, float(np.abs(value).max(initial=0.0)))
        if np.abs(value + value.T).max(initial=0.0) > 1e-12 * scale:
            raise ValueError("Structure matrix must be antisymmetric")
        return value

    def determinant(self) -> complex:
        return complex(np.linalg.det(self.matrix))


class ClassicalProjector(BaseModel):
    """
    The classical projector G at a point of the even sphere, with diagnostics.

    Attributes:
        matrix: 2^n x 2^n complex matrix
        idempotency_defect: Frobenius norm of G^2 - G
        trace: Real part of Tr G (the vector-bundle rank, 2^(n-1))
        rank: Numerical rank of G
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(..., ge=1)
    matrix: np.ndarray
    idempotency_defect: float = Field(..., ge=0)
    trace: float
    rank: int = Field(..., ge=0)
