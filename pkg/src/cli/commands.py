"""
Validated command options for the qsuspend command line.

A Command is built from parsed argparse options and validated before dispatch:
numeric options are range-checked, q is parsed as an exact rational or a float,
and the fields each command needs are required.
"""

import json
from fractions import Fraction
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from src.config import settings
from src.ncalg import AlgebraPreset, get_preset
from src.poisson import PoissonKind, PoissonStructure, get_structure
from src.scalars import parse_q
from src.semiclassical import classical_structure_for

CommandName = Literal[
    "normalize",
    "commutator",
    "bracket",
    "rep",
    "trace",
    "projector",
    "pair",
    "verify",
    "confluence",
    "jacobi",
    "pfaffian",
    "classical",
]

SUITE_NAMES = (
    "confluence",
    "jacobi",
    "poisson-map",
    "constraint",
    "semiclassical",
    "relations",
    "lowering",
    "gram",
    "lemma",
    "defect",
    "idempotency",
    "traces",
    "pairings",
    "pfaffian",
)

_NEEDS_EXPR = ("normalize", "commutator", "bracket", "rep", "trace")
_NEEDS_TWO_EXPRS = ("commutator", "bracket")
_NEEDS_POINT = ("pfaffian", "classical")
MIN_MARGIN = 2


class Command(BaseModel):
    """
    One command-line invocation.

    Attributes:
        command: Command name
        preset: Quantum preset kind, or Poisson structure for bracket/jacobi
        n: Dimension parameter
        q: Deformation parameter text, "p/r" (exact) or a float
        trunc: Fock levels per tensor factor
        margin: Safe-subspace margin for relation checks
        seed: Seed for randomized suites
        format: Output format
    """

    command: CommandName
    preset: str = Field("EvenSphere", description="Preset or Poisson structure name")
    n: int = Field(1, ge=1, description="Dimension parameter")
    q: str = Field(default_factory=lambda: settings.default_q, description="Deformation parameter")
    trunc: int = Field(default_factory=lambda: settings.default_trunc, ge=2, description="Fock levels")
    margin: int = Field(default_factory=lambda: settings.default_margin, description="Safe-subspace margin")
    seed: int = Field(default_factory=lambda: settings.random_seed, description="Random seed")
    format: Literal["text", "json"] = Field("json", description="Output format")
    strategy: Literal["leftmost", "rightmost"] = Field("leftmost", description="Redex strategy")
    expr: Optional[str] = Field(None, description="Expression")
    expr2: Optional[str] = Field(None, description="Second expression (commutator, bracket)")
    k: Optional[int] = Field(None, ge=0, description="Projector level over the odd plane")
    suite: Optional[str] = Field(None, description="Verification suite or 'all'")
    point: Optional[str] = Field(None, description="Point as JSON")
    via: Literal["scalar", "matrix"] = Field("scalar", description="Charge pairing path")

    @field_validator("q")
    @classmethod
    def validate_q(cls, v: str) -> str:
        """
        Validate q parses and lies strictly between 0 and 1.

        Raises:
            ValueError: If q is malformed or out of range
        """
        value = parse_q(v)
        if not 0 < value < 1:
            raise ValueError(f"q must lie strictly between 0 and 1, got {v}")
        return v.strip()

    @field_validator("margin")
    @classmethod
    def validate_margin(cls, v: int) -> int:
        """
        Validate the relation-check margin.

        Relations are words of length 2, so both sides stay inside the truncation
        only on multi-indices at least 2 levels below it.

        Raises:
            ValueError: If the margin is smaller than 2
        """
        if v < MIN_MARGIN:
            raise ValueError(f"margin must be at least {MIN_MARGIN}, got {v}")
        return v

    @field_validator("suite")
    @classmethod
    def validate_suite(cls, v: Optional[str]) -> Optional[str]:
        if v is None:
            return v
        name = v.strip().lower()
        if name != "all" and name not in SUITE_NAMES:
            raise ValueError(f"Unknown suite '{v}'. Valid suites: all, {', '.join(SUITE_NAMES)}")
        return name

    @model_validator(mode="after")
    def validate_required(self) -> "Command":
        """
        Check that the options the command needs are present.

        Raises:
            ValueError: If a required option is missing
        """
        if self.command in _NEEDS_EXPR and not self.expr:
            raise ValueError(f"'{self.command}' needs --expr")
        if self.command in _NEEDS_TWO_EXPRS and not self.expr2:
            raise ValueError(f"'{self.command}' needs --expr2")
        if self.command == "verify" and not self.suite:
            raise ValueError("'verify' needs a suite name")
        if self.command in _NEEDS_POINT and not self.point:
            raise ValueError(f"'{self.command}' needs --point")
        if self.k is not None and self.k > self.n:
            raise ValueError(f"k = {self.k} exceeds n = {self.n}")
        return self

    # ---- resolved values ----

    @property
    def q_value(self) -> Union[Fraction, float]:
        """q as an exact Fraction when given as p/r, otherwise a float."""
        return parse_q(self.q)

    @property
    def q_float(self) -> float:
        return float(self.q_value)

    def algebra(self) -> AlgebraPreset:
        """The quantum preset named by --preset and --n."""
        return get_preset(self.preset, self.n)

    def structure(self) -> PoissonStructure:
        """
        The Poisson structure named by --preset, or the classical limit of a quantum preset.
        """
        try:
            kind = PoissonKind.parse(self.preset)
        except ValueError:
            return classical_structure_for(self.algebra())
        return get_structure(kind, self.n)

    def point_values(self) -> Union[List, dict]:
        """
        Decode --point JSON.

        Raises:
            ValueError: If the JSON is malformed
        """
        try:
            return json.loads(self.point or "null")
        except json.JSONDecodeError as e:
            raise ValueError(f"--point is not valid JSON: {e}") from e
