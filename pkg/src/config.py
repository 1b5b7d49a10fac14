"""
Configuration management using Pydantic settings.

This module provides a centralized configuration system that loads settings from
environment variables (prefix ``QSUSPEND_``) and .env files. All settings are
validated at startup and immutable after initialization.

Usage:
    from src.config import settings

    workers = settings.threads
    report_path = settings.reports_dir / "verify_all.json"
"""

from fractions import Fraction
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.

    Settings are loaded from environment variables and .env files, with
    environment variables taking precedence. All settings are immutable after
    initialization.

    Attributes:
        threads: Maximum number of worker threads used by the verification runner
        default_q: Deformation parameter used when a command omits --q
        default_trunc: Levels per Fock factor used when a command omits --trunc
        default_margin: Safe-subspace margin for relation checks
        float_tolerance: Acceptance tolerance for float checks (Gram, lowering, homomorphism)
        relation_tolerance: Acceptance tolerance for represented relations and adjointness
        random_seed: Seed shared by all randomized suites
        random_samples: Number of random expressions per preset in strategy-independence checks
        step_budget_factor: Rewrite height must stay below factor * (len + 1)^2
        project_root: Root directory of the project
        data_dir: Main data directory
        reports_dir: Directory for exported verification reports
    """

    # ============================================================================
    # Runner
    # ============================================================================

    threads: int = Field(4, description="Maximum worker threads for verification suites")

    # ============================================================================
    # Numerical defaults
    # ============================================================================

    default_q: str = Field("1/2", description='Default deformation parameter, "p/r" or float')

    default_trunc: int = Field(40, description="Default Fock truncation (levels per factor)")

    default_margin: int = Field(4, description="Default safe-subspace margin")

    float_tolerance: float = Field(1e-10, description="Tolerance for float identities")

    relation_tolerance: float = Field(1e-12, description="Tolerance for represented relations")

    # ============================================================================
    # Randomized checks
    # ============================================================================

    random_seed: int = Field(20240521, description="Seed for randomized suites")

    random_samples: int = Field(
        1000, description="Random expressions per preset for strategy independence"
    )

    step_budget_factor: int = Field(
        8, description="Rewrite height budget factor: height <= factor * (len + 1)^2"
    )

    # ============================================================================
    # Paths (computed from project root)
    # ============================================================================

    project_root: Path = Field(
        default_factory=lambda: Path(__file__).parent.parent.resolve(),
        description="Root directory of the project",
    )

    data_dir: Optional[Path] = Field(
        None, description="Main data directory (auto-computed from project_root)"
    )

    reports_dir: Optional[Path] = Field(None, description="Directory for exported reports")

    # ============================================================================
    # Configuration
    # ============================================================================

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="QSUSPEND_",
        case_sensitive=False,
        frozen=True,  # Make settings immutable after initialization
        extra="forbid",  # Forbid extra fields
    )

    def __init__(self, **kwargs):
        """
        Initialize settings and compute derived paths.

        Using object.__setattr__ because the model is frozen.
        """
        super().__init__(**kwargs)

        if self.data_dir is None:
            object.__setattr__(self, "data_dir", self.project_root / "data")
        if self.reports_dir is None:
            object.__setattr__(self, "reports_dir", self.data_dir / "reports")

    # ============================================================================
    # Validators
    # ============================================================================

    @field_validator("threads", "step_budget_factor", "random_samples")
    @classmethod
    def validate_positive_int(cls, v: int) -> int:
        """
        Validate counters that must be at least 1.

        Raises:
            ValueError: If value is smaller than 1
        """
        if v < 1:
            raise ValueError(f"Value must be at least 1, got {v}")
        return v

    @field_validator("default_margin")
    @classmethod
    def validate_default_margin(cls, v: int) -> int:
        """
        Validate the relation-check margin.

        Raises:
            ValueError: If the margin is smaller than 2
        """
        if v < 2:
            raise ValueError(f"default_margin must be at least 2, got {v}")
        return v

    @field_validator("default_trunc")
    @classmethod
    def validate_default_trunc(cls, v: int) -> int:
        """
        Validate truncation level.

        Raises:
            ValueError: If fewer than 2 levels are requested
        """
        if v < 2:
            raise ValueError(f"default_trunc must be at least 2, got {v}")
        return v

    @field_validator("float_tolerance", "relation_tolerance")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        """
        Validate tolerances are strictly positive.

        Raises:
            ValueError: If tolerance is not positive
        """
        if v <= 0:
            raise ValueError(f"Tolerance must be greater than 0, got {v}")
        return v

    @field_validator("default_q")
    @classmethod
    def validate_default_q(cls, v: str) -> str:
        """
        Validate the default deformation parameter lies in (0, 1).

        Accepts "p/r" rationals and decimal floats.

        Raises:
            ValueError: If the text does not parse or lies outside (0, 1)
        """
        text = v.strip()
        try:
            value = Fraction(text) if "/" in text else float(text)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"default_q must be a rational or float, got '{v}'") from e
        if not (0 < value < 1):
            raise ValueError(f"default_q must lie strictly between 0 and 1, got {v}")
        return text


# ============================================================================
# Singleton Instance
# ============================================================================

settings = Settings()
