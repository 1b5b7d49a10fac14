"""
Data models package.

Pydantic models for verification reports, exact certificates and numeric results.
"""

from .certificates import ConfluenceReport, OverlapFailure, ResidualEntry, ResidualTable
from .numerics import ClassicalProjector, StructureMatrixPoint, TailBound
from .report import REPORT_SCHEMA_VERSION, CaseResult, VerificationReport, merge_reports

__all__ = [
    "CaseResult",
    "ClassicalProjector",
    "ConfluenceReport",
    "OverlapFailure",
    "REPORT_SCHEMA_VERSION",
    "ResidualEntry",
    "ResidualTable",
    "StructureMatrixPoint",
    "TailBound",
    "VerificationReport",
    "merge_reports",
]
