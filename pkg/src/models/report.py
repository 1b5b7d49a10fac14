"""
Verification report models.

This module defines the CaseResult and VerificationReport Pydantic models used by
every verification suite, with serialization to dictionaries (JSON output) and
pandas DataFrames (CSV export).
"""

from datetime import datetime
from typing import List, Literal, Optional

import pandas as pd
from pydantic import BaseModel, Field, computed_field, field_validator

Status = Literal["pass", "fail"]

REPORT_SCHEMA_VERSION = 1


class CaseResult(BaseModel):
    """
    Outcome of one verification case.

    A case carries either an exact residual (rendered as text, "0" when it vanishes),
    a numeric residual, a numeric bound, or several of these.
    """

    id: str = Field(..., min_length=1, description="Stable case identifier, e.g. 'n=2:(a1,t)'")
    status: Status = Field(..., description="pass or fail")
    residual: Optional[float] = Field(None, ge=0, description="Numeric residual (norm or |error|)")
    residual_text: Optional[str] = Field(None, description="Exact residual in canonical text")
    bound: Optional[float] = Field(None, ge=0, description="Tail bound or tolerance applied")
    runtime: float = Field(0.0, ge=0, description="Wall-clock seconds spent on the case")
    detail: Optional[str] = Field(None, description="Free-form note (error message on failure)")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        """
        Convert the case to a JSON-ready dictionary, omitting unset optional fields.

        Returns:
            Dictionary with id, status, runtime and whichever measurements are present
        """
        data = {"id": self.id, "status": self.status, "runtime": round(self.runtime, 6)}
        for key in ("residual", "residual_text", "bound", "detail"):
            value = getattr(self, key)
            if value is not None:
                data[key] = value
        return data


class VerificationReport(BaseModel):
    """
    Result table of one verification suite.

    The overall status is "pass" exactly when every case passes (an empty suite passes).
    """

    suite: str = Field(..., min_length=1, description="Suite name, e.g. 'semiclassical'")
    n: Optional[int] = Field(None, ge=1, description="Dimension parameter the suite ran with")
    cases: List[CaseResult] = Field(default_factory=list, description="Case results by id")
    schema_version: int = Field(REPORT_SCHEMA_VERSION, alias="schema", description="Report schema")
    created_at: datetime = Field(default_factory=datetime.now, description="Creation timestamp")

    model_config = {"populate_by_name": True}

    @field_validator("cases")
    @classmethod
    def sort_cases(cls, value: List[CaseResult]) -> List[CaseResult]:
        """
        Order cases by id so concurrently produced reports compare equal.

        Args:
            value: Cases in completion order

        Returns:
            Cases sorted by id
        """
        return sorted(value, key=lambda case: case.id)

    @computed_field  # type: ignore[misc]
    @property
    def status(self) -> Status:
        return "pass" if all(case.passed for case in self.cases) else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failures(self) -> List[CaseResult]:
        return [case for case in self.cases if not case.passed]

    def to_dict(self) -> dict:
        """
        Convert the report to the versioned JSON structure.

        Returns:
            Dictionary with schema, suite, status, n, created_at and the case list
        """
        return {
            "schema": self.schema_version,
            "suite": self.suite,
            "status": self.status,
            "n": self.n,
            "created_at": self.created_at.isoformat(),
            "cases": [case.to_dict() for case in self.cases],
        }

    def to_dataframe(self) -> pd.DataFrame:
        """
        Flatten the report into one row per case.

        Returns:
            DataFrame with columns suite, n, id, status, residual, residual_text,
            bound, runtime, detail
        """
        columns = ["suite", "n", "id", "status", "residual", "residual_text", "bound", "runtime", "detail"]
        rows = [
            {"suite": self.suite, "n": self.n, **case.model_dump()}
            for case in self.cases
        ]
        return pd.DataFrame(rows, columns=columns)


def merge_reports(suite: str, reports: List[VerificationReport]) -> VerificationReport:
    """
    Combine several suite reports into one, prefixing case ids with the suite name.

    Args:
        suite: Name of the combined report (e.g. "all")
        reports: Reports to merge

    Returns:
        Report whose status is pass iff every merged case passes
    """
    cases = []
    for report in reports:
        for case in report.cases:
            cases.append(case.model_copy(update={"id": f"{report.suite}/{case.id}"}))
    n_values = {report.n for report in reports}
    return VerificationReport(suite=suite, n=n_values.pop() if len(n_values) == 1 else None, cases=cases)
