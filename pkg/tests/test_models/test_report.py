"""
Unit tests for the verification report models (src/models/report.py).
"""

from datetime import datetime

import pandas as pd
import pytest
from pydantic import ValidationError

from src.models import REPORT_SCHEMA_VERSION, CaseResult, VerificationReport, merge_reports


# ============================================================================
# Fixtures
# ============================================================================


@pytest.fixture
def passing_case():
    return CaseResult(id="n=1:(a1,t)", status="pass", residual_text="0", runtime=0.002)


@pytest.fixture
def failing_case():
    return CaseResult(
        id="n=1:(a1,a1*)",
        status="fail",
        residual=0.5,
        bound=1e-12,
        detail="residual exceeds tolerance",
    )


@pytest.fixture
def report(passing_case, failing_case):
    return VerificationReport(suite="semiclassical", n=1, cases=[passing_case, failing_case])


# ============================================================================
# CaseResult
# ============================================================================


def test_case_passed(passing_case, failing_case):
    assert passing_case.passed
    assert not failing_case.passed


def test_case_to_dict_omits_unset_fields(passing_case):
    assert passing_case.to_dict() == {
        "id": "n=1:(a1,t)",
        "status": "pass",
        "runtime": 0.002,
        "residual_text": "0",
    }


def test_case_to_dict_keeps_measurements(failing_case):
    data = failing_case.to_dict()
    assert data["residual"] == 0.5
    assert data["bound"] == 1e-12
    assert data["detail"] == "residual exceeds tolerance"
    assert "residual_text" not in data


@pytest.mark.parametrize(
    "fields",
    [
        {"id": "", "status": "pass"},
        {"id": "x", "status": "maybe"},
        {"id": "x", "status": "pass", "residual": -1.0},
        {"id": "x", "status": "pass", "runtime": -0.1},
    ],
)
def test_case_validation(fields):
    with pytest.raises(ValidationError):
        CaseResult(**fields)


# ============================================================================
# VerificationReport
# ============================================================================


def test_cases_sorted_by_id(report):
    assert [case.id for case in report.cases] == ["n=1:(a1,a1*)", "n=1:(a1,t)"]


def test_status_fails_when_any_case_fails(report, passing_case):
    assert report.status == "fail"
    assert not report.passed
    assert [case.id for case in report.failures] == ["n=1:(a1,a1*)"]
    assert VerificationReport(suite="traces", cases=[passing_case]).passed


def test_empty_report_passes():
    assert VerificationReport(suite="jacobi").status == "pass"


def test_to_dict(report):
    data = report.to_dict()
    assert data["schema"] == REPORT_SCHEMA_VERSION
    assert data["suite"] == "semiclassical"
    assert data["status"] == "fail"
    assert data["n"] == 1
    assert len(data["cases"]) == 2
    datetime.fromisoformat(data["created_at"])


def test_schema_alias():
    report = VerificationReport(suite="gram", schema=7)
    assert report.schema_version == 7


def test_to_dataframe(report):
    df = report.to_dataframe()
    assert isinstance(df, pd.DataFrame)
    assert list(df.columns) == [
        "suite",
        "n",
        "id",
        "status",
        "residual",
        "residual_text",
        "bound",
        "runtime",
        "detail",
    ]
    assert len(df) == 2
    assert (df["suite"] == "semiclassical").all()


def test_empty_dataframe_has_columns():
    df = VerificationReport(suite="traces").to_dataframe()
    assert df.empty
    assert "status" in df.columns


# ============================================================================
# merge_reports
# ============================================================================


def test_merge_prefixes_ids(report, passing_case):
    other = VerificationReport(suite="traces", n=1, cases=[passing_case])
    merged = merge_reports("all", [report, other])
    assert merged.suite == "all"
    assert merged.n == 1
    assert [case.id for case in merged.cases] == [
        "semiclassical/n=1:(a1,a1*)",
        "semiclassical/n=1:(a1,t)",
        "traces/n=1:(a1,t)",
    ]
    assert merged.status == "fail"


def test_merge_mixed_dimensions_drops_n(passing_case):
    first = VerificationReport(suite="gram", n=1, cases=[passing_case])
    second = VerificationReport(suite="gram", n=2, cases=[passing_case])
    assert merge_reports("all", [first, second]).n is None
