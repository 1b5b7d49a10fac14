"""
Unit tests for report export (src/utils/exporters.py).

Tests cover stem generation, CSV and JSON output, directory creation, empty
reports and unique stems for rapid consecutive exports.
"""

import json
import time
from pathlib import Path

import pandas as pd
import pytest

from src.models import CaseResult, VerificationReport
from src.utils.exporters import ReportExporter


# ============================================================================
# Fixtures
# ============================================================================


@pytest.fixture
def sample_report():
    """
    Report with one passing and one failing case.

    Returns:
        VerificationReport: Two cases, one with a missing residual
    """
    return VerificationReport(
        suite="traces",
        n=2,
        cases=[
            CaseResult(id="n=2:t", status="pass", residual=1e-16, bound=1e-20),
            CaseResult(id="n=2:a1* a1", status="fail", residual_text="q^2 * t", detail="nonzero"),
        ],
    )


@pytest.fixture
def exporter(tmp_path):
    """
    ReportExporter writing into a temporary directory.

    Returns:
        ReportExporter: Exporter configured with temp directory
    """
    return ReportExporter(export_dir=tmp_path / "reports")


# ============================================================================
# Core Functionality Tests
# ============================================================================


def test_generate_stem_format():
    """Test stem format prefix_YYYY-MM-DD_HH-MM-SS-microseconds."""
    stem = ReportExporter.generate_stem("semiclassical")

    assert stem.startswith("semiclassical_")
    timestamp_part = stem[len("semiclassical") + 1 :]

    assert len(timestamp_part) == 26
    assert timestamp_part[4] == "-"
    assert timestamp_part[7] == "-"
    assert timestamp_part[10] == "_"
    assert timestamp_part[13] == "-"
    assert timestamp_part[16] == "-"
    assert timestamp_part[19] == "-"
    assert timestamp_part[20:].isdigit()


def test_generate_stem_sanitizes_prefix():
    stem = ReportExporter.generate_stem("all/poisson map")
    assert stem.startswith("all-poisson_map_")


def test_default_directory_comes_from_settings():
    from src.config import settings

    assert ReportExporter().export_dir == settings.reports_dir


def test_export_report_writes_both_files(exporter, sample_report):
    csv_path, json_path = exporter.export_report(sample_report)

    assert csv_path.exists() and json_path.exists()
    assert csv_path.suffix == ".csv"
    assert json_path.suffix == ".json"
    assert csv_path.stem == json_path.stem
    assert csv_path.parent == exporter.export_dir


def test_csv_has_one_row_per_case(exporter, sample_report):
    csv_path, _ = exporter.export_report(sample_report)

    read_df = pd.read_csv(csv_path)
    assert len(read_df) == 2
    assert list(read_df.columns) == list(sample_report.to_dataframe().columns)
    assert set(read_df["status"]) == {"pass", "fail"}


def test_missing_values_are_empty(exporter, sample_report):
    """Test unset measurements are written as empty fields, not 'None' or 'NaN'."""
    csv_path, _ = exporter.export_report(sample_report)

    content = csv_path.read_text(encoding="utf-8")
    assert "NaN" not in content
    assert "None" not in content


def test_json_matches_report(exporter, sample_report):
    _, json_path = exporter.export_report(sample_report)

    data = json.loads(json_path.read_text(encoding="utf-8"))
    assert data["suite"] == "traces"
    assert data["status"] == "fail"
    assert data["n"] == 2
    assert [case["id"] for case in data["cases"]] == ["n=2:a1* a1", "n=2:t"]


def test_export_directory_creation(tmp_path, sample_report):
    """Test automatic creation of nested export directories."""
    export_dir = tmp_path / "new" / "nested" / "directory"
    exporter = ReportExporter(export_dir=export_dir)
    assert not export_dir.exists()

    csv_path, _ = exporter.export_report(sample_report)

    assert export_dir.is_dir()
    assert csv_path.exists()


# ============================================================================
# Edge Case Tests
# ============================================================================


def test_export_empty_report_raises_error(exporter):
    """Test that a report without cases cannot be exported."""
    with pytest.raises(ValueError, match="empty"):
        exporter.export_report(VerificationReport(suite="jacobi"))


def test_export_csv_rejects_empty_dataframe(exporter):
    with pytest.raises(ValueError, match="empty"):
        exporter.export_csv(pd.DataFrame(columns=["id", "status"]), "stem")


def test_unwritable_directory_raises_ioerror(tmp_path, sample_report):
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")
    exporter = ReportExporter(export_dir=blocker / "reports")

    with pytest.raises(IOError):
        exporter.export_report(sample_report)


def test_json_payload_with_non_serializable_values(exporter):
    path = exporter.export_json({"path": Path("/tmp/x"), "value": 1.5}, "payload")
    assert json.loads(path.read_text(encoding="utf-8")) == {"path": "/tmp/x", "value": 1.5}


# ============================================================================
# Advanced Tests
# ============================================================================


def test_consecutive_exports_unique_stems(exporter, sample_report):
    """Test that rapid consecutive exports generate unique file names."""
    names = set()
    for _ in range(3):
        names.add(exporter.export_report(sample_report)[0].name)
        time.sleep(0.001)

    assert len(names) == 3
    for name in names:
        assert (exporter.export_dir / name).exists()
