"""
Export utilities for verification reports.

Reports are written as a pair of files sharing one timestamped stem: a CSV with
one row per case (through VerificationReport.to_dataframe) and a JSON file with
the versioned report structure.

Usage:
    from src.utils.exporters import ReportExporter

    exporter = ReportExporter()
    csv_path, json_path = exporter.export_report(report)
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Optional, Tuple

import pandas as pd

from src.config import settings
from src.models.report import VerificationReport

logger = logging.getLogger(__name__)


class ReportExporter:
    """
    Write verification reports to timestamped CSV and JSON files.

    Attributes:
        export_dir: Directory where report files are written

    Example:
        >>> exporter = ReportExporter(Path("reports"))
        >>> csv_path, json_path = exporter.export_report(report)
        >>> print(csv_path.name)
        semiclassical_2024-01-15_14-30-45-123456.csv
    """

    def __init__(self, export_dir: Optional[Path] = None):
        self.export_dir = settings.reports_dir if export_dir is None else Path(export_dir)
        logger.debug(f"ReportExporter initialized with export_dir: {self.export_dir}")

    @staticmethod
    def generate_stem(prefix: str) -> str:
        """
        Timestamped file stem {prefix}_YYYY-MM-DD_HH-MM-SS-ffffff.

        Microseconds keep stems unique for reports exported in quick succession.
        """
        now = datetime.now()
        safe_prefix = prefix.replace("/", "-").replace(" ", "_")
        return f"{safe_prefix}_{now.strftime('%Y-%m-%d_%H-%M-%S')}-{now.microsecond:06d}"

    def export_csv(self, df: pd.DataFrame, stem: str) -> Path:
        """
        Write a DataFrame to {stem}.csv.

        Raises:
            ValueError: If the DataFrame has no rows
            IOError: If the file cannot be written
        """
        if df.empty:
            error_msg = f"Cannot export empty report table (stem: {stem})"
            logger.error(error_msg)
            raise ValueError(error_msg)
        path = self.export_dir / f"{stem}.csv"
        try:
            self.export_dir.mkdir(parents=True, exist_ok=True)
            df.to_csv(path, index=False, encoding="utf-8")
        except OSError as e:
            error_msg = f"Failed to export report table (stem: {stem}): {e}"
            logger.error(error_msg)
            raise IOError(error_msg) from e
        logger.info(f"Exported {len(df)} rows to {path.name}")
        return path

    def export_json(self, payload: dict, stem: str) -> Path:
        """
        Write a JSON-ready dictionary to {stem}.json.

        Raises:
            IOError: If the file cannot be written
        """
        path = self.export_dir / f"{stem}.json"
        try:
            self.export_dir.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(payload, indent=2, default=str), encoding="utf-8")
        except OSError as e:
            error_msg = f"Failed to export report JSON (stem: {stem}): {e}"
            logger.error(error_msg)
            raise IOError(error_msg) from e
        logger.info(f"Exported report JSON to {path.name}")
        return path

    def export_report(self, report: VerificationReport) -> Tuple[Path, Path]:
        """
        Write a report as CSV and JSON with a shared timestamped stem.

        Args:
            report: Report to export (must contain at least one case)

        Returns:
            (csv_path, json_path)
        """
        stem = self.generate_stem(report.suite)
        csv_path = self.export_csv(report.to_dataframe(), stem)
        json_path = self.export_json(report.to_dict(), stem)
        return csv_path, json_path
