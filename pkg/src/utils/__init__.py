"""Utilities: report export."""

from src.utils.exporters import ReportExporter

__all__ = ["ReportExporter"]
