"""CLI scripts for data collection and processing."""

