"""Tests for CLI scripts."""
