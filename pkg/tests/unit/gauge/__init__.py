"""Gauge unit tests."""
