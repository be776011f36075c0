"""Drift unit tests."""
