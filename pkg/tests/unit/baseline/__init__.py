"""Baseline unit tests."""
