"""Evaluation unit tests."""
