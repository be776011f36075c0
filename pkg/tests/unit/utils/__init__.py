"""Logging and error helper unit tests."""
