"""DriftBench unit tests."""
