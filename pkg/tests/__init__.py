"""DriftBench tests."""
