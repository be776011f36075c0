"""Run config and report schema unit tests."""
