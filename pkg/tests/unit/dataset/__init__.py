"""Dataset unit tests."""
