"""Reports unit tests."""
