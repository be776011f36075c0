"""Command service unit tests."""
