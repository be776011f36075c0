"""MCP tool unit tests."""
