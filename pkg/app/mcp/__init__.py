"""MCP layer - FastMCP server exposing the DriftBench services."""
