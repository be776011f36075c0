"""Logging and error helpers shared by the CLI and the MCP server."""
