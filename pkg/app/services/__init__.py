"""Command orchestration shared by the CLI and the MCP server."""
