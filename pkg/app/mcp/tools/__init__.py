"""MCP tools - thin wrappers over app.services, no metric or drift logic."""
