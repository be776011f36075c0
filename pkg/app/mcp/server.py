"""FastMCP server - DriftBench tools."""

from fastmcp import FastMCP

from app.mcp.tools.datasets import register_dataset_tools
from app.mcp.tools.drift import register_drift_tools
from app.mcp.tools.evaluation import register_evaluation_tools
from app.mcp.tools.health import register_health_tools
from app.utils.logging import configure_logging, get_logger

mcp = FastMCP(
    "DriftBench MCP Server",
    instructions="MCP server for detection datasets under drift: statistics, evaluation, comparison, drift scores.",
)

register_health_tools(mcp)
register_dataset_tools(mcp)
register_evaluation_tools(mcp)
register_drift_tools(mcp)


def main() -> None:
    """Entry point for running the MCP server."""
    configure_logging()
    logger = get_logger(__name__)
    logger.info("Starting DriftBench MCP Server")
    mcp.run()


if __name__ == "__main__":
    main()
