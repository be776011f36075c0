"""Health check tool - validates the server and its numeric stack."""

import json

from fastmcp import FastMCP

from app.core.config import settings
from app.utils.logging import get_logger

logger = get_logger(__name__)


def register_health_tools(mcp: FastMCP) -> None:
    """Register health-related tools."""

    @mcp.tool()
    def health_check() -> str:
        """Check server health and that the image/metrics libraries import.
        Returns status message. Use this to verify the MCP server is running correctly.
        """
        try:
            import numpy
            import PIL
            import scipy

            versions = {"numpy": numpy.__version__, "scipy": scipy.__version__, "pillow": PIL.__version__}
            logger.info("health_check", extra={"status": "OK", **versions})
            return json.dumps({"status": "OK", "versions": versions, "workers": settings.workers})
        except Exception as e:
            logger.warning("health_check degraded", extra={"error": str(e)})
            return f"WARN: Server running but a dependency failed to load: {e!s}"
