"""
run.py - Helper script to run the clique enumeration server
"""

import logging

import uvicorn

from app import config

logger = logging.getLogger("run")


def serve(port: int = config.PORT, env: str = config.ENV) -> None:
    config.setup_logging()
    logger.info(f"Starting clique enumerator ({env}) on http://localhost:{port}, docs at /docs")

    if env == "development":
        uvicorn.run(
            "app.main:app",
            host="0.0.0.0",
            port=port,
            reload=True,
            log_level=config.LOG_LEVEL.lower()
        )
    else:
        uvicorn.run(
            "app.main:app",
            host="0.0.0.0",
            port=port,
            workers=4,
            log_level=config.LOG_LEVEL.lower()
        )


if __name__ == "__main__":
    serve()
