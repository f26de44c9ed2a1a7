"""
Runtime settings, read once from the environment (.env supported).
"""

import logging
import os

from dotenv import load_dotenv

load_dotenv()


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


DATABASE_URL = os.getenv("MCE_DATABASE_URL", "sqlite:///./mce_runs.db")

DEFAULT_ALGORITHM = os.getenv("MCE_DEFAULT_ALGORITHM", "hbbmc")
DEFAULT_ET = int(os.getenv("MCE_DEFAULT_ET", 3))
DEFAULT_EDGE_ORDERING = os.getenv("MCE_EDGE_ORDERING", "truss")

# Per-branch invariant assertions; expensive, meant for tests and debugging.
CHECK_INVARIANTS = _env_bool("MCE_CHECK_INVARIANTS", False)

RECURSION_LIMIT = int(os.getenv("MCE_RECURSION_LIMIT", 10000))
ORACLE_MAX_N = int(os.getenv("MCE_ORACLE_MAX_N", 20))

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
PORT = int(os.getenv("PORT", 8000))
ENV = os.getenv("ENV", "development")

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(level: str = LOG_LEVEL) -> None:
    """Configure the root logger once for the CLI and the server."""
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT)
    logging.getLogger().setLevel(level.upper())
