import os
from typing import Optional

RECHECK_ENV = "FILIPPOV_DEBUG_RECHECK"

_configured: Optional[bool] = None


def configure(enabled: Optional[bool]) -> None:
    """Sets the configured re-verification default (None restores the default)."""

    global _configured
    _configured = enabled


def enabled() -> bool:
    """Returns whether FI/JI re-verification is forced after every operation."""

    env = os.environ.get(RECHECK_ENV)
    if env is not None and env.strip() != "":
        return env.strip() not in ("0", "false", "no", "off")

    return bool(_configured)
