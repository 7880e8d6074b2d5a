import logging
from typing import Optional, Union

import colorlog

LOG_LEVEL = logging.INFO
LOG_FORMAT = (
    "  %(log_color)s%(levelname)-8s%(reset)s | %(name)-8s | "
    "%(log_color)s%(message)s%(reset)s"
)

_handler: Optional[logging.Handler] = None


def parse_level(level: Union[int, str]) -> int:
    """Resolves a level name such as "debug" or a numeric level."""

    if isinstance(level, int):
        return level

    value = logging.getLevelName(level.upper())
    if not isinstance(value, int):
        raise ValueError(f"Unknown log level '{level}'")

    return value


def setup_logging(level: Union[int, str] = LOG_LEVEL) -> None:
    """Configures the logging module with colored level and message formatting."""

    global _handler

    root = logging.getLogger()
    if _handler is not None:
        root.removeHandler(_handler)

    formatter = colorlog.ColoredFormatter(LOG_FORMAT)
    _handler = logging.StreamHandler()
    _handler.setFormatter(formatter)
    root.addHandler(_handler)

    set_level(level)


def set_level(level: Union[int, str]) -> None:
    value = parse_level(level)
    logging.getLogger().setLevel(value)
    if _handler is not None:
        _handler.setLevel(value)
