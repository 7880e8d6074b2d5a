import argparse
import logging
from typing import Optional, Sequence

from . import DEFAULT_CONFIG_PATH, logs, util
from .algebra import recheck
from .core import Engine

log = logging.getLogger("launch")


def main(
    *,
    config_path: str = DEFAULT_CONFIG_PATH,
    argv: Optional[Sequence[str]] = None,
    parent: Optional[argparse.ArgumentParser] = None,
    shared: Optional[argparse.ArgumentParser] = None,
    description: Optional[str] = None,
    level_override: Optional[int] = None,
) -> int:
    """Loads the config, prepares the engine and runs one command."""

    log.debug(f"Loading config from '{config_path}'")
    try:
        config = util.config.load(config_path)
    except util.config.ConfigError as e:
        log.error(str(e))
        return 2

    if level_override is None:
        logs.set_level(config["log"]["level"])

    recheck.configure(config["engine"]["debug_recheck"])

    engine = Engine(config)
    parents = [parent] if parent is not None else []
    verb_parents = [shared] if shared is not None else []
    return engine.run(
        argv, parents=parents, verb_parents=verb_parents, description=description
    )
