import collections.abc
import copy
import logging
import os
from pathlib import Path
from typing import Any, Dict, Mapping, MutableMapping

import tomlkit
import tomlkit.exceptions
import tomlkit.toml_document

Config = MutableMapping[str, Any]

log = logging.getLogger("config")

CONFIG_VERSION = 2
REPORT_FORMATS = ("text", "json")
LOG_LEVELS = ("debug", "info", "warning", "error")

DEFAULTS: Dict[str, Any] = {
    "version": CONFIG_VERSION,
    "engine": {"debug_recheck": False},
    "output": {"report_format": "text", "json_indent": 2},
    "log": {"level": "info"},
}

DeleteValue = object()


class ConfigError(Exception):
    pass


def save(config: Config, _path: str) -> None:
    """Saves the given config to the given path as a TOML file."""

    if not isinstance(config, tomlkit.toml_document.TOMLDocument):
        raise TypeError("Only tomlkit saving is supported")

    path = Path(_path)
    tmp_path = path.with_suffix(path.suffix + ".tmp")
    done = False
    config_data = tomlkit.dumps(config)

    try:
        with tmp_path.open("w+") as f:
            f.write(config_data)
            f.flush()
            os.fsync(f.fileno())

        tmp_path.replace(path)
        done = True
    finally:
        if not done:
            tmp_path.unlink()


# Source: https://stackoverflow.com/a/3233356
def _recursive_update(d: MutableMapping, u: Mapping) -> MutableMapping:
    for k, v in u.items():
        if v is DeleteValue:
            if k in d:
                del d[k]

            continue

        if isinstance(v, collections.abc.Mapping):
            d[k] = _recursive_update(d.get(k, {}), v)
        else:
            d[k] = v

    return d


def _upgrade_v2(config: Config) -> None:
    engine = config.get("engine", {})
    if "recheck" in engine:
        log.info("Renaming 'engine.recheck' to 'engine.debug_recheck'")
        _recursive_update(
            config,
            {"engine": {"recheck": DeleteValue, "debug_recheck": engine["recheck"]}},
        )


# Functions or dicts to merge to migrate each version
upgrade_methods = [
    _upgrade_v2,  # Recheck flag rename
]


def upgrade(config: Config, path: str) -> None:
    """Upgrades given config until it's completely up to date."""

    cur_version: int = config["version"] if "version" in config else 1
    if cur_version == len(upgrade_methods) + 1:
        return

    if cur_version > len(upgrade_methods) + 1:
        raise ConfigError(f"Config version {cur_version} is newer than this program")

    for upgrader in upgrade_methods[cur_version - 1 :]:
        target_version = cur_version + 1
        log.info(f"Upgrading config to version {target_version}")

        if callable(upgrader):
            upgrader(config)
        elif isinstance(upgrader, dict):
            _recursive_update(config, upgrader)
        else:
            raise TypeError(
                f"Unrecognized upgrader type {type(upgrader)} for version "
                f"{target_version}"
            )

        cur_version = target_version
        config["version"] = target_version

        # Save after every step so a failing upgrade leaves a consistent file
        save(config, path)


def _plain(config: Config) -> Dict[str, Any]:
    unwrap = getattr(config, "unwrap", None)
    if callable(unwrap):
        return unwrap()

    return copy.deepcopy(dict(config))


def resolve(config: Config) -> Dict[str, Any]:
    """Merges the given config over the defaults and validates the values."""

    settings = _recursive_update(copy.deepcopy(DEFAULTS), _plain(config))

    if not isinstance(settings["engine"]["debug_recheck"], bool):
        raise ConfigError("'engine.debug_recheck' must be true or false")

    report_format = settings["output"]["report_format"]
    if report_format not in REPORT_FORMATS:
        raise ConfigError(
            f"'output.report_format' must be one of {', '.join(REPORT_FORMATS)}, "
            f"got '{report_format}'"
        )

    indent = settings["output"]["json_indent"]
    if isinstance(indent, bool) or not isinstance(indent, int) or indent < 0:
        raise ConfigError("'output.json_indent' must be a nonnegative integer")

    level = str(settings["log"]["level"]).lower()
    if level not in LOG_LEVELS:
        raise ConfigError(f"'log.level' must be one of {', '.join(LOG_LEVELS)}")
    settings["log"]["level"] = level

    return settings


def load(path: str) -> Dict[str, Any]:
    """Reads, upgrades and resolves the config file; a missing file means defaults."""

    config_path = Path(path)
    if not config_path.exists():
        log.debug(f"No config file at '{path}', using defaults")
        return resolve({})

    try:
        config: Config = tomlkit.loads(config_path.read_text())
    except tomlkit.exceptions.ParseError as e:
        raise ConfigError(f"Invalid config file '{path}': {e}") from e

    upgrade(config, path)
    return resolve(config)
