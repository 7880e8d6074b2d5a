import importlib
import pkgutil
from types import ModuleType
from typing import List


def discover() -> List[ModuleType]:
    """Imports every command module of this package in name order."""

    names = sorted(info.name for info in pkgutil.iter_modules(__path__))
    return [importlib.import_module(f"{__name__}.{name}") for name in names]
