import inspect
from typing import TYPE_CHECKING, Any, List, MutableMapping, Type

from .. import module, modules
from .engine_mixin_base import MixinBase

if TYPE_CHECKING:
    from .engine import Engine


def module_classes() -> List[Type[module.Module]]:
    """Returns the Module subclasses defined by the command modules."""

    found = []
    for mod in modules.discover():
        for _, cls in inspect.getmembers(mod, inspect.isclass):
            # Skip classes imported from elsewhere
            if issubclass(cls, module.Module) and cls.__module__ == mod.__name__:
                found.append(cls)

    return found


class ModuleExtender(MixinBase):
    # Initialized during instantiation
    modules: MutableMapping[str, module.Module]

    def __init__(self: "Engine", **kwargs: Any) -> None:
        self.modules = {}

        # Propagate initialization to other mixins
        super().__init__(**kwargs)

    def load_module(self: "Engine", cls: Type[module.Module]) -> None:
        if cls.name in self.modules:
            raise module.DuplicateModuleError(
                cls.name, type(self.modules[cls.name]), cls
            )

        mod = cls(self)
        self.register_commands(mod)
        self.modules[cls.name] = mod
        self.log.debug(f"Loaded {mod!r}")

    def load_all_modules(self: "Engine") -> None:
        for cls in module_classes():
            self.load_module(cls)

        self.log.debug(
            f"Loaded {len(self.modules)} modules with {len(self.commands)} commands"
        )
