import logging
from typing import TYPE_CHECKING, ClassVar, Type

if TYPE_CHECKING:
    from .command import Command
    from .core import Engine


class Module:
    """A named group of commands; every cmd_* method becomes one verb."""

    name: ClassVar[str] = "Unnamed"

    engine: "Engine"
    log: logging.Logger

    def __init__(self, engine: "Engine") -> None:
        self.engine = engine
        self.log = logging.getLogger(self.name.lower())

    def __repr__(self) -> str:
        return f"<module '{self.name}' ({type(self).__name__})>"


class RegistrationError(Exception):
    pass


class DuplicateModuleError(RegistrationError):
    name: str

    def __init__(self, name: str, old: Type[Module], new: Type[Module]) -> None:
        super().__init__(
            f"Module name '{name}' is used by both {old.__name__} and {new.__name__}"
        )
        self.name = name


class DuplicateCommandError(RegistrationError):
    verb: str
    old_cmd: "Command"
    new_cmd: "Command"

    def __init__(self, verb: str, old_cmd: "Command", new_cmd: "Command") -> None:
        kind = "verb" if verb == new_cmd.name else f"alias of '{new_cmd.name}'"
        super().__init__(
            f"'{verb}' from module {new_cmd.module.name} ({kind}) is already "
            f"registered by '{old_cmd.name}' from module {old_cmd.module.name}"
        )

        self.verb = verb
        self.old_cmd = old_cmd
        self.new_cmd = new_cmd
