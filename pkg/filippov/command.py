import argparse
import sys
from typing import (
    TYPE_CHECKING,
    Any,
    Callable,
    Dict,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from .algebra import serial
from .algebra.analysis import StructureReport

if TYPE_CHECKING:
    from .core import Engine

CommandFunc = Callable[..., Optional[str]]
Decorator = Callable[[CommandFunc], CommandFunc]
ArgumentSpec = Tuple[Tuple[str, ...], Dict[str, Any]]

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_INPUT_ERROR = 2


def desc(_desc: str) -> Decorator:
    """Sets description on a command function."""

    def desc_decorator(func: CommandFunc) -> CommandFunc:
        setattr(func, "_cmd_description", _desc)
        return func

    return desc_decorator


def usage(_usage: str) -> Decorator:
    """Sets an example invocation on a command function."""

    def usage_decorator(func: CommandFunc) -> CommandFunc:
        setattr(func, "_cmd_usage", _usage)
        return func

    return usage_decorator


def alias(*aliases: str) -> Decorator:
    """Sets aliases on a command function."""

    def alias_decorator(func: CommandFunc) -> CommandFunc:
        setattr(func, "_cmd_aliases", aliases)
        return func

    return alias_decorator


def argument(*flags: str, **kwargs: Any) -> Decorator:
    """Adds an argparse argument to a command function, in declaration order."""

    def argument_decorator(func: CommandFunc) -> CommandFunc:
        # Decorators apply bottom-up, so prepend to keep the written order
        existing: List[ArgumentSpec] = getattr(func, "_cmd_arguments", [])
        setattr(func, "_cmd_arguments", [(flags, kwargs)] + existing)
        return func

    return argument_decorator


class Command:
    name: str
    desc: Optional[str]
    usage: Optional[str]
    aliases: Sequence[str]
    arguments: Sequence[ArgumentSpec]
    module: Any
    func: CommandFunc

    def __init__(self, name: str, mod: Any, func: CommandFunc) -> None:
        self.name = name
        self.desc = getattr(func, "_cmd_description", None)
        self.usage = getattr(func, "_cmd_usage", None)
        self.aliases = getattr(func, "_cmd_aliases", ())
        self.arguments = getattr(func, "_cmd_arguments", [])
        self.module = mod
        self.func = func


# Command invocation context
class Context:
    engine: "Engine"
    cmd: Command
    args: argparse.Namespace
    config: Mapping[str, Any]
    exit_code: int

    def __init__(
        self, engine: "Engine", cmd: Command, args: argparse.Namespace
    ) -> None:
        self.engine = engine
        self.cmd = cmd
        self.args = args
        self.config = engine.config
        self.exit_code = EXIT_OK

    @property
    def json_indent(self) -> int:
        return self.config["output"]["json_indent"]

    @property
    def wants_json(self) -> bool:
        return bool(getattr(self.args, "json", False)) or (
            self.config["output"]["report_format"] == "json"
        )

    def respond(self, text: str) -> None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")

    def write_document(self, doc: Any) -> None:
        """Writes a JSON document to --out, or to stdout when it is not given."""

        out = getattr(self.args, "out", None)
        if out:
            serial.save(out, doc, self.json_indent)
            self.cmd.module.log.info(f"Wrote '{out}'")
        else:
            sys.stdout.write(serial.dumps(doc, self.json_indent))

    def report(self, *reports: StructureReport) -> None:
        """Prints the reports and sets the exit code from their verdicts."""

        if self.wants_json:
            docs = [serial.report_to_doc(r) for r in reports]
            doc = docs[0] if len(docs) == 1 else docs
            self.respond(serial.dumps(doc, self.json_indent))
        else:
            self.respond("\n\n".join(r.render() for r in reports))

        if not all(r.holds for r in reports):
            self.fail()

    def fail(self, code: int = EXIT_VERDICT_FALSE) -> None:
        self.exit_code = max(self.exit_code, code)
