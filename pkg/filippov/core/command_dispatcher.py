import argparse
import json
from typing import TYPE_CHECKING, Any, MutableMapping, Optional, Sequence

from .. import command, module, util
from ..algebra.errors import AlgebraError
from .engine_mixin_base import MixinBase

if TYPE_CHECKING:
    from .engine import Engine


class CommandDispatcher(MixinBase):
    # Initialized during instantiation
    commands: MutableMapping[str, command.Command]

    def __init__(self: "Engine", **kwargs: Any) -> None:
        # Initialize command map
        self.commands = {}

        # Propagate initialization to other mixins
        super().__init__(**kwargs)

    def register_command(
        self: "Engine", mod: module.Module, name: str, func: command.CommandFunc
    ) -> None:
        cmd = command.Command(name, mod, func)

        # Check every verb first so a clash leaves the map untouched
        for verb in (cmd.name, *cmd.aliases):
            if verb in self.commands:
                raise module.DuplicateCommandError(verb, self.commands[verb], cmd)

        for verb in (cmd.name, *cmd.aliases):
            self.commands[verb] = cmd

    def register_commands(self: "Engine", mod: module.Module) -> None:
        for name, func in util.misc.find_prefixed_funcs(mod, "cmd_"):
            # Verbs are spelled with dashes on the command line
            self.register_command(mod, name.replace("_", "-"), func)

    def build_parser(
        self: "Engine",
        *,
        parents: Sequence[argparse.ArgumentParser] = (),
        verb_parents: Sequence[argparse.ArgumentParser] = (),
        description: Optional[str] = None,
    ) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="filippov", description=description, parents=list(parents)
        )
        subparsers = parser.add_subparsers(metavar="COMMAND", title="commands")

        for name, cmd in sorted(self.commands.items()):
            # Aliases are attached to their primary subparser
            if name != cmd.name:
                continue

            sub = subparsers.add_parser(
                name,
                aliases=list(cmd.aliases),
                help=cmd.desc,
                description=cmd.desc,
                epilog=f"example: filippov {cmd.usage}" if cmd.usage else None,
                parents=list(verb_parents),
            )
            for flags, kwargs in cmd.arguments:
                sub.add_argument(*flags, **kwargs)

            sub.set_defaults(command=cmd)

        return parser

    def dispatch(self: "Engine", args: argparse.Namespace) -> int:
        cmd: command.Command = args.command
        ctx = command.Context(self, cmd, args)
        start = util.time.usec()

        try:
            ret = cmd.func(ctx)

            # Response shortcut
            if ret is not None:
                ctx.respond(ret)
        except (AlgebraError, OSError, json.JSONDecodeError) as e:
            cmd.module.log.error(util.error.format_brief(e))
            ctx.fail(command.EXIT_INPUT_ERROR)
        except Exception as e:
            cmd.module.log.error(
                f"Error in command '{cmd.name}'\n{util.error.format_exception(e)}"
            )
            ctx.fail(command.EXIT_INPUT_ERROR)

        self.log.debug(
            f"Command '{cmd.name}' exited with code {ctx.exit_code} after "
            f"{util.time.since(start)}"
        )
        return ctx.exit_code
