from collections import defaultdict
from typing import ClassVar, Dict, MutableMapping

from .. import __version__, command, module, util


class CoreModule(module.Module):
    name: ClassVar[str] = "Core"

    @command.desc("List the commands")
    @command.usage("help verify-fi")
    @command.argument("filter", nargs="?", help="command or module name")
    def cmd_help(self, ctx: command.Context) -> str:
        filt = ctx.args.filter
        modules: MutableMapping[str, Dict[str, str]] = defaultdict(dict)

        # Handle command filters
        if filt and filt not in self.engine.modules:
            if filt in self.engine.commands:
                cmd = self.engine.commands[filt]

                # Show info card
                return util.text.join_map(
                    {
                        "Description": cmd.desc or "No description provided.",
                        "Module": cmd.module.name,
                        "Aliases": ", ".join(cmd.aliases) if cmd.aliases else "none",
                        "Example": f"filippov {cmd.usage}" if cmd.usage else "none",
                    },
                    heading=cmd.name,
                )

            ctx.fail(command.EXIT_INPUT_ERROR)
            return "That filter didn't match any commands or modules."

        # Show full help
        for name, cmd in self.engine.commands.items():
            if filt:
                # Ignore commands that aren't part of the filtered module
                if cmd.module.name != filt:
                    continue
            else:
                # Don't count aliases as separate commands
                if name != cmd.name:
                    continue

            desc = cmd.desc or "No description provided"
            if cmd.aliases:
                desc += f" (aliases: {', '.join(cmd.aliases)})"

            modules[cmd.module.name][cmd.name] = desc

        sections = [
            util.text.join_map(dict(sorted(cmds.items())), heading=mod_name)
            for mod_name, cmds in sorted(modules.items())
        ]
        return f"filippov {__version__}\n\n" + "\n\n".join(sections)
