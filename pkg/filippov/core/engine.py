import argparse
import logging
from typing import Any, Mapping, Optional, Sequence

from .command_dispatcher import CommandDispatcher
from .module_extender import ModuleExtender


class Engine(ModuleExtender, CommandDispatcher):
    # Initialized during instantiation
    config: Mapping[str, Any]
    log: logging.Logger

    def __init__(self, config: Mapping[str, Any]) -> None:
        self.config = config
        self.log = logging.getLogger("engine")

        # Initialize mixins
        super().__init__()

        self.load_all_modules()

    def run(
        self,
        argv: Optional[Sequence[str]] = None,
        *,
        parents: Sequence[argparse.ArgumentParser] = (),
        verb_parents: Sequence[argparse.ArgumentParser] = (),
        description: Optional[str] = None,
    ) -> int:
        """Parses the command line and runs the selected command."""

        parser = self.build_parser(
            parents=parents, verb_parents=verb_parents, description=description
        )
        args = parser.parse_args(argv)

        if getattr(args, "command", None) is None:
            parser.print_help()
            return 2

        return self.dispatch(args)
