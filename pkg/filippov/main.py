import argparse
import logging
from typing import Any, Optional, Sequence

from . import DEFAULT_CONFIG_PATH, __description__, __version__, launch, logs

log = logging.getLogger("launch")


def base_parser(*, suppress_defaults: bool = False) -> argparse.ArgumentParser:
    """Returns the parser for options shared by every command.

    With suppress_defaults, options that are not given leave no attribute
    behind; this is the variant attached to each verb.
    """

    def default(value: Any) -> Any:
        return argparse.SUPPRESS if suppress_defaults else value

    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "-c",
        "--config-path",
        metavar="PATH",
        type=str,
        default=default(DEFAULT_CONFIG_PATH),
        help="config file to use",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )

    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=default(False),
        help="show debug messages",
    )
    verbosity.add_argument(
        "-q",
        "--quiet",
        action="store_true",
        default=default(False),
        help="only show warnings and errors",
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the command-line interface."""

    parent = base_parser()
    try:
        args, _ = parent.parse_known_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    level: Optional[int] = None
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING

    logs.setup_logging(logs.LOG_LEVEL if level is None else level)

    try:
        return launch.main(
            config_path=args.config_path,
            argv=argv,
            parent=parent,
            shared=base_parser(suppress_defaults=True),
            description=__description__,
            level_override=level,
        )
    except SystemExit as e:
        # argparse exits on --help and usage errors
        return e.code if isinstance(e.code, int) else 2


if __name__ == "__main__":
    raise SystemExit(main())
