# File: src/helpers/commands.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import argparse
import importlib
import pkgutil
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from src.logging import LOGGER

logger = LOGGER(__name__)

Handler = Callable[[argparse.Namespace], int]
ArgSpec = Tuple[Tuple[str, ...], Dict[str, Any]]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATIONS = 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def arg(*flags: str, **kwargs: Any) -> ArgSpec:
    """One ``add_argument`` call, kept for later."""
    return flags, kwargs


class CommandRouter:
    """
    Sub-command front end.

    Command handlers live in modules under the plugin root and register
    themselves with ``on_command`` when imported; ``run`` imports them all,
    parses the command line and dispatches.
    """

    def __init__(self, name: str, description: str = "", plugins: Optional[Dict[str, str]] = None):
        self.name = name
        self.plugins_root = (plugins or {}).get("root", "src/plugins")
        self.parser = _Parser(prog=name, description=description)
        self.subparsers = self.parser.add_subparsers(dest="command", metavar="COMMAND")
        self.handlers: Dict[str, Handler] = {}
        self._loaded = False

    def on_command(self, name: str, help: str = "", arguments: Sequence[ArgSpec] = ()) -> Callable[[Handler], Handler]:
        def decorator(func: Handler) -> Handler:
            if name in self.handlers:
                raise ValueError(f"command {name!r} registered twice")
            sub = self.subparsers.add_parser(name, help=help, description=func.__doc__)
            for flags, kwargs in arguments:
                sub.add_argument(*flags, **kwargs)
            sub.set_defaults(handler=func)
            self.handlers[name] = func
            return func

        return decorator

    def load_plugins(self) -> None:
        if self._loaded:
            return
        package = ".".join(Path(self.plugins_root).parts)
        root = importlib.import_module(package)
        for module in pkgutil.walk_packages(root.__path__, prefix=f"{package}."):
            importlib.import_module(module.name)
            logger.debug(f"Loaded plugin {module.name}")
        self._loaded = True
        logger.debug(f"{len(self.handlers)} commands available: {', '.join(sorted(self.handlers))}")

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        self.load_plugins()
        try:
            args = self.parser.parse_args(argv)
        except UsageError as error:
            logger.error(str(error))
            return EXIT_USAGE
        if args.command is None:
            self.parser.print_help()
            return EXIT_USAGE
        return args.handler(args)
