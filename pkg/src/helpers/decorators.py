# File: src/helpers/decorators.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import time
from argparse import Namespace
from functools import wraps
from typing import Callable

from src.helpers.commands import EXIT_USAGE
from src.helpers.functions import usage_line
from src.logging import LOGGER

logger = LOGGER(__name__)


def catch_errors(func: Callable) -> Callable:
    """
    Turn expected failures of a command into exit code 1.

    Bad input (graph files, parameters, records) surfaces as ``ValueError``
    subclasses, file problems as ``OSError``; anything else is a bug and
    propagates.
    """

    @wraps(func)
    def decorator(args: Namespace, *rest, **kwargs) -> int:
        try:
            return func(args, *rest, **kwargs)
        except (ValueError, OSError) as error:
            logger.error(f"{args.command}: {type(error).__name__}: {error}")
            return EXIT_USAGE

    return decorator


def log_usage(func: Callable) -> Callable:
    """Log elapsed time and process memory once the command returns."""

    @wraps(func)
    def decorator(args: Namespace, *rest, **kwargs) -> int:
        started = time.time()
        try:
            return func(args, *rest, **kwargs)
        finally:
            logger.info(f"{args.command} done: {usage_line(started)}")

    return decorator
