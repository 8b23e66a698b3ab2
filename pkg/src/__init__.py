# File: src/__init__.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import sys
import time

from src.helpers.commands import CommandRouter
from src.logging import LOGGER
from src.version import (__networkx_version__, __numpy_version__,
                         __python_version__, __version__)

StartTime = time.time()


if sys.version_info < (3, 9):
    LOGGER(__name__).critical(
        """
=============================================================
SpanSim needs python 3.9 or above, shutting down...
=============================================================
"""
    )
    sys.exit(1)


plugins = dict(root="src/plugins")
router = CommandRouter(
    "spansim",
    description="Sampler spanner construction, LOCAL-model simulation and verification.",
    plugins=plugins,
)
router.parser.add_argument(
    "--version",
    action="version",
    version=(
        f"spansim {__version__} (python {__python_version__},"
        f" numpy {__numpy_version__}, networkx {__networkx_version__})"
    ),
)
