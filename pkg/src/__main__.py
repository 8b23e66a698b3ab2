# File: src/__main__.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import sys

from src import router

if __name__ == "__main__":
    sys.exit(router.run())
