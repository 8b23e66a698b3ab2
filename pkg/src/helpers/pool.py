# File: src/helpers/pool.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import asyncio
from concurrent.futures import (Executor, ProcessPoolExecutor,
                                ThreadPoolExecutor)
from typing import Any, Callable, Iterable, List

from src.logging import LOGGER

logger = LOGGER(__name__)


class RunPool:
    """Runs independent experiment jobs with a cap on how many are in flight."""

    _instance = None

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super(RunPool, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self, max_workers: int = 1):
        if self._initialized:
            return

        self.max_workers = max_workers
        self.semaphore = asyncio.Semaphore(max_workers)
        # one worker keeps everything in-process; more get their own interpreters
        self.executor: Executor = (
            ThreadPoolExecutor(max_workers=1)
            if max_workers == 1
            else ProcessPoolExecutor(max_workers=max_workers)
        )
        self._initialized = True
        logger.debug(f"RunPool ready with {max_workers} {type(self.executor).__name__} workers")

    async def run_job(self, fn: Callable, *args) -> Any:
        """Run one job with concurrency limits"""
        async with self.semaphore:
            loop = asyncio.get_running_loop()
            return await loop.run_in_executor(self.executor, fn, *args)

    async def map(self, fn: Callable, jobs: Iterable[Any]) -> List[Any]:
        return list(await asyncio.gather(*(self.run_job(fn, job) for job in jobs)))

    @classmethod
    def shutdown(cls) -> None:
        if cls._instance is not None and cls._instance._initialized:
            cls._instance.executor.shutdown(wait=True)
        cls._instance = None
