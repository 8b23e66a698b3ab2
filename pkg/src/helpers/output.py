# File: src/helpers/output.py
#  Copyright (c) 2025 SpanSim contributors.
#  SpanSim is an open-source spanner simulation toolkit licensed under MIT.
#  All rights reserved where applicable.
#
#

import csv
import io
import sys
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence

import aiofiles
from pydantic import BaseModel

from src.helpers.dataclass import SWEEP_COLUMNS, RunRecord, SweepRow


def json_line(model: BaseModel) -> str:
    return model.model_dump_json() + "\n"


def csv_text(rows: Iterable[Sequence[Any]], header: Optional[Sequence[str]] = None) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header is not None:
        writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def sweep_csv(rows: List[SweepRow], header: bool = True) -> str:
    return csv_text((row.as_csv() for row in rows), SWEEP_COLUMNS if header else None)


async def write_text(path: Optional[str], text: str, append: bool = False) -> None:
    """Write (or append) ``text`` to ``path``; no path means stdout."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    async with aiofiles.open(target, "a" if append else "w", encoding="utf-8") as file:
        await file.write(text)


async def append_csv_rows(path: str, rows: List[SweepRow]) -> None:
    """Append rows, writing the header only when the file is new or empty."""
    target = Path(path)
    fresh = not target.exists() or target.stat().st_size == 0
    await write_text(path, sweep_csv(rows, header=fresh), append=True)


async def read_records(path: str) -> List[RunRecord]:
    async with aiofiles.open(path, "r", encoding="utf-8") as file:
        text = await file.read()
    return [RunRecord.model_validate_json(line) for line in text.splitlines() if line.strip()]
