"""Reading numeric columns out of CSV and JSON-lines files.

Parsing is deliberately strict and locale-free: decimal point only, optional
scientific notation, no thousands separators.  Unparseable, empty, and
non-finite cells are counted in ``skipped``; zeros are kept (conformance
decides what to do with them).
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import NoNumericDataError, UnknownColumnError

__all__ = ["DatasetColumn", "ingest"]


@dataclass(frozen=True)
class DatasetColumn:
    """One numeric column: finite parsed values plus a skipped-cell count."""

    name: str
    values: np.ndarray
    skipped: int

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)


def _parse_cell(cell) -> float | None:
    if cell is None:
        return None
    if isinstance(cell, bool):
        return None
    if isinstance(cell, (int, float)):
        x = float(cell)
        return x if math.isfinite(x) else None
    text = str(cell).strip()
    if not text:
        return None
    try:
        x = float(text)
    except ValueError:
        return None
    return x if math.isfinite(x) else None


def _ingest_csv(path: Path, column: str | int) -> tuple[str, list[float], int]:
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise NoNumericDataError(f"{path}: file is empty") from None
        if isinstance(column, int) or (isinstance(column, str) and column.isdigit()):
            index = int(column)
            if not 0 <= index < len(header):
                raise UnknownColumnError(
                    f"{path}: column index {index} out of range (0..{len(header) - 1})"
                )
            name = header[index]
        else:
            try:
                index = header.index(column)
            except ValueError:
                raise UnknownColumnError(
                    f"{path}: no column named {column!r}; available: {header}"
                ) from None
            name = column
        values: list[float] = []
        skipped = 0
        for row in reader:
            cell = row[index] if index < len(row) else None
            x = _parse_cell(cell)
            if x is None:
                skipped += 1
            else:
                values.append(x)
    return name, values, skipped


def _ingest_jsonl(path: Path, column: str | int) -> tuple[str, list[float], int]:
    if isinstance(column, int):
        raise UnknownColumnError("jsonl columns are selected by field name, not index")
    values: list[float] = []
    skipped = 0
    saw_field = False
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                skipped += 1
                continue
            if not isinstance(record, dict) or column not in record:
                skipped += 1
                continue
            saw_field = True
            x = _parse_cell(record[column])
            if x is None:
                skipped += 1
            else:
                values.append(x)
    if not saw_field and not values:
        raise UnknownColumnError(f"{path}: no record carries field {column!r}")
    return str(column), values, skipped


def ingest(path: str | Path, column: str | int, fmt: str = "csv") -> DatasetColumn:
    """Read one numeric column from ``path``.

    CSV files need a header row; ``column`` selects by header name, or by
    0-based position when it is an integer (or an all-digits string).
    JSON-lines files are one object per line with ``column`` as a field name.

    Raises FileNotFoundError, UnknownColumnError, or NoNumericDataError when
    nothing numeric could be read.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such file: {path}")
    if fmt == "csv":
        name, values, skipped = _ingest_csv(path, column)
    elif fmt == "jsonl":
        name, values, skipped = _ingest_jsonl(path, column)
    else:
        raise ValueError(f"unknown format {fmt!r}; expected 'csv' or 'jsonl'")
    if not values:
        raise NoNumericDataError(f"{path}: column {name!r} has no parseable numeric cells")
    return DatasetColumn(name=name, values=np.array(values, dtype=np.float64), skipped=skipped)
