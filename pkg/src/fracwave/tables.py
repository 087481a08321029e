"""Comma-separated result tables.

Floats are written in scientific notation with 12 significant digits and
integers verbatim. Tables keep full precision in memory; a table read back
from text is already at output precision, so for it
``parse_table(emit_table(t)) == t`` holds exactly, and in general
``parse_table(emit_table(t)) == t.rounded()``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

FLOAT_FORMAT = "{:.11e}"


def _normalize(v):
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, int):
        return v
    if hasattr(v, "item"):  # numpy scalar
        return _normalize(v.item())
    return float(v)


def _round(v):
    if isinstance(v, int) or not math.isfinite(v):
        return v
    return float(FLOAT_FORMAT.format(v))


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]

    @classmethod
    def from_rows(cls, columns: Sequence[str], rows: Iterable[Sequence]) -> "Table":
        columns = tuple(columns)
        out = []
        for row in rows:
            if len(row) != len(columns):
                raise ValueError(f"row has {len(row)} cells, expected {len(columns)}")
            out.append(tuple(_normalize(v) for v in row))
        return cls(columns, tuple(out))

    def rounded(self) -> "Table":
        """The table as it reads after a text round trip."""
        return Table(self.columns, tuple(tuple(_round(v) for v in r) for r in self.rows))

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [r[i] for r in self.rows]

    def __len__(self) -> int:
        return len(self.rows)


def _fmt(v) -> str:
    return str(v) if isinstance(v, int) else FLOAT_FORMAT.format(v)


def emit_table(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _parse_cell(cell: str):
    try:
        return int(cell)
    except ValueError:
        return float(cell)


def parse_table(text: str) -> Table:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("empty table") from None
    rows = [tuple(_parse_cell(c) for c in row) for row in reader if row]
    return Table.from_rows(header, rows)
