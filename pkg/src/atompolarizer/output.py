"""CSV / JSON-lines emission with a self-describing metadata header."""

from __future__ import annotations

import json
import math
from typing import IO, Iterable, Sequence

from .sweep import SweepRecord

SCHEMA_VERSION = 1
RECORD_COLUMNS = ("transmit", "reflect", "loss", "fidelity", "t_re", "t_im", "r_re", "r_im", "error")


def fmt_number(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        return format(x, ".17g")
    return str(x)


def _json_value(x):
    if isinstance(x, float) and not math.isfinite(x):
        return None
    if isinstance(x, float):
        return float(format(x, ".17g"))
    return x


def write_table(stream: IO[str], metadata: dict, columns: Sequence[str],
                rows: Iterable[Sequence], fmt: str = "csv") -> None:
    metadata = {"schema": SCHEMA_VERSION, **metadata}
    if fmt == "csv":
        for key, value in metadata.items():
            stream.write(f"# {key}: {json.dumps(value, sort_keys=True)}\n")
        stream.write(",".join(columns) + "\n")
        for row in rows:
            stream.write(",".join(fmt_number(v) for v in row) + "\n")
    elif fmt == "jsonl":
        stream.write(json.dumps({"metadata": metadata}, sort_keys=True) + "\n")
        for row in rows:
            stream.write(json.dumps({c: _json_value(v) for c, v in zip(columns, row)}) + "\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def record_table(records: Sequence[SweepRecord], axis_names: Sequence[str]):
    """Columns and rows for sweep records.

    1D order is (axis, transmit, ..., r_im, error); 2D adds a second axis
    column up front, outer axis first: (axis1, axis2, transmit, ...).
    """
    columns = (*axis_names, *RECORD_COLUMNS)

    def rows():
        for rec in records:
            yield (*rec.axes, *(getattr(rec, c) for c in RECORD_COLUMNS))

    return columns, rows()
