"""CSV / JSON serialization of flat result rows.

Floats are written with 17 significant digits so that parsing the output
gives back bit-identical values. Output is deterministic: the same rows
always produce the same bytes.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Iterable, Mapping

from .errors import ValidationError

FORMATS = ("csv", "json")


class UsageError(ValidationError):
    """Bad output format or similar caller mistake."""


def format_number(value: float) -> str:
    return format(value, ".17g")


def columns(rows: Iterable[Mapping]) -> list[str]:
    """Union of row keys, in first-seen order."""
    seen: dict[str, None] = {}
    for row in rows:
        for key in row:
            seen.setdefault(key)
    return list(seen)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def _json_value(value) -> str:
    if isinstance(value, float):
        if math.isnan(value):
            return "NaN"
        if math.isinf(value):
            return "Infinity" if value > 0 else "-Infinity"
        text = format_number(value)
        # keep floats recognisable as floats when they print as integers
        return text if any(c in text for c in ".eEn") else text + ".0"
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return _json_value(value.item())
    return json.dumps(value)


def to_csv(rows: list[Mapping]) -> str:
    cols = columns(rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([_csv_cell(row.get(c)) for c in cols])
    return buf.getvalue()


def to_json(rows: list[Mapping]) -> str:
    objects = []
    for row in rows:
        body = ", ".join(f"{json.dumps(str(k))}: {_json_value(v)}" for k, v in row.items())
        objects.append("  {" + body + "}")
    return "[\n" + ",\n".join(objects) + ("\n]\n" if objects else "]\n")


def render(rows: list[Mapping], fmt: str) -> str:
    if fmt == "csv":
        return to_csv(rows)
    if fmt == "json":
        return to_json(rows)
    raise UsageError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def emit(rows: list[Mapping], fmt: str, destination: str | Path | None = None) -> None:
    """Write ``rows`` as ``fmt`` to ``destination`` (a path; ``None`` or ``"-"`` is stdout).

    Raises:
        UsageError: unknown format.
        OSError: destination cannot be written.
    """
    text = render(list(rows), fmt)
    if destination is None or str(destination) == "-":
        sys.stdout.write(text)
        return
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def read_csv(path: str | Path) -> list[dict[str, str]]:
    with open(path, encoding="utf-8", newline="") as fh:
        return list(csv.DictReader(fh))


def read_json(path: str | Path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
