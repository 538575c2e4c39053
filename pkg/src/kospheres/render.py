"""Text renderers for 8 x 8 residue tables and per-pair records."""

from __future__ import annotations

import csv
import io
import json
import math

FORMATS = ("md", "csv", "json", "text")


def cell(v, fmt: str) -> str:
    if v == math.inf:
        return "inf" if fmt in ("csv", "json") else "∞"
    return str(int(v)) if isinstance(v, (int, float)) else str(v)


def json_value(v):
    if isinstance(v, float):
        return "inf" if v == math.inf else int(v)
    return v


def render_table(table, fmt: str, corner: str = "n\\m") -> str:
    cols = range(len(table[0]))
    if fmt == "json":
        return json.dumps([[json_value(v) for v in row] for row in table]) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([corner, *cols])
        for n, row in enumerate(table):
            w.writerow([n, *(cell(v, fmt) for v in row)])
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join([corner, *map(str, cols)]) + " |"]
        lines.append("|" + "---|" * (len(table[0]) + 1))
        for n, row in enumerate(table):
            lines.append("| " + " | ".join([str(n), *(cell(v, fmt) for v in row)]) + " |")
        return "\n".join(lines) + "\n"
    width = 3
    lines = [f"{corner:>5}" + "".join(f"{c:>{width}}" for c in cols)]
    for n, row in enumerate(table):
        lines.append(f"{n:>5}" + "".join(f"{cell(v, fmt):>{width}}" for v in row))
    return "\n".join(lines) + "\n"


def render_records(records: list[dict], fmt: str, columns: list[str]) -> str:
    if fmt == "json":
        return json.dumps(records, ensure_ascii=False, indent=2) + "\n"
    rows = [[str(r.get(c, "")) for c in columns] for r in records]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "md":
        out = ["| " + " | ".join(columns) + " |", "|" + "---|" * len(columns)]
        out += ["| " + " | ".join(r) + " |" for r in rows]
        return "\n".join(out) + "\n"
    widths = [max(len(c), *(len(r[i]) for r in rows)) if rows else len(c) for i, c in enumerate(columns)]
    out = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    out += ["  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in rows]
    return "\n".join(out) + "\n"
