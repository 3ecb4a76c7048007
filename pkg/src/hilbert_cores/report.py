"""Report container shared by every CLI subcommand, with json/csv/table renderers.

Records are flat mappings of scalars so the three formats carry exactly the
same rows.  Multi-line diagrams are flattened with ``/`` between rows.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any

FORMATS = ("json", "csv", "table")
SCHEMA_VERSION = 1

Scalar = str | int | bool | None


def flatten(value: Any) -> Scalar:
    """Turn multi-line strings and small tuples into a single CSV-safe cell."""
    if isinstance(value, str):
        return value.replace("\n", "/")
    if isinstance(value, (tuple, list)):
        return "(" + ",".join(map(str, value)) + ")"
    if value is None or isinstance(value, (bool, int)):
        return value
    return str(value)


@dataclass
class Report:
    command: str
    parameters: dict[str, Any]
    records: list[dict[str, Scalar]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    ok: bool = True

    def add(self, **record: Any) -> None:
        self.records.append({k: flatten(v) for k, v in record.items()})

    def columns(self) -> list[str]:
        cols: list[str] = []
        for rec in self.records:
            for key in rec:
                if key not in cols:
                    cols.append(key)
        return cols

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "ok": self.ok,
            "records": self.records,
            "notes": self.notes,
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, ensure_ascii=False)
        if fmt == "csv":
            return self._csv()
        if fmt == "table":
            return self._table()
        raise ValueError(f"unknown format {fmt!r}")

    def _csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.columns(), lineterminator="\n")
        writer.writeheader()
        for rec in self.records:
            writer.writerow({k: _cell(v) for k, v in rec.items()})
        return buf.getvalue().rstrip("\n")

    def _table(self) -> str:
        cols = self.columns()
        rows = [cols] + [[_cell(rec.get(c)) for c in cols] for rec in self.records]
        widths = [max(len(r[i]) for r in rows) for i in range(len(cols))]
        lines = [" | ".join(cell.ljust(w) for cell, w in zip(r, widths)) for r in rows]
        if cols:
            lines.insert(1, "-+-".join("-" * w for w in widths))
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


def _cell(value: Scalar) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def parse_table(text: str) -> list[dict[str, str]]:
    """Read back the records of a table rendering (used to compare formats)."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("note: ")]
    if not lines:
        return []
    header = [c.strip() for c in lines[0].split(" | ")]
    out = []
    for ln in lines[2:]:
        cells = [c.strip() for c in ln.split(" | ")]
        cells += [""] * (len(header) - len(cells))
        out.append(dict(zip(header, cells)))
    return out


def parse_csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


def load_schema() -> dict:
    path = resources.files("hilbert_cores").joinpath("schema/report.schema.json")
    return json.loads(path.read_text(encoding="utf-8"))
