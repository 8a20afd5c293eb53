# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import csv
import io
import json
import logging
import math
from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field, field_validator

from dlvar.errors import InputError

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "md")


def plain(value: Any) -> Any:
    """Fraction 은 'a/b' 문자열, 튜플은 리스트로 바꿔 JSON 에 그대로 실을 수 있게 한다."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return value if math.isfinite(value) else str(value)
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [plain(v) for v in items]
    return str(value)


class Report(BaseModel):
    command: str
    params: dict[str, Any] = Field(default_factory=dict)
    rows: list[dict[str, Any]] = Field(default_factory=list)
    format: str = "md"

    @field_validator("format")
    @classmethod
    def known_format(cls, v: str) -> str:
        fmt = str(v).strip().lower()
        if fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        return fmt

    @classmethod
    def build(cls, command: str, params: dict, rows: list[dict], fmt: str) -> "Report":
        return cls(command=command, params=plain(params), rows=[plain(r) for r in rows], format=fmt)

    def columns(self) -> list[str]:
        seen: dict[str, None] = {}
        for row in self.rows:
            for key in row:
                seen.setdefault(key, None)
        return list(seen)

    def render(self) -> str:
        if self.format == "json":
            return self.to_json()
        if self.format == "csv":
            return self.to_csv()
        return self.to_markdown()

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), sort_keys=True, ensure_ascii=False, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.columns(), lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
        return buf.getvalue()

    def to_markdown(self) -> str:
        columns = self.columns()
        lines = [f"# {self.command}", ""]
        if self.params:
            lines += [f"- {k}: {_cell(v)}" for k, v in self.params.items()] + [""]
        if not columns:
            return "\n".join(lines + ["(no rows)", ""])
        cells = [[_cell(row.get(c, "")) for c in columns] for row in self.rows]
        widths = [max(len(c), *(len(r[i]) for r in cells)) if cells else len(c) for i, c in enumerate(columns)]
        lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(columns, widths)) + " |")
        lines.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
        for r in cells:
            lines.append("| " + " | ".join(v.ljust(w) for v, w in zip(r, widths)) + " |")
        return "\n".join(lines) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return " ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={_cell(v)}" for k, v in value.items())
    return "" if value is None else str(value)


def parse_report(text: str) -> Report:
    try:
        return Report.model_validate_json(text)
    except ValueError as exc:
        raise InputError(f"not a dlvar JSON report: {exc}") from exc
