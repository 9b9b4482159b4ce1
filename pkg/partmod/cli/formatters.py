"""
输出格式化

- json: 每条记录一行（OutputRecord.model_dump_json）
- csv / pretty: 用 pandas 渲染表格
"""

import io
from typing import Any, Dict, List

import pandas as pd

from partmod.cli.models import OutputRecord


def _cell(value: Any) -> Any:
    if isinstance(value, list):
        return ";".join(str(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={_cell(v)}" for k, v in value.items())
    if value is None:
        return ""
    return value


def flatten(rows: List[Dict[str, Any]]) -> pd.DataFrame:
    """列顺序按首次出现的键排列，缺失值为空"""
    columns: List[str] = []
    for row in rows:
        columns.extend(key for key in row if key not in columns)
    return pd.DataFrame(
        [[_cell(row.get(column)) for column in columns] for row in rows],
        columns=columns,
    )


def render_json(records: List[OutputRecord]) -> str:
    return "".join(record.to_json_line() + "\n" for record in records)


def render_csv(rows: List[Dict[str, Any]]) -> str:
    if not rows:
        return ""
    buffer = io.StringIO()
    flatten(rows).to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def render_pretty(rows: List[Dict[str, Any]]) -> str:
    if not rows:
        return "(无结果)\n"
    return flatten(rows).to_string(index=False) + "\n"


def render(fmt: str, command: str, argv: List[str], rows: List[Dict[str, Any]]) -> str:
    """按格式渲染一组行"""
    if fmt == "json":
        return render_json([OutputRecord(command=command, argv=argv, payload=row) for row in rows])
    if fmt == "csv":
        return render_csv(rows)
    return render_pretty(rows)
