"""Rendering and parsing of metrics reports."""

import csv
import io

from factcheck.errors import SchemaError
from factcheck.evalharness.metrics import EvalTask, MetricsRow

_COLUMNS = ("language", "task", "macro_f1", "micro_f1", "n")


def _cells(row: MetricsRow) -> tuple[str, str, str, str, str]:
    return (
        row.language,
        row.task.value,
        f"{row.macro_f1:.3f}",
        f"{row.micro_f1:.3f}",
        str(row.n),
    )


def emit_report(rows: list[MetricsRow], fmt: str = "table") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_COLUMNS)
        for row in rows:
            writer.writerow(_cells(row))
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown report format: {fmt!r}")

    table = [list(_COLUMNS)] + [list(_cells(row)) for row in rows]
    widths = [max(len(line[col]) for line in table) for col in range(len(_COLUMNS))]
    out = []
    for i, line in enumerate(table):
        out.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
        if i == 0:
            out.append("  ".join("-" * width for width in widths))
    return "\n".join(out) + "\n"


def parse_report_csv(text: str) -> list[MetricsRow]:
    reader = csv.reader(io.StringIO(text))
    lines = list(reader)
    if not lines or tuple(lines[0]) != _COLUMNS:
        raise SchemaError("missing or malformed header row", line=1)
    rows = []
    for lineno, cells in enumerate(lines[1:], start=2):
        if len(cells) != len(_COLUMNS):
            raise SchemaError(f"expected {len(_COLUMNS)} columns, got {len(cells)}", line=lineno)
        language, task_name, macro, micro, n = cells
        try:
            task = EvalTask(task_name)
        except ValueError:
            raise SchemaError(f"unknown task: {task_name!r}", line=lineno) from None
        try:
            row = MetricsRow(
                language=language,
                task=task,
                macro_f1=float(macro),
                micro_f1=float(micro),
                n=int(n),
            )
        except (ValueError, TypeError) as exc:
            raise SchemaError(str(exc), line=lineno) from None
        rows.append(row)
    return rows
