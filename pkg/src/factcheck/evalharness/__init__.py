"""Offline evaluation of claim detection and veracity quality."""

from factcheck.evalharness.data import (
    EvalRecord,
    Split,
    bundled_dataset_path,
    dataset_summary,
    load_dataset,
)
from factcheck.evalharness.metrics import EvalTask, MetricsRow, f1_scores
from factcheck.evalharness.report import emit_report, parse_report_csv
from factcheck.evalharness.run import run_eval

__all__ = [
    "EvalRecord",
    "EvalTask",
    "MetricsRow",
    "Split",
    "bundled_dataset_path",
    "dataset_summary",
    "emit_report",
    "f1_scores",
    "load_dataset",
    "parse_report_csv",
    "run_eval",
]
