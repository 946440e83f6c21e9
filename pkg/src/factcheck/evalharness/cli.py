"""Command line entry point for evaluation runs."""

import argparse
import logging
import sys
from pathlib import Path

from factcheck.evalharness.data import bundled_dataset_path, dataset_summary, load_dataset
from factcheck.evalharness.metrics import EvalTask
from factcheck.evalharness.report import emit_report
from factcheck.evalharness.run import run_eval
from factcheck.gateway.config import backends_from_env, mock_backends

_TASKS = {"claims": EvalTask.CLAIM_DETECTION, "veracity": EvalTask.VERACITY}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factcheck-eval",
        description="Score claim detection or veracity against a labeled dataset.",
    )
    parser.add_argument("--task", choices=sorted(_TASKS), required=True)
    parser.add_argument(
        "--data",
        type=Path,
        default=None,
        help="TSV dataset path (defaults to the bundled English test split)",
    )
    parser.add_argument("--backend", choices=["mock", "remote"], default="mock")
    parser.add_argument("--report", choices=["table", "csv"], default="table")
    parser.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    data_path = args.data if args.data is not None else bundled_dataset_path()
    records = load_dataset(data_path)
    backends = mock_backends() if args.backend == "mock" else backends_from_env()

    rows = run_eval(records, _TASKS[args.task], backends)
    report = emit_report(rows, fmt=args.report)

    if args.out is not None:
        args.out.write_text(report, encoding="utf-8")
        print(f"{dataset_summary(records)}; report written to {args.out}")
    else:
        sys.stdout.write(report)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
