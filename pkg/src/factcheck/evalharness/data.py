"""Evaluation dataset loading.

Datasets are TSV files with the header
    text	language	split	checkworthy	veracity	evidence
where checkworthy/veracity are "true", "false", or empty, and evidence
is an empty string or a JSON array of strings. Fields must not contain
tabs. Every record needs at least one gold field.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from factcheck.errors import SchemaError
from factcheck.resources import data_path

logger = logging.getLogger(__name__)

COLUMNS = ("text", "language", "split", "checkworthy", "veracity", "evidence")

BUNDLED_EN_TEST = "en_test.tsv"


class Split(str, Enum):
    TRAIN = "train"
    DEV = "dev"
    TEST = "test"


@dataclass(slots=True)
class EvalRecord:
    text: str
    language: str
    split: Split
    checkworthy_gold: bool | None = None
    veracity_gold: bool | None = None
    evidence_texts: list[str] = field(default_factory=list)


def bundled_dataset_path(name: str = BUNDLED_EN_TEST) -> Path:
    return data_path("eval", name)


def _parse_bool(raw: str, column: str, line: int) -> bool | None:
    if raw == "":
        return None
    if raw == "true":
        return True
    if raw == "false":
        return False
    raise SchemaError(f"{column} must be true, false, or empty, got {raw!r}", line)


def load_dataset(path: str | Path) -> list[EvalRecord]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines:
        raise SchemaError("empty dataset file", 1)
    header = tuple(lines[0].split("\t"))
    if header != COLUMNS:
        raise SchemaError(f"expected header {list(COLUMNS)}, got {list(header)}", 1)

    records = []
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != len(COLUMNS):
            raise SchemaError(f"expected {len(COLUMNS)} fields, got {len(fields)}", line_no)
        text, language, split_raw, checkworthy_raw, veracity_raw, evidence_raw = fields
        if not text:
            raise SchemaError("text is empty", line_no)
        if not language:
            raise SchemaError("language is empty", line_no)
        try:
            split = Split(split_raw)
        except ValueError:
            raise SchemaError(f"unknown split {split_raw!r}", line_no)
        checkworthy = _parse_bool(checkworthy_raw, "checkworthy", line_no)
        veracity = _parse_bool(veracity_raw, "veracity", line_no)
        if checkworthy is None and veracity is None:
            raise SchemaError("record carries no gold label", line_no)
        evidence: list[str] = []
        if evidence_raw:
            try:
                evidence = json.loads(evidence_raw)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"evidence is not valid JSON: {exc}", line_no)
            if not isinstance(evidence, list) or not all(isinstance(e, str) for e in evidence):
                raise SchemaError("evidence must be a JSON array of strings", line_no)
        records.append(
            EvalRecord(
                text=text,
                language=language,
                split=split,
                checkworthy_gold=checkworthy,
                veracity_gold=veracity,
                evidence_texts=evidence,
            )
        )
    return records


def dataset_summary(records: list[EvalRecord]) -> dict[str, int]:
    """Label counts for auditing a loaded dataset."""
    return {
        "total": len(records),
        "checkworthy": sum(1 for r in records if r.checkworthy_gold is True),
        "not_checkworthy": sum(1 for r in records if r.checkworthy_gold is False),
        "veracity_true": sum(1 for r in records if r.veracity_gold is True),
        "veracity_false": sum(1 for r in records if r.veracity_gold is False),
    }
