"""Dataset loading: bundled fixture parity and TSV schema enforcement."""

import pytest

from factcheck.errors import SchemaError
from factcheck.evalharness.data import (
    COLUMNS,
    Split,
    bundled_dataset_path,
    dataset_summary,
    load_dataset,
)

HEADER = "\t".join(COLUMNS)


def write_dataset(tmp_path, *rows: str):
    path = tmp_path / "data.tsv"
    path.write_text("\n".join([HEADER, *rows]) + "\n", encoding="utf-8")
    return path


def test_bundled_english_test_set_counts():
    records = load_dataset(bundled_dataset_path())
    summary = dataset_summary(records)
    assert summary["total"] == 100
    assert summary["checkworthy"] == 38
    assert summary["veracity_true"] == 26
    assert summary["veracity_false"] == 12


def test_bundled_records_are_well_formed():
    records = load_dataset(bundled_dataset_path())
    assert all(r.language == "en" for r in records)
    assert all(r.split is Split.TEST for r in records)
    assert all(r.checkworthy_gold is not None or r.veracity_gold is not None for r in records)
    # Most veracity-labelled records carry evidence; a couple do not, so
    # the eval harness's skip path stays exercised.
    with_gold = [r for r in records if r.veracity_gold is not None]
    with_evidence = [r for r in with_gold if r.evidence_texts]
    assert len(with_gold) == 38
    assert len(with_evidence) == 36


def test_missing_or_wrong_header_is_line_1():
    import pathlib
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        empty = pathlib.Path(tmp) / "empty.tsv"
        empty.write_text("", encoding="utf-8")
        with pytest.raises(SchemaError) as err:
            load_dataset(empty)
        assert err.value.line == 1

        wrong = pathlib.Path(tmp) / "wrong.tsv"
        wrong.write_text("text\tlang\n", encoding="utf-8")
        with pytest.raises(SchemaError) as err:
            load_dataset(wrong)
        assert err.value.line == 1


def test_header_only_file_loads_empty(tmp_path):
    assert load_dataset(write_dataset(tmp_path)) == []


def test_blank_lines_are_skipped(tmp_path):
    path = write_dataset(
        tmp_path,
        "A fact.\ten\ttest\ttrue\t\t",
        "",
        "Another fact.\ten\ttest\tfalse\t\t",
    )
    records = load_dataset(path)
    assert [r.text for r in records] == ["A fact.", "Another fact."]


def test_record_line_numbers_are_file_lines(tmp_path):
    path = write_dataset(
        tmp_path,
        "Good.\ten\ttest\ttrue\t\t",
        "Bad.\ten\ttest\tmaybe\t\t",
    )
    with pytest.raises(SchemaError) as err:
        load_dataset(path)
    assert err.value.line == 3


def test_label_parsing(tmp_path):
    path = write_dataset(
        tmp_path,
        'Claim.\ten\ttest\ttrue\tfalse\t["e"]',
        "Opinion.\ten\tdev\tfalse\t\t",
    )
    first, second = load_dataset(path)
    assert first.checkworthy_gold is True
    assert first.veracity_gold is False
    assert first.evidence_texts == ["e"]
    assert second.split is Split.DEV
    assert second.veracity_gold is None
    assert second.evidence_texts == []


def test_record_without_any_gold_label_is_rejected(tmp_path):
    path = write_dataset(tmp_path, "Nothing.\ten\ttest\t\t\t")
    with pytest.raises(SchemaError) as err:
        load_dataset(path)
    assert "gold" in str(err.value)


def test_unknown_split_is_rejected(tmp_path):
    path = write_dataset(tmp_path, "X.\ten\tvalidation\ttrue\t\t")
    with pytest.raises(SchemaError):
        load_dataset(path)


def test_wrong_field_count_is_rejected(tmp_path):
    path = write_dataset(tmp_path, "X.\ten\ttest\ttrue\t")
    with pytest.raises(SchemaError) as err:
        load_dataset(path)
    assert err.value.line == 2


def test_empty_text_or_language_is_rejected(tmp_path):
    with pytest.raises(SchemaError):
        load_dataset(write_dataset(tmp_path, "\ten\ttest\ttrue\t\t"))
    with pytest.raises(SchemaError):
        load_dataset(write_dataset(tmp_path, "X.\t\ttest\ttrue\t\t"))


def test_evidence_must_be_json_array_of_strings(tmp_path):
    for evidence in ("not json", '{"a": 1}', "[1, 2]"):
        with pytest.raises(SchemaError):
            load_dataset(write_dataset(tmp_path, f"X.\ten\ttest\ttrue\t\t{evidence}"))
