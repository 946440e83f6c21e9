"""Invariants enforced by the core dataclasses."""

import pytest

from factcheck.errors import InvalidInput
from factcheck.types import (
    Claim,
    ClaimReport,
    ClaimStatus,
    Sentence,
    SpanEdit,
    VerdictLabel,
    apply_edits,
)


def make_sentence(text="Oslo is the capital.", start=0) -> Sentence:
    return Sentence(index=0, text=text, start=start, end=start + len(text))


def make_claim() -> Claim:
    sentence = make_sentence()
    return Claim(
        id="c1",
        article_id="a1",
        sentence=sentence,
        enriched_text=sentence.text,
        language="en",
        checkworthy_score=1.0,
        status=ClaimStatus.DETECTED,
    )


def test_sentence_span_must_match_text_length():
    with pytest.raises(InvalidInput):
        Sentence(index=0, text="abc", start=0, end=2)


def test_sentence_rejects_negative_index_and_empty_span():
    with pytest.raises(InvalidInput):
        Sentence(index=-1, text="abc", start=0, end=3)
    with pytest.raises(InvalidInput):
        Sentence(index=0, text="", start=3, end=3)


def test_report_rejects_counts_disagreeing_with_verdicts():
    with pytest.raises(InvalidInput):
        ClaimReport(
            claim=make_claim(),
            label=VerdictLabel.SUPPORTED,
            supports_count=2,
            refutes_count=0,
            verdicts=[],
            justification="x",
        )


def test_unverifiable_report_allows_empty_verdicts():
    report = ClaimReport(
        claim=make_claim(),
        label=VerdictLabel.UNVERIFIABLE,
        supports_count=0,
        refutes_count=0,
        verdicts=[],
        justification="No evidence found.",
    )
    assert report.fix is None


def test_span_edit_validation():
    with pytest.raises(InvalidInput):
        SpanEdit(start=5, end=4, replacement="x")
    with pytest.raises(InvalidInput):
        SpanEdit(start=-1, end=4, replacement="x")


def test_apply_edits_is_order_insensitive():
    original = "Norway has 10 million people in 250 000 km2."
    edits = [
        SpanEdit(start=11, end=13, replacement="5.5"),
        SpanEdit(start=32, end=39, replacement="385 000"),
    ]
    expected = "Norway has 5.5 million people in 385 000 km2."
    assert apply_edits(original, edits) == expected
    assert apply_edits(original, list(reversed(edits))) == expected


def test_apply_edits_empty_is_identity():
    assert apply_edits("unchanged", []) == "unchanged"
