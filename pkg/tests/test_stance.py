"""Stance classification and majority-vote aggregation."""

import pytest

from factcheck.errors import BackendError, InvalidInput
from factcheck.gateway.mock import MockPairScorer, stance_overlap
from factcheck.veracity.aggregate import aggregate_stances
from factcheck.veracity.stance import classify_stance, classify_stances
from factcheck.types import (
    Claim,
    ClaimStatus,
    Sentence,
    Snippet,
    StanceLabel,
    StanceVerdict,
    VerdictLabel,
)

from conftest import make_doc


def make_claim(text: str) -> Claim:
    return Claim(
        id="c1",
        article_id="a1",
        sentence=Sentence(index=0, text=text, start=0, end=len(text)),
        enriched_text=text,
        language="en",
        checkworthy_score=1.0,
        status=ClaimStatus.VERIFYING,
    )


def make_snippet(text: str) -> Snippet:
    doc = make_doc("https://a.example.com/1", content=text)
    return Snippet(doc=doc, paragraph_index=0, text=text, similarity=0.5, rank=1)


def verdict(label: StanceLabel, confidence: float) -> StanceVerdict:
    return StanceVerdict(
        claim_id="c1", snippet=make_snippet("x"), label=label, confidence=confidence
    )


def test_overlap_counts_distinct_lowercased_tokens():
    assert stance_overlap("Oslo is the capital", "THE CAPITAL is Oslo, truly Oslo") == 1.0
    assert stance_overlap("one two three four", "one two") == 0.5
    assert stance_overlap("", "whatever") == 0.0


def test_negation_with_overlap_refutes():
    claim = make_claim("Norway has a population of 10 million people.")
    got = classify_stance(
        claim,
        make_snippet("Norway does not have 10 million people; it is far fewer."),
        MockPairScorer(),
    )
    assert got.label is StanceLabel.REFUTES
    assert got.confidence == pytest.approx(4 / 8)  # norway, 10, million, people


def test_negation_without_overlap_still_supports():
    claim = make_claim("Oslo is the capital of Norway.")
    got = classify_stance(
        claim, make_snippet("There is no museum on the island."), MockPairScorer()
    )
    assert got.label is StanceLabel.SUPPORTS


def test_refute_floor_is_inclusive_at_two_fifths():
    claim = make_claim("alpha beta gamma delta epsilon")
    refuting = make_snippet("alpha beta not here")  # overlap exactly 0.4
    got = classify_stance(claim, refuting, MockPairScorer())
    assert got.label is StanceLabel.REFUTES
    assert got.confidence == pytest.approx(0.4)


def test_multilingual_negation_tokens():
    scorer = MockPairScorer()
    for negated in [
        "Norge har ikke 10 millioner innbyggere",
        "Норвегия нет 10 миллионов жителей Norge har 10 millioner",
        "挪威 不 Norge har 10 millioner innbyggere",
    ]:
        label, _ = scorer.score_pair(
            premise=negated, hypothesis="Norge har 10 millioner innbyggere"
        )
        assert label == "Refutes", negated


def test_support_confidence_has_a_floor():
    label, score = MockPairScorer().score_pair(
        premise="entirely unrelated words", hypothesis="Oslo is the capital"
    )
    assert (label, score) == ("Supports", 0.5)


def test_alias_labels_and_neutral():
    class Nli:
        def __init__(self, answer):
            self.answer = answer

        def score_pair(self, premise, hypothesis):
            return self.answer

    claim = make_claim("Oslo is the capital.")
    snippet = make_snippet("Some text.")
    assert classify_stance(claim, snippet, Nli(("ENTAILMENT", 0.9))).label is StanceLabel.SUPPORTS
    assert classify_stance(claim, snippet, Nli(("contradiction", 0.7))).label is StanceLabel.REFUTES
    assert classify_stance(claim, snippet, Nli(("neutral", 0.9))) is None
    # Out-of-range confidence is clamped, not rejected.
    assert classify_stance(claim, snippet, Nli(("Supports", 1.7))).confidence == 1.0


def test_blank_snippet_is_rejected():
    snippet = make_snippet("x")
    object.__setattr__(snippet, "text", "   ")
    with pytest.raises(InvalidInput):
        classify_stance(make_claim("Oslo is the capital."), snippet, MockPairScorer())


def test_failing_pairs_are_dropped_not_fatal():
    calls = []

    class Flaky:
        def score_pair(self, premise, hypothesis):
            calls.append(premise)
            if "bad" in premise:
                raise BackendError("timeout")
            return "Supports", 0.8

    claim = make_claim("Oslo is the capital.")
    snippets = [make_snippet("good text"), make_snippet("bad text"), make_snippet("good two")]
    verdicts = classify_stances(claim, snippets, Flaky())
    assert len(verdicts) == 2
    assert len(calls) == 3


def test_aggregate_empty_is_unverifiable():
    assert aggregate_stances([]) == (VerdictLabel.UNVERIFIABLE, 0, 0)


def test_aggregate_majorities():
    sup, ref = StanceLabel.SUPPORTS, StanceLabel.REFUTES
    label, s, r = aggregate_stances([verdict(sup, 0.9), verdict(sup, 0.6), verdict(ref, 0.9)])
    assert (label, s, r) == (VerdictLabel.SUPPORTED, 2, 1)
    label, s, r = aggregate_stances([verdict(ref, 0.2), verdict(ref, 0.3), verdict(sup, 0.9)])
    assert (label, s, r) == (VerdictLabel.DISPUTED, 1, 2)


def test_aggregate_tie_falls_back_to_confidence():
    sup, ref = StanceLabel.SUPPORTS, StanceLabel.REFUTES
    label, _, _ = aggregate_stances([verdict(sup, 0.9), verdict(ref, 0.2)])
    assert label is VerdictLabel.SUPPORTED
    label, _, _ = aggregate_stances([verdict(sup, 0.2), verdict(ref, 0.9)])
    assert label is VerdictLabel.DISPUTED
    # A dead tie stays Disputed: split evidence should flag, not clear.
    label, _, _ = aggregate_stances([verdict(sup, 0.5), verdict(ref, 0.5)])
    assert label is VerdictLabel.DISPUTED
