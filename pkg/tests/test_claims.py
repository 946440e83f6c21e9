"""Claim detection: check-worthiness, coreference enrichment, assembly."""

import pytest

from factcheck.claims.checkworthy import classify_checkworthy
from factcheck.claims.coref import resolve_coreferences
from factcheck.claims.detect import detect_claims
from factcheck.claims.segment import segment_sentences
from factcheck.errors import BackendError, GeneratorUnavailable
from factcheck.types import ClaimStatus

from conftest import load_article, load_manifest


@pytest.mark.parametrize(
    "text,expected",
    [
        ("Norway has 5.5 million people.", True),       # digits
        ("The capital is called Oslo.", True),          # named entity mid-sentence
        ("Hovedstaden i Norge heter Oslo.", True),
        ("i think this is wonderful weather.", False),  # no digit, no capital
        ("Everyone loved the long summer evenings.", False),
        ("Too short.", False),                          # under the token floor
        ("Nice!", False),
    ],
)
def test_checkworthy_rule(backends, text, expected):
    worthy, score = classify_checkworthy(text, backends.checkworthy)
    assert worthy is expected
    assert score == (1.0 if expected else 0.0)


def test_checkworthy_short_text_skips_backend():
    class ExplodingScorer:
        def score_text(self, text):
            raise AssertionError("should not be called")

    assert classify_checkworthy("Oslo 2024", ExplodingScorer()) == (False, 0.0)


def test_checkworthy_clamps_scores():
    class Loud:
        def score_text(self, text):
            return 7.0

    worthy, score = classify_checkworthy("one two three", Loud())
    assert (worthy, score) == (True, 1.0)


def test_coref_mock_is_identity(backends):
    sentences = segment_sentences("Oslo is old. It sits by a fjord.", "en")
    enriched = resolve_coreferences(sentences, "en", backends.generator)
    assert enriched == [s.text for s in sentences]


def test_coref_failure_degrades_to_original_text():
    class Down:
        def generate(self, prompt, max_tokens=512):
            raise GeneratorUnavailable("offline")

    sentences = segment_sentences("Oslo is old. It sits by a fjord.", "en")
    enriched = resolve_coreferences(sentences, "en", Down())
    assert enriched == [s.text for s in sentences]


def test_coref_context_window_sees_only_recent_sentences(backends):
    seen = []

    class Spy:
        def generate(self, prompt, max_tokens=512):
            seen.append(prompt)
            return ""

    text = "One a. Two b. Three c. Four d. Five e."
    sentences = segment_sentences(text, "en")
    resolve_coreferences(sentences, "en", Spy(), window=3)
    last = seen[-1]
    assert "Two b." in last and "Four d." in last
    assert "One a." not in last


def test_detect_claims_on_golden_article(backends):
    text = load_article("article1")
    expected = load_manifest("article1")["payload"]["claims"]
    claims = detect_claims(text, "no", backends)
    assert [c.id for c in claims] == [e["id"] for e in expected]
    for claim, entry in zip(claims, expected):
        assert claim.sentence.text == entry["text"]
        assert (claim.sentence.start, claim.sentence.end) == (entry["start"], entry["end"])
        assert claim.status is ClaimStatus.DETECTED
        assert claim.checkworthy_score == 1.0
        assert claim.enriched_text == entry["text"]
        assert claim.language == "no"


def test_detect_claims_empty_article(backends):
    assert detect_claims("", "en", backends) == []


def test_detect_claims_surfaces_backend_failures(backends):
    class Flaky:
        def score_text(self, text):
            if "Sognefjorden" in text:
                raise BackendError("scorer down")
            return 1.0

    from factcheck.gateway.config import Backends

    flaky = Backends(
        generator=backends.generator,
        checkworthy=Flaky(),
        stance=backends.stance,
        embedder=backends.embedder,
    )
    text = "Oslo har 700000 innbyggere. Sognefjorden er 200 km lang."
    claims = detect_claims(text, "no", flaky)
    assert [c.status for c in claims] == [ClaimStatus.DETECTED, ClaimStatus.FAILED]
    assert [c.id for c in claims] == ["c1", "c2"]
    assert claims[1].checkworthy_score == 0.0
