"""Shared fixtures: mock backends, replay search adapters, golden data."""

import json
from datetime import datetime, timezone
from pathlib import Path

import pytest

from factcheck.evidence.adapters import replay_adapters
from factcheck.gateway.config import Backends, mock_backends
from factcheck.pipeline import FactcheckPipeline
from factcheck.types import EvidenceDoc, SourceKind

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = DATA_DIR / "golden"
SEARCH_DIR = DATA_DIR / "search"
SET_A_DIR = DATA_DIR / "search_set_a"


@pytest.fixture(scope="session")
def backends() -> Backends:
    return mock_backends()


@pytest.fixture()
def golden_pipeline(backends) -> FactcheckPipeline:
    """Pipeline wired to the recorded search fixtures."""
    return FactcheckPipeline(backends=backends, adapters=replay_adapters(SEARCH_DIR))


def load_manifest(name: str) -> dict:
    return json.loads((GOLDEN_DIR / f"{name}.json").read_text(encoding="utf-8"))


def load_article(name: str) -> str:
    return (GOLDEN_DIR / f"{name}.txt").read_text(encoding="utf-8")


GOLDEN_ARTICLES = ("article1", "article2", "article3")

FIXED_TIME = datetime(2000, 1, 1, tzinfo=timezone.utc)


def make_doc(
    url: str,
    kind: SourceKind = SourceKind.WEB_SEARCH,
    content: str = "Some article body text.",
    title: str = "A title",
    citations: int | None = None,
) -> EvidenceDoc:
    from factcheck.evidence.dedup import registrable_domain

    if kind is SourceKind.SCHOLARLY and citations is None:
        citations = 0
    return EvidenceDoc(
        url=url,
        domain=registrable_domain(url),
        title=title,
        content=content,
        source_kind=kind,
        language="en",
        retrieved_at=FIXED_TIME,
        citation_count=citations,
    )


def random_job(rng) -> "Job":
    """A structurally valid job with random claims, reports, and evidence."""
    import random as _random

    from factcheck.types import (
        Claim,
        ClaimFix,
        ClaimReport,
        ClaimStatus,
        Job,
        JobStatus,
        Sentence,
        Snippet,
        SpanEdit,
        StanceLabel,
        StanceVerdict,
        VerdictLabel,
    )

    assert isinstance(rng, _random.Random)
    job_id = f"job-{rng.randrange(10**9):09d}"
    words = ["Norway", "has", "about", "5.5", "million", "people", "today"]
    sentences = []
    cursor = 0
    for index in range(rng.randint(1, 4)):
        text = " ".join(rng.sample(words, rng.randint(3, 6))) + "."
        sentences.append(Sentence(index=index, text=text, start=cursor, end=cursor + len(text)))
        cursor += len(text) + 1
    article_text = " ".join(s.text for s in sentences)

    claims = []
    reports = []
    for n, sentence in enumerate(sentences):
        claim = Claim(
            id=f"{job_id}-c{n + 1}",
            article_id=job_id,
            sentence=sentence,
            enriched_text=sentence.text,
            language=rng.choice(["en", "no", "de"]),
            checkworthy_score=round(rng.random(), 3),
            status=rng.choice(list(ClaimStatus)),
        )
        claims.append(claim)
        if rng.random() < 0.3:
            continue
        verdicts = []
        supports = 0
        refutes = 0
        for v in range(rng.randint(0, 3)):
            snippet = Snippet(
                doc=make_doc(f"https://site{rng.randrange(50)}.example.com/p{v}"),
                paragraph_index=v,
                text=f"Snippet {v} about {sentence.text}",
                similarity=round(rng.uniform(-1.0, 1.0), 6),
                rank=v + 1,
            )
            label = rng.choice([StanceLabel.SUPPORTS, StanceLabel.REFUTES])
            if label is StanceLabel.SUPPORTS:
                supports += 1
            else:
                refutes += 1
            verdicts.append(
                StanceVerdict(
                    claim_id=claim.id,
                    snippet=snippet,
                    label=label,
                    confidence=round(rng.random(), 6),
                )
            )
        if not verdicts:
            label = VerdictLabel.UNVERIFIABLE
        elif supports >= refutes:
            label = VerdictLabel.SUPPORTED
        else:
            label = VerdictLabel.DISPUTED
        fix = None
        if label is VerdictLabel.DISPUTED and rng.random() < 0.5:
            fix = ClaimFix(
                corrected_text=sentence.text.replace("5.5", "5.6"),
                edits=(SpanEdit(0, 1, sentence.text[0]),),
            )
        reports.append(
            ClaimReport(
                claim=claim,
                label=label,
                supports_count=supports,
                refutes_count=refutes,
                verdicts=verdicts,
                justification=f"Based on {len(verdicts)} evidence snippets.",
                fix=fix,
            )
        )

    return Job(
        id=job_id,
        article_text=article_text,
        language=rng.choice(["en", "no"]),
        status=rng.choice(list(JobStatus)),
        created_at=FIXED_TIME,
        updated_at=FIXED_TIME,
        claims=claims,
        reports=reports,
    )


def credibility_fixture() -> tuple[list[EvidenceDoc], frozenset[str], list[str]]:
    """12 docs, a blocklist, and the urls that must survive filtering."""
    # Blocklists hold registrable domains, so the blocked docs here live
    # on dedicated domains rather than subdomains of a shared one.
    docs = [
        make_doc("https://goodcheck.example.org/a", SourceKind.FACT_CHECK),
        make_doc("https://badnews-press.com/b"),
        make_doc("https://journal1.example.edu/c", SourceKind.SCHOLARLY, citations=9),
        make_doc("https://journal2.example.edu/d", SourceKind.SCHOLARLY, citations=10),
        make_doc("https://wiki.example.org/e", SourceKind.ENCYCLOPEDIA),
        make_doc("https://fine.example.net/f"),
        make_doc("https://journal3.example.edu/g", SourceKind.SCHOLARLY, citations=0),
        make_doc("https://journal4.example.edu/h", SourceKind.SCHOLARLY, citations=25),
        make_doc("https://rumormill.info/i"),
        make_doc("https://factory.example.co.uk/j", SourceKind.FACT_CHECK),
        make_doc("https://shady.example.biz/k", SourceKind.SCHOLARLY, citations=9),
        make_doc("https://ok.example.com/l"),
    ]
    blocklist = frozenset({"badnews-press.com", "rumormill.info", "example.biz"})
    kept = [docs[i].url for i in (0, 3, 4, 5, 7, 9, 11)]
    return docs, blocklist, kept
