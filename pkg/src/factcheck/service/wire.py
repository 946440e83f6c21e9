"""Serialization: persistence records and the public API payload.

The persistence format round-trips every field losslessly. The API
payload is the stable contract the editor consumes and deliberately
carries no timestamps or job ids, so identical submissions produce
identical bytes.
"""

from datetime import datetime

from factcheck.types import (
    Claim,
    ClaimFix,
    ClaimReport,
    ClaimStatus,
    EvidenceDoc,
    Job,
    JobStatus,
    Sentence,
    Snippet,
    SourceKind,
    SpanEdit,
    StanceLabel,
    StanceVerdict,
    VerdictLabel,
)


def _dt_to_str(value: datetime) -> str:
    return value.isoformat()


def _dt_from_str(value: str) -> datetime:
    return datetime.fromisoformat(value)


def sentence_to_dict(sentence: Sentence) -> dict:
    return {
        "index": sentence.index,
        "text": sentence.text,
        "start": sentence.start,
        "end": sentence.end,
    }


def sentence_from_dict(data: dict) -> Sentence:
    return Sentence(**data)


def claim_to_dict(claim: Claim) -> dict:
    return {
        "id": claim.id,
        "article_id": claim.article_id,
        "sentence": sentence_to_dict(claim.sentence),
        "enriched_text": claim.enriched_text,
        "language": claim.language,
        "checkworthy_score": claim.checkworthy_score,
        "status": claim.status.value,
    }


def claim_from_dict(data: dict) -> Claim:
    return Claim(
        id=data["id"],
        article_id=data["article_id"],
        sentence=sentence_from_dict(data["sentence"]),
        enriched_text=data["enriched_text"],
        language=data["language"],
        checkworthy_score=data["checkworthy_score"],
        status=ClaimStatus(data["status"]),
    )


def doc_to_dict(doc: EvidenceDoc) -> dict:
    return {
        "url": doc.url,
        "domain": doc.domain,
        "title": doc.title,
        "content": doc.content,
        "source_kind": doc.source_kind.value,
        "language": doc.language,
        "retrieved_at": _dt_to_str(doc.retrieved_at),
        "citation_count": doc.citation_count,
    }


def doc_from_dict(data: dict) -> EvidenceDoc:
    return EvidenceDoc(
        url=data["url"],
        domain=data["domain"],
        title=data["title"],
        content=data["content"],
        source_kind=SourceKind(data["source_kind"]),
        language=data["language"],
        retrieved_at=_dt_from_str(data["retrieved_at"]),
        citation_count=data["citation_count"],
    )


def snippet_to_dict(snippet: Snippet) -> dict:
    return {
        "doc": doc_to_dict(snippet.doc),
        "paragraph_index": snippet.paragraph_index,
        "text": snippet.text,
        "similarity": snippet.similarity,
        "rank": snippet.rank,
    }


def snippet_from_dict(data: dict) -> Snippet:
    return Snippet(
        doc=doc_from_dict(data["doc"]),
        paragraph_index=data["paragraph_index"],
        text=data["text"],
        similarity=data["similarity"],
        rank=data["rank"],
    )


def verdict_to_dict(verdict: StanceVerdict) -> dict:
    return {
        "claim_id": verdict.claim_id,
        "snippet": snippet_to_dict(verdict.snippet),
        "label": verdict.label.value,
        "confidence": verdict.confidence,
    }


def verdict_from_dict(data: dict) -> StanceVerdict:
    return StanceVerdict(
        claim_id=data["claim_id"],
        snippet=snippet_from_dict(data["snippet"]),
        label=StanceLabel(data["label"]),
        confidence=data["confidence"],
    )


def fix_to_dict(fix: ClaimFix) -> dict:
    return {
        "corrected_text": fix.corrected_text,
        "edits": [
            {"start": e.start, "end": e.end, "replacement": e.replacement} for e in fix.edits
        ],
    }


def fix_from_dict(data: dict) -> ClaimFix:
    return ClaimFix(
        corrected_text=data["corrected_text"],
        edits=tuple(SpanEdit(**e) for e in data["edits"]),
    )


def report_to_dict(report: ClaimReport) -> dict:
    return {
        "claim": claim_to_dict(report.claim),
        "label": report.label.value,
        "supports_count": report.supports_count,
        "refutes_count": report.refutes_count,
        "verdicts": [verdict_to_dict(v) for v in report.verdicts],
        "justification": report.justification,
        "fix": fix_to_dict(report.fix) if report.fix else None,
    }


def report_from_dict(data: dict) -> ClaimReport:
    return ClaimReport(
        claim=claim_from_dict(data["claim"]),
        label=VerdictLabel(data["label"]),
        supports_count=data["supports_count"],
        refutes_count=data["refutes_count"],
        verdicts=[verdict_from_dict(v) for v in data["verdicts"]],
        justification=data["justification"],
        fix=fix_from_dict(data["fix"]) if data["fix"] else None,
    )


def job_to_dict(job: Job) -> dict:
    return {
        "id": job.id,
        "article_text": job.article_text,
        "language": job.language,
        "status": job.status.value,
        "created_at": _dt_to_str(job.created_at),
        "updated_at": _dt_to_str(job.updated_at),
        "claims": [claim_to_dict(c) for c in job.claims],
        "reports": [report_to_dict(r) for r in job.reports],
    }


def job_from_dict(data: dict) -> Job:
    return Job(
        id=data["id"],
        article_text=data["article_text"],
        language=data["language"],
        status=JobStatus(data["status"]),
        created_at=_dt_from_str(data["created_at"]),
        updated_at=_dt_from_str(data["updated_at"]),
        claims=[claim_from_dict(c) for c in data["claims"]],
        reports=[report_from_dict(r) for r in data["reports"]],
    )


def _evidence_entry(verdict: StanceVerdict) -> dict:
    snippet = verdict.snippet
    return {
        "url": snippet.doc.url,
        "title": snippet.doc.title,
        "snippet": snippet.text,
        "similarity": snippet.similarity,
        "stance": verdict.label.value,
    }


def job_payload(job: Job) -> dict:
    """The GET /api/v1/factcheck/{id} body.

    Claims the pipeline has not finished yet appear with a null label so
    a polling client can render progress; finished claims are stable
    from the moment they first appear.
    """
    reported = {report.claim.id: report for report in job.reports}
    claims_out = []
    for claim in job.claims:
        report = reported.get(claim.id)
        status = claim.status
        if report is None and status is ClaimStatus.VERIFIED:
            # Verified but not yet published; clients see it still pending.
            status = ClaimStatus.VERIFYING
        entry = {
            "id": claim.id,
            "start": claim.sentence.start,
            "end": claim.sentence.end,
            "text": claim.sentence.text,
            "status": status.value,
            "label": None,
            "supports": 0,
            "refutes": 0,
            "justification": None,
            "fix": None,
            "evidence": [],
        }
        if report is not None:
            entry["label"] = report.label.value
            entry["supports"] = report.supports_count
            entry["refutes"] = report.refutes_count
            entry["justification"] = report.justification
            entry["fix"] = fix_to_dict(report.fix) if report.fix else None
            entry["evidence"] = [_evidence_entry(v) for v in report.verdicts]
        claims_out.append(entry)
    return {
        "status": job.status.value,
        "language": job.language,
        "claims": claims_out,
    }
