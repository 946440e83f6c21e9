"""Evaluation runs over loaded datasets."""

import logging
from datetime import datetime, timezone

from factcheck.claims.checkworthy import classify_checkworthy
from factcheck.errors import BackendError
from factcheck.evalharness.data import EvalRecord
from factcheck.evalharness.metrics import EvalTask, MetricsRow, f1_scores
from factcheck.gateway.config import Backends
from factcheck.types import Claim, EvidenceDoc, Sentence, Snippet, SourceKind, VerdictLabel
from factcheck.veracity.aggregate import aggregate_stances
from factcheck.veracity.stance import classify_stances

logger = logging.getLogger(__name__)

_EVAL_TIME = datetime(2000, 1, 1, tzinfo=timezone.utc)


def _record_claim(record: EvalRecord, index: int) -> Claim:
    return Claim(
        id=f"eval-{index}",
        article_id="eval",
        sentence=Sentence(index=0, text=record.text, start=0, end=len(record.text)),
        enriched_text=record.text,
        language=record.language,
        checkworthy_score=1.0,
    )


def _evidence_snippets(record: EvalRecord, index: int) -> list[Snippet]:
    snippets = []
    for k, text in enumerate(record.evidence_texts):
        doc = EvidenceDoc(
            url=f"eval://record/{index}/evidence/{k}",
            domain="eval.local",
            title=f"evidence {k}",
            content=text,
            source_kind=SourceKind.WEB_SEARCH,
            language=record.language,
            retrieved_at=_EVAL_TIME,
        )
        snippets.append(Snippet(doc=doc, paragraph_index=0, text=text, similarity=0.0, rank=1))
    return snippets


def run_eval(
    records: list[EvalRecord],
    task: EvalTask,
    backends: Backends,
) -> list[MetricsRow]:
    """One MetricsRow per language present in the scored records.

    Veracity uses the stance+vote pipeline over each record's evidence
    texts; records without evidence or whose backend calls fail are
    skipped and reduce that language's n.
    """
    by_language: dict[str, tuple[list, list]] = {}

    for index, record in enumerate(records):
        gold: bool | None
        pred: bool | None
        if task is EvalTask.CLAIM_DETECTION:
            gold = record.checkworthy_gold
            if gold is None:
                continue
            try:
                pred, _ = classify_checkworthy(record.text, backends.checkworthy)
            except BackendError as exc:
                logger.warning("skipping record %d, scorer failed: %s", index, exc)
                continue
        else:
            gold = record.veracity_gold
            if gold is None:
                continue
            if not record.evidence_texts:
                logger.info("skipping record %d: no evidence to judge against", index)
                continue
            claim = _record_claim(record, index)
            verdicts = classify_stances(claim, _evidence_snippets(record, index), backends.stance)
            label, _, _ = aggregate_stances(verdicts)
            if label is VerdictLabel.UNVERIFIABLE:
                logger.warning("skipping record %d: every stance call failed", index)
                continue
            pred = label is VerdictLabel.SUPPORTED

        golds, preds = by_language.setdefault(record.language, ([], []))
        golds.append(gold)
        preds.append(pred)

    rows = []
    for language in sorted(by_language):
        golds, preds = by_language[language]
        macro, micro = f1_scores(golds, preds)
        rows.append(
            MetricsRow(language=language, task=task, macro_f1=macro, micro_f1=micro, n=len(golds))
        )
    return rows
