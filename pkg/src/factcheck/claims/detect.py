"""Claim detection: segment, enrich, classify, keep the check-worthy."""

import logging
from concurrent.futures import ThreadPoolExecutor

from factcheck.claims.checkworthy import classify_checkworthy
from factcheck.claims.coref import resolve_coreferences
from factcheck.claims.segment import segment_sentences
from factcheck.config import DEFAULT_CONFIG, PipelineConfig
from factcheck.errors import BackendError
from factcheck.gateway.config import Backends
from factcheck.types import Claim, ClaimStatus

logger = logging.getLogger(__name__)


def detect_claims(
    article_text: str,
    language: str,
    backends: Backends,
    config: PipelineConfig = DEFAULT_CONFIG,
    article_id: str = "",
) -> list[Claim]:
    """All check-worthy claims of an article, in sentence order.

    Claim ids are "c1", "c2", ... in order of appearance so repeated runs
    over the same article name the same claims. Sentences whose
    classification fails outright surface as claims with status Failed
    instead of disappearing.
    """
    sentences = segment_sentences(article_text, language, config.abbrev_dir)
    if not sentences:
        return []
    enriched = resolve_coreferences(
        sentences, language, backends.generator,
        window=config.coref_window, prompt_dir=config.prompt_dir,
    )

    def classify(text: str) -> tuple[bool, float] | BackendError:
        try:
            return classify_checkworthy(text, backends.checkworthy, config.checkworthy_threshold)
        except BackendError as exc:
            return exc

    workers = max(1, config.claim_parallelism)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(classify, enriched))

    claims: list[Claim] = []
    for sentence, enriched_text, outcome in zip(sentences, enriched, outcomes):
        if isinstance(outcome, BackendError):
            logger.warning("check-worthiness failed for sentence %d: %s", sentence.index, outcome)
            claims.append(
                Claim(
                    id=f"c{len(claims) + 1}",
                    article_id=article_id,
                    sentence=sentence,
                    enriched_text=enriched_text,
                    language=language,
                    checkworthy_score=0.0,
                    status=ClaimStatus.FAILED,
                )
            )
            continue
        worthy, score = outcome
        if not worthy:
            continue
        claims.append(
            Claim(
                id=f"c{len(claims) + 1}",
                article_id=article_id,
                sentence=sentence,
                enriched_text=enriched_text,
                language=language,
                checkworthy_score=score,
                status=ClaimStatus.DETECTED,
            )
        )
    return claims
