"""Per-snippet stance classification."""

import logging

from factcheck.errors import BackendError, InvalidInput
from factcheck.gateway.config import PairScorer
from factcheck.types import Claim, Snippet, StanceLabel, StanceVerdict

logger = logging.getLogger(__name__)

# Remote NLI backends answer in their own vocabulary.
_LABEL_ALIASES = {
    "supports": StanceLabel.SUPPORTS,
    "entailment": StanceLabel.SUPPORTS,
    "refutes": StanceLabel.REFUTES,
    "contradiction": StanceLabel.REFUTES,
}


def classify_stance(claim: Claim, snippet: Snippet, scorer: PairScorer) -> StanceVerdict | None:
    """Stance of one snippet toward one claim.

    Returns None when the backend reports a label outside the
    supports/refutes vocabulary (e.g. neutral), which callers treat as
    "this snippet takes no stance".
    """
    if not snippet.text.strip():
        raise InvalidInput("snippet text is empty")
    raw_label, score = scorer.score_pair(premise=snippet.text, hypothesis=claim.enriched_text)
    label = _LABEL_ALIASES.get(raw_label.strip().lower())
    if label is None:
        logger.info("snippet from %s takes no stance (%r)", snippet.doc.domain, raw_label)
        return None
    confidence = max(0.0, min(1.0, float(score)))
    return StanceVerdict(claim_id=claim.id, snippet=snippet, label=label, confidence=confidence)


def classify_stances(
    claim: Claim, snippets: list[Snippet], scorer: PairScorer
) -> list[StanceVerdict]:
    """Verdicts for every snippet; pairs whose backend call fails are
    dropped with a warning instead of failing the claim."""
    verdicts = []
    for snippet in snippets:
        try:
            verdict = classify_stance(claim, snippet, scorer)
        except BackendError as exc:
            logger.warning(
                "stance backend failed for claim %s on %s: %s",
                claim.id, snippet.doc.url, exc,
            )
            continue
        if verdict is not None:
            verdicts.append(verdict)
    return verdicts
