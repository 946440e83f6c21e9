"""Check-worthiness classification over enriched sentences."""

import logging

from factcheck.gateway.config import Generator, TextScorer
from factcheck.errors import BackendError, GeneratorUnavailable
from factcheck.prompts import parse_score

logger = logging.getLogger(__name__)

CHECKWORTHY_THRESHOLD = 0.5
MIN_CHECKWORTHY_TOKENS = 3


def classify_checkworthy(
    text: str,
    scorer: TextScorer,
    threshold: float = CHECKWORTHY_THRESHOLD,
) -> tuple[bool, float]:
    """(label, score) for one sentence; label is score >= threshold.

    Fragments under three tokens are never check-worthy and skip the
    backend entirely.
    """
    if len(text.split()) < MIN_CHECKWORTHY_TOKENS:
        return False, 0.0
    score = scorer.score_text(text)
    score = max(0.0, min(1.0, score))
    return score >= threshold, score


# Two examples keep completions in a parseable shape without tuning.
_COT_PROMPT = """#task: checkworthy
#payload: {sentence}

Decide whether the sentence makes a factual assertion that a reader
would want verified (dates, figures, named entities, causal claims).
Think step by step, then answer with a line "score: <0.0-1.0>".

Example: "The Nile is about 6,650 km long."
Reasoning: a measurable geographic fact that could be wrong.
score: 1.0

Example: "I hope the weather improves soon."
Reasoning: a wish, nothing to verify.
score: 0.0

Sentence: {sentence}
"""


class GeneratorCheckworthyScorer:
    """Adapter running check-worthiness through a chat generator.

    Lets deployments without a dedicated classifier reuse their LLM. The
    completion's final "score:" line is parsed; an unparseable reply is
    treated as a backend failure rather than guessed at.
    """

    def __init__(self, generator: Generator):
        self.generator = generator

    def score_text(self, text: str) -> float:
        prompt = _COT_PROMPT.format(sentence=text.replace("\n", " "))
        try:
            completion = self.generator.generate(prompt, max_tokens=256)
        except GeneratorUnavailable as exc:
            raise BackendError(f"checkworthy generator failed: {exc}") from exc
        score = parse_score(completion)
        if score is None:
            raise BackendError(f"unparseable checkworthy completion: {completion[:80]!r}")
        return score
