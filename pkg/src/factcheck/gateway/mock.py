"""Deterministic mock backends.

Every mock is a pure function of its inputs so the whole pipeline can run
offline and reproduce byte-identical output. The generator mock is keyed
by a `#task:` header line in the prompt; prompt templates embed the small
amount of structured state each task needs as further `#key: value`
header lines.
"""

import logging
import string

from factcheck.errors import InvalidInput
from factcheck.gateway.embeddings import EmbeddingVector, mock_embedding

logger = logging.getLogger(__name__)

MAX_EMBED_BATCH = 64

# Surface negation markers across the languages the checker targets.
# Exactly the tokens below trigger the mock Refutes rule.
NEGATION_TOKENS = frozenset(
    {
        "not",
        "no",
        "never",
        "ikke",
        "inte",
        "nicht",
        "kein",
        "pas",
        "nie",
        "nunca",
        "нет",
        "不",
    }
)

# Minimum token overlap with the claim before a negation marker counts
# as refutation rather than unrelated text.
REFUTE_OVERLAP_FLOOR = 0.4

_PUNCT = string.punctuation + "«»„“”‘’¡¿…‹›"

# Known-bad figures the offline demo corrects. The mock fix generator
# rewrites with this table; anything it does not recognize comes back
# unchanged, which callers treat as "no fix".
FIX_SUBSTITUTIONS = (
    ("250 000", "385 000"),
    ("10 millioner", "5.5 millioner"),
    ("10 million", "5.5 million"),
)

JUSTIFICATION_TEMPLATE = (
    "Based on {n} evidence snippets, the claim appears {label}. Top source: {domain}."
)


def score_tokens(text: str) -> list[str]:
    """Lowercased whitespace tokens with edge punctuation stripped."""
    tokens = []
    for raw in text.lower().split():
        token = raw.strip(_PUNCT)
        if token:
            tokens.append(token)
    return tokens


def checkworthy_score(text: str) -> float:
    """1.0 when the sentence carries a digit or a non-initial capitalized
    token, else 0.0. A crude but deterministic stand-in for a classifier."""
    if any(ch.isdigit() for ch in text):
        return 1.0
    for token in text.split()[1:]:
        alpha = next((ch for ch in token if ch.isalpha()), None)
        if alpha is not None and alpha.isupper():
            return 1.0
    return 0.0


def stance_overlap(claim_text: str, snippet_text: str) -> float:
    """Fraction of distinct claim tokens that also occur in the snippet."""
    claim_tokens = set(score_tokens(claim_text))
    if not claim_tokens:
        return 0.0
    snippet_tokens = set(score_tokens(snippet_text))
    return len(claim_tokens & snippet_tokens) / len(claim_tokens)


class MockEmbedder:
    """Hashed character-trigram embeddings, unit norm, 64 dims."""

    def embed_texts(self, texts: list[str]) -> list[EmbeddingVector]:
        if not 1 <= len(texts) <= MAX_EMBED_BATCH:
            raise InvalidInput(f"batch size must be 1..{MAX_EMBED_BATCH}, got {len(texts)}")
        return [mock_embedding(text) for text in texts]


class MockScorer:
    def score_text(self, text: str) -> float:
        return checkworthy_score(text)


class MockPairScorer:
    """Token-overlap stance rule.

    Refutes when the snippet contains a negation token and shares at
    least REFUTE_OVERLAP_FLOOR of the claim's tokens; otherwise Supports.
    """

    def score_pair(self, premise: str, hypothesis: str) -> tuple[str, float]:
        overlap = stance_overlap(hypothesis, premise)
        premise_tokens = set(score_tokens(premise))
        if premise_tokens & NEGATION_TOKENS and overlap >= REFUTE_OVERLAP_FLOOR:
            return "Refutes", overlap
        return "Supports", max(overlap, 0.5)


def parse_prompt_headers(prompt: str) -> dict[str, str]:
    """Read leading `#key: value` lines; stop at the first other line."""
    headers: dict[str, str] = {}
    for line in prompt.splitlines():
        if not line.startswith("#"):
            break
        key, sep, value = line[1:].partition(":")
        if not sep:
            break
        headers[key.strip()] = value.strip()
    return headers


def apply_fix_table(text: str) -> str:
    corrected = text
    for wrong, right in FIX_SUBSTITUTIONS:
        corrected = corrected.replace(wrong, right)
    return corrected


class MockGenerator:
    """Fixed per-task rules keyed by the prompt's `#task:` header."""

    def generate(self, prompt: str, max_tokens: int = 512) -> str:
        headers = parse_prompt_headers(prompt)
        task = headers.get("task", "")
        payload = headers.get("payload", "")
        if task == "coref":
            return payload
        if task == "query_gen":
            return ""
        if task == "justify":
            return JUSTIFICATION_TEMPLATE.format(
                n=headers.get("n", "0"),
                label=headers.get("label", ""),
                domain=headers.get("top_domain", ""),
            )
        if task == "fix":
            return apply_fix_table(payload)
        if task == "checkworthy":
            return f"score: {checkworthy_score(payload):.1f}"
        logger.debug("mock generator echoing unknown task %r", task)
        return payload
