"""Search query generation from claims."""

import logging
import re
import string

from factcheck.errors import GeneratorUnavailable, InvalidClaim
from factcheck.gateway.config import Generator
from factcheck.prompts import render_prompt
from factcheck.types import Claim, QueryKind, SearchQuery

logger = logging.getLogger(__name__)

MAX_QUERY_CHARS = 256
MAX_QUESTIONS = 3

_EDGE_PUNCT = string.punctuation + "«»„“”‘’¡¿…"
_LIST_MARKER = re.compile(r"^\s*(?:[-*•]|\d+[.)])\s*")

# Deliberately small: just enough to turn a claim into a keyword query.
STOPWORDS: dict[str, frozenset[str]] = {
    "en": frozenset(
        "a an and are as at be been but by did do does for from had has have in is it its "
        "of on or that the this to was were with".split()
    ),
    "no": frozenset("av de den det en er et for fra han har hun i med om og på som til å".split()),
    "da": frozenset("af de den det en er et for fra han har hun i med om og på som til at".split()),
    "de": frozenset("das der die ein eine hat ist und von zu mit für auf im in den dem".split()),
    "fr": frozenset("le la les un une des du de et est a dans pour sur avec au aux".split()),
    "es": frozenset("el la los las un una unos y es en de del para con por al".split()),
}


def stopwords_for(language: str) -> frozenset[str]:
    return STOPWORDS.get(language.lower().split("-")[0], frozenset())


def truncate_query(text: str, limit: int = MAX_QUERY_CHARS) -> str:
    """Cap query text, cutting at a word boundary when one exists."""
    if len(text) <= limit:
        return text
    cut = text.rfind(" ", 0, limit + 1)
    if cut <= 0:
        return text[:limit]
    return text[:cut].rstrip()


def keyword_text(text: str, language: str) -> str:
    stopwords = stopwords_for(language)
    kept = []
    for raw in text.split():
        token = raw.strip(_EDGE_PUNCT)
        if token and token.lower() not in stopwords:
            kept.append(token)
    if not kept:
        kept = [raw.strip(_EDGE_PUNCT) or raw for raw in text.split()]
    return " ".join(kept)


def parse_questions(completion: str) -> list[str]:
    """Question lines from a generator completion, markers stripped."""
    questions = []
    for line in completion.splitlines():
        candidate = _LIST_MARKER.sub("", line).strip()
        if candidate.endswith("?") and len(candidate) > 1:
            questions.append(candidate)
    return questions[:MAX_QUESTIONS]


def generate_queries(
    claim: Claim,
    generator: Generator,
    prompt_dir: str | None = None,
) -> list[SearchQuery]:
    """At least two queries per claim.

    The verbatim and keyword queries are built locally so they survive
    generator outages; question queries are additive.
    """
    text = claim.enriched_text.strip()
    if not text:
        raise InvalidClaim(f"claim {claim.id} has empty enriched text")

    queries = [
        SearchQuery(claim.id, truncate_query(text), QueryKind.VERBATIM_CLAIM),
        SearchQuery(claim.id, truncate_query(keyword_text(text, claim.language)), QueryKind.KEYWORD),
    ]

    prompt = render_prompt(
        "query_gen", prompt_dir=prompt_dir, claim=text.replace("\n", " ")
    )
    try:
        completion = generator.generate(prompt, max_tokens=256)
    except GeneratorUnavailable as exc:
        logger.warning("query generator unavailable for %s: %s", claim.id, exc)
        return queries

    for question in parse_questions(completion):
        queries.append(SearchQuery(claim.id, truncate_query(question), QueryKind.QUESTION))
    return queries
