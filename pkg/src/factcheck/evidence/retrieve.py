"""End-to-end evidence retrieval for one claim."""

import logging

from factcheck.config import DEFAULT_CONFIG, PipelineConfig
from factcheck.errors import AllAdaptersFailed
from factcheck.evidence.adapters import SearchAdapter, search_all_sources
from factcheck.evidence.dedup import deduplicate
from factcheck.evidence.filtering import filter_credible
from factcheck.evidence.queries import generate_queries
from factcheck.evidence.snippets import rank_snippets
from factcheck.gateway.config import Backends
from factcheck.types import Claim, Snippet

logger = logging.getLogger(__name__)


def retrieve_evidence(
    claim: Claim,
    adapters: list[SearchAdapter],
    backends: Backends,
    blocklist: frozenset[str] = frozenset(),
    config: PipelineConfig = DEFAULT_CONFIG,
) -> list[Snippet]:
    """Ranked evidence snippets for a claim, best first.

    Search failures degrade to fewer (possibly zero) snippets; an empty
    result is a legitimate outcome that the verdict stage maps to
    Unverifiable.
    """
    queries = generate_queries(claim, backends.generator, config.prompt_dir)

    docs = []
    failed_queries = 0
    for query in queries:
        try:
            docs.extend(search_all_sources(query, adapters, claim.language))
        except AllAdaptersFailed as exc:
            failed_queries += 1
            logger.warning("no sources answered %r: %s", query.text, exc)
    if failed_queries == len(queries):
        logger.warning("claim %s: every query failed, no evidence", claim.id)
        return []

    docs = filter_credible(docs, blocklist, config.min_scholarly_citations)
    docs = deduplicate(docs, config.dedup_jaccard_threshold)

    candidates: list[tuple[Snippet, int]] = []
    for doc_index, doc in enumerate(docs):
        ranked = rank_snippets(
            claim.enriched_text, doc, backends.embedder, config.snippets_per_doc
        )
        candidates.extend((snippet, doc_index) for snippet in ranked)

    candidates.sort(key=lambda pair: (-pair[0].similarity, pair[1], pair[0].paragraph_index))
    return [snippet for snippet, _ in candidates[: config.max_snippets]]
