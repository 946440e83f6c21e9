"""Evidence retrieval stage."""

from factcheck.evidence.adapters import (
    HttpSearchAdapter,
    ReplaySearchAdapter,
    SearchAdapter,
    replay_adapters,
    search_all_sources,
)
from factcheck.evidence.dedup import deduplicate, jaccard, normalize_url, registrable_domain
from factcheck.evidence.filtering import filter_credible, load_blocklist
from factcheck.evidence.queries import generate_queries
from factcheck.evidence.retrieve import retrieve_evidence
from factcheck.evidence.snippets import rank_snippets, split_paragraphs

__all__ = [
    "HttpSearchAdapter",
    "ReplaySearchAdapter",
    "SearchAdapter",
    "deduplicate",
    "filter_credible",
    "generate_queries",
    "jaccard",
    "load_blocklist",
    "normalize_url",
    "rank_snippets",
    "registrable_domain",
    "replay_adapters",
    "retrieve_evidence",
    "search_all_sources",
    "split_paragraphs",
]
