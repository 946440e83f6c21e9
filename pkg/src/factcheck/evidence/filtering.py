"""Source credibility filtering."""

import logging
from pathlib import Path

from factcheck.types import EvidenceDoc, SourceKind

logger = logging.getLogger(__name__)

MIN_SCHOLARLY_CITATIONS = 10


def load_blocklist(path: str | Path) -> frozenset[str]:
    """Blocked registrable domains, one per line; # starts a comment."""
    domains = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        entry = line.split("#", 1)[0].strip().lower()
        if entry:
            domains.add(entry)
    return frozenset(domains)


def filter_credible(
    docs: list[EvidenceDoc],
    blocklist: frozenset[str] = frozenset(),
    min_citations: int = MIN_SCHOLARLY_CITATIONS,
) -> list[EvidenceDoc]:
    """Drop blocklisted domains and thinly-cited scholarly docs, keeping order."""
    kept = []
    for doc in docs:
        if doc.domain in blocklist:
            logger.info("dropping blocklisted source %s", doc.url)
            continue
        if doc.source_kind is SourceKind.SCHOLARLY and (doc.citation_count or 0) < min_citations:
            logger.info(
                "dropping %s: %d citations is below the floor of %d",
                doc.url, doc.citation_count or 0, min_citations,
            )
            continue
        kept.append(doc)
    return kept
