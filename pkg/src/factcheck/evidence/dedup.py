"""Near-duplicate removal for retrieved documents.

Two docs are duplicates when their normalized URLs are equal or when the
Jaccard similarity of their character-3-gram shingle sets crosses the
threshold. Shingles are taken over the title plus the first 500 content
characters, lowercased with whitespace runs collapsed to single spaces;
title and content are joined with one space.
"""

import logging
from urllib.parse import parse_qsl, urlencode, urlparse, urlunparse

from factcheck.types import EvidenceDoc, SourceKind

logger = logging.getLogger(__name__)

DUPLICATE_JACCARD = 0.85
SHINGLE_CONTENT_CHARS = 500

_TRACKING_PARAMS = {"fbclid", "gclid"}

# Country-code registries that sell names one level down, e.g. bbc.co.uk.
_SECOND_LEVEL = {"co", "com", "net", "org", "gov", "ac", "edu"}

_KEEP_ORDER = {
    SourceKind.FACT_CHECK: 0,
    SourceKind.ENCYCLOPEDIA: 1,
    SourceKind.WEB_SEARCH: 2,
    SourceKind.SCHOLARLY: 3,
}


def registrable_domain(url: str) -> str:
    """Best-effort registrable domain: the last two host labels, or three
    for two-letter ccTLDs behind a common second-level registry."""
    host = urlparse(url).netloc.split("@")[-1].split(":")[0].lower()
    if not host:
        return ""
    labels = host.split(".")
    if len(labels) <= 2 or labels[-1].isdigit():
        return host
    if len(labels[-1]) == 2 and labels[-2] in _SECOND_LEVEL:
        return ".".join(labels[-3:])
    return ".".join(labels[-2:])


def normalize_url(url: str) -> str:
    """Lowercase scheme and host, drop the fragment and tracking params."""
    parts = urlparse(url)
    query = [
        (key, value)
        for key, value in parse_qsl(parts.query, keep_blank_values=True)
        if not key.startswith("utm_") and key not in _TRACKING_PARAMS
    ]
    return urlunparse(
        (
            parts.scheme.lower(),
            parts.netloc.lower(),
            parts.path,
            parts.params,
            urlencode(query),
            "",
        )
    )


def shingle_set(text: str) -> frozenset[str]:
    """Character 3-gram set of normalized text (shorter texts shingle whole)."""
    normalized = " ".join(text.split()).lower()
    if len(normalized) < 3:
        return frozenset({normalized} if normalized else ())
    return frozenset(normalized[i : i + 3] for i in range(len(normalized) - 2))


def jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    union = len(a | b)
    if union == 0:
        return 1.0
    return len(a & b) / union


def doc_shingles(doc: EvidenceDoc) -> frozenset[str]:
    return shingle_set(doc.title + " " + doc.content[:SHINGLE_CONTENT_CHARS])


def deduplicate(
    docs: list[EvidenceDoc], jaccard_threshold: float = DUPLICATE_JACCARD
) -> list[EvidenceDoc]:
    """One survivor per duplicate cluster, original order preserved.

    Clusters are the transitive closure of the pairwise duplicate
    relation; the survivor is the most trusted source kind, then the
    longest content, then the earliest position.
    """
    n = len(docs)
    if n <= 1:
        return list(docs)

    urls = [normalize_url(doc.url) for doc in docs]
    shingles = [doc_shingles(doc) for doc in docs]

    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri

    for i in range(n):
        for j in range(i + 1, n):
            if urls[i] == urls[j] or jaccard(shingles[i], shingles[j]) >= jaccard_threshold:
                union(i, j)

    clusters: dict[int, list[int]] = {}
    for i in range(n):
        clusters.setdefault(find(i), []).append(i)

    survivors = []
    for members in clusters.values():
        best = min(
            members,
            key=lambda i: (_KEEP_ORDER[docs[i].source_kind], -len(docs[i].content), i),
        )
        survivors.append(best)
        if len(members) > 1:
            logger.debug("dedup kept %s out of %d near-duplicates", docs[best].url, len(members))

    return [docs[i] for i in sorted(survivors)]
