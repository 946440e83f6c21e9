"""Paragraph splitting and embedding-based snippet ranking."""

import logging
import re

from factcheck.claims.segment import segment_sentences
from factcheck.errors import EmbedderUnavailable
from factcheck.gateway.config import Embedder
from factcheck.gateway.embeddings import EmbeddingVector, cosine_similarity
from factcheck.gateway.mock import MAX_EMBED_BATCH
from factcheck.types import EvidenceDoc, Snippet

logger = logging.getLogger(__name__)

SNIPPETS_PER_DOC = 3
WINDOW_SENTENCES = 3
MAX_BLOCK_SENTENCES = 5


def split_paragraphs(content: str, language: str = "und") -> list[str]:
    """Blank-line separated paragraphs, trimmed, empties dropped.

    Content that arrives as one long block (no blank lines) is re-split
    into windows of three sentences so ranking has units to work with.
    """
    blocks = [block.strip() for block in re.split(r"\n{2,}", content)]
    blocks = [block for block in blocks if block]
    if len(blocks) != 1:
        return blocks
    sentences = segment_sentences(blocks[0], language)
    if len(sentences) <= MAX_BLOCK_SENTENCES:
        return blocks
    windows = []
    for i in range(0, len(sentences), WINDOW_SENTENCES):
        window = sentences[i : i + WINDOW_SENTENCES]
        windows.append(" ".join(s.text for s in window))
    return windows


def _embed_many(embedder: Embedder, texts: list[str]) -> list[EmbeddingVector]:
    vectors: list[EmbeddingVector] = []
    for start in range(0, len(texts), MAX_EMBED_BATCH):
        vectors.extend(embedder.embed_texts(texts[start : start + MAX_EMBED_BATCH]))
    return vectors


def rank_snippets(
    claim_text: str,
    doc: EvidenceDoc,
    embedder: Embedder,
    top_k: int = SNIPPETS_PER_DOC,
) -> list[Snippet]:
    """Top-k paragraphs of one doc by cosine similarity to the claim.

    Equal similarities favor the earlier paragraph. An embedder outage
    yields no snippets for the doc rather than failing the claim.
    """
    paragraphs = split_paragraphs(doc.content, doc.language)
    if not paragraphs:
        return []
    try:
        claim_vector = _embed_many(embedder, [claim_text])[0]
        paragraph_vectors = _embed_many(embedder, paragraphs)
    except EmbedderUnavailable as exc:
        logger.warning("embedder unavailable, no snippets from %s: %s", doc.url, exc)
        return []

    similarities = [cosine_similarity(claim_vector, vec) for vec in paragraph_vectors]
    order = sorted(range(len(paragraphs)), key=lambda i: (-similarities[i], i))

    snippets = []
    for rank, idx in enumerate(order[:top_k], start=1):
        snippets.append(
            Snippet(
                doc=doc,
                paragraph_index=idx,
                text=paragraphs[idx],
                similarity=similarities[idx],
                rank=rank,
            )
        )
    return snippets
