"""Embedding vectors and similarity math.

The mock embedder hashes character 3-grams into a fixed number of buckets
and L2-normalizes the result. It is deterministic across processes, which
the replay and golden-manifest tests rely on, so the hash must not depend
on PYTHONHASHSEED.
"""

import hashlib
import math
from dataclasses import dataclass

from factcheck.errors import DimensionMismatch, ZeroVector

MOCK_EMBEDDING_DIM = 64


@dataclass(frozen=True, slots=True)
class EmbeddingVector:
    values: tuple[float, ...]

    @property
    def dim(self) -> int:
        return len(self.values)

    @property
    def norm(self) -> float:
        return math.sqrt(math.fsum(v * v for v in self.values))


def _bucket(gram: str) -> int:
    digest = hashlib.blake2b(gram.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") % MOCK_EMBEDDING_DIM


def mock_embedding(text: str) -> EmbeddingVector:
    """Bag of character 3-grams hashed into 64 buckets, unit-normalized.

    Texts shorter than 3 chars contribute themselves as a single gram so
    no non-empty text maps to the zero vector.
    """
    counts = [0.0] * MOCK_EMBEDDING_DIM
    if len(text) < 3:
        grams = [text]
    else:
        grams = [text[i : i + 3] for i in range(len(text) - 2)]
    for gram in grams:
        counts[_bucket(gram)] += 1.0
    norm = math.sqrt(math.fsum(c * c for c in counts))
    if norm == 0.0:
        raise ZeroVector("cannot embed empty text")
    return EmbeddingVector(tuple(c / norm for c in counts))


def cosine_similarity(a: EmbeddingVector, b: EmbeddingVector) -> float:
    """Cosine of the angle between two vectors, clamped into [-1, 1]."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"vector dims differ: {a.dim} vs {b.dim}")
    norm_a = a.norm
    norm_b = b.norm
    if norm_a == 0.0 or norm_b == 0.0:
        raise ZeroVector("cosine similarity is undefined for zero vectors")
    dot = math.fsum(x * y for x, y in zip(a.values, b.values))
    return max(-1.0, min(1.0, dot / (norm_a * norm_b)))
