"""Model gateway: one interface over mock, remote, and replayed backends."""

from factcheck.gateway.config import (
    BackendConfig,
    BackendKind,
    Backends,
    Embedder,
    Generator,
    PairScorer,
    TextScorer,
    backends_from_env,
    mock_backends,
)
from factcheck.gateway.embeddings import (
    MOCK_EMBEDDING_DIM,
    EmbeddingVector,
    cosine_similarity,
    mock_embedding,
)

__all__ = [
    "BackendConfig",
    "BackendKind",
    "Backends",
    "Embedder",
    "EmbeddingVector",
    "Generator",
    "MOCK_EMBEDDING_DIM",
    "PairScorer",
    "TextScorer",
    "backends_from_env",
    "cosine_similarity",
    "mock_backends",
    "mock_embedding",
]
