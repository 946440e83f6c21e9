"""Multilingual fact-checking pipeline: claim detection, evidence retrieval,
veracity judgment, and an async review service."""

from factcheck.config import DEFAULT_CONFIG, PipelineConfig
from factcheck.errors import (
    AllAdaptersFailed,
    BackendError,
    DimensionMismatch,
    EmbedderUnavailable,
    EmptyInput,
    EmptyText,
    FactcheckError,
    GeneratorUnavailable,
    InvalidClaim,
    InvalidInput,
    JobNotFound,
    LengthMismatch,
    PayloadTooLarge,
    SchemaError,
    ScorerUnavailable,
    ZeroVector,
)
from factcheck.pipeline import FactcheckPipeline
from factcheck.types import (
    Claim,
    ClaimFix,
    ClaimReport,
    ClaimStatus,
    EvidenceDoc,
    Job,
    JobStatus,
    QueryKind,
    SearchQuery,
    Sentence,
    Snippet,
    SourceKind,
    SpanEdit,
    StanceLabel,
    StanceVerdict,
    VerdictLabel,
    apply_edits,
)

__version__ = "0.1.0"

__all__ = [
    "AllAdaptersFailed",
    "BackendError",
    "Claim",
    "ClaimFix",
    "ClaimReport",
    "ClaimStatus",
    "DEFAULT_CONFIG",
    "DimensionMismatch",
    "EmbedderUnavailable",
    "EmptyInput",
    "EmptyText",
    "EvidenceDoc",
    "FactcheckError",
    "FactcheckPipeline",
    "GeneratorUnavailable",
    "InvalidClaim",
    "InvalidInput",
    "Job",
    "JobNotFound",
    "JobStatus",
    "LengthMismatch",
    "PayloadTooLarge",
    "PipelineConfig",
    "QueryKind",
    "SchemaError",
    "ScorerUnavailable",
    "SearchQuery",
    "Sentence",
    "Snippet",
    "SourceKind",
    "SpanEdit",
    "StanceLabel",
    "StanceVerdict",
    "VerdictLabel",
    "ZeroVector",
    "apply_edits",
    "__version__",
]
