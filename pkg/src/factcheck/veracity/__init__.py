"""Veracity stage: stance, vote, justification, correction."""

from factcheck.veracity.aggregate import aggregate_stances
from factcheck.veracity.fix import diff_spans, suggest_fix
from factcheck.veracity.justify import (
    NO_EVIDENCE_JUSTIFICATION,
    fallback_justification,
    generate_justification,
)
from factcheck.veracity.stance import classify_stance, classify_stances

__all__ = [
    "NO_EVIDENCE_JUSTIFICATION",
    "aggregate_stances",
    "classify_stance",
    "classify_stances",
    "diff_spans",
    "fallback_justification",
    "generate_justification",
    "suggest_fix",
]
