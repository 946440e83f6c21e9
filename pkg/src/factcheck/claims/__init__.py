"""Claim detection stage."""

from factcheck.claims.checkworthy import GeneratorCheckworthyScorer, classify_checkworthy
from factcheck.claims.coref import resolve_coreferences
from factcheck.claims.detect import detect_claims
from factcheck.claims.segment import abbreviations_for, segment_sentences

__all__ = [
    "GeneratorCheckworthyScorer",
    "abbreviations_for",
    "classify_checkworthy",
    "detect_claims",
    "resolve_coreferences",
    "segment_sentences",
]
