"""Domain model shared by every pipeline stage.

Value types are frozen dataclasses; stateful records (Claim, Job) stay
mutable because their status advances as the pipeline runs.
"""

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum

from factcheck.errors import InvalidInput


class ClaimStatus(str, Enum):
    DETECTED = "Detected"
    VERIFYING = "Verifying"
    VERIFIED = "Verified"
    FAILED = "Failed"


class QueryKind(str, Enum):
    QUESTION = "Question"
    KEYWORD = "Keyword"
    VERBATIM_CLAIM = "VerbatimClaim"


class SourceKind(str, Enum):
    WEB_SEARCH = "WebSearch"
    ENCYCLOPEDIA = "Encyclopedia"
    FACT_CHECK = "FactCheck"
    SCHOLARLY = "Scholarly"


class StanceLabel(str, Enum):
    SUPPORTS = "Supports"
    REFUTES = "Refutes"


class VerdictLabel(str, Enum):
    SUPPORTED = "Supported"
    DISPUTED = "Disputed"
    UNVERIFIABLE = "Unverifiable"


class JobStatus(str, Enum):
    PENDING = "Pending"
    RUNNING = "Running"
    DONE = "Done"
    FAILED = "Failed"


@dataclass(frozen=True, slots=True)
class Sentence:
    """One segmented sentence with its character span in the article."""

    index: int
    text: str
    start: int
    end: int

    def __post_init__(self):
        if self.index < 0:
            raise InvalidInput("sentence index must be non-negative")
        if not (0 <= self.start < self.end):
            raise InvalidInput(f"bad sentence span [{self.start}, {self.end})")
        if self.end - self.start != len(self.text):
            raise InvalidInput("sentence span length does not match its text")
        if not self.text.strip():
            raise InvalidInput("sentence text is empty after trimming")


@dataclass(slots=True)
class Claim:
    """A check-worthy sentence, enriched to stand on its own."""

    id: str
    article_id: str
    sentence: Sentence
    enriched_text: str
    language: str
    checkworthy_score: float
    status: ClaimStatus = ClaimStatus.DETECTED

    def __post_init__(self):
        if not 0.0 <= self.checkworthy_score <= 1.0:
            raise InvalidInput("checkworthy_score must lie in [0, 1]")


@dataclass(frozen=True, slots=True)
class SearchQuery:
    """A single query derived from a claim. Text is capped at 256 chars."""

    claim_id: str
    text: str
    kind: QueryKind

    def __post_init__(self):
        if len(self.text) > 256:
            raise InvalidInput("query text longer than 256 chars")
        if not self.text.strip():
            raise InvalidInput("query text is empty")


@dataclass(frozen=True, slots=True)
class EvidenceDoc:
    """One retrieved document, normalized across source adapters."""

    url: str
    domain: str
    title: str
    content: str
    source_kind: SourceKind
    language: str
    retrieved_at: datetime
    citation_count: int | None = None

    def __post_init__(self):
        if not self.content:
            raise InvalidInput(f"evidence doc has empty content: {self.url}")
        has_citations = self.citation_count is not None
        if (self.source_kind is SourceKind.SCHOLARLY) != has_citations:
            raise InvalidInput(
                "citation_count is required for Scholarly docs and forbidden otherwise"
            )


@dataclass(frozen=True, slots=True)
class Snippet:
    """A ranked evidence paragraph. Rank is 1-based within its claim."""

    doc: EvidenceDoc
    paragraph_index: int
    text: str
    similarity: float
    rank: int

    def __post_init__(self):
        if not -1.0 <= self.similarity <= 1.0:
            raise InvalidInput("similarity must lie in [-1, 1]")
        if self.rank < 1:
            raise InvalidInput("rank must be >= 1")
        if self.paragraph_index < 0:
            raise InvalidInput("paragraph_index must be non-negative")
        if not self.text:
            raise InvalidInput("snippet text is empty")


@dataclass(frozen=True, slots=True)
class StanceVerdict:
    """Stance of one snippet toward one claim."""

    claim_id: str
    snippet: Snippet
    label: StanceLabel
    confidence: float

    def __post_init__(self):
        if not 0.0 <= self.confidence <= 1.0:
            raise InvalidInput("confidence must lie in [0, 1]")


@dataclass(frozen=True, slots=True)
class SpanEdit:
    """Replace original[start:end] with `replacement`."""

    start: int
    end: int
    replacement: str

    def __post_init__(self):
        if self.start < 0 or self.end < self.start:
            raise InvalidInput(f"bad edit span [{self.start}, {self.end})")


@dataclass(frozen=True, slots=True)
class ClaimFix:
    """Suggested correction for a disputed claim sentence.

    Edits are sorted, non-overlapping, and apply to the claim's original
    sentence text; applying them right-to-left yields corrected_text.
    """

    corrected_text: str
    edits: tuple[SpanEdit, ...]

    def __post_init__(self):
        prev_end = -1
        for edit in self.edits:
            if edit.start < prev_end:
                raise InvalidInput("fix edits overlap or are unsorted")
            prev_end = edit.end


@dataclass(slots=True)
class ClaimReport:
    """Final verdict for one claim with its supporting evidence."""

    claim: Claim
    label: VerdictLabel
    supports_count: int
    refutes_count: int
    verdicts: list[StanceVerdict]
    justification: str
    fix: ClaimFix | None = None

    def __post_init__(self):
        if self.supports_count + self.refutes_count != len(self.verdicts):
            raise InvalidInput("stance counts do not add up to the verdict list")
        if (self.label is VerdictLabel.UNVERIFIABLE) != (len(self.verdicts) == 0):
            raise InvalidInput("Unverifiable exactly when there are no verdicts")
        if self.fix is not None and self.label is not VerdictLabel.DISPUTED:
            raise InvalidInput("only Disputed claims carry a fix")


@dataclass(slots=True)
class Job:
    """One submitted article and its progress through the checker."""

    id: str
    article_text: str
    language: str
    status: JobStatus
    created_at: datetime
    updated_at: datetime
    claims: list[Claim] = field(default_factory=list)
    reports: list[ClaimReport] = field(default_factory=list)


def apply_edits(original: str, edits: tuple[SpanEdit, ...] | list[SpanEdit]) -> str:
    """Apply span edits right-to-left so earlier offsets stay valid."""
    result = original
    for edit in sorted(edits, key=lambda e: e.start, reverse=True):
        result = result[: edit.start] + edit.replacement + result[edit.end :]
    return result
