"""Exception hierarchy shared across the pipeline."""


class FactcheckError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(FactcheckError):
    """Caller supplied data that violates an operation precondition."""


class InvalidClaim(InvalidInput):
    """Claim is structurally unusable, e.g. empty enriched text."""


class EmptyText(InvalidInput):
    """Submitted article text is empty."""


class PayloadTooLarge(InvalidInput):
    """Submitted article text exceeds the size cap."""


class BackendError(FactcheckError):
    """A model backend call failed after retries."""


class GeneratorUnavailable(BackendError):
    """Text-generation backend could not be reached."""


class EmbedderUnavailable(BackendError):
    """Embedding backend could not be reached."""


class ScorerUnavailable(BackendError):
    """Scoring backend could not be reached."""


class DimensionMismatch(FactcheckError):
    """Vectors of different dimensionality were combined."""


class ZeroVector(FactcheckError):
    """Cosine similarity is undefined for a zero-norm vector."""


class AllAdaptersFailed(FactcheckError):
    """No search adapter produced results: none configured or every one failed."""


class JobNotFound(FactcheckError):
    """Unknown job id."""


class SchemaError(FactcheckError):
    """Dataset file violates the declared schema.

    Carries the 1-based line number of the offending row when known.
    """

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class LengthMismatch(InvalidInput):
    """Gold and predicted label sequences differ in length."""


class EmptyInput(InvalidInput):
    """Metric requested over zero instances."""
