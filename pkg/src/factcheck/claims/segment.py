"""Rule-based multilingual sentence segmentation.

A sentence ends at a terminator character, with two refinements: ASCII
terminators only count when followed by whitespace (protects decimals
like "5.5" and ellipses), and a period never splits when the word ending
at it is a known abbreviation for the language. Newlines always end a
sentence so headlines without punctuation still segment.

Spans index the original article and exclude surrounding whitespace, so
article[start:end] == text holds for every sentence.
"""

import logging
from functools import lru_cache
from pathlib import Path

from factcheck.resources import data_path
from factcheck.types import Sentence

logger = logging.getLogger(__name__)

# Terminators for scripts that do not put a space after the full stop
# split unconditionally; the ASCII ones need trailing whitespace.
FULLWIDTH_TERMINATORS = frozenset("।。！？")
ASCII_TERMINATORS = frozenset(".!?")
TERMINATORS = FULLWIDTH_TERMINATORS | ASCII_TERMINATORS

_LEADING_PUNCT = "([{\"'«„“‘¿¡"


@lru_cache(maxsize=None)
def abbreviations_for(language: str, abbrev_dir: str | None = None) -> frozenset[str]:
    """Lowercased abbreviation tokens for a BCP-47 language tag.

    Falls back from a full tag to its primary subtag; unknown languages
    get an empty set rather than an error.
    """
    base = Path(abbrev_dir) if abbrev_dir else data_path("abbrev")
    candidates = [language.lower()]
    primary = language.lower().split("-")[0]
    if primary not in candidates:
        candidates.append(primary)
    for name in candidates:
        path = base / f"{name}.txt"
        if path.is_file():
            entries = set()
            for line in path.read_text(encoding="utf-8").splitlines():
                token = line.strip().lower()
                if token and not token.startswith("#"):
                    entries.add(token)
            return frozenset(entries)
    logger.debug("no abbreviation list for %r", language)
    return frozenset()


def _word_ending_at(text: str, end: int) -> str:
    """The whitespace-delimited word whose last char is text[end]."""
    start = end
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    return text[start : end + 1].lstrip(_LEADING_PUNCT)


def segment_sentences(
    article: str, language: str = "und", abbrev_dir: str | None = None
) -> list[Sentence]:
    abbreviations = abbreviations_for(language, abbrev_dir)
    sentences: list[Sentence] = []
    segment_start = 0

    def flush(start: int, end: int) -> None:
        segment = article[start:end]
        stripped = segment.strip()
        if not stripped:
            return
        left = len(segment) - len(segment.lstrip())
        right = len(segment) - len(segment.rstrip())
        span_start = start + left
        span_end = end - right
        sentences.append(
            Sentence(
                index=len(sentences),
                text=article[span_start:span_end],
                start=span_start,
                end=span_end,
            )
        )

    for i, ch in enumerate(article):
        if ch == "\n":
            flush(segment_start, i)
            segment_start = i + 1
            continue
        if ch not in TERMINATORS:
            continue
        if ch in ASCII_TERMINATORS:
            at_break = i + 1 == len(article) or article[i + 1].isspace()
            if not at_break:
                continue
            if ch == "." and _word_ending_at(article, i).lower() in abbreviations:
                continue
        flush(segment_start, i + 1)
        segment_start = i + 1

    flush(segment_start, len(article))
    return sentences
