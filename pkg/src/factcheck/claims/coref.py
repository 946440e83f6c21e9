"""Coreference enrichment: make each sentence stand on its own."""

import logging

from factcheck.gateway.config import Generator
from factcheck.errors import GeneratorUnavailable
from factcheck.prompts import render_prompt
from factcheck.types import Sentence

logger = logging.getLogger(__name__)

COREF_WINDOW = 3


def resolve_coreferences(
    sentences: list[Sentence],
    language: str,
    generator: Generator,
    window: int = COREF_WINDOW,
    prompt_dir: str | None = None,
) -> list[str]:
    """Enriched text for every sentence, in order.

    Each sentence is rewritten against the `window` preceding sentences.
    A generator failure degrades to the identity enrichment for that
    sentence; detection must keep going without the rewrite.
    """
    enriched: list[str] = []
    for sentence in sentences:
        context_sentences = sentences[max(0, sentence.index - window) : sentence.index]
        context = "\n".join(s.text for s in context_sentences)
        # The payload rides on a single header line; segmented sentences
        # never contain newlines, so this is normally the exact text.
        prompt = render_prompt(
            "coref",
            prompt_dir=prompt_dir,
            sentence=sentence.text.replace("\n", " "),
            context=context if context else "(none)",
        )
        try:
            output = generator.generate(prompt).strip()
        except GeneratorUnavailable as exc:
            logger.warning("coref generator unavailable, keeping sentence %d as-is: %s",
                           sentence.index, exc)
            output = ""
        enriched.append(output if output else sentence.text)
    return enriched
