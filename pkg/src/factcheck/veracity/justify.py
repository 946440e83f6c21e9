"""Human-readable justification for a claim's verdict."""

import logging

from factcheck.errors import GeneratorUnavailable, InvalidInput
from factcheck.gateway.config import Generator
from factcheck.gateway.mock import JUSTIFICATION_TEMPLATE
from factcheck.prompts import render_prompt
from factcheck.types import Claim, Snippet, VerdictLabel

logger = logging.getLogger(__name__)

MAX_JUSTIFY_SNIPPETS = 10
SNIPPET_CHAR_CAP = 400

# Fixed string for claims with no evidence at all; assigned by the
# pipeline, since justification generation itself requires snippets.
NO_EVIDENCE_JUSTIFICATION = "No evidence found."


def fallback_justification(n: int, label: VerdictLabel, top_domain: str) -> str:
    return JUSTIFICATION_TEMPLATE.format(n=n, label=label.value, domain=top_domain)


def generate_justification(
    claim: Claim,
    label: VerdictLabel,
    snippets: list[Snippet],
    generator: Generator,
    prompt_dir: str | None = None,
) -> str:
    """One short paragraph explaining the verdict from the evidence.

    The prompt carries at most MAX_JUSTIFY_SNIPPETS snippets, each
    truncated to SNIPPET_CHAR_CAP chars. A generator outage falls back
    to the deterministic template.
    """
    if not snippets:
        raise InvalidInput("justification requires at least one snippet")
    top = snippets[:MAX_JUSTIFY_SNIPPETS]
    evidence_block = "\n".join(
        f"- [{snippet.doc.domain}] {snippet.text[:SNIPPET_CHAR_CAP]}" for snippet in top
    )
    prompt = render_prompt(
        "justify",
        prompt_dir=prompt_dir,
        n=str(len(top)),
        label=label.value,
        top_domain=top[0].doc.domain,
        claim=claim.enriched_text.replace("\n", " "),
        snippets=evidence_block,
    )
    try:
        output = generator.generate(prompt, max_tokens=256).strip()
    except GeneratorUnavailable as exc:
        logger.warning("justification generator unavailable for %s: %s", claim.id, exc)
        output = ""
    return output or fallback_justification(len(top), label, top[0].doc.domain)
