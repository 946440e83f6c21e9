"""Correction suggestions: token diff plus generator rewrite.

diff_spans computes a token-level longest-common-subsequence alignment
and folds every contiguous run of differing tokens into a single
SpanEdit over the original string. Runs of digit groups separated by
single spaces ("250 000") count as one token so figures with thousands
separators are replaced whole.
"""

import logging

from factcheck.errors import GeneratorUnavailable
from factcheck.gateway.config import Generator
from factcheck.prompts import render_prompt
from factcheck.types import Claim, ClaimFix, Snippet, SpanEdit, VerdictLabel, apply_edits
from factcheck.veracity.justify import MAX_JUSTIFY_SNIPPETS, SNIPPET_CHAR_CAP

logger = logging.getLogger(__name__)


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    """Whitespace tokens with char spans; adjacent digit groups merge."""
    tokens: list[tuple[str, int, int]] = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        start = i
        while i < n and not text[i].isspace():
            i += 1
        token = text[start:i]
        if (
            tokens
            and token.isdigit()
            and tokens[-1][0].isdigit()
            and tokens[-1][2] + 1 == start
            and text[tokens[-1][2]] == " "
        ):
            prev_token, prev_start, _ = tokens[-1]
            tokens[-1] = (f"{prev_token} {token}", prev_start, i)
        else:
            tokens.append((token, start, i))
    return tokens


def _lcs_pairs(a: list[str], b: list[str]) -> list[tuple[int, int]]:
    """Matched index pairs of a longest common subsequence."""
    n, m = len(a), len(b)
    dp = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        row, below = dp[i], dp[i + 1]
        for j in range(m - 1, -1, -1):
            if a[i] == b[j]:
                row[j] = below[j + 1] + 1
            else:
                row[j] = below[j] if below[j] >= row[j + 1] else row[j + 1]
    pairs = []
    i = j = 0
    while i < n and j < m:
        if a[i] == b[j]:
            pairs.append((i, j))
            i += 1
            j += 1
        elif dp[i + 1][j] >= dp[i][j + 1]:
            i += 1
        else:
            j += 1
    return pairs


def diff_spans(original: str, corrected: str) -> list[SpanEdit]:
    """Minimal span edits turning original into corrected.

    Applying the result right-to-left reproduces corrected exactly; when
    token-level surgery cannot guarantee that (whitespace-only drift,
    no tokens), the whole string is replaced in one edit.
    """
    if original == corrected:
        return []

    a = _tokenize(original)
    b = _tokenize(corrected)
    if not a or not b:
        return [SpanEdit(0, len(original), corrected)]

    a_tokens = [t[0] for t in a]
    b_tokens = [t[0] for t in b]
    pairs = _lcs_pairs(a_tokens, b_tokens)

    runs = []
    boundaries = [(-1, -1)] + pairs + [(len(a), len(b))]
    for (pi, pj), (ni, nj) in zip(boundaries, boundaries[1:]):
        i1, i2 = pi + 1, ni
        j1, j2 = pj + 1, nj
        if i1 < i2 or j1 < j2:
            runs.append((i1, i2, j1, j2))

    edits = []
    for i1, i2, j1, j2 in runs:
        if i1 < i2 and j1 < j2:
            start, end = a[i1][1], a[i2 - 1][2]
            replacement = corrected[b[j1][1] : b[j2 - 1][2]]
        elif i1 < i2:
            # Deletion swallows one adjacent gap so spacing stays intact.
            if i1 > 0:
                start, end = a[i1 - 1][2], a[i2 - 1][2]
            else:
                start, end = a[i1][1], a[i2][1]
            replacement = ""
        else:
            # Insertion, carrying corrected's whitespace around the run.
            if i1 > 0:
                start = end = a[i1 - 1][2]
                replacement = corrected[b[j1 - 1][2] : b[j2 - 1][2]]
            else:
                start = end = a[0][1]
                replacement = corrected[b[j1][1] : b[j2][1]]
        edits.append(SpanEdit(start=start, end=end, replacement=replacement))

    if apply_edits(original, edits) != corrected:
        logger.debug("token edits could not reproduce the correction, replacing whole string")
        return [SpanEdit(0, len(original), corrected)]
    return edits


def suggest_fix(
    claim: Claim,
    label: VerdictLabel,
    snippets: list[Snippet],
    generator: Generator,
    prompt_dir: str | None = None,
) -> ClaimFix | None:
    """A corrected sentence for a disputed claim, or None.

    None covers: label not Disputed, generator outage, and rewrites that
    change nothing.
    """
    if label is not VerdictLabel.DISPUTED:
        return None
    evidence_block = "\n".join(
        f"- [{snippet.doc.domain}] {snippet.text[:SNIPPET_CHAR_CAP]}"
        for snippet in snippets[:MAX_JUSTIFY_SNIPPETS]
    )
    prompt = render_prompt(
        "fix",
        prompt_dir=prompt_dir,
        sentence=claim.sentence.text.replace("\n", " "),
        snippets=evidence_block or "(none)",
    )
    try:
        corrected = generator.generate(prompt, max_tokens=256).strip()
    except GeneratorUnavailable as exc:
        logger.warning("fix generator unavailable for claim %s: %s", claim.id, exc)
        return None
    if not corrected or corrected == claim.sentence.text:
        return None
    edits = diff_spans(claim.sentence.text, corrected)
    if not edits:
        return None
    return ClaimFix(corrected_text=corrected, edits=tuple(edits))
