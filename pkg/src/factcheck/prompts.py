"""Prompt templates with `{placeholder}` substitution.

Templates live under data/prompts/ and may be overridden by pointing a
config at another directory. The leading `#key: value` header lines are
what the mock generator keys on, so custom templates must keep them.
"""

import re
from functools import lru_cache
from pathlib import Path

from factcheck.errors import InvalidInput
from factcheck.resources import data_path

_PLACEHOLDER = re.compile(r"\{(\w+)\}")

PROMPT_NAMES = ("coref", "query_gen", "justify", "fix")


@lru_cache(maxsize=None)
def load_template(name: str, prompt_dir: str | None = None) -> str:
    base = Path(prompt_dir) if prompt_dir else data_path("prompts")
    path = base / f"{name}.txt"
    if not path.is_file():
        raise InvalidInput(f"no prompt template {name!r} at {path}")
    return path.read_text(encoding="utf-8")


def render(template: str, **values: str) -> str:
    """Substitute every `{name}` placeholder; unknown names are an error."""

    def lookup(match: re.Match) -> str:
        key = match.group(1)
        if key not in values:
            raise InvalidInput(f"prompt placeholder {{{key}}} has no value")
        return values[key]

    return _PLACEHOLDER.sub(lookup, template)


def render_prompt(name: str, prompt_dir: str | None = None, **values: str) -> str:
    return render(load_template(name, prompt_dir), **values)


def single_line(text: str) -> str:
    """Collapse whitespace so a value is safe inside a header line."""
    return " ".join(text.split())


_SCORE_LINE = re.compile(r"score:\s*([01](?:\.\d+)?|\.\d+)", re.IGNORECASE)


def parse_score(completion: str) -> float | None:
    """Last `score: x` value in a completion, clamped to [0, 1]."""
    matches = _SCORE_LINE.findall(completion)
    if not matches:
        return None
    return max(0.0, min(1.0, float(matches[-1])))
