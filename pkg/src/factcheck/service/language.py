"""Character-trigram language identification.

Profiles bundled under data/langprofiles/ are trigram frequency tables
built from small seed corpora. Detection ranks languages by cosine
similarity between the text's trigram counts and each profile; when even
the best score is below the confidence floor the service defaults to
English rather than guessing.
"""

import json
import logging
import math
from collections import Counter
from functools import lru_cache
from pathlib import Path

from factcheck.resources import data_path

logger = logging.getLogger(__name__)

DEFAULT_LANGUAGE = "en"
CONFIDENCE_FLOOR = 0.25


def text_trigrams(text: str) -> Counter:
    """Trigram counts over the letters of the text.

    Non-letters collapse into single spaces so punctuation and digits do
    not pollute the profile; a space frame around the text keeps word
    boundary grams.
    """
    chars = [ch.lower() if ch.isalpha() else " " for ch in text]
    normalized = " ".join("".join(chars).split())
    if not normalized:
        return Counter()
    framed = f" {normalized} "
    return Counter(framed[i : i + 3] for i in range(len(framed) - 2))


@lru_cache(maxsize=None)
def load_profiles(profile_dir: str | None = None) -> dict[str, dict[str, int]]:
    base = Path(profile_dir) if profile_dir else data_path("langprofiles")
    profiles = {}
    for path in sorted(base.glob("*.json")):
        with path.open(encoding="utf-8") as fh:
            data = json.load(fh)
        profiles[data["language"]] = {k: int(v) for k, v in data["trigrams"].items()}
    if not profiles:
        logger.warning("no language profiles found under %s", base)
    return profiles


def _cosine(counts: Counter, profile: dict[str, int]) -> float:
    if not counts or not profile:
        return 0.0
    dot = sum(count * profile[gram] for gram, count in counts.items() if gram in profile)
    if dot == 0:
        return 0.0
    norm_text = math.sqrt(sum(c * c for c in counts.values()))
    norm_profile = math.sqrt(sum(c * c for c in profile.values()))
    return dot / (norm_text * norm_profile)


def rank_languages(text: str, profile_dir: str | None = None) -> list[tuple[str, float]]:
    """(language, score) for every profile, best first, ties by code."""
    counts = text_trigrams(text)
    profiles = load_profiles(profile_dir)
    scored = [(language, _cosine(counts, profile)) for language, profile in profiles.items()]
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored


def detect_language(
    text: str,
    profile_dir: str | None = None,
    floor: float = CONFIDENCE_FLOOR,
) -> str:
    ranked = rank_languages(text, profile_dir)
    if not ranked or ranked[0][1] < floor:
        return DEFAULT_LANGUAGE
    return ranked[0][0]
