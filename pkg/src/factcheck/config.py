"""Tunable knobs for a pipeline run, with the defaults the tests pin."""

from dataclasses import dataclass, field


@dataclass(slots=True)
class PipelineConfig:
    # claim detection
    checkworthy_threshold: float = 0.5
    claim_parallelism: int = 4
    coref_window: int = 3
    abbrev_dir: str | None = None
    prompt_dir: str | None = None

    # evidence retrieval
    snippets_per_doc: int = 3
    max_snippets: int = 10
    dedup_jaccard_threshold: float = 0.85
    min_scholarly_citations: int = 10
    blocklist_path: str | None = None
    search_replay_dir: str | None = None
    search_adapters: list[str] = field(default_factory=list)


DEFAULT_CONFIG = PipelineConfig()
