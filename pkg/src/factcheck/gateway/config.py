"""Backend selection and wiring.

Every model capability (embeddings, check-worthiness scoring, stance
scoring, generation) resolves independently: an env var with an endpoint
selects the remote implementation, otherwise the deterministic mock is
used. FACTCHECK_REPLAY_DIR switches remote backends onto recorded
responses instead of the network.
"""

import logging
import os
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Protocol

from factcheck.errors import InvalidInput
from factcheck.gateway.embeddings import EmbeddingVector
from factcheck.gateway.mock import MockEmbedder, MockGenerator, MockPairScorer, MockScorer
from factcheck.gateway.remote import (
    HttpTransport,
    RemoteChatGenerator,
    RemoteEmbedder,
    RemotePairScorer,
    RemoteScorer,
    ReplayTransport,
)

logger = logging.getLogger(__name__)

ENV_GENERATOR_URL = "FACTCHECK_GENERATOR_URL"
ENV_GENERATOR_MODEL = "FACTCHECK_GENERATOR_MODEL"
ENV_SCORER_URL = "FACTCHECK_SCORER_URL"
ENV_NLI_URL = "FACTCHECK_NLI_URL"
ENV_EMBEDDER_URL = "FACTCHECK_EMBEDDER_URL"
ENV_REPLAY_DIR = "FACTCHECK_REPLAY_DIR"

DEFAULT_TIMEOUT = 30.0
DEFAULT_MAX_RETRIES = 2


class BackendKind(str, Enum):
    MOCK = "Mock"
    REMOTE_SCORER = "RemoteScorer"
    REMOTE_EMBEDDER = "RemoteEmbedder"
    CHAT_GENERATOR = "ChatGenerator"


@dataclass(frozen=True, slots=True)
class BackendConfig:
    kind: BackendKind
    model_name: str = "default"
    endpoint: str | None = None
    timeout: float = DEFAULT_TIMEOUT
    max_retries: int = DEFAULT_MAX_RETRIES

    def __post_init__(self):
        remote = self.kind is not BackendKind.MOCK
        if remote and not self.endpoint:
            raise InvalidInput(f"{self.kind.value} backend requires an endpoint")
        if not remote and self.endpoint:
            raise InvalidInput("mock backend must not carry an endpoint")
        if self.timeout <= 0:
            raise InvalidInput("timeout must be positive")
        if self.max_retries < 0:
            raise InvalidInput("max_retries must be non-negative")


class Embedder(Protocol):
    def embed_texts(self, texts: list[str]) -> list[EmbeddingVector]: ...


class TextScorer(Protocol):
    def score_text(self, text: str) -> float: ...


class PairScorer(Protocol):
    def score_pair(self, premise: str, hypothesis: str) -> tuple[str, float]: ...


class Generator(Protocol):
    def generate(self, prompt: str, max_tokens: int = 512) -> str: ...


@dataclass(slots=True)
class Backends:
    """The four model capabilities the pipeline consumes."""

    embedder: Embedder
    checkworthy: TextScorer
    stance: PairScorer
    generator: Generator


def _transport(config: BackendConfig, replay_dir: str | None):
    if replay_dir:
        return ReplayTransport(replay_dir)
    return HttpTransport(timeout=config.timeout, max_retries=config.max_retries)


def build_embedder(config: BackendConfig, replay_dir: str | None = None) -> Embedder:
    if config.kind is BackendKind.MOCK:
        return MockEmbedder()
    return RemoteEmbedder(config.endpoint, _transport(config, replay_dir))


def build_checkworthy_scorer(config: BackendConfig, replay_dir: str | None = None) -> TextScorer:
    if config.kind is BackendKind.MOCK:
        return MockScorer()
    return RemoteScorer(config.endpoint, _transport(config, replay_dir))


def build_stance_scorer(config: BackendConfig, replay_dir: str | None = None) -> PairScorer:
    if config.kind is BackendKind.MOCK:
        return MockPairScorer()
    return RemotePairScorer(config.endpoint, _transport(config, replay_dir))


def build_generator(config: BackendConfig, replay_dir: str | None = None) -> Generator:
    if config.kind is BackendKind.MOCK:
        return MockGenerator()
    return RemoteChatGenerator(config.endpoint, config.model_name, _transport(config, replay_dir))


def backends_from_env(env: Mapping[str, str] | None = None) -> Backends:
    """Resolve each capability from the environment, defaulting to mocks."""
    env = os.environ if env is None else env
    replay_dir = env.get(ENV_REPLAY_DIR) or None

    def config_for(url_var: str, kind: BackendKind) -> BackendConfig:
        endpoint = env.get(url_var) or None
        if endpoint is None:
            return BackendConfig(kind=BackendKind.MOCK)
        model = env.get(ENV_GENERATOR_MODEL, "default")
        return BackendConfig(kind=kind, endpoint=endpoint, model_name=model)

    embedder_cfg = config_for(ENV_EMBEDDER_URL, BackendKind.REMOTE_EMBEDDER)
    scorer_cfg = config_for(ENV_SCORER_URL, BackendKind.REMOTE_SCORER)
    nli_cfg = config_for(ENV_NLI_URL, BackendKind.REMOTE_SCORER)
    generator_cfg = config_for(ENV_GENERATOR_URL, BackendKind.CHAT_GENERATOR)

    for name, cfg in (
        ("embedder", embedder_cfg),
        ("checkworthy", scorer_cfg),
        ("stance", nli_cfg),
        ("generator", generator_cfg),
    ):
        logger.debug("backend %s -> %s", name, cfg.kind.value)

    return Backends(
        embedder=build_embedder(embedder_cfg, replay_dir),
        checkworthy=build_checkworthy_scorer(scorer_cfg, replay_dir),
        stance=build_stance_scorer(nli_cfg, replay_dir),
        generator=build_generator(generator_cfg, replay_dir),
    )


def mock_backends() -> Backends:
    return Backends(
        embedder=MockEmbedder(),
        checkworthy=MockScorer(),
        stance=MockPairScorer(),
        generator=MockGenerator(),
    )
