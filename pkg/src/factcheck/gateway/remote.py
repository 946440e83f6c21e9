"""HTTP model backends with bounded retries, plus offline replay.

All remote calls are JSON POSTs. Retries use exponential backoff
(250ms * 2^n) and are safe to repeat because each attempt re-sends the
identical body. A ReplayTransport swaps the network for a directory of
recorded responses keyed by the sha256 of the canonical request body.
"""

import hashlib
import json
import logging
import threading
import time
from pathlib import Path
from typing import Callable

import requests

from factcheck.errors import (
    BackendError,
    EmbedderUnavailable,
    GeneratorUnavailable,
    InvalidInput,
    ScorerUnavailable,
)
from factcheck.gateway.embeddings import EmbeddingVector
from factcheck.gateway.mock import MAX_EMBED_BATCH

logger = logging.getLogger(__name__)

RETRY_BASE_DELAY = 0.25
MAX_IN_FLIGHT = 8


def request_hash(payload: dict) -> str:
    """Stable key for a request body: sha256 of its canonical JSON."""
    canonical = json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class HttpTransport:
    """requests-based JSON POST with retry and an in-flight cap."""

    def __init__(
        self,
        timeout: float = 30.0,
        max_retries: int = 2,
        sleep: Callable[[float], None] = time.sleep,
        session: requests.Session | None = None,
    ):
        self.timeout = timeout
        self.max_retries = max_retries
        self._sleep = sleep
        self._session = session or requests.Session()
        self._gate = threading.Semaphore(MAX_IN_FLIGHT)

    def post_json(self, url: str, payload: dict) -> dict:
        last_error: Exception | None = None
        for attempt in range(self.max_retries + 1):
            if attempt:
                self._sleep(RETRY_BASE_DELAY * 2 ** (attempt - 1))
            try:
                with self._gate:
                    response = self._session.post(url, json=payload, timeout=self.timeout)
            except requests.RequestException as exc:
                last_error = exc
                logger.warning("POST %s failed (attempt %d): %s", url, attempt + 1, exc)
                continue
            if response.status_code >= 500:
                last_error = BackendError(f"{url} returned {response.status_code}")
                logger.warning("POST %s returned %d (attempt %d)", url, response.status_code, attempt + 1)
                continue
            if response.status_code >= 400:
                raise BackendError(f"{url} rejected request: {response.status_code}")
            return response.json()
        raise BackendError(f"{url} unreachable after {self.max_retries + 1} attempts") from last_error


class ReplayTransport:
    """Serve recorded responses from `<replay_dir>/<request_hash>.json`."""

    def __init__(self, replay_dir: str | Path):
        self.replay_dir = Path(replay_dir)

    def post_json(self, url: str, payload: dict) -> dict:
        path = self.replay_dir / f"{request_hash(payload)}.json"
        if not path.is_file():
            raise BackendError(f"no recorded response for request to {url} at {path.name}")
        with path.open(encoding="utf-8") as fh:
            return json.load(fh)


def record_response(replay_dir: str | Path, payload: dict, response: dict) -> Path:
    """Write a response file where ReplayTransport will find it."""
    path = Path(replay_dir) / f"{request_hash(payload)}.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(response, ensure_ascii=False, indent=2), encoding="utf-8")
    return path


class RemoteChatGenerator:
    """Chat-completion style generation endpoint."""

    def __init__(self, endpoint: str, model_name: str, transport):
        self.endpoint = endpoint
        self.model_name = model_name
        self.transport = transport

    def generate(self, prompt: str, max_tokens: int = 512) -> str:
        payload = {
            "model": self.model_name,
            "messages": [{"role": "user", "content": prompt}],
            "max_tokens": max_tokens,
        }
        try:
            body = self.transport.post_json(self.endpoint, payload)
            return body["choices"][0]["message"]["content"]
        except (BackendError, KeyError, IndexError, TypeError) as exc:
            raise GeneratorUnavailable(str(exc)) from exc


class RemoteScorer:
    """Single-text scoring endpoint: {text} -> {score}."""

    def __init__(self, endpoint: str, transport):
        self.endpoint = endpoint
        self.transport = transport

    def score_text(self, text: str) -> float:
        try:
            body = self.transport.post_json(self.endpoint, {"text": text})
            return float(body["score"])
        except (BackendError, KeyError, TypeError, ValueError) as exc:
            raise ScorerUnavailable(str(exc)) from exc


class RemotePairScorer:
    """NLI-style endpoint: {premise, hypothesis} -> {label, score}."""

    def __init__(self, endpoint: str, transport):
        self.endpoint = endpoint
        self.transport = transport

    def score_pair(self, premise: str, hypothesis: str) -> tuple[str, float]:
        payload = {"premise": premise, "hypothesis": hypothesis}
        try:
            body = self.transport.post_json(self.endpoint, payload)
            return str(body["label"]), float(body["score"])
        except (BackendError, KeyError, TypeError, ValueError) as exc:
            raise ScorerUnavailable(str(exc)) from exc


class RemoteEmbedder:
    """Batch embedding endpoint: {texts} -> {embeddings}."""

    def __init__(self, endpoint: str, transport):
        self.endpoint = endpoint
        self.transport = transport

    def embed_texts(self, texts: list[str]) -> list[EmbeddingVector]:
        if not 1 <= len(texts) <= MAX_EMBED_BATCH:
            raise InvalidInput(f"batch size must be 1..{MAX_EMBED_BATCH}, got {len(texts)}")
        try:
            body = self.transport.post_json(self.endpoint, {"texts": texts})
            vectors = [EmbeddingVector(tuple(float(v) for v in row)) for row in body["embeddings"]]
        except (BackendError, KeyError, TypeError, ValueError) as exc:
            raise EmbedderUnavailable(str(exc)) from exc
        if len(vectors) != len(texts):
            raise EmbedderUnavailable(
                f"endpoint returned {len(vectors)} vectors for {len(texts)} texts"
            )
        return vectors
