"""Search source adapters: live HTTP and recorded-replay variants.

Replay fixtures live at `<root>/<adapter>/<sha256(query|language)>.json`
where the query is whitespace-collapsed and lowercased before hashing.
Each file holds {query, language, results: [...]}; a missing file means
the source has no results for that query, which is not an error.
"""

import hashlib
import json
import logging
import os
import re
import threading
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from pathlib import Path
from typing import Protocol
from urllib.parse import urlparse

import requests

from factcheck.errors import AllAdaptersFailed
from factcheck.evidence.dedup import registrable_domain
from factcheck.types import EvidenceDoc, SearchQuery, SourceKind

logger = logging.getLogger(__name__)

ADAPTER_IN_FLIGHT = 2
HOST_REQUESTS_PER_SECOND = 4.0

# Replayed docs carry a fixed retrieval time so reruns are identical.
REPLAY_RETRIEVED_AT = datetime(2000, 1, 1, tzinfo=timezone.utc)


def normalize_query_text(text: str) -> str:
    return " ".join(text.split()).lower()


def fixture_key(query_text: str, language: str) -> str:
    raw = f"{normalize_query_text(query_text)}|{language}"
    return hashlib.sha256(raw.encode("utf-8")).hexdigest()


def parse_result(raw: dict, language: str, retrieved_at: datetime) -> EvidenceDoc | None:
    """Normalize one adapter result; unusable entries become None."""
    url = raw.get("url", "")
    content = raw.get("content", "")
    if not url or not content:
        return None
    try:
        source_kind = SourceKind(raw.get("source_kind", SourceKind.WEB_SEARCH.value))
    except ValueError:
        logger.debug("unknown source_kind %r for %s", raw.get("source_kind"), url)
        return None
    citations = raw.get("citation_count")
    if source_kind is SourceKind.SCHOLARLY:
        citations = int(citations) if citations is not None else 0
    else:
        citations = None
    return EvidenceDoc(
        url=url,
        domain=registrable_domain(url),
        title=raw.get("title", ""),
        content=content,
        source_kind=source_kind,
        language=raw.get("language", language),
        retrieved_at=retrieved_at,
        citation_count=citations,
    )


class SearchAdapter(Protocol):
    name: str

    def search(self, query: SearchQuery, language: str) -> list[EvidenceDoc]: ...


class ReplaySearchAdapter:
    """Serves recorded search results from a fixture directory."""

    def __init__(self, name: str, root: str | Path):
        self.name = name
        self.root = Path(root)

    def search(self, query: SearchQuery, language: str) -> list[EvidenceDoc]:
        path = self.root / self.name / f"{fixture_key(query.text, language)}.json"
        if not path.is_file():
            return []
        with path.open(encoding="utf-8") as fh:
            recorded = json.load(fh)
        docs = []
        for raw in recorded.get("results", []):
            doc = parse_result(raw, language, REPLAY_RETRIEVED_AT)
            if doc is not None:
                docs.append(doc)
        return docs


class HostRateLimiter:
    """Sliding-window limiter: at most `rate` requests per host per second."""

    def __init__(self, rate: float = HOST_REQUESTS_PER_SECOND):
        self.rate = rate
        self._lock = threading.Lock()
        self._recent: dict[str, deque[float]] = {}

    def acquire(self, host: str) -> None:
        while True:
            with self._lock:
                now = time.monotonic()
                window = self._recent.setdefault(host, deque())
                while window and now - window[0] >= 1.0:
                    window.popleft()
                if len(window) < self.rate:
                    window.append(now)
                    return
                wait = 1.0 - (now - window[0])
            time.sleep(max(wait, 0.01))


class HttpSearchAdapter:
    """Live GET adapter configured from SEARCH_<NAME>_ENDPOINT/_API_KEY."""

    def __init__(
        self,
        name: str,
        endpoint: str,
        api_key: str | None = None,
        timeout: float = 30.0,
        session: requests.Session | None = None,
        rate_limiter: HostRateLimiter | None = None,
    ):
        self.name = name
        self.endpoint = endpoint
        self.api_key = api_key
        self.timeout = timeout
        self._session = session or requests.Session()
        self._gate = threading.Semaphore(ADAPTER_IN_FLIGHT)
        self._limiter = rate_limiter or HostRateLimiter()
        self._host = urlparse(endpoint).netloc

    def search(self, query: SearchQuery, language: str) -> list[EvidenceDoc]:
        headers = {}
        if self.api_key:
            headers["Authorization"] = f"Bearer {self.api_key}"
        with self._gate:
            self._limiter.acquire(self._host)
            response = self._session.get(
                self.endpoint,
                params={"q": query.text, "lang": language},
                headers=headers,
                timeout=self.timeout,
            )
        response.raise_for_status()
        retrieved_at = datetime.now(timezone.utc)
        docs = []
        for raw in response.json().get("results", []):
            doc = parse_result(raw, language, retrieved_at)
            if doc is not None:
                docs.append(doc)
        return docs


_ENDPOINT_VAR = re.compile(r"SEARCH_([A-Z0-9]+)_ENDPOINT")


def live_adapters_from_env(env=None) -> list[HttpSearchAdapter]:
    """One live adapter per SEARCH_<NAME>_ENDPOINT (+ optional _API_KEY)."""
    env = os.environ if env is None else env
    adapters = []
    limiter = HostRateLimiter()
    for key in sorted(env):
        match = _ENDPOINT_VAR.fullmatch(key)
        if match is None:
            continue
        name = match.group(1)
        adapters.append(
            HttpSearchAdapter(
                name.lower(),
                env[key],
                api_key=env.get(f"SEARCH_{name}_API_KEY"),
                rate_limiter=limiter,
            )
        )
    return adapters


def replay_adapters(root: str | Path, names: list[str] | None = None) -> list[ReplaySearchAdapter]:
    """One replay adapter per recorded source directory."""
    root = Path(root)
    if names is None:
        names = sorted(p.name for p in root.iterdir() if p.is_dir()) if root.is_dir() else []
    return [ReplaySearchAdapter(name, root) for name in names]


def search_all_sources(
    query: SearchQuery,
    adapters: list[SearchAdapter],
    language: str,
) -> list[EvidenceDoc]:
    """Union of every adapter's results, in adapter order.

    Individual adapter failures are logged and skipped; it is an error
    only when nothing is configured or every adapter fails.
    """
    if not adapters:
        raise AllAdaptersFailed("no search adapters configured")

    def run(adapter: SearchAdapter) -> list[EvidenceDoc] | Exception:
        try:
            return adapter.search(query, language)
        except Exception as exc:
            return exc

    with ThreadPoolExecutor(max_workers=max(1, len(adapters))) as pool:
        outcomes = list(pool.map(run, adapters))

    docs: list[EvidenceDoc] = []
    failures = 0
    for adapter, outcome in zip(adapters, outcomes):
        if isinstance(outcome, Exception):
            failures += 1
            logger.warning("adapter %s failed for %r: %s", adapter.name, query.text, outcome)
        else:
            docs.extend(outcome)
    if failures == len(adapters):
        raise AllAdaptersFailed(f"all {failures} adapters failed for {query.text!r}")
    return docs
