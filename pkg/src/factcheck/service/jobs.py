"""Job submission and background execution."""

import logging
import uuid
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

from factcheck.errors import EmptyText, PayloadTooLarge
from factcheck.pipeline import FactcheckPipeline
from factcheck.service.language import detect_language
from factcheck.service.store import JobStore
from factcheck.types import Job, JobStatus

logger = logging.getLogger(__name__)

MAX_ARTICLE_CHARS = 100_000
JOB_PARALLELISM = 2


def _now() -> datetime:
    return datetime.now(timezone.utc)


class JobRunner:
    """Runs fact-check jobs on a small worker pool (default 2 at a time)."""

    def __init__(
        self,
        pipeline: FactcheckPipeline,
        store: JobStore,
        job_parallelism: int = JOB_PARALLELISM,
    ):
        self.pipeline = pipeline
        self.store = store
        self._pool = ThreadPoolExecutor(max_workers=max(1, job_parallelism))

    def submit(self, text: str, language: str | None = None) -> Job:
        """Validate, enqueue, and return the Pending job."""
        if len(text) == 0:
            raise EmptyText("article text is empty")
        if len(text) > MAX_ARTICLE_CHARS:
            raise PayloadTooLarge(f"article text exceeds {MAX_ARTICLE_CHARS} chars")
        resolved = language or detect_language(text)
        now = _now()
        job = Job(
            id=uuid.uuid4().hex,
            article_text=text,
            language=resolved,
            status=JobStatus.PENDING,
            created_at=now,
            updated_at=now,
        )
        self.store.put(job)
        self._pool.submit(self._run, job.id)
        return job

    def _run(self, job_id: str) -> None:
        def start(job: Job) -> None:
            job.status = JobStatus.RUNNING
            job.updated_at = _now()

        self.store.with_job(job_id, start)
        job = self.store.get(job_id)
        try:
            self.pipeline.check_article(
                job.article_text,
                job.language,
                article_id=job_id,
                on_claims=lambda claims: self._record_claims(job_id, claims),
                on_report=lambda report: self._record_report(job_id, report),
            )
            final = JobStatus.DONE
        except Exception:
            logger.exception("job %s failed", job_id)
            final = JobStatus.FAILED

        def finish(job: Job) -> None:
            job.status = final
            job.updated_at = _now()

        self.store.with_job(job_id, finish)

    def _record_claims(self, job_id: str, claims) -> None:
        def update(job: Job) -> None:
            job.claims = claims
            job.updated_at = _now()

        self.store.with_job(job_id, update)

    def _record_report(self, job_id: str, report) -> None:
        def update(job: Job) -> None:
            job.reports.append(report)
            job.updated_at = _now()

        self.store.with_job(job_id, update)

    def shutdown(self, wait: bool = True) -> None:
        self._pool.shutdown(wait=wait)
