"""Append-only job persistence.

Every state change appends one JSON record; on load, the latest record
per job id wins. A torn or truncated record (say, from a crash mid
write) is counted and skipped without losing the records before it.
"""

import json
import logging
import threading
from pathlib import Path
from typing import Callable

from factcheck.errors import JobNotFound
from factcheck.service.wire import job_from_dict, job_payload, job_to_dict
from factcheck.types import Job

logger = logging.getLogger(__name__)


class JobStore:
    """In-memory job index backed by an optional record log."""

    def __init__(self, log_path: str | Path | None = None):
        self._lock = threading.RLock()
        self._jobs: dict[str, Job] = {}
        self._log_path = Path(log_path) if log_path else None
        self._log_file = None
        self.corrupt_records = 0
        if self._log_path is not None:
            self._load()
            self._log_path.parent.mkdir(parents=True, exist_ok=True)
            self._log_file = self._log_path.open("a", encoding="utf-8")

    def _load(self) -> None:
        if not self._log_path.is_file():
            return
        loaded = 0
        with self._log_path.open(encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    job = job_from_dict(json.loads(line))
                except Exception as exc:
                    self.corrupt_records += 1
                    logger.warning("skipping corrupt job record at line %d: %s", line_no, exc)
                    continue
                self._jobs[job.id] = job
                loaded += 1
        logger.info(
            "loaded %d records (%d jobs, %d corrupt) from %s",
            loaded, len(self._jobs), self.corrupt_records, self._log_path,
        )

    def put(self, job: Job) -> None:
        """Index the job and append its current state to the log."""
        with self._lock:
            self._jobs[job.id] = job
            if self._log_file is not None:
                record = json.dumps(job_to_dict(job), ensure_ascii=False)
                self._log_file.write(record + "\n")
                self._log_file.flush()

    def get(self, job_id: str) -> Job:
        with self._lock:
            job = self._jobs.get(job_id)
        if job is None:
            raise JobNotFound(job_id)
        return job

    def payload(self, job_id: str) -> dict:
        """API payload built under the lock for a consistent snapshot."""
        with self._lock:
            job = self._jobs.get(job_id)
            if job is None:
                raise JobNotFound(job_id)
            return job_payload(job)

    def with_job(self, job_id: str, update: Callable[[Job], None]) -> None:
        """Run an update against a job and persist the result atomically."""
        with self._lock:
            job = self._jobs.get(job_id)
            if job is None:
                raise JobNotFound(job_id)
            update(job)
            self.put(job)

    def job_ids(self) -> list[str]:
        with self._lock:
            return list(self._jobs)

    def close(self) -> None:
        with self._lock:
            if self._log_file is not None:
                self._log_file.close()
                self._log_file = None
