"""Async fact-checking service: REST API, job runner, persistence."""

from factcheck.service.app import create_app
from factcheck.service.jobs import MAX_ARTICLE_CHARS, JobRunner
from factcheck.service.language import detect_language, rank_languages
from factcheck.service.store import JobStore
from factcheck.service.wire import job_from_dict, job_payload, job_to_dict

__all__ = [
    "JobRunner",
    "JobStore",
    "MAX_ARTICLE_CHARS",
    "create_app",
    "detect_language",
    "job_from_dict",
    "job_payload",
    "job_to_dict",
    "rank_languages",
]
