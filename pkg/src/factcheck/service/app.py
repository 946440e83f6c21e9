"""REST surface of the fact-checking service."""

import logging

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from factcheck.errors import EmptyText, JobNotFound, PayloadTooLarge
from factcheck.service.jobs import JobRunner

logger = logging.getLogger(__name__)

API_PREFIX = "/api/v1"


class SubmitRequest(BaseModel):
    text: str
    language: str | None = None


def create_app(runner: JobRunner) -> FastAPI:
    app = FastAPI(title="factcheck", docs_url=None, redoc_url=None)
    # The editor is served from its own origin during development.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.runner = runner

    @app.post(f"{API_PREFIX}/factcheck", status_code=202)
    def submit(request: SubmitRequest) -> dict:
        try:
            job = runner.submit(request.text, request.language)
        except EmptyText as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except PayloadTooLarge as exc:
            raise HTTPException(status_code=413, detail=str(exc))
        return {"job_id": job.id}

    @app.get(f"{API_PREFIX}/factcheck/{{job_id}}")
    def get_job(job_id: str) -> dict:
        try:
            return runner.store.payload(job_id)
        except JobNotFound:
            raise HTTPException(status_code=404, detail=f"no job {job_id}")

    @app.get(f"{API_PREFIX}/health")
    def health() -> dict:
        return {"status": "ok"}

    return app
