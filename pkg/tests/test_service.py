"""REST endpoints: submission, polling, validation, progress masking."""

import json
import random
import time

import pytest
from fastapi.testclient import TestClient

from conftest import load_article, load_manifest, random_job
from factcheck.evidence.adapters import replay_adapters
from factcheck.pipeline import FactcheckPipeline
from factcheck.service.app import create_app
from factcheck.service.jobs import JobRunner
from factcheck.service.store import JobStore
from factcheck.types import ClaimStatus

from conftest import SEARCH_DIR


@pytest.fixture()
def runner(backends):
    pipeline = FactcheckPipeline(backends=backends, adapters=replay_adapters(SEARCH_DIR))
    runner = JobRunner(pipeline, JobStore())
    yield runner
    runner.shutdown()


@pytest.fixture()
def client(runner):
    return TestClient(create_app(runner))


def poll_until_done(client, job_id: str, deadline: float = 15.0) -> dict:
    end = time.monotonic() + deadline
    while time.monotonic() < end:
        body = client.get(f"/api/v1/factcheck/{job_id}").json()
        if body["status"] in ("Done", "Failed"):
            return body
        time.sleep(0.02)
    raise AssertionError(f"job {job_id} did not finish within {deadline}s")


def test_health(client):
    response = client.get("/api/v1/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_submit_empty_text_is_400(client):
    response = client.post("/api/v1/factcheck", json={"text": ""})
    assert response.status_code == 400


def test_submit_oversized_text_is_413(client):
    response = client.post("/api/v1/factcheck", json={"text": "x" * 100_001})
    assert response.status_code == 413


def test_unknown_job_is_404(client):
    assert client.get("/api/v1/factcheck/deadbeef").status_code == 404


def test_submit_accepted_with_job_id(client):
    response = client.post(
        "/api/v1/factcheck",
        json={"text": load_article("article2")},
    )
    assert response.status_code == 202
    body = response.json()
    assert set(body) == {"job_id"}
    assert body["job_id"]


def test_submit_and_poll_matches_manifest(client):
    manifest = load_manifest("article1")
    response = client.post(
        "/api/v1/factcheck",
        json={"text": load_article("article1"), "language": manifest["language_param"]},
    )
    job_id = response.json()["job_id"]
    body = poll_until_done(client, job_id)
    assert body == manifest["payload"]


def test_language_is_detected_when_omitted(client):
    response = client.post("/api/v1/factcheck", json={"text": load_article("article2")})
    body = poll_until_done(client, response.json()["job_id"])
    assert body["language"] == "en"
    assert body["status"] == "Done"


def test_cors_allows_any_origin(client):
    response = client.get("/api/v1/health", headers={"Origin": "http://localhost:5173"})
    assert response.headers.get("access-control-allow-origin") == "*"


def test_verified_claim_without_report_is_masked():
    job = random_job(random.Random(13))
    job.reports = []
    for claim in job.claims:
        claim.status = ClaimStatus.VERIFIED
    store = JobStore()
    store.put(job)

    payload = store.payload(job.id)
    for entry in payload["claims"]:
        assert entry["status"] == "Verifying"
        assert entry["label"] is None
        assert entry["evidence"] == []


def test_build_runner_wires_config_replay_and_blocklist(tmp_path):
    from factcheck.service.cli import build_runner

    config = tmp_path / "config.json"
    config.write_text(
        json.dumps({"claim_parallelism": 1, "job_parallelism": 1, "job_log": str(tmp_path / "jobs.log")}),
        encoding="utf-8",
    )
    blocklist = tmp_path / "blocked.txt"
    blocklist.write_text("badnews-press.com\n", encoding="utf-8")

    runner = build_runner(str(config), replay_dir=str(SEARCH_DIR), blocklist_path=str(blocklist))
    try:
        assert runner.pipeline.adapters
        assert runner.pipeline.blocklist == frozenset({"badnews-press.com"})
        assert runner.pipeline.config.claim_parallelism == 1
        job = runner.submit("Norge har om lag 5,5 millioner innbyggere.", "no")
        client = TestClient(create_app(runner))
        body = poll_until_done(client, job.id)
        assert body["status"] == "Done"
    finally:
        runner.shutdown()
    assert (tmp_path / "jobs.log").is_file()


def test_pipeline_crash_marks_job_failed():
    class ExplodingPipeline:
        def check_article(self, *args, **kwargs):
            raise RuntimeError("boom")

    runner = JobRunner(ExplodingPipeline(), JobStore())
    client = TestClient(create_app(runner))
    try:
        response = client.post("/api/v1/factcheck", json={"text": "Anything at all."})
        body = poll_until_done(client, response.json()["job_id"])
        assert body["status"] == "Failed"
        assert body["claims"] == []
    finally:
        runner.shutdown()
