"""`factcheck-serve`: run the checking service.

Model backends come from FACTCHECK_* environment variables (mocks when
unset); search sources come from --replay-dir or SEARCH_* variables.
The optional JSON config file can override any PipelineConfig field
plus: host, job_parallelism, and job_log (persistence path).
"""

import argparse
import json
import logging
from dataclasses import fields

import uvicorn

from factcheck.config import PipelineConfig
from factcheck.evidence.adapters import live_adapters_from_env, replay_adapters
from factcheck.evidence.filtering import load_blocklist
from factcheck.gateway.config import backends_from_env
from factcheck.pipeline import FactcheckPipeline
from factcheck.service.app import create_app
from factcheck.service.jobs import JOB_PARALLELISM, JobRunner
from factcheck.service.store import JobStore

logger = logging.getLogger(__name__)

DEFAULT_PORT = 8080


def build_runner(
    config_path: str | None = None,
    replay_dir: str | None = None,
    blocklist_path: str | None = None,
) -> JobRunner:
    raw = {}
    if config_path:
        with open(config_path, encoding="utf-8") as fh:
            raw = json.load(fh)

    pipeline_fields = {f.name for f in fields(PipelineConfig)}
    config = PipelineConfig(**{k: v for k, v in raw.items() if k in pipeline_fields})
    if replay_dir:
        config.search_replay_dir = replay_dir
    if blocklist_path:
        config.blocklist_path = blocklist_path

    if config.search_replay_dir:
        adapters = replay_adapters(config.search_replay_dir, config.search_adapters or None)
    else:
        adapters = live_adapters_from_env()
    if not adapters:
        logger.warning("no search adapters configured; all claims will be Unverifiable")

    blocklist = load_blocklist(config.blocklist_path) if config.blocklist_path else frozenset()

    pipeline = FactcheckPipeline(
        backends=backends_from_env(),
        adapters=adapters,
        blocklist=blocklist,
        config=config,
    )
    store = JobStore(raw.get("job_log"))
    return JobRunner(pipeline, store, raw.get("job_parallelism", JOB_PARALLELISM))


def main(argv: list[str] | None = None) -> None:
    parser = argparse.ArgumentParser(prog="factcheck-serve", description=__doc__)
    parser.add_argument("--port", type=int, default=DEFAULT_PORT)
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--replay-dir", help="recorded search fixtures instead of live search")
    parser.add_argument("--blocklist", help="blocked-domain list, one per line")
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s %(message)s")
    runner = build_runner(args.config, args.replay_dir, args.blocklist)
    app = create_app(runner)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")


if __name__ == "__main__":
    main()
