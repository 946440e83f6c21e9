"""Full per-article orchestration: detect, retrieve, verify, explain.

Claims verify in parallel but publish strictly in claim order, so a
caller streaming partial progress always sees a prefix of the final
report list.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from factcheck.claims.detect import detect_claims
from factcheck.config import DEFAULT_CONFIG, PipelineConfig
from factcheck.errors import FactcheckError
from factcheck.evidence.adapters import SearchAdapter
from factcheck.evidence.retrieve import retrieve_evidence
from factcheck.gateway.config import Backends, mock_backends
from factcheck.types import Claim, ClaimReport, ClaimStatus, VerdictLabel
from factcheck.veracity.aggregate import aggregate_stances
from factcheck.veracity.fix import suggest_fix
from factcheck.veracity.justify import NO_EVIDENCE_JUSTIFICATION, generate_justification
from factcheck.veracity.stance import classify_stances

logger = logging.getLogger(__name__)


class FactcheckPipeline:
    def __init__(
        self,
        backends: Backends | None = None,
        adapters: list[SearchAdapter] | None = None,
        blocklist: frozenset[str] = frozenset(),
        config: PipelineConfig = DEFAULT_CONFIG,
    ):
        self.backends = backends or mock_backends()
        self.adapters = adapters or []
        self.blocklist = blocklist
        self.config = config

    def check_article(
        self,
        article_text: str,
        language: str,
        article_id: str = "",
        on_claims: Callable[[list[Claim]], None] | None = None,
        on_report: Callable[[ClaimReport], None] | None = None,
    ) -> list[ClaimReport]:
        """Verify every check-worthy claim of an article.

        on_claims fires once after detection; on_report fires per claim,
        in claim order, as verification completes.
        """
        claims = detect_claims(
            article_text, language, self.backends, self.config, article_id=article_id
        )
        if on_claims is not None:
            on_claims(claims)
        if not claims:
            return []

        reports: list[ClaimReport] = []
        workers = max(1, self.config.claim_parallelism)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for report in pool.map(self.verify_claim, claims):
                reports.append(report)
                if on_report is not None:
                    on_report(report)
        return reports

    def verify_claim(self, claim: Claim) -> ClaimReport:
        """Evidence, stance vote, justification, and fix for one claim.

        Never raises: any stage failure downgrades the claim to Failed
        with an Unverifiable report so one bad claim cannot sink a job.
        """
        if claim.status is ClaimStatus.FAILED:
            return self._failed_report(claim)
        claim.status = ClaimStatus.VERIFYING
        try:
            snippets = retrieve_evidence(
                claim, self.adapters, self.backends, self.blocklist, self.config
            )
            verdicts = classify_stances(claim, snippets, self.backends.stance)
            label, supports, refutes = aggregate_stances(verdicts)
            if label is VerdictLabel.UNVERIFIABLE:
                justification = NO_EVIDENCE_JUSTIFICATION
            else:
                justification = generate_justification(
                    claim, label, snippets, self.backends.generator, self.config.prompt_dir
                )
            fix = None
            if label is VerdictLabel.DISPUTED:
                fix = suggest_fix(
                    claim, label, snippets, self.backends.generator, self.config.prompt_dir
                )
        except FactcheckError as exc:
            logger.error("claim %s failed verification: %s", claim.id, exc)
            claim.status = ClaimStatus.FAILED
            return self._failed_report(claim)
        claim.status = ClaimStatus.VERIFIED
        return ClaimReport(
            claim=claim,
            label=label,
            supports_count=supports,
            refutes_count=refutes,
            verdicts=verdicts,
            justification=justification,
            fix=fix,
        )

    @staticmethod
    def _failed_report(claim: Claim) -> ClaimReport:
        return ClaimReport(
            claim=claim,
            label=VerdictLabel.UNVERIFIABLE,
            supports_count=0,
            refutes_count=0,
            verdicts=[],
            justification=NO_EVIDENCE_JUSTIFICATION,
        )
