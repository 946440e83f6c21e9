"""Majority-vote aggregation of stance verdicts."""

import math

from factcheck.types import StanceLabel, StanceVerdict, VerdictLabel


def aggregate_stances(verdicts: list[StanceVerdict]) -> tuple[VerdictLabel, int, int]:
    """(label, supports_count, refutes_count) for one claim.

    Majority wins; a tied vote falls back to summed confidence per side,
    and a tie there too stays Disputed: with equally split evidence the
    checker flags rather than clears.
    """
    supports = sum(1 for v in verdicts if v.label is StanceLabel.SUPPORTS)
    refutes = len(verdicts) - supports
    if not verdicts:
        return VerdictLabel.UNVERIFIABLE, 0, 0
    if supports > refutes:
        return VerdictLabel.SUPPORTED, supports, refutes
    if refutes > supports:
        return VerdictLabel.DISPUTED, supports, refutes
    support_conf = math.fsum(v.confidence for v in verdicts if v.label is StanceLabel.SUPPORTS)
    refute_conf = math.fsum(v.confidence for v in verdicts if v.label is StanceLabel.REFUTES)
    if support_conf > refute_conf:
        return VerdictLabel.SUPPORTED, supports, refutes
    return VerdictLabel.DISPUTED, supports, refutes
