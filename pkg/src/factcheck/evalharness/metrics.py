"""F1 computation.

Per-class F1 is computed as 2*tp / (2*tp + fp + fn), which equals
2*P*R/(P+R) but avoids intermediate divisions so results are exactly
reproducible from integer counts. Macro averages over the classes
present in gold; micro pools all decisions and equals accuracy for
single-label tasks.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Hashable, Sequence

from factcheck.errors import EmptyInput, LengthMismatch


class EvalTask(str, Enum):
    CLAIM_DETECTION = "ClaimDetection"
    VERACITY = "Veracity"


@dataclass(frozen=True, slots=True)
class MetricsRow:
    language: str
    task: EvalTask
    macro_f1: float
    micro_f1: float
    n: int

    def __post_init__(self):
        if self.n <= 0:
            raise EmptyInput("a metrics row needs at least one instance")


def f1_scores(gold: Sequence[Hashable], pred: Sequence[Hashable]) -> tuple[float, float]:
    """(macro_f1, micro_f1) over parallel gold/predicted label sequences."""
    if len(gold) != len(pred):
        raise LengthMismatch(f"{len(gold)} gold labels vs {len(pred)} predictions")
    if not gold:
        raise EmptyInput("no instances to score")

    classes = sorted(set(gold), key=str)
    per_class = []
    for cls in classes:
        tp = sum(1 for g, p in zip(gold, pred) if g == cls and p == cls)
        fp = sum(1 for g, p in zip(gold, pred) if g != cls and p == cls)
        fn = sum(1 for g, p in zip(gold, pred) if g == cls and p != cls)
        denominator = 2 * tp + fp + fn
        per_class.append(0.0 if denominator == 0 else 2 * tp / denominator)
    macro = sum(per_class) / len(per_class)

    correct = sum(1 for g, p in zip(gold, pred) if g == p)
    wrong = len(gold) - correct
    # Pooled tp=correct and fp=fn=wrong, so this reduces to accuracy.
    micro = 2 * correct / (2 * correct + wrong + wrong)
    return macro, micro
