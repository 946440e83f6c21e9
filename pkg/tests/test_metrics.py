"""F1 scoring against a brute-force confusion-matrix oracle."""

import random
from collections import Counter

import pytest

from factcheck.errors import EmptyInput, LengthMismatch
from factcheck.evalharness.metrics import EvalTask, MetricsRow, f1_scores


def oracle_f1(gold, pred):
    """Independent macro/micro F1 from explicit confusion counts."""
    confusion = Counter(zip(gold, pred))
    classes = sorted(set(gold), key=str)
    per_class = []
    for cls in classes:
        tp = confusion[(cls, cls)]
        fp = sum(n for (g, p), n in confusion.items() if p == cls and g != cls)
        fn = sum(n for (g, p), n in confusion.items() if g == cls and p != cls)
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        if precision + recall == 0.0:
            per_class.append(0.0)
        else:
            per_class.append(2 * precision * recall / (precision + recall))
    macro = sum(per_class) / len(per_class)
    correct = sum(n for (g, p), n in confusion.items() if g == p)
    micro = correct / len(gold)
    return macro, micro


def test_hand_example_is_exactly_half():
    macro, micro = f1_scores([1, 1, 0, 0], [1, 0, 1, 0])
    assert macro == 0.5
    assert micro == 0.5


def test_matches_oracle_on_random_instances():
    rng = random.Random(2024)
    for _ in range(400):
        k = rng.randint(2, 4)
        labels = list(range(k))
        n = rng.randint(1, 50)
        gold = [rng.choice(labels) for _ in range(n)]
        pred = [rng.choice(labels) for _ in range(n)]
        macro, micro = f1_scores(gold, pred)
        expected_macro, expected_micro = oracle_f1(gold, pred)
        assert macro == pytest.approx(expected_macro, abs=1e-12)
        assert micro == pytest.approx(expected_micro, abs=1e-12)


def test_micro_equals_accuracy():
    gold = ["a", "b", "a", "c", "c", "b"]
    pred = ["a", "b", "b", "c", "a", "b"]
    _, micro = f1_scores(gold, pred)
    assert micro == pytest.approx(4 / 6)


def test_perfect_and_disjoint_predictions():
    gold = ["x", "y", "x"]
    assert f1_scores(gold, gold) == (1.0, 1.0)
    macro, micro = f1_scores(["x", "x"], ["y", "y"])
    assert macro == 0.0
    assert micro == 0.0


def test_classes_come_from_gold_only():
    # A predicted-only label contributes errors but no class of its own.
    gold = ["a", "a", "a"]
    pred = ["a", "b", "b"]
    macro, micro = f1_scores(gold, pred)
    assert macro == pytest.approx(2 * 1 / (2 * 1 + 0 + 2))
    assert micro == pytest.approx(1 / 3)


def test_order_of_instances_is_irrelevant():
    rng = random.Random(5)
    gold = [rng.choice("abc") for _ in range(30)]
    pred = [rng.choice("abc") for _ in range(30)]
    baseline = f1_scores(gold, pred)
    order = list(range(30))
    rng.shuffle(order)
    shuffled = f1_scores([gold[i] for i in order], [pred[i] for i in order])
    assert shuffled == baseline


def test_length_mismatch_and_empty_input():
    with pytest.raises(LengthMismatch):
        f1_scores([1, 2], [1])
    with pytest.raises(EmptyInput):
        f1_scores([], [])


def test_metrics_row_requires_instances():
    row = MetricsRow(language="en", task=EvalTask.VERACITY, macro_f1=0.5, micro_f1=0.5, n=10)
    assert row.task is EvalTask.VERACITY
    with pytest.raises(EmptyInput):
        MetricsRow(language="en", task=EvalTask.VERACITY, macro_f1=0.0, micro_f1=0.0, n=0)
