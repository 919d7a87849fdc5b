"""Classification metrics and the accuracy-vs-training-size sweep harness."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .classifier import TrainConfig, predict_many, train
from .synthgen import DatasetSpec, generate


@dataclass(frozen=True)
class Metrics:
    accuracy: float
    macro_f1: float
    confusion: np.ndarray  # rows: true label, columns: predicted label

    def __post_init__(self):
        confusion = np.array(self.confusion, dtype=np.int64)
        confusion.setflags(write=False)
        object.__setattr__(self, "confusion", confusion)


@dataclass(frozen=True)
class SweepRow:
    train_size: int
    metrics: Metrics


def score(pairs, n_classes: int | None = None) -> Metrics:
    """Accuracy, macro-averaged F1, and the confusion matrix.

    `pairs` holds (true_label, predicted_label) tuples. Per-class F1 is 0
    when precision + recall is 0 (the class was never seen nor predicted
    correctly).
    """
    pairs = [(int(t), int(p)) for t, p in pairs]
    if not pairs:
        raise ValueError("score needs at least one (true, predicted) pair")
    seen = max(max(t, p) for t, p in pairs) + 1
    if n_classes is None:
        n_classes = seen
    elif seen > n_classes:
        raise ValueError(f"label {seen - 1} outside declared {n_classes} classes")
    confusion = np.zeros((n_classes, n_classes), dtype=np.int64)
    for t, p in pairs:
        if t < 0 or p < 0:
            raise ValueError("labels must be nonnegative")
        confusion[t, p] += 1
    accuracy = float(np.trace(confusion) / confusion.sum())
    f1 = []
    for c in range(n_classes):
        tp = confusion[c, c]
        predicted = confusion[:, c].sum()
        actual = confusion[c, :].sum()
        precision = tp / predicted if predicted else 0.0
        recall = tp / actual if actual else 0.0
        f1.append(2 * precision * recall / (precision + recall)
                  if precision + recall else 0.0)
    return Metrics(accuracy, float(np.mean(f1)), confusion)


def sweep(spec: DatasetSpec, train_sizes, ood: bool = False,
          config: TrainConfig = TrainConfig()) -> list[SweepRow]:
    """Accuracy curve over nested training subsets of one generated pool.

    A single pool of spec.n_train samples per class is generated once; each
    requested size trains on the first k samples per class and evaluates on
    the one fixed test set (out-of-distribution when `ood` is set). Nested
    prefixes keep the curve comparable across sizes.
    """
    train_sizes = [int(k) for k in train_sizes]
    if any(b < a for a, b in zip(train_sizes, train_sizes[1:])):
        raise ValueError("train_sizes must be nondecreasing")
    if train_sizes and train_sizes[-1] > spec.n_train:
        raise ValueError(
            f"largest train size {train_sizes[-1]} exceeds the pool n_train={spec.n_train}"
        )
    pool, test = generate(replace(spec, ood_test=ood))
    by_class: dict[int, list] = {}
    for signal, label in pool:
        by_class.setdefault(label, []).append(signal)
    rows = []
    for k in train_sizes:
        subset = [(s, c) for c in sorted(by_class) for s in by_class[c][:k]]
        model = train(subset, config)
        predictions = predict_many(model, [s for s, _ in test])
        metrics = score(
            [(label, pred.label) for (_, label), pred in zip(test, predictions)],
            n_classes=model.n_classes,
        )
        rows.append(SweepRow(k, metrics))
    return rows
