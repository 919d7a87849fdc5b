"""Flat-file formats: signal CSV, predictions CSV, sweep CSV, JSON sidecars.

One signal per CSV row: label, t_min, t_max, then the n amplitude values.
Unlabeled rows use label -1. Floats are written with shortest round-trip
repr, so identical data produces identical bytes. All writes go through a
temp file and an atomic rename.
"""

from __future__ import annotations

import json
import os

from .signals import Signal


class DataError(ValueError):
    """Malformed input data (CSV rows, config files)."""


def atomic_write_text(path, text: str) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _fmt(x: float) -> str:
    return repr(float(x))


def write_signals_csv(path, rows) -> None:
    """rows: iterable of (Signal, label); every signal must share one length."""
    rows = list(rows)
    if not rows:
        raise DataError("no signals to write")
    n = rows[0][0].n
    if any(s.n != n for s, _ in rows):
        raise DataError("all signals in one CSV must have the same length")
    lines = ["label,t_min,t_max," + ",".join(f"v{i}" for i in range(n))]
    for signal, label in rows:
        values = ",".join(_fmt(v) for v in signal.samples)
        lines.append(f"{int(label)},{_fmt(signal.t_min)},{_fmt(signal.t_max)},{values}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_signals_csv(path) -> list[tuple[Signal, int]]:
    """Parse a signal CSV; errors name the offending data row (1-based)."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    lines = [line for line in lines if line.strip()]
    if not lines:
        raise DataError(f"{path}: no signals (empty file)")
    header = lines[0].split(",")
    if header[:3] != ["label", "t_min", "t_max"]:
        raise DataError(f"{path}: bad header, expected label,t_min,t_max,v0,...")
    n = len(header) - 3
    if n < 2:
        raise DataError(f"{path}: header declares fewer than 2 sample columns")
    rows = []
    for i, line in enumerate(lines[1:], start=1):
        fields = line.split(",")
        if len(fields) != n + 3:
            raise DataError(
                f"{path}: row {i}: expected {n + 3} fields, found {len(fields)}"
            )
        try:
            label = int(fields[0])
            t_min, t_max = float(fields[1]), float(fields[2])
            samples = [float(v) for v in fields[3:]]
        except ValueError as exc:
            raise DataError(f"{path}: row {i}: non-numeric value ({exc})") from exc
        try:
            rows.append((Signal(samples, t_min, t_max), label))
        except ValueError as exc:
            raise DataError(f"{path}: row {i}: {exc}") from exc
    if not rows:
        raise DataError(f"{path}: no signals (header only)")
    return rows


def write_predictions_csv(path, predictions) -> None:
    """predictions: iterable of Prediction-like (label, distances_sq) objects."""
    predictions = list(predictions)
    if not predictions:
        raise DataError("no predictions to write")
    n_classes = len(predictions[0].distances_sq)
    header = "index,label," + ",".join(f"d2_{c}" for c in range(n_classes))
    lines = [header]
    for i, pred in enumerate(predictions):
        distances = ",".join(_fmt(d) for d in pred.distances_sq)
        lines.append(f"{i},{pred.label},{distances}")
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_sweep_csv(path, rows) -> None:
    """rows: iterable of SweepRow."""
    lines = ["train_size,accuracy,macro_f1"]
    for row in rows:
        lines.append(
            f"{row.train_size},{_fmt(row.metrics.accuracy)},{_fmt(row.metrics.macro_f1)}"
        )
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_json(path, data: dict) -> None:
    atomic_write_text(path, json.dumps(data, indent=2, sort_keys=True) + "\n")


def read_json(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: invalid JSON ({exc})") from exc
