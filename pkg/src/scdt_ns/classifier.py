"""Nearest-subspace classification in transform space, plus model persistence."""

from __future__ import annotations

import os
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .signals import Signal, TransformGrid, remove_mean, resample
from .subspace import ClassSubspace, RankPolicy, build_basis, projection_distance_sq
from .transform import feature_vector, scdt_forward

_MAGIC = b"SCDTNS"
_FORMAT_VERSION = 1
_FLAG_MEAN_REMOVAL = 1
_WORKERS_ENV = "SCDT_NS_WORKERS"


class ModelFormatError(ValueError):
    """Raised when a model file is corrupt or of an unsupported version."""


@dataclass(frozen=True)
class TrainConfig:
    grid_m: int | None = None  # None: use the length of the first training signal
    mean_removal: bool = True
    rank_policy: RankPolicy = field(default_factory=RankPolicy)


@dataclass(frozen=True)
class NSModel:
    """Trained classifier: one subspace per class plus the shared transform setup."""

    subspaces: tuple[ClassSubspace, ...]
    grid: TransformGrid
    mean_removal: bool = True
    format_version: int = _FORMAT_VERSION

    def __post_init__(self):
        labels = [sub.class_label for sub in self.subspaces]
        if labels != list(range(len(labels))):
            raise ValueError("class labels must be contiguous from 0")
        if any(sub.dim != 2 * self.grid.m for sub in self.subspaces):
            raise ValueError("subspace row dimension must equal 2 * grid.m")

    @property
    def n_classes(self) -> int:
        return len(self.subspaces)


@dataclass(frozen=True)
class Prediction:
    label: int
    distances_sq: np.ndarray


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(_WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    """Order-preserving map, threaded when SCDT_NS_WORKERS > 1."""
    workers = _workers()
    if workers == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _featurize(s: Signal, grid: TransformGrid, mean_removal: bool) -> np.ndarray:
    if s.n != grid.m:
        s = resample(s, grid.m)
    if mean_removal:
        s = remove_mean(s)
    return feature_vector(scdt_forward(s, grid)).values


def train(samples, config: TrainConfig = TrainConfig()) -> NSModel:
    """Fit per-class subspaces from labeled signals in a single pass.

    Pipeline per signal: resample to the transform grid, optional mean
    removal, SCDT, mass-dropped feature; per class, an orthonormal basis of
    the feature span.
    """
    samples = list(samples)
    if not samples:
        raise ValueError("no training samples")
    labels = sorted({int(label) for _, label in samples})
    if labels != list(range(len(labels))):
        missing = sorted(set(range(max(labels) + 1)) - set(labels))
        raise ValueError(f"class labels must be contiguous from 0; missing {missing}")
    m = config.grid_m if config.grid_m is not None else samples[0][0].n
    grid = TransformGrid(m)
    features = _map_ordered(
        lambda item: _featurize(item[0], grid, config.mean_removal), samples
    )
    subspaces = []
    for c in range(len(labels)):
        class_features = [f for f, (_, label) in zip(features, samples) if int(label) == c]
        try:
            subspaces.append(build_basis(class_features, config.rank_policy, class_label=c))
        except ValueError as exc:
            raise ValueError(f"class {c}: {exc}") from exc
    return NSModel(tuple(subspaces), grid, config.mean_removal)


def predict(model: NSModel, s: Signal) -> Prediction:
    """Classify one signal: argmin of per-class squared projection distances.

    Ties resolve to the lowest class index.
    """
    x = _featurize(s, model.grid, model.mean_removal)
    distances = np.array(
        [projection_distance_sq(x, sub) for sub in model.subspaces]
    )
    return Prediction(int(np.argmin(distances)), distances)


def predict_many(model: NSModel, signals) -> list[Prediction]:
    return _map_ordered(lambda s: predict(model, s), list(signals))


def save_model(model: NSModel, path) -> None:
    """Write the model in the versioned little-endian binary format."""
    flags = _FLAG_MEAN_REMOVAL if model.mean_removal else 0
    blob = bytearray(
        struct.pack(
            "<6sIIII", _MAGIC, model.format_version, model.grid.m, model.n_classes, flags
        )
    )
    for sub in model.subspaces:
        blob += struct.pack("<I", sub.r)
        blob += np.ascontiguousarray(sub.basis, dtype="<f8").tobytes()
    tmp = f"{path}.tmp"
    with open(tmp, "wb") as fh:
        fh.write(bytes(blob))
    os.replace(tmp, path)


def load_model(path) -> NSModel:
    """Read a model written by save_model; the round trip is lossless."""
    with open(path, "rb") as fh:
        blob = fh.read()
    header = struct.calcsize("<6sIIII")
    if len(blob) < header:
        raise ModelFormatError("corrupt model file: truncated header")
    magic, version, m, n_classes, flags = struct.unpack_from("<6sIIII", blob)
    if magic != _MAGIC:
        raise ModelFormatError("corrupt model file: bad magic")
    if version != _FORMAT_VERSION:
        raise ModelFormatError(
            f"unsupported model format_version {version}; this build reads {_FORMAT_VERSION}"
        )
    offset = header
    subspaces = []
    for c in range(n_classes):
        if offset + 4 > len(blob):
            raise ModelFormatError("corrupt model file: truncated class header")
        (r,) = struct.unpack_from("<I", blob, offset)
        offset += 4
        nbytes = 2 * m * r * 8
        if offset + nbytes > len(blob):
            raise ModelFormatError("corrupt model file: truncated basis data")
        basis = np.frombuffer(blob, dtype="<f8", count=2 * m * r, offset=offset)
        subspaces.append(ClassSubspace(basis.reshape(2 * m, r), class_label=c))
        offset += nbytes
    if offset != len(blob):
        raise ModelFormatError("corrupt model file: trailing bytes")
    return NSModel(
        tuple(subspaces), TransformGrid(m), bool(flags & _FLAG_MEAN_REMOVAL), version
    )
