"""Signal classification with the signed cumulative distribution transform.

Signals are embedded by their per-part quantile curves (the SCDT with mass
terms dropped) and classified by the nearest per-class subspace in that
transform space. Includes a synthetic warp-deformation benchmark generator,
an evaluation harness, and a CLI.
"""

from .classifier import (
    ModelFormatError,
    NSModel,
    Prediction,
    TrainConfig,
    load_model,
    predict,
    predict_many,
    save_model,
    train,
)
from .dataio import DataError
from .evaluation import Metrics, SweepRow, score, sweep
from .signals import Signal, TransformGrid, decompose, l1_mass, remove_mean, resample
from .subspace import ClassSubspace, RankPolicy, build_basis, projection_distance_sq
from .synthgen import (
    DatasetSpec,
    PrototypeSpec,
    WarpPolynomial,
    WarpRegime,
    generate,
    prototype,
    sample_warp,
)
from .transform import (
    CdtCurve,
    FeatureVector,
    SignedTransform,
    apply_warp,
    cdt_forward,
    cdt_inverse,
    feature_vector,
    scdt_forward,
)

__all__ = [
    "CdtCurve",
    "ClassSubspace",
    "DataError",
    "DatasetSpec",
    "FeatureVector",
    "Metrics",
    "ModelFormatError",
    "NSModel",
    "Prediction",
    "PrototypeSpec",
    "RankPolicy",
    "Signal",
    "SignedTransform",
    "SweepRow",
    "TrainConfig",
    "TransformGrid",
    "WarpPolynomial",
    "WarpRegime",
    "apply_warp",
    "build_basis",
    "cdt_forward",
    "cdt_inverse",
    "decompose",
    "feature_vector",
    "generate",
    "l1_mass",
    "load_model",
    "predict",
    "predict_many",
    "projection_distance_sq",
    "prototype",
    "remove_mean",
    "resample",
    "sample_warp",
    "save_model",
    "score",
    "scdt_forward",
    "sweep",
    "train",
]

__version__ = "0.1.0"
