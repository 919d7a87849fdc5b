"""Per-class orthonormal bases and orthogonal-projection distances."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .transform import FeatureVector


@dataclass(frozen=True)
class RankPolicy:
    """Rank selection for class bases.

    Singular values below cutoff * sigma_max are discarded; max_rank, if
    set, additionally caps the number of leading columns kept.
    """

    cutoff: float = 1e-8
    max_rank: int | None = None

    def __post_init__(self):
        if self.cutoff < 0.0:
            raise ValueError("cutoff must be >= 0")
        if self.max_rank is not None and self.max_rank < 1:
            raise ValueError("max_rank must be >= 1")


@dataclass(frozen=True)
class ClassSubspace:
    """Orthonormal basis (2m x r) spanning one class's transform span."""

    basis: np.ndarray
    class_label: int

    def __post_init__(self):
        basis = np.array(self.basis, dtype=np.float64)
        if basis.ndim != 2 or basis.shape[1] < 1:
            raise ValueError("basis must be a 2D matrix with at least one column")
        basis.setflags(write=False)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "class_label", int(self.class_label))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def r(self) -> int:
        return self.basis.shape[1]


def build_basis(
    features, rank_policy: RankPolicy = RankPolicy(), class_label: int = 0
) -> ClassSubspace:
    """Orthonormal basis of the span of the given feature vectors.

    Features are stacked as columns and factored by SVD; left singular
    vectors with sigma_i > cutoff * sigma_max survive, up to max_rank.
    """
    columns = [f.values if isinstance(f, FeatureVector) else np.asarray(f, float)
               for f in features]
    if not columns:
        raise ValueError("build_basis needs at least one feature vector")
    dim = columns[0].size
    if any(c.ndim != 1 or c.size != dim for c in columns):
        raise ValueError("feature vectors must all have the same length")
    matrix = np.column_stack(columns)
    u, sigma, _ = np.linalg.svd(matrix, full_matrices=False)
    if sigma[0] <= 0.0:
        raise ValueError("degenerate class: all feature vectors are zero")
    r = int(np.count_nonzero(sigma > rank_policy.cutoff * sigma[0]))
    if rank_policy.max_rank is not None:
        r = min(r, rank_policy.max_rank)
    return ClassSubspace(u[:, :r], class_label)


def projection_distance_sq(x, sub: ClassSubspace) -> float:
    """Squared residual ||x - B (B^T x)||^2 of x against the subspace.

    Computed with two matrix-vector products; the dense projector B B^T is
    never formed.
    """
    v = x.values if isinstance(x, FeatureVector) else np.asarray(x, float)
    if v.ndim != 1 or v.size != sub.dim:
        raise ValueError(f"feature length {v.size} != basis rows {sub.dim}")
    residual = v - sub.basis @ (sub.basis.T @ v)
    return float(residual @ residual)
