"""Cumulative distribution transform (CDT) and its signed extension (SCDT).

The forward transform maps a nonnegative signal to its quantile function
sampled on a uniform reference grid over [0, 1]: normalize to unit mass,
accumulate a trapezoidal CDF, and evaluate the generalized inverse CDF by
piecewise-linear interpolation. Signed signals are handled by transforming
the positive and negative parts separately, each paired with its L1 mass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .signals import Signal, TransformGrid, decompose, l1_mass


@dataclass(frozen=True)
class CdtCurve:
    """Quantile curve s*(y_k) on a TransformGrid; values are in t-units."""

    values: np.ndarray
    grid: TransformGrid

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size != self.grid.m:
            raise ValueError("curve length must match the transform grid")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class SignedTransform:
    """SCDT of a signal: per-part quantile curves plus their L1 masses.

    An identically-zero part follows the (0, 0) convention: zero mass, an
    all-zero curve, and the corresponding flag set.
    """

    pos: CdtCurve
    neg: CdtCurve
    pos_mass: float
    neg_mass: float
    zero_pos: bool = False
    zero_neg: bool = False


@dataclass(frozen=True)
class FeatureVector:
    """Mass-dropped transform: [pos curve || neg curve], length 2m."""

    values: np.ndarray
    grid: TransformGrid

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size != 2 * self.grid.m:
            raise ValueError("feature length must be 2 * grid.m")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)


def _cdf(s: Signal) -> tuple[np.ndarray, np.ndarray]:
    """Trapezoidal CDF of a nonnegative signal, renormalized so S[-1] == 1."""
    v = s.samples
    if np.any(v < 0.0):
        raise ValueError("cdt_forward expects nonnegative samples")
    incr = 0.5 * (v[1:] + v[:-1]) * s.dt
    cdf = np.concatenate(([0.0], np.cumsum(incr)))
    total = cdf[-1]
    if total <= 0.0:
        raise ValueError("empty part: signal has zero total mass")
    return cdf / total, s.times()


def cdt_forward(s: Signal, grid: TransformGrid) -> CdtCurve:
    """CDT of a nonnegative signal with the uniform reference on [0, 1].

    The generalized inverse CDF is evaluated at y_k = k/(m-1). Level 0 is
    anchored at the right end of the leading zero run of the CDF (the left
    edge of the support); every other flat run resolves to its leftmost t.
    """
    cdf, t = _cdf(s)
    positive = np.flatnonzero(cdf > 0.0)
    start = positive[0] - 1  # cdf[0] == 0 always, so this index exists
    levels, first = np.unique(cdf[start:], return_index=True)
    values = np.interp(grid.points(), levels, t[start:][first])
    return CdtCurve(values, grid)


def cdt_inverse(c: CdtCurve, t_min: float, t_max: float, n: int) -> Signal:
    """Reconstruct the unit-mass density from a quantile curve.

    Interpolates the inverse map y(t) from the (values, y_k) pairs and
    differentiates it on the requested output grid (central differences,
    one-sided at the ends). Intended for round-trip validation.
    """
    vals = c.values
    if np.any(np.diff(vals) < 0.0):
        raise ValueError("curve is not nondecreasing")
    levels, first = np.unique(vals, return_index=True)
    if levels.size < 2:
        raise ValueError("degenerate (constant) curve cannot be inverted")
    lo, hi = levels[0], levels[-1]
    span = hi - lo
    if t_min < lo - 1e-9 * span or t_max > hi + 1e-9 * span:
        raise ValueError(
            f"output grid [{t_min}, {t_max}] is outside the curve range [{lo}, {hi}]"
        )
    t = np.linspace(t_min, t_max, int(n))
    y_of_t = np.interp(t, levels, c.grid.points()[first])
    return Signal(np.gradient(y_of_t, t), t_min, t_max)


def scdt_forward(s: Signal, grid: TransformGrid) -> SignedTransform:
    """SCDT: decompose into nonnegative parts and transform each one."""
    s_plus, s_neg = decompose(s)
    pos, pos_mass, zero_pos = _part(s_plus, grid)
    neg, neg_mass, zero_neg = _part(s_neg, grid)
    return SignedTransform(pos, neg, pos_mass, neg_mass, zero_pos, zero_neg)


def _part(part: Signal, grid: TransformGrid):
    mass = l1_mass(part)
    if mass <= 0.0:
        return CdtCurve(np.zeros(grid.m), grid), 0.0, True
    return cdt_forward(part, grid), mass, False


def feature_vector(st: SignedTransform) -> FeatureVector:
    """Concatenate the two quantile curves, dropping the mass terms."""
    return FeatureVector(
        np.concatenate((st.pos.values, st.neg.values)), st.pos.grid
    )


def apply_warp(s: Signal, g) -> Signal:
    """Mass-preserving deformation s_g(t) = g'(t) * s(g(t)) on s's own grid.

    `g` must be callable at an array of times and expose `derivative(t)`
    evaluated analytically (see synthgen.WarpPolynomial). Samples of s read
    as 0 outside its domain. Raises if g is not strictly increasing on a
    dense check grid over the signal's domain.
    """
    check = np.linspace(s.t_min, s.t_max, 1000)
    if np.any(g.derivative(check) <= 0.0):
        raise ValueError("warp is not strictly increasing on the signal domain")
    t = s.times()
    warped = np.interp(g(t), t, s.samples, left=0.0, right=0.0)
    return s.with_samples(g.derivative(t) * warped)
