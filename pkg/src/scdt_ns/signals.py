"""Uniformly sampled 1D signals and the elementary operations on them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Signal:
    """A real-valued signal sampled uniformly on [t_min, t_max].

    Sample i sits at t_i = t_min + i * (t_max - t_min) / (n - 1).
    Instances are immutable; the sample buffer is made read-only.
    """

    samples: np.ndarray
    t_min: float = 0.0
    t_max: float = 1.0

    def __post_init__(self):
        samples = np.array(self.samples, dtype=np.float64)
        if samples.ndim != 1 or samples.size < 2:
            raise ValueError("a signal needs a 1D array of at least 2 samples")
        if not np.all(np.isfinite(samples)):
            raise ValueError("signal samples must all be finite")
        t_min, t_max = float(self.t_min), float(self.t_max)
        if not t_min < t_max:
            raise ValueError(f"invalid domain [{t_min}, {t_max}]")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "t_min", t_min)
        object.__setattr__(self, "t_max", t_max)

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def dt(self) -> float:
        return (self.t_max - self.t_min) / (self.n - 1)

    def times(self) -> np.ndarray:
        """Sample positions t_0 .. t_{n-1}."""
        return np.linspace(self.t_min, self.t_max, self.n)

    def with_samples(self, samples) -> "Signal":
        """Same domain, new sample values."""
        return Signal(samples, self.t_min, self.t_max)


@dataclass(frozen=True)
class TransformGrid:
    """Uniform reference grid y_k = k / (m - 1) on [0, 1]."""

    m: int = 512

    def __post_init__(self):
        if int(self.m) < 2:
            raise ValueError("transform grid needs m >= 2")
        object.__setattr__(self, "m", int(self.m))

    def points(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.m)


def decompose(s: Signal) -> tuple[Signal, Signal]:
    """Split s into nonnegative parts (s_plus, s_neg) with s = s_plus - s_neg.

    The two parts live on the same grid and have pointwise-disjoint support.
    """
    v = s.samples
    return s.with_samples(np.maximum(v, 0.0)), s.with_samples(np.maximum(-v, 0.0))


def remove_mean(s: Signal) -> Signal:
    """Subtract the arithmetic mean of the samples."""
    return s.with_samples(s.samples - np.mean(s.samples))


def l1_mass(s: Signal) -> float:
    """Trapezoidal integral of a nonnegative signal over its domain.

    Raises if any sample is negative: signed signals must be decomposed
    first so each part carries its own mass.
    """
    if np.any(s.samples < 0.0):
        raise ValueError("l1_mass expects nonnegative samples; decompose first")
    return float(np.trapezoid(s.samples, dx=s.dt))


def resample(s: Signal, n: int) -> Signal:
    """Linearly resample to n uniform points on the same domain."""
    if int(n) < 2:
        raise ValueError("resample needs n >= 2")
    if int(n) == s.n:
        return s
    t_new = np.linspace(s.t_min, s.t_max, int(n))
    return Signal(np.interp(t_new, s.times(), s.samples), s.t_min, s.t_max)
