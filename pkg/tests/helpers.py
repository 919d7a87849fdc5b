"""Shared test fixtures: analytic signals and small labeled datasets."""

import numpy as np

from scdt_ns import Signal, WarpPolynomial


def gaussian_bump(mu=0.5, sigma=0.15, domain=(0.0, 1.0), n=1000):
    t = np.linspace(domain[0], domain[1], n)
    return Signal(np.exp(-((t - mu) ** 2) / (2.0 * sigma**2)), *domain)


def clipped_bump(mu=0.5, sigma=0.05, domain=(-1.0, 3.0), n=4001, clip=1e-12):
    """Gaussian bump with the far tail clipped to exact zero.

    The clip keeps the support edge sharp, so quantile endpoints are set by
    the signal rather than by float64 accumulation of sub-ulp tail mass.
    """
    t = np.linspace(domain[0], domain[1], n)
    env = np.exp(-((t - mu) ** 2) / (2.0 * sigma**2))
    return Signal(np.where(env > clip, env, 0.0), *domain)


def affine_warp(omega, tau, domain=(0.0, 1.0)):
    """g(t) = omega * t - tau as a WarpPolynomial."""
    return WarpPolynomial((-tau, omega, 0.0, 0.0, 0.0), domain)


def smooth_positive_signal(rng, n=800, domain=(0.0, 1.0), zero_runs=False):
    """Random strictly positive (or clipped-nonnegative) mixture of bumps."""
    t = np.linspace(domain[0], domain[1], n)
    v = np.zeros(n)
    for _ in range(rng.integers(2, 5)):
        mu = rng.uniform(0.15, 0.85)
        sigma = rng.uniform(0.03, 0.15)
        v += rng.uniform(0.2, 2.0) * np.exp(-((t - mu) ** 2) / (2 * sigma**2))
    if zero_runs:
        v = np.maximum(v - rng.uniform(0.2, 0.8) * v.max(), 0.0)
        if v.max() <= 0.0:
            v[n // 2] = 1.0
    else:
        v += 1e-3
    return Signal(v, *domain)


def two_bump_classes(rng, per_class=6, n=256):
    """Tiny two-class labeled set: bumps at distinct centers, jittered."""
    samples = []
    for label, mu in ((0, 0.35), (1, 0.65)):
        for _ in range(per_class):
            shift = rng.uniform(-0.04, 0.04)
            t = np.linspace(0, 1, n)
            v = np.exp(-((t - mu - shift) ** 2) / (2 * 0.05**2)) - 0.3
            samples.append((Signal(v, 0.0, 1.0), label))
    return samples
