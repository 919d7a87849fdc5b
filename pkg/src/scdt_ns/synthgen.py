"""Synthetic benchmark generator: apodized prototypes under random polynomial warps.

Three prototype waveforms (a Gabor wave and Gaussian-apodized sawtooth and
square waves) are deformed by random strictly-increasing 4th-degree
polynomial time warps applied through the mass-preserving model
s_g = g' * (s o g). Warp coefficients are drawn identity-anchored and
uniform per degree, with a single magnitude knob per regime so train and
test distributions can be separated for out-of-distribution runs.

All randomness comes from numpy's PCG64 seeded through SeedSequence with a
(seed, split, class, index) key per sample, so datasets are byte-for-byte
reproducible and each sample's draw is independent of every other.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, replace

import numpy as np

from .signals import Signal
from .transform import apply_warp

RNG_ID = "numpy-pcg64/seedsequence(seed,split,class,index)"

# per-degree coefficient weights for q_0..q_4
_DEGREE_WEIGHTS = np.array([1.0, 1.0, 0.5, 0.25, 0.125])
_CHECK_POINTS = 1000
_MAX_REJECTS = 1000

_SPLIT_TRAIN, _SPLIT_TEST = 0, 1


@dataclass(frozen=True)
class WarpPolynomial:
    """g(t) = sum_k coeffs[k] * t^k, strictly increasing on its domain."""

    coeffs: tuple[float, ...]
    domain: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) != 5:
            raise ValueError("warp polynomial needs exactly 5 coefficients p0..p4")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "domain", (float(self.domain[0]), float(self.domain[1])))
        check = np.linspace(self.domain[0], self.domain[1], _CHECK_POINTS)
        if np.any(self.derivative(check) <= 0.0):
            raise ValueError("warp polynomial is not strictly increasing on its domain")

    def __call__(self, t):
        return np.polynomial.polynomial.polyval(t, self.coeffs)

    def derivative(self, t):
        dcoeffs = np.polynomial.polynomial.polyder(self.coeffs)
        return np.polynomial.polynomial.polyval(t, dcoeffs)


@dataclass(frozen=True)
class WarpRegime:
    """Coefficient law for sampled warps.

    Perturbation q_k of degree k is uniform on
    (center_scale +/- magnitude) * weight_k; center_scale biases the law
    away from the identity and is 0 by default.
    """

    magnitude: float = 0.1
    center_scale: float = 0.0

    def __post_init__(self):
        if self.magnitude < 0.0:
            raise ValueError("magnitude must be >= 0")


@dataclass(frozen=True)
class PrototypeSpec:
    kind: str = "gabor"  # gabor | apodized_sawtooth | apodized_square
    t0: float = 0.5
    sigma: float = 0.1
    freq: float = 6.0
    phase: float = 0.0


@dataclass(frozen=True)
class DatasetSpec:
    """Everything needed to regenerate a dataset, including the seed."""

    classes: tuple[PrototypeSpec, ...] = (
        PrototypeSpec("gabor"),
        PrototypeSpec("apodized_sawtooth"),
        PrototypeSpec("apodized_square"),
    )
    n_train: int = 16
    n_test: int = 100
    regime_in: WarpRegime = field(default_factory=lambda: WarpRegime(magnitude=0.1))
    regime_out: WarpRegime = field(default_factory=lambda: WarpRegime(magnitude=0.25))
    ood_test: bool = False
    seed: int = 0
    n: int = 512
    domain: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        if self.n_train < 1 or self.n_test < 1:
            raise ValueError("n_train and n_test must be >= 1")
        if self.ood_test and not self.regime_out.magnitude > self.regime_in.magnitude:
            raise ValueError("OOD mode needs regime_out.magnitude > regime_in.magnitude")
        object.__setattr__(self, "classes", tuple(self.classes))
        object.__setattr__(self, "domain", (float(self.domain[0]), float(self.domain[1])))


def prototype(kind: str, *, t0: float = 0.5, sigma: float = 0.1, freq: float = 6.0,
              phase: float = 0.0, domain: tuple[float, float] = (0.0, 1.0),
              n: int = 512) -> Signal:
    """One of the three template waveforms, Gaussian-apodized around t0.

    The carrier argument is 2*pi*freq*(t - t0) + phase; the sawtooth rises
    from -1 to 1 per period and the square wave spends the first half of
    each period at +1.
    """
    t = np.linspace(domain[0], domain[1], n)
    envelope = np.exp(-((t - t0) ** 2) / (2.0 * sigma**2))
    cycles = freq * (t - t0) + phase / (2.0 * np.pi)
    if kind == "gabor":
        wave = np.cos(2.0 * np.pi * cycles)
    elif kind == "apodized_sawtooth":
        wave = 2.0 * (cycles - np.floor(cycles)) - 1.0
    elif kind == "apodized_square":
        wave = np.where(cycles - np.floor(cycles) < 0.5, 1.0, -1.0)
    else:
        raise ValueError(f"unknown prototype kind {kind!r}")
    return Signal(envelope * wave, domain[0], domain[1])


def _prototype_from_spec(ps: PrototypeSpec, domain, n) -> Signal:
    return prototype(ps.kind, t0=ps.t0, sigma=ps.sigma, freq=ps.freq,
                     phase=ps.phase, domain=domain, n=n)


def sample_warp(regime: WarpRegime, rng: np.random.Generator,
                domain: tuple[float, float] = (0.0, 1.0)) -> WarpPolynomial:
    """Draw an identity-anchored warp g(t) = t + sum_k q_k t^k from the regime.

    Draws are rejected until g' > 0 everywhere on the check grid, which
    keeps the coefficient law uniform on the feasible set.
    """
    check = np.linspace(domain[0], domain[1], _CHECK_POINTS)
    for _ in range(_MAX_REJECTS):
        q = (regime.center_scale + regime.magnitude * rng.uniform(-1.0, 1.0, 5))
        q *= _DEGREE_WEIGHTS
        coeffs = (q[0], 1.0 + q[1], q[2], q[3], q[4])
        dcoeffs = np.polynomial.polynomial.polyder(coeffs)
        if np.all(np.polynomial.polynomial.polyval(check, dcoeffs) > 0.0):
            return WarpPolynomial(coeffs, domain)
    raise ValueError(
        f"magnitude too large for monotone warps ({_MAX_REJECTS} consecutive rejections)"
    )


def _sample_rng(seed: int, split: int, class_index: int, sample_index: int):
    key = np.random.SeedSequence((int(seed), split, class_index, sample_index))
    return np.random.Generator(np.random.PCG64(key))


def generate(spec: DatasetSpec):
    """Build (train, test) lists of (Signal, label), ordered by (class, index).

    Train always draws from the in-distribution regime; test draws from the
    out-distribution regime when spec.ood_test is set.
    """
    test_regime = spec.regime_out if spec.ood_test else spec.regime_in
    train, test = [], []
    for c, proto_spec in enumerate(spec.classes):
        proto = _prototype_from_spec(proto_spec, spec.domain, spec.n)
        for split, count, regime, out in (
            (_SPLIT_TRAIN, spec.n_train, spec.regime_in, train),
            (_SPLIT_TEST, spec.n_test, test_regime, test),
        ):
            for i in range(count):
                rng = _sample_rng(spec.seed, split, c, i)
                warp = sample_warp(regime, rng, spec.domain)
                out.append((apply_warp(proto, warp), c))
    return train, test


def spec_to_dict(spec: DatasetSpec) -> dict:
    """JSON-ready dict, with the RNG identity recorded for provenance."""
    data = asdict(spec)
    data["classes"] = [asdict(ps) for ps in spec.classes]
    data["domain"] = list(spec.domain)
    data["rng"] = RNG_ID
    return data


def spec_from_dict(data: dict) -> DatasetSpec:
    data = dict(data)
    data.pop("rng", None)
    data["classes"] = tuple(PrototypeSpec(**ps) for ps in data.get("classes", []))
    data["regime_in"] = WarpRegime(**data["regime_in"])
    data["regime_out"] = WarpRegime(**data["regime_out"])
    data["domain"] = tuple(data["domain"])
    return DatasetSpec(**data)


def with_overrides(spec: DatasetSpec, **kwargs) -> DatasetSpec:
    return replace(spec, **kwargs)
