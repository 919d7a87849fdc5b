import numpy as np
import pytest
import scipy.signal

from scdt_ns import (
    DatasetSpec,
    PrototypeSpec,
    Signal,
    WarpPolynomial,
    WarpRegime,
    apply_warp,
    decompose,
    generate,
    l1_mass,
    prototype,
    remove_mean,
    sample_warp,
)
from scdt_ns.synthgen import RNG_ID, spec_from_dict, spec_to_dict

KINDS = ("gabor", "apodized_sawtooth", "apodized_square")


def test_gabor_peaks_at_center():
    p = prototype("gabor", n=513)  # odd n puts a sample exactly at t0 = 0.5
    assert p.samples[256] == 1.0


def test_prototypes_are_near_zero_mean_and_signed():
    for kind in KINDS:
        p = prototype(kind)
        assert abs(np.mean(p.samples)) < 0.02
        centered = remove_mean(p)
        assert abs(np.mean(centered.samples)) < 1e-12
        s_plus, s_neg = decompose(p)
        assert l1_mass(s_plus) > 0.0 and l1_mass(s_neg) > 0.0


def test_prototypes_are_mutually_distinct():
    normed = []
    for kind in KINDS:
        v = prototype(kind).samples
        normed.append(v / np.linalg.norm(v))
    for i in range(3):
        for j in range(i + 1, 3):
            assert np.linalg.norm(normed[i] - normed[j]) > 0.1


def test_prototype_waveforms_match_scipy():
    n = 512
    t = np.linspace(0, 1, n)
    envelope = np.exp(-((t - 0.5) ** 2) / (2 * 0.1**2))
    carrier = 2 * np.pi * 6.0 * (t - 0.5)

    saw = prototype("apodized_sawtooth", n=n)
    np.testing.assert_allclose(
        saw.samples, envelope * scipy.signal.sawtooth(carrier), atol=1e-9
    )
    gab = prototype("gabor", n=n)
    np.testing.assert_allclose(gab.samples, envelope * np.cos(carrier), atol=1e-12)

    square = prototype("apodized_square", n=n)
    away_from_jumps = np.abs(np.sin(carrier)) > 1e-6
    np.testing.assert_allclose(
        square.samples[away_from_jumps],
        (envelope * np.sign(np.sin(carrier)))[away_from_jumps],
        atol=1e-12,
    )


def test_prototype_unknown_kind():
    with pytest.raises(ValueError, match="unknown prototype kind"):
        prototype("triangle")


def test_warp_polynomial_eval_and_derivative():
    g = WarpPolynomial((0.1, 1.0, 0.2, 0.05, 0.01))
    t = np.linspace(0, 1, 7)
    np.testing.assert_allclose(
        g(t), 0.1 + t + 0.2 * t**2 + 0.05 * t**3 + 0.01 * t**4
    )
    np.testing.assert_allclose(
        g.derivative(t), 1.0 + 0.4 * t + 0.15 * t**2 + 0.04 * t**3
    )


def test_warp_polynomial_rejects_non_increasing():
    with pytest.raises(ValueError, match="increasing"):
        WarpPolynomial((0.0, -1.0, 0.0, 0.0, 0.0))
    with pytest.raises(ValueError, match="coefficients"):
        WarpPolynomial((0.0, 1.0))


def test_sample_warp_zero_magnitude_is_identity():
    rng = np.random.default_rng(30)
    g = sample_warp(WarpRegime(magnitude=0.0), rng)
    assert g.coeffs == (0.0, 1.0, 0.0, 0.0, 0.0)


def test_sample_warp_draws_are_monotone():
    rng = np.random.default_rng(31)
    check = np.linspace(0, 1, 1000)
    for _ in range(100):
        g = sample_warp(WarpRegime(magnitude=0.3), rng)
        assert np.all(g.derivative(check) > 0.0)


def test_sample_warp_acceptance_rate_at_default_ood_scale():
    rng = np.random.default_rng(32)
    regime = WarpRegime(magnitude=0.2)
    accepted = 0
    draws = 10_000
    for _ in range(draws):
        try:
            sample_warp(regime, rng)
            accepted += 1
        except ValueError:
            pass
    rate = accepted / draws
    print(f"warp acceptance rate at magnitude 0.2: {rate:.4f}")
    assert rate > 0.5


def test_sample_warp_reports_infeasible_regime():
    # a strongly biased regime never yields g' > 0
    rng = np.random.default_rng(33)
    with pytest.raises(ValueError, match="monotone"):
        sample_warp(WarpRegime(magnitude=0.1, center_scale=-10.0), rng)


def test_generate_zero_magnitude_reproduces_prototypes():
    spec = DatasetSpec(
        n_train=3,
        n_test=2,
        regime_in=WarpRegime(magnitude=0.0),
        regime_out=WarpRegime(magnitude=0.1),
        seed=1,
    )
    train_rows, test_rows = generate(spec)
    assert len(train_rows) == 9 and len(test_rows) == 6
    for c, proto_spec in enumerate(spec.classes):
        proto = prototype(proto_spec.kind)
        for signal, label in train_rows + test_rows:
            if label == c:
                np.testing.assert_array_equal(signal.samples, proto.samples)


def test_generate_is_deterministic_and_class_ordered():
    spec = DatasetSpec(n_train=4, n_test=3, seed=99)
    a_train, a_test = generate(spec)
    b_train, b_test = generate(spec)
    assert [lab for _, lab in a_train] == [0] * 4 + [1] * 4 + [2] * 4
    assert [lab for _, lab in a_test] == [0] * 3 + [1] * 3 + [2] * 3
    for (sa, _), (sb, _) in zip(a_train + a_test, b_train + b_test):
        np.testing.assert_array_equal(sa.samples, sb.samples)


def test_generate_train_and_test_draws_are_independent():
    spec = DatasetSpec(n_train=2, n_test=2, seed=5)
    train_rows, test_rows = generate(spec)
    assert not np.array_equal(train_rows[0][0].samples, test_rows[0][0].samples)


def test_generate_seed_changes_output():
    a, _ = generate(DatasetSpec(n_train=2, n_test=1, seed=0))
    b, _ = generate(DatasetSpec(n_train=2, n_test=1, seed=1))
    assert not np.array_equal(a[0][0].samples, b[0][0].samples)


def test_emitted_samples_preserve_mass_when_support_stays_inside():
    # square-wave jumps need a denser grid than the default for a 2% budget
    rng = np.random.default_rng(34)
    n = 2048
    checked = 0
    for trial in range(120):
        kind = KINDS[trial % 3]
        proto = prototype(kind, n=n)
        proto_mass = l1_mass(proto.with_samples(np.abs(proto.samples)))
        g = sample_warp(WarpRegime(magnitude=0.1), rng)
        if g(0.0) <= 0.0 and g(1.0) >= 1.0:  # warped support stays inside
            checked += 1
            warped = apply_warp(proto, g)
            mass = l1_mass(warped.with_samples(np.abs(warped.samples)))
            assert mass == pytest.approx(proto_mass, rel=0.02)
    assert checked > 10


def test_ood_regime_has_larger_displacement():
    t = np.linspace(0, 1, 200)

    def mean_max_displacement(magnitude, seed):
        rng = np.random.default_rng(seed)
        total = 0.0
        for _ in range(1000):
            g = sample_warp(WarpRegime(magnitude=magnitude), rng)
            total += np.max(np.abs(g(t) - t))
        return total / 1000

    assert mean_max_displacement(0.25, 35) > mean_max_displacement(0.1, 35)


def test_spec_serialization_round_trip():
    spec = DatasetSpec(n_train=7, seed=123, ood_test=True)
    data = spec_to_dict(spec)
    assert data["rng"] == RNG_ID
    assert spec_from_dict(data) == spec


def test_dataset_spec_validation():
    with pytest.raises(ValueError, match="n_train"):
        DatasetSpec(n_train=0)
    with pytest.raises(ValueError, match="OOD"):
        DatasetSpec(
            regime_in=WarpRegime(magnitude=0.3),
            regime_out=WarpRegime(magnitude=0.2),
            ood_test=True,
        )
    with pytest.raises(ValueError, match="magnitude"):
        WarpRegime(magnitude=-0.1)


def test_apply_warp_matches_generate():
    # generate() must emit exactly apply_warp(prototype, sampled warp)
    spec = DatasetSpec(n_train=1, n_test=1, seed=44)
    train_rows, _ = generate(spec)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((44, 0, 0, 0))))
    g = sample_warp(spec.regime_in, rng, spec.domain)
    expected = apply_warp(prototype("gabor"), g)
    np.testing.assert_array_equal(train_rows[0][0].samples, expected.samples)
