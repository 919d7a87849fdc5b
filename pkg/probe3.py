import numpy as np

from scdt_ns import (
    Signal, TransformGrid, WarpPolynomial, WarpRegime, apply_warp, cdt_forward,
    sample_warp, prototype, l1_mass, decompose, DatasetSpec, generate, train,
    predict_many, score,
)

# composition with clipped gaussian bump on [-1, 3]
def comp_worst(n, seed=123, draws=100, clip=1e-12):
    t = np.linspace(-1, 3, n)
    env = np.exp(-((t - 0.5) ** 2) / (2 * 0.05 ** 2))
    env = np.where(env > clip, env, 0.0)
    s = Signal(env, -1, 3)
    grid = TransformGrid(n)
    base = cdt_forward(s, grid).values
    rng = np.random.default_rng(seed)
    worst, wy = 0.0, None
    for _ in range(draws):
        w = rng.uniform(0.5, 2.0)
        tau = rng.uniform(-0.2, 0.2)
        g = WarpPolynomial((-tau, w, 0, 0, 0), (-1.0, 3.0))
        cv = cdt_forward(apply_warp(s, g), grid).values
        diff = np.abs(cv - (base + tau) / w)
        k = int(np.argmax(diff))
        if diff[k] > worst:
            worst, wy = diff[k], k / (n - 1)
    return worst, wy

for n in (2001, 4001, 8001):
    w, wy = comp_worst(n)
    print(f"clipped n={n}: worst={w:.4e} at y={wy:.4f}")

# mass preservation at higher n
for n in (512, 2048):
    kinds = ["gabor", "apodized_sawtooth", "apodized_square"]
    rng = np.random.default_rng(5)
    worst_rel = 0.0
    checked = 0
    for trial in range(300):
        k = kinds[trial % 3]
        p = prototype(k, n=n)
        pm = l1_mass(p.with_samples(np.abs(p.samples)))
        g = sample_warp(WarpRegime(magnitude=0.1), rng)
        if g(0.0) <= 0.0 and g(1.0) >= 1.0:
            checked += 1
            sg = apply_warp(p, g)
            m1 = l1_mass(sg.with_samples(np.abs(sg.samples)))
            worst_rel = max(worst_rel, abs(m1 - pm) / pm)
    print(f"n={n}: {checked} applicable, worst rel mass err {worst_rel:.4f}")

# endpoint pinning check on prototypes + clipped bump
for k in ("gabor", "apodized_sawtooth", "apodized_square"):
    p = prototype(k)
    sp, sn = decompose(p)
    for name, part in (("pos", sp), ("neg", sn)):
        c = cdt_forward(part, TransformGrid(p.n))
        sup = np.flatnonzero(part.samples > 0)
        t = part.times()
        print(f"{k} {name}: s*(0)={c.values[0]:.4f} support_left={t[sup[0]]:.4f} "
              f"s*(1)={c.values[-1]:.4f} support_right={t[sup[-1]]:.4f} dt={p.dt:.4f}")

# OOD gap stability near acceptance threshold, more seeds incl worst-case hunting
from scdt_ns import sweep
worst_ood = 1.0
for seed in range(8):
    spec = DatasetSpec(seed=seed, n_train=64)
    acc = sweep(spec, [64], ood=True)[0].metrics.accuracy
    worst_ood = min(worst_ood, acc)
    print(f"seed={seed}: ood64={acc:.4f}")
print("worst ood:", worst_ood)
