"""Scratch probe: verify oracle errors and end-to-end accuracy before freezing tests."""
import time

import numpy as np

from scdt_ns import (
    DatasetSpec, Signal, TransformGrid, WarpPolynomial, apply_warp, cdt_forward,
    cdt_inverse, generate, prototype, remove_mean, scdt_forward, sweep, train,
    predict_many, score, l1_mass, decompose,
)

# --- oracle errors: ramp and sin ---
def ramp_err(n):
    t = np.linspace(0, 1, n)
    s = Signal(2 * t, 0, 1)
    curve = cdt_forward(s, TransformGrid(n))
    y = np.linspace(0, 1, n)
    return np.max(np.abs(curve.values - np.sqrt(y)))

def sin_err(n):
    t = np.linspace(0, 1, n)
    s = Signal(np.sin(2 * np.pi * t), 0, 1)
    st = scdt_forward(s, TransformGrid(n))
    y = np.linspace(0, 1, n)
    pos_true = np.arccos(1 - 2 * y) / (2 * np.pi)
    neg_true = 0.5 + np.arccos(1 - 2 * y) / (2 * np.pi)
    e1 = np.max(np.abs(st.pos.values - pos_true))
    e2 = np.max(np.abs(st.neg.values - neg_true))
    return max(e1, e2), st.pos_mass, st.neg_mass

def const_err(n):
    s = Signal(np.ones(n), 0, 1)
    curve = cdt_forward(s, TransformGrid(n))
    return np.max(np.abs(curve.values - np.linspace(0, 1, n)))

for n in (500, 1000, 2000):
    se, pm, nm = sin_err(n)
    print(f"n={n}: const={const_err(n):.3e} ramp={ramp_err(n):.3e} sin={se:.3e} pos_mass_err={abs(pm-1/np.pi):.2e}")
print("ramp ratio 500/1000:", ramp_err(500) / ramp_err(1000))
print("sin  ratio 500/1000:", sin_err(500)[0] / sin_err(1000)[0])

# shifted constant
n = 101
s = Signal(np.ones(n), 0.3, 1.3)
curve = cdt_forward(s, TransformGrid(n))
print("shifted const err:", np.max(np.abs(curve.values - (np.linspace(0, 1, n) + 0.3))))

# --- composition property on wide domain ---
def bump(domain=(-4.0, 6.0), n=8001, mu=0.5, sig=0.05):
    t = np.linspace(*domain, n)
    return Signal(np.exp(-((t - mu) ** 2) / (2 * sig * sig)), *domain)

rng = np.random.default_rng(123)
s = bump()
grid = TransformGrid(s.n)
base = cdt_forward(s, grid).values
worst = 0.0
for _ in range(100):
    w = rng.uniform(0.5, 2.0)
    tau = rng.uniform(-0.2, 0.2)
    g = WarpPolynomial((-tau, w, 0, 0, 0), (-4.0, 6.0))
    warped_curve = cdt_forward(apply_warp(s, g), grid).values
    predicted = (base + tau) / w
    worst = max(worst, np.max(np.abs(warped_curve - predicted)))
print("composition worst abs err over 100 draws:", worst)

# round trip const + gaussian
c = cdt_forward(Signal(np.ones(1000), 0, 1), TransformGrid(1000))
rec = cdt_inverse(c, 0, 1, 1000)
print("const roundtrip max err:", np.max(np.abs(rec.samples - 1.0)))

t = np.linspace(0, 1, 1500)
gb = Signal(np.exp(-((t - 0.5) ** 2) / (2 * 0.15 ** 2)), 0, 1)
cu = cdt_forward(gb, TransformGrid(1500))
rec = cdt_inverse(cu, 0, 1, 1500)
ref = gb.samples / l1_mass(gb)
l2 = np.sqrt(np.trapezoid((rec.samples - ref) ** 2, dx=gb.dt))
print("gaussian roundtrip L2 err:", l2)

# sqrt-y inverse
m = 1000
y = np.linspace(0, 1, m)
from scdt_ns import CdtCurve
c2 = CdtCurve(np.sqrt(y), TransformGrid(m))
rec2 = cdt_inverse(c2, 0.0, 1.0, m)
tt = rec2.times()
mask = (tt > 0.05) & (tt < 0.95)
print("sqrt-y inverse max err away from ends:", np.max(np.abs(rec2.samples[mask] - 2 * tt[mask])), "mass:", l1_mass(rec2.with_samples(np.abs(rec2.samples))))

# --- prototypes ---
for kind in ("gabor", "apodized_sawtooth", "apodized_square"):
    p = prototype(kind)
    sp, sn = decompose(p)
    print(kind, "mean:", np.mean(p.samples), "pos mass:", l1_mass(sp), "neg mass:", l1_mass(sn))

protos = [prototype(k).samples for k in ("gabor", "apodized_sawtooth", "apodized_square")]
normed = [v / np.linalg.norm(v) for v in protos]
for i in range(3):
    for j in range(i + 1, 3):
        print(f"L2 dist {i},{j}:", np.linalg.norm(normed[i] - normed[j]))

# --- end-to-end accuracy at multiple seeds ---
for seed in (0, 1, 42):
    t0 = time.perf_counter()
    spec = DatasetSpec(seed=seed)  # 16 train / 100 test per class
    tr, te = generate(spec)
    model = train(tr)
    preds = predict_many(model, [s for s, _ in te])
    met = score([(lab, p.label) for (_, lab), p in zip(te, preds)], n_classes=3)
    print(f"seed={seed}: 16-train acc={met.accuracy:.4f} f1={met.macro_f1:.4f} ({time.perf_counter()-t0:.1f}s)")

# sweep + ood for seed 0
spec = DatasetSpec(seed=0, n_train=64)
sizes = [1, 2, 4, 8, 16, 32, 64]
t0 = time.perf_counter()
rows_in = sweep(spec, sizes, ood=False)
rows_ood = sweep(spec, sizes, ood=True)
for ri, ro in zip(rows_in, rows_ood):
    print(f"size={ri.train_size:3d} in={ri.metrics.accuracy:.4f} ood={ro.metrics.accuracy:.4f}")
print(f"sweep time {time.perf_counter()-t0:.1f}s")
