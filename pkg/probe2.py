import numpy as np

from scdt_ns import (
    DatasetSpec, Signal, TransformGrid, WarpPolynomial, WarpRegime, apply_warp,
    cdt_forward, generate, predict_many, score, sweep, train, sample_warp, prototype,
    l1_mass, decompose,
)

# composition error vs n, and where in y the worst error sits
def comp_worst(n, seed=123, draws=100):
    t = np.linspace(-4, 6, n)
    s = Signal(np.exp(-((t - 0.5) ** 2) / (2 * 0.05 ** 2)), -4, 6)
    grid = TransformGrid(n)
    base = cdt_forward(s, grid).values
    rng = np.random.default_rng(seed)
    worst, wy = 0.0, None
    for _ in range(draws):
        w = rng.uniform(0.5, 2.0)
        tau = rng.uniform(-0.2, 0.2)
        g = WarpPolynomial((-tau, w, 0, 0, 0), (-4.0, 6.0))
        cv = cdt_forward(apply_warp(s, g), grid).values
        diff = np.abs(cv - (base + tau) / w)
        k = int(np.argmax(diff))
        if diff[k] > worst:
            worst, wy = diff[k], k / (n - 1)
    return worst, wy

for n in (4001, 8001, 12001, 16001):
    w, wy = comp_worst(n)
    print(f"n={n}: worst={w:.4e} at y={wy}")

# OOD accuracy at 64 across seeds
for seed in (1, 2, 3, 7):
    spec = DatasetSpec(seed=seed, n_train=64)
    rows = sweep(spec, [64], ood=True)
    rows_in = sweep(spec, [64], ood=False)
    print(f"seed={seed}: in64={rows_in[0].metrics.accuracy:.4f} ood64={rows[0].metrics.accuracy:.4f}")

# Monte-Carlo: fresh warped class-0 prototypes vs 16-sample model
spec = DatasetSpec(seed=0)
tr, te = generate(spec)
model = train(tr)
proto = prototype("gabor")
rng = np.random.default_rng(777)
hits = 0
draws = 500
from scdt_ns import predict
for _ in range(draws):
    g = sample_warp(WarpRegime(magnitude=0.1), rng)
    if predict(model, apply_warp(proto, g)).label == 0:
        hits += 1
print("MC class-0 hit rate:", hits / draws)

# mass preservation of emitted samples (support inside domain)
proto_mass = {k: l1_mass(decompose(prototype(k))[0]) + l1_mass(decompose(prototype(k))[1])
              for k in ("gabor", "apodized_sawtooth", "apodized_square")}
kinds = ["gabor", "apodized_sawtooth", "apodized_square"]
viol = 0
checked = 0
rng = np.random.default_rng(5)
for trial in range(300):
    k = kinds[trial % 3]
    p = prototype(k)
    g = sample_warp(WarpRegime(magnitude=0.1), rng)
    # warped support inside iff g(0) <= support_left and g(1) >= support_right
    sup = p.samples != 0
    t = p.times()
    left, right = t[sup][0], t[sup][-1]
    if g(0.0) <= left and g(1.0) >= right:
        checked += 1
        sg = apply_warp(p, g)
        m1 = l1_mass(sg.with_samples(np.abs(sg.samples)))
        if abs(m1 - proto_mass[k]) > 0.02 * proto_mass[k]:
            viol += 1
print(f"mass check: {checked} applicable, {viol} violations")

# acceptance rate at magnitude 0.2
rng = np.random.default_rng(9)
acc = 0
N = 10000
reg = WarpRegime(magnitude=0.2)
w_k = np.array([1.0, 1.0, 0.5, 0.25, 0.125])
check = np.linspace(0, 1, 1000)
import numpy.polynomial.polynomial as P
for _ in range(N):
    q = reg.magnitude * rng.uniform(-1, 1, 5) * w_k
    coeffs = (q[0], 1 + q[1], q[2], q[3], q[4])
    if np.all(P.polyval(check, P.polyder(coeffs)) > 0):
        acc += 1
print("acceptance rate at mag 0.2:", acc / N)

# OOD displacement ordering
def mean_max_disp(mag, n_draws=1000, seed=11):
    rng = np.random.default_rng(seed)
    tgrid = np.linspace(0, 1, 200)
    tot = 0.0
    for _ in range(n_draws):
        g = sample_warp(WarpRegime(magnitude=mag), rng)
        tot += np.max(np.abs(g(tgrid) - tgrid))
    return tot / n_draws
print("disp in:", mean_max_disp(0.1), "disp out:", mean_max_disp(0.25))
