"""Command-line front end: generate | train | predict | benchmark.

Every command resolves its parameters from defaults, an optional JSON
config file, and CLI flag overrides (in that order), then writes the fully
resolved config next to its outputs so any run can be reproduced from one
file. Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import classifier, dataio, evaluation, synthgen
from .dataio import DataError
from .subspace import RankPolicy
from .synthgen import DatasetSpec, WarpRegime

_DEFAULTS = {
    "seed": 0,
    "out": ".",
    "n": 512,
    "n_train": 16,
    "n_test": 100,
    "magnitude_in": 0.1,
    "magnitude_out": 0.25,
    "ood": False,
    "train_sizes": [1, 2, 4, 8, 16, 32, 64],
    "rank_cutoff": 1e-8,
    "max_rank": None,
    "grid_m": None,
    "mean_removal": True,
    "data": None,
    "model": None,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we map usage errors to 1
        raise UsageError(message)


def _parse_sizes(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"--train-sizes expects comma-separated integers: {exc}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="scdt-ns", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("generate", "write a synthetic train/test dataset"),
        ("train", "fit a model from a signal CSV"),
        ("predict", "classify a signal CSV with a saved model"),
        ("benchmark", "accuracy-vs-training-size sweep"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON config file; flags override its values")
        p.add_argument("--seed", type=int)
        p.add_argument("--out", help="output directory (default: .)")
        p.add_argument("--ood", action="store_true", default=None,
                       help="also use the out-of-distribution regime")
        p.add_argument("--train-sizes", dest="train_sizes",
                       help="comma-separated sizes for benchmark sweeps")
        p.add_argument("--rank-cutoff", dest="rank_cutoff", type=float)
        p.add_argument("--max-rank", dest="max_rank", type=int)
        p.add_argument("--grid-m", dest="grid_m", type=int)
        p.add_argument("--n", type=int, help="samples per generated signal")
        p.add_argument("--n-train", dest="n_train", type=int)
        p.add_argument("--n-test", dest="n_test", type=int)
        p.add_argument("--magnitude-in", dest="magnitude_in", type=float)
        p.add_argument("--magnitude-out", dest="magnitude_out", type=float)
        p.add_argument("--data", help="input signal CSV")
        p.add_argument("--model", help="model file path")
    return parser


def _resolve(args: argparse.Namespace) -> dict:
    config = dict(_DEFAULTS)
    if args.config:
        config.update(dataio.read_json(args.config))
    for key in _DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            config[key] = value
    if isinstance(config["train_sizes"], str):
        config["train_sizes"] = _parse_sizes(config["train_sizes"])
    config["command"] = args.command
    return config


def _dataset_spec(config: dict) -> DatasetSpec:
    return DatasetSpec(
        n_train=config["n_train"],
        n_test=config["n_test"],
        regime_in=WarpRegime(magnitude=config["magnitude_in"]),
        regime_out=WarpRegime(magnitude=config["magnitude_out"]),
        ood_test=bool(config["ood"]),
        seed=config["seed"],
        n=config["n"],
    )


def _train_config(config: dict) -> classifier.TrainConfig:
    policy = RankPolicy(cutoff=config["rank_cutoff"], max_rank=config["max_rank"])
    return classifier.TrainConfig(
        grid_m=config["grid_m"],
        mean_removal=bool(config["mean_removal"]),
        rank_policy=policy,
    )


def _emit_config(config: dict, out: str) -> None:
    dataio.write_json(os.path.join(out, f"{config['command']}_config.json"), config)


def cmd_generate(config: dict) -> int:
    out = config["out"]
    os.makedirs(out, exist_ok=True)
    spec = _dataset_spec(config)
    train_rows, test_rows = synthgen.generate(spec)
    dataio.write_signals_csv(os.path.join(out, "train.csv"), train_rows)
    dataio.write_signals_csv(os.path.join(out, "test.csv"), test_rows)
    dataio.write_json(os.path.join(out, "spec.json"), synthgen.spec_to_dict(spec))
    _emit_config(config, out)
    print(f"wrote {len(train_rows)} train and {len(test_rows)} test signals to {out}")
    return 0


def cmd_train(config: dict) -> int:
    out = config["out"]
    os.makedirs(out, exist_ok=True)
    data_path = config["data"] or os.path.join(out, "train.csv")
    samples = dataio.read_signals_csv(data_path)
    model = classifier.train(samples, _train_config(config))
    model_path = config["model"] or os.path.join(out, "model.scdtns")
    classifier.save_model(model, model_path)
    _emit_config(config, out)
    for sub in model.subspaces:
        print(f"class {sub.class_label}: rank {sub.r}")
    print(f"wrote model to {model_path}")
    return 0


def cmd_predict(config: dict) -> int:
    out = config["out"]
    os.makedirs(out, exist_ok=True)
    if not config["data"]:
        raise UsageError("predict needs --data (or a 'data' config entry)")
    model_path = config["model"] or os.path.join(out, "model.scdtns")
    model = classifier.load_model(model_path)
    rows = dataio.read_signals_csv(config["data"])
    predictions = classifier.predict_many(model, [s for s, _ in rows])
    dataio.write_predictions_csv(os.path.join(out, "predictions.csv"), predictions)
    _emit_config(config, out)
    print(f"wrote {len(predictions)} predictions to {out}/predictions.csv")
    return 0


def cmd_benchmark(config: dict) -> int:
    out = config["out"]
    os.makedirs(out, exist_ok=True)
    sizes = config["train_sizes"]
    if not sizes:
        raise UsageError("benchmark needs at least one train size")
    pool_size = max(max(sizes), config["n_train"])
    config = dict(config, n_train=pool_size)
    spec = _dataset_spec(config)
    modes = [("in", False)] + ([("ood", True)] if config["ood"] else [])
    train_cfg = _train_config(config)
    for tag, ood in modes:
        rows = evaluation.sweep(spec, sizes, ood=ood, config=train_cfg)
        dataio.write_sweep_csv(os.path.join(out, f"sweep_{tag}.csv"), rows)
        print(f"[{tag}] train_size accuracy macro_f1")
        for row in rows:
            print(f"[{tag}] {row.train_size:10d} {row.metrics.accuracy:.4f}"
                  f"   {row.metrics.macro_f1:.4f}")
    _emit_config(config, out)
    return 0


_COMMANDS = {
    "generate": cmd_generate,
    "train": cmd_train,
    "predict": cmd_predict,
    "benchmark": cmd_benchmark,
}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        config = _resolve(args)
        return _COMMANDS[args.command](config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (DataError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # anything unexpected
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
