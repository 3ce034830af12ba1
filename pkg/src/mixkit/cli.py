"""Command-line front end.

Subcommands cover every capability: ``exact`` and ``bounds`` for joint
matrices, ``estimate`` for sample CSVs, ``dpi`` for triples, ``pairwise``
for all-ordered-pairs phi on a multi-column matrix (the directed-network
use case, with optional DPI-style pruning), and ``demo-inconsistency`` for
the naive-versus-binned estimator comparison.

Output is JSON by default (``--tsv`` for spreadsheets), floats are printed
with 17 significant digits so values round-trip losslessly, and runs are
reproducible: the seed defaults to a fixed constant and identical configs
produce byte-identical output.  Exit codes: 0 success, 1 input error,
2 size refusal, 3 solver non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bounds import alpha_bounds
from .dpi import TripleDist, Channel, compose_triple, dpi_check
from .errors import InputError, SizeRefusalError, SolverConvergenceError
from .estimator import (
    BinningSpec,
    SampleSet,
    binned_joint,
    estimate_mixing,
    naive_estimate_beta,
    percentile_bins,
)
from .fileio import parse_matrix, parse_samples, parse_tensor
from .mixing import DEFAULT_ENUM_LIMIT, mixing_report, phi
from .prob import JointDist

DEFAULT_SEED = 0
DEFAULT_TOL = 1e-6

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SIZE = 2
EXIT_SOLVER = 3


@dataclass(frozen=True)
class RunConfig:
    """One resolved CLI invocation.

    Defaults: seed 0, tolerance 1e-6, enum limit 24, schedule "cuberoot",
    JSON output, threads from MIXKIT_THREADS or 1, prune margin 0.
    """

    subcommand: str
    inputs: dict
    bins: int | None = None
    schedule: str = "cuberoot"
    seed: int = DEFAULT_SEED
    tol: float = DEFAULT_TOL
    enum_limit: int = DEFAULT_ENUM_LIMIT
    output_format: str = "json"
    threads: int = 1
    prune: bool = False
    margin: float = 0.0
    trace: bool = False
    l_list: tuple = (10, 100, 1000)

    def binning(self) -> BinningSpec:
        if self.bins is not None:
            return BinningSpec(k=self.bins, schedule=None)
        return BinningSpec(schedule=self.schedule)


# ---------------------------------------------------------------------------
# Serialization: floats at 17 significant digits for lossless round-trips.


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def to_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f'{pad}  {json.dumps(str(k))}: {to_json(v, indent + 1)}'
            for k, v in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ",\n".join(f"{pad}  {to_json(v, indent + 1)}" for v in obj)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def _tsv_scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return _fmt_float(float(v))
    if v is None:
        return ""
    return str(v)


def to_tsv(obj) -> str:
    """Flatten to dotted-path rows; uniform lists of dicts become tables."""
    lines: list[str] = []

    def walk(path: str, v):
        if isinstance(v, dict):
            for k, sub in v.items():
                walk(f"{path}.{k}" if path else str(k), sub)
        elif isinstance(v, (list, tuple)):
            if v and all(isinstance(r, dict) for r in v) and all(
                list(r.keys()) == list(v[0].keys()) for r in v
            ):
                keys = list(v[0].keys())
                lines.append("\t".join([path] + keys))
                for r in v:
                    lines.append(
                        "\t".join([path] + [_tsv_scalar(r[k]) for k in keys])
                    )
            else:
                for i, sub in enumerate(v):
                    walk(f"{path}[{i}]", sub)
        else:
            lines.append(f"{path}\t{_tsv_scalar(v)}")

    walk("", obj)
    return "\n".join(lines)


def _emit(payload: dict, cfg: RunConfig) -> None:
    text = to_tsv(payload) if cfg.output_format == "tsv" else to_json(payload)
    sys.stdout.write(text + "\n")


# ---------------------------------------------------------------------------
# Subcommands.


def cmd_exact(cfg: RunConfig) -> dict:
    theta = JointDist(parse_matrix(cfg.inputs["joint"]))
    report = mixing_report(
        theta, cfg.enum_limit, tol=cfg.tol, seed=cfg.seed
    )
    payload = report.to_dict()
    payload["chain_holds"] = report.chain_holds()
    payload["shape"] = [theta.n, theta.m]
    return payload


def cmd_bounds(cfg: RunConfig) -> dict:
    theta = JointDist(parse_matrix(cfg.inputs["joint"]))
    ab = alpha_bounds(theta, tol=cfg.tol, seed=cfg.seed)
    payload = ab.to_dict()
    payload["shape"] = [theta.n, theta.m]
    return payload


def _trace_lengths(l: int) -> list[int]:
    out = [l]
    cur = l // 2
    while cur >= 10:
        out.append(cur)
        cur //= 2
    return sorted(set(out))


def cmd_estimate(cfg: RunConfig) -> dict:
    data, _ = parse_samples(cfg.inputs["samples"], min_cols=2)
    if data.shape[0] < 2:
        raise InputError("estimation needs at least 2 sample rows")
    samples = SampleSet(data[:, 0], data[:, 1])
    spec = cfg.binning()
    report = estimate_mixing(
        samples, spec, cfg.enum_limit, tol=cfg.tol, seed=cfg.seed
    )
    payload = {"report": report.to_dict(), "samples": len(samples)}
    if cfg.trace:
        rows = []
        for l in _trace_lengths(len(samples)):
            sub = samples.prefix(l)
            r = estimate_mixing(sub, spec, cfg.enum_limit, tol=cfg.tol, seed=cfg.seed)
            row = r.to_dict()
            row["l"] = l
            rows.append(row)
        payload["trace"] = rows
    return payload


def cmd_dpi(cfg: RunConfig) -> dict:
    if cfg.inputs.get("tensor"):
        delta = TripleDist(parse_tensor(cfg.inputs["tensor"]))
    else:
        theta = JointDist(parse_matrix(cfg.inputs["joint"]))
        channel = Channel(parse_matrix(cfg.inputs["channel"]))
        delta = compose_triple(theta, channel)
    report = dpi_check(
        delta, cfg.enum_limit, solver_tol=cfg.tol, seed=cfg.seed
    )
    payload = report.to_dict()
    payload["shape"] = [delta.n, delta.m, delta.l]
    return payload


def _pairwise_phi(args):
    bins_x, bins_y, k, l = args
    counts = np.bincount(bins_x * k + bins_y, minlength=k * k).reshape(k, k)
    return phi(JointDist(counts / l))


def cmd_pairwise(cfg: RunConfig) -> dict:
    data, names = parse_samples(cfg.inputs["matrix"], min_cols=2)
    l, p = data.shape
    if p < 2:
        raise InputError("pairwise mode needs at least 2 columns")
    if l < 2:
        raise InputError("pairwise mode needs at least 2 rows")
    ids = names if names is not None else [f"c{i}" for i in range(p)]
    k = cfg.binning().resolve(l)
    assignments = [percentile_bins(data[:, i], k)[0] for i in range(p)]

    pairs = [(i, j) for i in range(p) for j in range(p) if i != j]
    # weight of edge (source, target) is phi(target | source): the target
    # variable indexes rows of the binned joint, the source indexes columns.
    jobs = [(assignments[j], assignments[i], k, l) for i, j in pairs]
    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            weights = list(pool.map(_pairwise_phi, jobs))
    else:
        weights = [_pairwise_phi(job) for job in jobs]
    w = {pair: weight for pair, weight in zip(pairs, weights)}

    pruned = {pair: False for pair in pairs}
    if cfg.prune:
        for i, t in pairs:
            for j in range(p):
                if j in (i, t):
                    continue
                if w[(i, t)] <= min(w[(i, j)], w[(j, t)]) - cfg.margin:
                    pruned[(i, t)] = True
                    break

    edges = [
        {
            "source": ids[i],
            "target": ids[j],
            "weight": w[(i, j)],
            "pruned": pruned[(i, j)],
        }
        for i, j in sorted(pairs)
    ]
    return {"bins": k, "samples": l, "edges": edges}


def cmd_demo_inconsistency(cfg: RunConfig) -> dict:
    lengths = sorted(set(int(v) for v in cfg.l_list))
    if any(v < 2 for v in lengths):
        raise InputError("demo lengths must be at least 2")
    rng = np.random.default_rng(cfg.seed)
    top = max(lengths)
    stream = SampleSet(rng.random(top), rng.random(top))
    spec = cfg.binning()
    rows = []
    for l in lengths:
        sub = stream.prefix(l)
        report = estimate_mixing(sub, spec, cfg.enum_limit, tol=cfg.tol, seed=cfg.seed)
        rows.append(
            {
                "l": l,
                "naive_beta": naive_estimate_beta(sub),
                "binned_beta": report.beta,
                "bins": report.bins,
            }
        )
    return {"true_beta": 0.0, "rows": rows}


# ---------------------------------------------------------------------------
# Argument parsing.


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sub.add_argument("--enum-limit", type=int, default=DEFAULT_ENUM_LIMIT)
    sub.add_argument("--threads", type=int, default=None,
                     help="worker threads (default: MIXKIT_THREADS or 1)")
    sub.add_argument("--tsv", action="store_true", help="TSV output instead of JSON")


def _add_binning(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--bins", type=int, default=None, help="fixed per-axis bin count")
    sub.add_argument("--schedule", choices=["cuberoot", "sqrt"], default="cuberoot")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixkit",
        description="Dependence coefficients for finite and real-valued pairs "
        "(values reported in nats where applicable).",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("exact", help="all coefficients of a joint matrix")
    p.add_argument("joint", help="CSV/TSV dense joint matrix (rows = X outcomes)")
    _add_common(p)

    p = sub.add_parser("bounds", help="certified alpha bounds for a joint matrix")
    p.add_argument("joint")
    _add_common(p)

    p = sub.add_parser("estimate", help="estimate coefficients from an x,y sample CSV")
    p.add_argument("samples")
    _add_binning(p)
    p.add_argument("--trace", action="store_true",
                   help="also estimate on halving prefixes of the sample")
    _add_common(p)

    p = sub.add_parser("dpi", help="data-processing inequality checks on a triple")
    p.add_argument("--joint", help="X,Y joint matrix (with --channel)")
    p.add_argument("--channel", help="row-stochastic Y->Z channel matrix")
    p.add_argument("--tensor", help="full X,Y,Z tensor file")
    _add_common(p)

    p = sub.add_parser("pairwise", help="phi(target|source) for all column pairs")
    p.add_argument("matrix", help="CSV with one column per variable")
    _add_binning(p)
    p.add_argument("--prune", action="store_true",
                   help="mark edges dominated by a two-step path")
    p.add_argument("--margin", type=float, default=0.0)
    _add_common(p)

    p = sub.add_parser("demo-inconsistency",
                       help="naive vs binned beta on independent samples")
    p.add_argument("--l-list", default="10,100,1000",
                   help="comma-separated sample counts")
    _add_binning(p)
    _add_common(p)

    return parser


def _resolve_threads(value) -> int:
    if value is not None:
        n = int(value)
    else:
        n = int(os.environ.get("MIXKIT_THREADS", "1"))
    if n < 1:
        raise InputError(f"thread count must be positive, got {n}")
    return n


def config_from_args(args: argparse.Namespace) -> RunConfig:
    inputs = {}
    for key in ("joint", "channel", "tensor", "samples", "matrix"):
        if hasattr(args, key):
            inputs[key] = getattr(args, key)
    if args.subcommand == "dpi":
        has_pair = inputs.get("joint") and inputs.get("channel")
        if bool(inputs.get("tensor")) == bool(has_pair):
            raise InputError("dpi needs either --tensor or both --joint and --channel")
    l_list = (10, 100, 1000)
    if getattr(args, "l_list", None):
        try:
            l_list = tuple(int(v) for v in str(args.l_list).split(",") if v.strip())
        except ValueError:
            raise InputError(f"bad --l-list {args.l_list!r}") from None
        if not l_list:
            raise InputError("--l-list is empty")
    return RunConfig(
        subcommand=args.subcommand,
        inputs=inputs,
        bins=getattr(args, "bins", None),
        schedule=getattr(args, "schedule", "cuberoot"),
        seed=args.seed,
        tol=args.tol,
        enum_limit=args.enum_limit,
        output_format="tsv" if args.tsv else "json",
        threads=_resolve_threads(args.threads),
        prune=getattr(args, "prune", False),
        margin=getattr(args, "margin", 0.0),
        trace=getattr(args, "trace", False),
        l_list=l_list,
    )


COMMANDS = {
    "exact": cmd_exact,
    "bounds": cmd_bounds,
    "estimate": cmd_estimate,
    "dpi": cmd_dpi,
    "pairwise": cmd_pairwise,
    "demo-inconsistency": cmd_demo_inconsistency,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles -h and its own errors
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        cfg = config_from_args(args)
        payload = COMMANDS[cfg.subcommand](cfg)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except SizeRefusalError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SIZE
    except SolverConvergenceError as err:
        print(
            f"error: {err} (best feasible value {err.best_value!r})",
            file=sys.stderr,
        )
        return EXIT_SOLVER
    _emit(payload, cfg)
    return EXIT_OK


def run() -> None:
    sys.exit(main())
