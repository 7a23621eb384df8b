"""Command-line front end.

Exit codes: 0 success, 2 usage or config error, 3 numerical error,
4 falsification (a verified quantity exceeded its threshold, or an array
failed a hypothesis).  CSV goes to ``--out`` (or the config's ``output``);
stdout only carries progress lines under ``--verbose``; diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from . import __version__
from .approx import convergence_run, counterexample_run
from .config import ConfigError, ExperimentConfig, bundled, check_n_list, load_config
from .kernels import BUILTIN, validate
from .measures import dirichlet_mu
from .superharm import (
    NonFiniteWeightError,
    SingularEvaluationError,
    identity_check,
    power_weight_comparison,
)

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_FALSIFIED = 0, 2, 3, 4

NORM_HEADER = ["function_id", "measure_id", "N", "dirichlet_mu", "dmu_norm_sq"]
CONVERGE_HEADER = ["n", "err_sq", "norm_sq", "bound_sq", "array_name", "measure_id",
                   "function_id", "err", "norm"]
COUNTEREXAMPLE_HEADER = ["n", "taylor_err_sq", "taylor_closed_form", "fejer_err_sq"]
IDENTITY_HEADER = ["function_id", "measure_id", "lhs", "rhs", "abs_err", "rel_err",
                   "nodes_r", "nodes_theta", "warning"]
POWER_HEADER = ["function_id", "alpha", "integral", "coeff_sum", "ratio"]
VALIDATE_HEADER = ["array_name", "condition", "passed", "witness_n", "witness_k", "detail"]

POWER_BRACKET = (0.25, 4.0)


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "nan" if math.isnan(value) else f"{value:.17g}"
    if value is None:
        return ""
    return str(value)


class _Run:
    def __init__(self, args):
        self.verbose = args.verbose

    def progress(self, msg):
        if self.verbose:
            print(msg, flush=True)


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(v) for v in row])


def _n_list(text):
    try:
        return check_n_list(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _float_list(text):
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _resolve(args, default_config=None) -> ExperimentConfig:
    """Config file, then CLI flags on top."""
    path = args.config or default_config
    cfg = load_config(path) if path else ExperimentConfig()
    cfg = cfg.override(
        output=args.out,
        n_list=getattr(args, "n_list", None),
        nodes_r=args.nodes_r,
        nodes_theta=args.nodes_theta,
        threshold=getattr(args, "threshold", None),
        power_alphas=getattr(args, "power_alphas", None),
        truncations=getattr(args, "truncations", None),
    )
    cfg.check()
    if not cfg.output:
        raise ConfigError("no output path: pass --out or set 'output' in the config")
    return cfg


def _need(cfg, *names):
    for name in names:
        if not getattr(cfg, name):
            raise ConfigError(f"config provides no {name}")


def cmd_norm(args, run: _Run) -> int:
    cfg = _resolve(args)
    _need(cfg, "functions", "measures")
    rows = []
    for fs in cfg.functions:
        variants = [(len(fs.series) - 1, fs.series)]
        if cfg.truncations and fs.family:
            variants = [(N, fs.truncated(N)) for N in cfg.truncations]
        for mu in cfg.measures:
            for N, f in variants:
                run.progress(f"norm {fs.id} N={N} {mu.measure_id}")
                d = dirichlet_mu(f, mu)
                rows.append([fs.id, mu.measure_id, N, d, abs(f.coeffs[0]) ** 2 + d])
    _write_csv(cfg.output, NORM_HEADER, rows)
    return EXIT_OK


def cmd_converge(args, run: _Run) -> int:
    if args.counterexample is not None:
        if args.counterexample < 3:
            raise ConfigError("--counterexample needs J >= 3")
        cfg = _resolve(args) if args.config else ExperimentConfig(output=args.out)
        if not cfg.output:
            raise ConfigError("no output path: pass --out or set 'output' in the config")
        rows = []
        for r in counterexample_run(args.counterexample):
            run.progress(f"counterexample n={r.n}")
            rows.append([r.n, r.taylor_err_sq, r.taylor_closed_form, r.fejer_err_sq])
        _write_csv(cfg.output, COUNTEREXAMPLE_HEADER, rows)
        return EXIT_OK
    cfg = _resolve(args)
    _need(cfg, "functions", "measures", "arrays", "n_list")
    rows = []
    for fs in cfg.functions:
        for mu in cfg.measures:
            for arr in cfg.arrays:
                run.progress(f"converge {fs.id} {mu.measure_id} {arr.name}")
                for rec in convergence_run(fs.series, mu, arr, cfg.n_list):
                    rows.append([rec.n, rec.err_sq, rec.norm_sq, rec.bound_sq, rec.array_name,
                                 rec.measure_id, fs.id, math.sqrt(rec.err_sq),
                                 math.sqrt(rec.norm_sq)])
    _write_csv(cfg.output, CONVERGE_HEADER, rows)
    return EXIT_OK


def cmd_verify_identity(args, run: _Run) -> int:
    cfg = _resolve(args, default_config=bundled("demo_identity.json"))
    _need(cfg, "functions")
    failed = False
    if cfg.power_alphas:
        rows = []
        lo, hi = POWER_BRACKET
        for fs in cfg.functions:
            for alpha in cfg.power_alphas:
                run.progress(f"power weight {fs.id} alpha={alpha}")
                r = power_weight_comparison(fs.series, alpha, cfg.nodes_r, cfg.nodes_theta)
                failed |= not (lo <= r.ratio <= hi)
                rows.append([fs.id, r.alpha, r.integral, r.coeff_sum, r.ratio])
        _write_csv(cfg.output, POWER_HEADER, rows)
    else:
        _need(cfg, "measures")
        rows = []
        for fs in cfg.functions:
            for mu in cfg.measures:
                run.progress(f"identity {fs.id} {mu.measure_id}")
                r = identity_check(fs.series, mu, cfg.nodes_r, cfg.nodes_theta)
                failed |= not (r.rel_err < cfg.threshold)
                rows.append([fs.id, mu.measure_id, r.lhs, r.rhs, r.abs_err, r.rel_err,
                             r.nodes_r, r.nodes_theta, r.warning])
        _write_csv(cfg.output, IDENTITY_HEADER, rows)
    if failed:
        print("verify-identity: at least one check exceeded its threshold", file=sys.stderr)
        return EXIT_FALSIFIED
    return EXIT_OK


def cmd_validate_array(args, run: _Run) -> int:
    cfg = load_config(args.config) if args.config else ExperimentConfig()
    cfg = cfg.override(output=args.out)
    if not cfg.output:
        raise ConfigError("no output path: pass --out or set 'output' in the config")
    arrays = cfg.arrays or tuple(make() for make in BUILTIN.values())
    n_max = args.n_max if args.n_max is not None else cfg.N_max
    tol = args.tol if args.tol is not None else cfg.tol
    if n_max < 8:
        raise ConfigError("--n-max must be >= 8")
    rows, failed = [], False
    for arr in arrays:
        run.progress(f"validate {arr.name}")
        report = validate(arr, n_max, tol)
        failed |= not report.passed
        for r in report.results:
            wn, wk = r.witness if r.witness else (None, None)
            rows.append([arr.name, r.condition, r.passed, wn, wk, r.detail])
    _write_csv(cfg.output, VALIDATE_HEADER, rows)
    return EXIT_FALSIFIED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON experiment config")
    common.add_argument("--out", help="CSV output path (overrides config 'output')")
    common.add_argument("--nodes-r", type=int, help="radial quadrature nodes")
    common.add_argument("--nodes-theta", type=int, help="angular quadrature nodes")
    common.add_argument("--verbose", action="store_true", help="progress lines on stdout")

    parser = argparse.ArgumentParser(
        prog="dirichlet-approx",
        description="Weighted Dirichlet norms, summability approximants and identity checks.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", parents=[common], help="D_mu(f) and ||f||^2 per (f, mu)")
    p.add_argument("--truncations", type=_n_list,
                   help="truncation degrees N for the convergence-in-N helper")
    p.set_defaults(handler=cmd_norm)

    p = sub.add_parser("converge", parents=[common], help="error curves of p_n in D_mu")
    p.add_argument("--n-list", type=_n_list, help="comma-separated increasing n values")
    p.add_argument("--counterexample", type=int, metavar="J",
                   help="partial sums vs Cesaro means on the lacunary function at zeta=1")
    p.set_defaults(handler=cmd_converge)

    p = sub.add_parser("verify-identity", parents=[common],
                       help="area integral of |f'|^2 omega versus D_mu(f)")
    p.add_argument("--threshold", type=float, help="rel_err limit (default 1e-5)")
    p.add_argument("--power-alphas", type=_float_list,
                   help="run the power-weight comparison for these alphas instead")
    p.set_defaults(handler=cmd_verify_identity)

    p = sub.add_parser("validate-array", parents=[common], help="check array hypotheses")
    p.add_argument("--n-max", type=int, help="largest row checked (default 512)")
    p.add_argument("--tol", type=float, help="tolerance of the limit check (default 0.05)")
    p.set_defaults(handler=cmd_validate_array)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    run = _Run(args)
    try:
        return args.handler(args, run)
    except ConfigError as exc:
        print(f"{parser.prog} {args.command}: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NonFiniteWeightError, SingularEvaluationError, ArithmeticError) as exc:
        print(f"{parser.prog} {args.command}: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
