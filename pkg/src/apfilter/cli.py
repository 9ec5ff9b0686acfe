"""Command-line entry point: ``apfilter <subcommand> [options]``.

Subcommands run the shipped experiments (or a user config) and write CSV logs,
density dumps, a comparison table and a manifest into ``--out``.  The exit
status is 0 on success, 1 if any filter variant diverged and 2 on a bad
configuration.
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
from pathlib import Path

from apfilter import experiments
from apfilter.config import ConfigError, ExperimentConfig, default_config, load_config
from apfilter.quadrature import Family, prune, smolyak

log = logging.getLogger("apfilter")

_DEFAULT_CONFIG = {"run-cubic": "cubic", "run-vdp": "vdp", "run-sir": "sir", "run-linear-check": "linear"}


def _load(args) -> ExperimentConfig:
    overrides = {"seed": args.seed}
    cfg = load_config(args.config, overrides) if args.config else default_config(_DEFAULT_CONFIG[args.command], overrides)
    if args.level is not None:
        variants = tuple(dataclasses.replace(v, level=args.level) if v.level is not None else v for v in cfg.variants)
        cfg = dataclasses.replace(cfg, variants=variants)
    return cfg


def _report(variants: dict) -> int:
    status = 0
    for label, v in variants.items():
        print(f"{label}: {v.grid_nodes} nodes, {v.status}" + (f" ({v.error})" if v.error else ""))
        if v.status != "ok":
            status = 1
    return status


def _cmd_experiment(args) -> int:
    cfg = _load(args)
    out = Path(args.out)
    if args.command == "run-cubic":
        res = experiments.run_cubic(cfg, out)
    elif args.command == "run-linear-check":
        res = experiments.run_linear_check(cfg, out, args.particles)
        for label in res.mean_error:
            print(f"{label}: mean abs error {res.mean_error[label]:.3e}, variance rel error {res.variance_error[label]:.3e}")
        print(f"particle filter mean RMSE {res.pf_rmse:.3e}")
        failed = [k for k, v in res.manifest["variants"].items() if v["status"] != "ok"]
        return 1 if failed else 0
    else:
        res = experiments.run_particle_experiment(cfg, out, args.particles)
    status = _report(res.variants)
    for label, h in res.hellinger.items():
        if len(h):
            print(f"{label}: final Hellinger {h[-1]:.4f} at t={res.times[len(h) - 1]:.4f}")
    print(f"outputs written to {out}")
    return status


def _cmd_grid_info(args) -> int:
    grid = smolyak(args.dim, args.level, args.family)
    line = f"{args.family} d={args.dim} level={args.level}: {len(grid)} nodes"
    if args.prune:
        line += f", {len(prune(grid, args.prune))} after pruning |w| < {args.prune:g}"
    print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apfilter", description="Projection filter experiments")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _DEFAULT_CONFIG:
        p = sub.add_parser(name)
        p.add_argument("--config", type=Path, help="experiment config (defaults to the shipped one)")
        p.add_argument("--seed", type=int)
        p.add_argument("--out", default=f"runs/{name.removeprefix('run-')}")
        p.add_argument("--particles", type=int, help="particle-filter size override")
        p.add_argument("--level", type=int, help="sparse-grid level override for level-based variants")
        p.set_defaults(func=_cmd_experiment)
    g = sub.add_parser("grid-info", help="print sparse-grid node counts")
    g.add_argument("--family", choices=[f.value for f in Family], default=Family.GAUSS_PATTERSON.value)
    g.add_argument("--dim", type=int, default=2)
    g.add_argument("--level", type=int, default=4)
    g.add_argument("--prune", type=float, default=0.0)
    g.set_defaults(func=_cmd_grid_info)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
