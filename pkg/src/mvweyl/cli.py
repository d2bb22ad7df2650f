"""Command-line harness: ``mvweyl <subcommand> [options]``.

Exit codes: 0 when every selected check passes, 1 on a verification failure,
2 on a configuration error, 3 when a Groebner budget is exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .checks import CHECKS, ConfigError, RunConfig, run, summarize
from .groebner import BudgetError
from .orbital import CertificationError
from .symgrp import DomainError

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_BUDGET = 0, 1, 2, 3

SUBCOMMANDS = {
    "verify-convolution": ("convolution",),
    "verify-relations": ("relations", "schurweyl-match"),
    "orbital": ("orbital",),
    "check-hotta": ("hotta",),
    "check-conjecture": ("conjecture",),
    "lattice-check": ("lattice",),
    "verify-all": CHECKS,
}


def parse_lambda(text: str) -> tuple:
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise ConfigError(f"cannot parse partition {text!r}") from exc
    if not parts:
        raise ConfigError("empty partition")
    return parts


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mvweyl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--d", type=int, default=3)
        s.add_argument("--lambda", dest="lambdas", action="append", default=None, help="partition such as 2,1 (repeatable)")
        s.add_argument("--checks", default=None, help="comma-separated subset of " + ",".join(CHECKS))
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--groebner-pair-cap", type=int, default=None)
        s.add_argument("--groebner-monomial-cap", type=int, default=None)
        s.add_argument("--lattice-samples", type=int, default=100)
        s.add_argument("--out", type=Path, default=None)
        s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--no-timings", action="store_true", help="omit timings from the JSON report")
    return p


def config_from_args(args) -> RunConfig:
    checks = SUBCOMMANDS[args.command]
    if args.checks:
        checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    cfg = RunConfig(
        d=args.d,
        lambdas=[parse_lambda(x) for x in args.lambdas] if args.lambdas else None,
        checks=tuple(checks),
        seed=args.seed,
        lattice_samples=args.lattice_samples,
        jobs=args.jobs,
    )
    if args.groebner_pair_cap is not None:
        cfg.pair_cap = args.groebner_pair_cap
    if args.groebner_monomial_cap is not None:
        cfg.monomial_cap = args.groebner_monomial_cap
    return cfg.validate()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except (ConfigError, DomainError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        report = run(cfg)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConfigError, DomainError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CertificationError as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_FAIL
    for line in summarize(report):
        print(line)
    if args.out is not None:
        args.out.write_text(json.dumps(report.to_json(timings=not args.no_timings), indent=2, sort_keys=True) + "\n")
    return EXIT_OK if report.overall in ("PASS", "PASS-PROJECTIVE") else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
