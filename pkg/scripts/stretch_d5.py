"""Orbital decomposition, Hotta and conjecture checks for every partition of 5.

Beyond the acceptance range (d <= 4).  Prints one line per partition and
writes the full reports as JSON.

    python3 scripts/stretch_d5.py --out d5.json
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from mvweyl import checks, orbital, symgrp


@dataclass
class StretchConfig:
    d: int = 5
    seed: int = 0
    lattice_samples: int = 20


def run(cfg: StretchConfig) -> dict:
    out = {"config": asdict(cfg), "partitions": {}}
    for lam in symgrp.partitions(cfg.d):
        t = time.perf_counter()
        dec = orbital.decompose(lam, seed=cfg.seed)
        t_dec = time.perf_counter() - t
        rep = {
            "orbital": checks.check_orbital(dec),
            "hotta": orbital.hotta_check(lam, dec),
            "conjecture": orbital.conjecture_check(lam, dec),
            "lattice": checks.check_lattice(lam, cfg.lattice_samples, cfg.seed),
            "seconds_decompose": round(t_dec, 2),
        }
        key = ",".join(map(str, lam))
        out["partitions"][key] = rep
        print(
            f"({key}) components {len(dec.components)}/{symgrp.hook_length_count(lam)}"
            f"  orbital {rep['orbital']['verdict']}  hotta {rep['hotta']['verdict']}"
            f"  conjecture {rep['conjecture']['verdict']}  lattice {rep['lattice']['verdict']}"
            f"  [{t_dec:.1f}s]",
            flush=True,
        )
    return out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--d", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lattice-samples", type=int, default=20)
    p.add_argument("--out", default=None)
    args = p.parse_args(argv)
    res = run(StretchConfig(args.d, args.seed, args.lattice_samples))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(res, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
