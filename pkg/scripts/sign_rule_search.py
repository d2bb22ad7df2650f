"""Search parity sign rules for the conormal (Z) Chevalley generators.

A rule gives E_a and F_a on the block comp the sign (-1)^(c . v) with
v = (1, d_<a, d_a, d_{a+1}, d_>a+1) and c a 0/1 vector, one c for E and one for
F.  Every pair is tested against the gl_n relations at h = 0 for n = d, first
at d = 3 and then, for survivors, at the larger sizes.  Rules whose weight-zero
operator differs from s_a are dropped.

    python3 scripts/sign_rule_search.py --sizes 3 4 --out signs.json
"""
from __future__ import annotations

import argparse
import itertools
import json
from dataclasses import asdict, dataclass, field

from mvweyl import localization as L
from mvweyl import symgrp


@dataclass
class SearchConfig:
    sizes: list = field(default_factory=lambda: [3, 4])
    limit: int | None = None  # stop after this many candidate pairs (debugging)


def parity_vector(a: int, comp) -> tuple:
    return (1, sum(comp[: a - 1]), comp[a - 1], comp[a], sum(comp[a + 1 :]))


def operator(a: int, which: str, n: int, d: int, coeffs: tuple) -> L.BlockOperator:
    entries: dict = {}
    for comp in symgrp.compositions(n, d):
        tgt = symgrp.e_tilde(a, comp) if which == "E" else symgrp.f_tilde(a, comp)
        if symgrp.is_ghost(tgt):
            continue
        e = sum(c * v for c, v in zip(coeffs, parity_vector(a, comp)))
        entries.update(L._corr_operator(L.corr_Z(tgt, comp), -1 if e % 2 else 1))
    return L.BlockOperator(d + 1, entries)


def works(cE: tuple, cF: tuple, d: int) -> bool:
    E = {a: operator(a, "E", d, d, cE) for a in range(1, d)}
    F = {a: operator(a, "F", d, d, cF) for a in range(1, d)}
    if L.gln_relation_failures(E, F, d, d):
        return False
    return all(L.weight_zero_T(E[a], F[a], d).equals(L.right_multiplication(a, d, 1)) for a in range(1, d))


def search(cfg: SearchConfig) -> dict:
    vecs = list(itertools.product((0, 1), repeat=5))
    pairs = list(itertools.product(vecs, vecs))
    if cfg.limit:
        pairs = pairs[: cfg.limit]
    survivors = pairs
    history = {}
    for d in cfg.sizes:
        survivors = [(cE, cF) for cE, cF in survivors if works(cE, cF, d)]
        history[d] = len(survivors)
        print(f"d = {d}: {len(survivors)} rules survive")
    names = ("1", "d_<a", "d_a", "d_a+1", "d_>a+1")

    def show(c):
        terms = [n for n, x in zip(names, c) if x]
        return " + ".join(terms) if terms else "0"

    return {
        "config": asdict(cfg),
        "candidates": len(pairs),
        "survivors_by_size": history,
        "rules": [{"E": show(cE), "F": show(cF)} for cE, cF in survivors],
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[3, 4])
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--out", default=None)
    args = p.parse_args(argv)
    res = search(SearchConfig(args.sizes, args.limit))
    for r in res["rules"]:
        print(f"  E exponent {r['E']:<24} F exponent {r['F']}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(res, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
