"""Relation between the equivariant-multiplicity basis and the Specht tableau basis.

For each partition the intertwiner P with e_a P = P T_a is printed with rows
indexed by components (Spaltenstein labels) and columns by standard tableaux,
columns permuted so that matching labels sit on the diagonal.  A lower
unitriangular P means the two bases agree modulo tableaux that come earlier in
the Spaltenstein order.

    python3 scripts/basis_relation.py --max-d 4
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from mvweyl import orbital, symgrp


@dataclass
class RelationConfig:
    max_d: int = 4
    seed: int = 0


def matched(rep: dict) -> list:
    comp, tabs = rep["component_basis"], rep["specht_basis"]
    P = [[Fraction(v) for v in row] for row in rep["intertwiner"]]
    cols = [tabs.index(t) for t in comp]
    return [[P[i][j] for j in cols] for i in range(len(comp))]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    cfg = RelationConfig(args.max_d, args.seed)
    for d in range(2, cfg.max_d + 1):
        for lam in symgrp.partitions(d):
            rep = orbital.conjecture_check(lam, seed=cfg.seed)
            print(f"({','.join(map(str, lam))}) {rep['verdict']}")
            if rep["verdict"] != "PASS-EQUIVARIANT":
                continue
            M = matched(rep)
            width = max(len(str(v)) for row in M for v in row)
            for label, row in zip(rep["component_basis"], M):
                print(f"  {label:>12}  " + " ".join(str(v).rjust(width) for v in row))
            print(f"  unitriangular in the Spaltenstein matching: {rep['label_unitriangular']}")


if __name__ == "__main__":
    main()
