"""Lusztig's embedding of u into the lattice model of the affine Grassmannian.

A nilpotent x goes to the lattice spanned by the columns of
t^{-1}(1 - x t^{-1})^{-1} = sum_{k<d} x^k t^{-k-1}.  Its relative position to the
standard lattice is read off from the t-adic valuations of the Smith form.

Type convention: the valuations a_1 >= ... >= a_d of the invariant factors are
non-positive and sum to -d; the reported partition is (-a_d, ..., -a_1) with
zeros dropped.  So t^{-1} Id has type (1^d) and a regular nilpotent has type (d).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg, symgrp
from .symgrp import DomainError

# ---------------------------------------------------------------------------
# Laurent polynomials as {exponent: Fraction}


def lp_clean(p: dict) -> dict:
    return {e: Fraction(c) for e, c in p.items() if c}


def lp_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def lp_neg(p: dict) -> dict:
    return {e: -c for e, c in p.items()}


def lp_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def lp_shift(p: dict, k: int) -> dict:
    return {e + k: c for e, c in p.items()}


def valuation(p: dict):
    """t-adic valuation (None for zero)."""
    return min(p) if p else None


def unit_part(p: dict) -> dict:
    v = valuation(p)
    return lp_shift(p, -v)


def render_laurent(p: dict) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p, reverse=True):
        c = p[e]
        mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}" if e > 0 else f"t^({e})")
        if mono == "":
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


@dataclass
class LaurentMatrix:
    entries: list  # d x d of dicts

    @property
    def d(self) -> int:
        return len(self.entries)

    def min_valuation(self) -> int:
        vals = [valuation(p) for row in self.entries for p in row if p]
        if not vals:
            raise DomainError("zero matrix")
        return min(vals)

    def shifted(self, k: int) -> "LaurentMatrix":
        return LaurentMatrix([[lp_shift(p, k) for p in row] for row in self.entries])

    def matmul(self, other: "LaurentMatrix") -> "LaurentMatrix":
        n = self.d
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc: dict = {}
                for k in range(n):
                    if self.entries[i][k] and other.entries[k][j]:
                        acc = lp_add(acc, lp_mul(self.entries[i][k], other.entries[k][j]))
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out)

    def render(self) -> list:
        return [[render_laurent(p) for p in row] for row in self.entries]

    @classmethod
    def from_constant(cls, m) -> "LaurentMatrix":
        return cls([[{0: Fraction(v)} if v else {} for v in row] for row in m])


def _is_nilpotent(x) -> bool:
    n = len(x)
    p = linalg.to_frac(x)
    for _ in range(n):
        p = linalg.matmul(p, x)
    return linalg.is_zero(p) if n else True


def lusztig_embed(x) -> LaurentMatrix:
    """sum_{k<d} x^k t^{-k-1}."""
    x = linalg.to_frac(x)
    d = len(x)
    if not _is_nilpotent(x):
        raise DomainError("lusztig_embed needs a nilpotent matrix")
    out = [[{} for _ in range(d)] for _ in range(d)]
    power = linalg.identity(d)
    for k in range(d):
        for i in range(d):
            for j in range(d):
                if power[i][j]:
                    out[i][j] = lp_add(out[i][j], {-k - 1: power[i][j]})
        power = linalg.matmul(power, x)
    return LaurentMatrix(out)


def determinant(M: LaurentMatrix) -> dict:
    n = M.d
    if n == 0:
        return {0: Fraction(1)}
    total: dict = {}
    for j in range(n):
        if not M.entries[0][j]:
            continue
        minor = LaurentMatrix([row[:j] + row[j + 1 :] for row in M.entries[1:]])
        term = lp_mul(M.entries[0][j], determinant(minor))
        total = lp_add(total, term if j % 2 == 0 else lp_neg(term))
    return total


@dataclass(frozen=True)
class LatticeType:
    exponents: tuple  # a_1 >= ... >= a_d

    @property
    def partition(self) -> tuple:
        return tuple(sorted((-a for a in self.exponents if a), reverse=True))

    @property
    def det_valuation(self) -> int:
        return sum(self.exponents)

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents), "partition": list(self.partition)}


def smith_valuations(M: LaurentMatrix) -> list:
    """t-adic valuations of the invariant factors by local elimination.

    Clear poles with t^N, then pivot on an entry of minimal valuation (lowest
    row, then column, on ties).  Eliminating b against the pivot a = t^v a' uses
    row_j <- a' row_j - t^{w-v} b' row_i, which is invertible over Q[[t]]
    because a'(0) != 0.
    """
    n = M.d
    N = -M.min_valuation()
    A = [[dict(p) for p in row] for row in M.shifted(N).entries]
    vals = []
    rows = list(range(n))
    cols = list(range(n))
    while rows:
        best = None
        for i in rows:
            for j in cols:
                if A[i][j]:
                    v = valuation(A[i][j])
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            raise DomainError("singular matrix")
        v, pi, pj = best
        a = A[pi][pj]
        au = unit_part(a)
        for i in rows:
            if i == pi or not A[i][pj]:
                continue
            b = A[i][pj]
            w = valuation(b)
            coef = lp_shift(unit_part(b), w - v)
            for j in cols:
                A[i][j] = lp_add(lp_mul(au, A[i][j]), lp_neg(lp_mul(coef, A[pi][j])))
        for j in cols:
            if j == pj or not A[pi][j]:
                continue
            b = A[pi][j]
            w = valuation(b)
            coef = lp_shift(unit_part(b), w - v)
            for i in rows:
                A[i][j] = lp_add(lp_mul(au, A[i][j]), lp_neg(lp_mul(coef, A[i][pj])))
        vals.append(v - N)
        rows.remove(pi)
        cols.remove(pj)
    return vals


def smith_type(M: LaurentMatrix) -> LatticeType:
    return LatticeType(tuple(sorted(smith_valuations(M), reverse=True)))


def smith_type_minors(M: LaurentMatrix) -> LatticeType:
    """Oracle: valuations from the minimal valuations of k x k minors (determinantal divisors)."""
    n = M.d
    D = [0]
    for k in range(1, n + 1):
        best = None
        for rs in combinations(range(n), k):
            for cs in combinations(range(n), k):
                sub = LaurentMatrix([[M.entries[r][c] for c in cs] for r in rs])
                det = determinant(sub)
                if det:
                    v = valuation(det)
                    best = v if best is None else min(best, v)
        if best is None:
            raise DomainError("singular matrix")
        D.append(best)
    return LatticeType(tuple(sorted((D[k] - D[k - 1] for k in range(1, n + 1)), reverse=True)))


def mv_type_check(lam: Sequence[int], samples: int = 100, seed: int = 0, boundary_samples: int = 5) -> dict:
    """Lattice type of lusztig_embed(x) for sampled x in O_lam inside u, plus boundary strata."""
    from . import orbital

    lam = tuple(lam)
    d = sum(lam)
    rng = random.Random(seed)
    fails = []
    for _ in range(samples):
        x = orbital.sample_orbit(lam, rng)
        b, binv = orbital.random_borel(d, rng)
        x = linalg.matmul(linalg.matmul(b, x), binv)
        jt = symgrp.jordan_type(x)
        ty = smith_type(lusztig_embed(x))
        if jt != lam or ty.partition != lam:
            fails.append({"x": linalg.render(x), "jordan": list(jt), "type": ty.to_json()})
    boundary = []
    for mu in symgrp.partitions(d):
        if mu == lam or not symgrp.dominates(lam, mu):
            continue
        for _ in range(boundary_samples):
            x = orbital.sample_orbit(mu, rng)
            ty = smith_type(lusztig_embed(x))
            ok = ty.partition == mu and symgrp.dominates(lam, ty.partition)
            if not ok:
                fails.append({"x": linalg.render(x), "stratum": list(mu), "type": ty.to_json()})
        boundary.append(list(mu))
    return {
        "lambda": list(lam),
        "samples": samples,
        "boundary_strata": boundary,
        "failures": fails[:5],
        "failure_count": len(fails),
        "verdict": "FAIL" if fails else "PASS",
    }
