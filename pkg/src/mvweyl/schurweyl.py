"""Chevalley operators on invariant spaces of an S_d-module.

For an S_d-module V and n >= 1, the spaces V^{S_comp}, comp running over the
length-n compositions of d, carry an action of gl_n: E_a is d_{a+1} times the
average over the target Young subgroup, F_a is d_a times the same average.  The
tensor space is never built.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg, symgrp
from .symgrp import DomainError, is_ghost


@dataclass
class SdModuleModel:
    """An S_d-module given by matrices of the simple reflections s_1..s_{d-1}."""

    d: int
    dim: int
    generators: dict  # a -> matrix
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    def matrix(self, w: Sequence[int]):
        w = tuple(w)
        m = self._cache.get(w)
        if m is None:
            m = symgrp.rep_matrix(self.generators, w, self.d) if self.d > 1 else linalg.identity(self.dim)
            self._cache[w] = m
        return m

    def coxeter_failures(self) -> list:
        return symgrp.check_coxeter(self.generators, self.d)

    def average(self, comp: Sequence[int]):
        """Projector (1/#S) sum of w over the Young subgroup S_comp."""
        S = symgrp.young_subgroup(comp)
        acc = linalg.zeros(self.dim, self.dim)
        for w in S:
            acc = linalg.add(acc, self.matrix(w))
        return linalg.scale(Fraction(1, len(S)), acc)


def regular_module(d: int) -> SdModuleModel:
    """Q[S_d] with g . [w] = [w g^{-1}], basis ordered as symgrp.all_perms(d)."""
    perms = symgrp.all_perms(d)
    idx = {w: i for i, w in enumerate(perms)}
    gens = {}
    for a in range(1, d):
        s = symgrp.simple_reflection(a, d)
        m = linalg.zeros(len(perms), len(perms))
        for w in perms:
            m[idx[symgrp.compose(w, s)]][idx[w]] = Fraction(1)
        gens[a] = m
    return SdModuleModel(d, len(perms), gens, name=f"regular(S_{d})")


def specht_model(lam: Sequence[int]) -> SdModuleModel:
    S = symgrp.specht_module(tuple(lam))
    return SdModuleModel(S.d, S.dim, dict(S.generator_matrices), name=f"specht{tuple(lam)}")


def regular_coset_basis(d: int, comp: Sequence[int]):
    """Columns b_{wS} = (1/#S) sum_{x in S} [wx] for the minimal coset representatives w."""
    perms = symgrp.all_perms(d)
    idx = {w: i for i, w in enumerate(perms)}
    S = symgrp.young_subgroup(comp)
    reps = symgrp.young_cosets(comp)
    B = linalg.zeros(len(perms), len(reps))
    for j, w in enumerate(reps):
        for x in S:
            B[idx[symgrp.compose(w, x)]][j] += Fraction(1, len(S))
    return B


@dataclass
class InvariantTower:
    """Bases of V^{S_comp} for all length-n compositions of d."""

    module: SdModuleModel
    n: int
    bases: dict  # comp -> dim x k matrix with independent invariant columns
    projectors: dict = field(default_factory=dict, repr=False)

    @property
    def d(self) -> int:
        return self.module.d

    def compositions(self) -> list:
        return symgrp.compositions(self.n, self.d)

    def projector(self, comp: tuple):
        comp = tuple(comp)
        P = self.projectors.get(comp)
        if P is None:
            P = self.module.average(comp)
            self.projectors[comp] = P
        return P

    def dim(self, comp) -> int:
        return len(self.bases[tuple(comp)][0]) if self.bases[tuple(comp)] else 0

    def invariance_failures(self) -> list:
        bad = []
        for comp, B in self.bases.items():
            for a in symgrp.young_generators(comp):
                if linalg.matmul(self.module.generators[a], B) != B:
                    bad.append((comp, a))
        return bad


def build_tower(module: SdModuleModel, n: int, bases: dict | None = None) -> InvariantTower:
    tower = InvariantTower(module, n, {})
    for comp in symgrp.compositions(n, module.d):
        if bases is not None and comp in bases:
            tower.bases[comp] = bases[comp]
        else:
            P = tower.projector(comp)
            tower.bases[comp] = linalg.column_space_basis(P)
    return tower


def regular_tower(d: int, n: int | None = None) -> InvariantTower:
    """Regular module with the coset-average bases, matching fixed points [w S_comp]."""
    n = d if n is None else n
    return build_tower(regular_module(d), n, {c: regular_coset_basis(d, c) for c in symgrp.compositions(n, d)})


def psi(tower: InvariantTower, target: Sequence[int], v: Sequence) -> list:
    """Average of v over the Young subgroup of the target composition."""
    return linalg.matvec(tower.projector(tuple(target)), [Fraction(x) for x in v])


def _coords(B, vecs):
    X = linalg.solve(B, vecs)
    if X is None:
        raise ArithmeticError("vector outside the invariant subspace")
    return X


def _chev(tower: InvariantTower, a: int, comp: tuple, which: str):
    comp = tuple(comp)
    tgt = symgrp.e_tilde(a, comp) if which == "E" else symgrp.f_tilde(a, comp)
    if is_ghost(tgt):
        raise DomainError(f"{which}_{a} on {comp} lands on the ghost composition")
    coef = comp[a] if which == "E" else comp[a - 1]
    Bs, Bt = tower.bases[comp], tower.bases[tgt]
    if not Bs or not Bs[0] or not Bt or not Bt[0]:
        return tgt, linalg.zeros(len(Bt[0]) if Bt else 0, len(Bs[0]) if Bs else 0)
    img = linalg.scale(coef, linalg.matmul(tower.projector(tgt), Bs))
    return tgt, _coords(Bt, img)


def chev_E(tower: InvariantTower, a: int, comp: Sequence[int]):
    """Matrix of E_a : V^{S_comp} -> V^{S_{e_a comp}} in the tower bases."""
    return _chev(tower, a, comp, "E")[1]


def chev_F(tower: InvariantTower, a: int, comp: Sequence[int]):
    return _chev(tower, a, comp, "F")[1]


def dual_chev(tower: InvariantTower, a: int, comp: Sequence[int], which: str):
    """Generator on the dual invariant spaces, as the transpose of the rescaled opposite generator.

    E_a on the dual of V^{S_comp} is the adjoint of (d_{a+1}/(d_a+1)) F_a from
    V^{S_{e_a comp}}; F_a is the adjoint of (d_a/(d_{a+1}+1)) E_a from V^{S_{f_a comp}}.
    """
    comp = tuple(comp)
    if which == "E":
        tgt = symgrp.e_tilde(a, comp)
        if is_ghost(tgt):
            raise DomainError(f"E_{a} on {comp} lands on the ghost composition")
        c = Fraction(comp[a], comp[a - 1] + 1)
        return linalg.transpose(linalg.scale(c, chev_F(tower, a, tgt)))
    tgt = symgrp.f_tilde(a, comp)
    if is_ghost(tgt):
        raise DomainError(f"F_{a} on {comp} lands on the ghost composition")
    c = Fraction(comp[a - 1], comp[a] + 1)
    return linalg.transpose(linalg.scale(c, chev_E(tower, a, tgt)))


# ---------------------------------------------------------------------------
# block operators on the whole tower


@dataclass
class TowerOperator:
    """Block matrix {(target comp, source comp): matrix} on the direct sum of invariant spaces."""

    dims: dict
    blocks: dict = field(default_factory=dict)

    def __matmul__(self, other: "TowerOperator") -> "TowerOperator":
        out: dict = {}
        for (t, m), A in self.blocks.items():
            for (m2, s), B in other.blocks.items():
                if m2 != m:
                    continue
                P = linalg.matmul(A, B) if A and B and B[0] else linalg.zeros(self.dims[t], self.dims[s])
                out[(t, s)] = linalg.add(out[(t, s)], P) if (t, s) in out else P
        return TowerOperator(self.dims, out)

    def __add__(self, other: "TowerOperator") -> "TowerOperator":
        out = dict(self.blocks)
        for k, B in other.blocks.items():
            out[k] = linalg.add(out[k], B) if k in out else B
        return TowerOperator(self.dims, out)

    def scale(self, c) -> "TowerOperator":
        return TowerOperator(self.dims, {k: linalg.scale(c, B) for k, B in self.blocks.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return all(linalg.is_zero(B) for B in self.blocks.values())

    def block(self, t, s):
        return self.blocks.get((t, s), linalg.zeros(self.dims[t], self.dims[s]))


def tower_generator(tower: InvariantTower, a: int, which: str, dual: bool = False) -> TowerOperator:
    dims = {c: tower.dim(c) for c in tower.compositions()}
    blocks = {}
    for comp in tower.compositions():
        tgt = symgrp.e_tilde(a, comp) if which == "E" else symgrp.f_tilde(a, comp)
        if is_ghost(tgt):
            continue
        if dual:
            blocks[(tgt, comp)] = dual_chev(tower, a, comp, which)
        else:
            blocks[(tgt, comp)] = _chev(tower, a, comp, which)[1]
    return TowerOperator(dims, blocks)


def tower_cartan(tower: InvariantTower, a: int) -> TowerOperator:
    dims = {c: tower.dim(c) for c in tower.compositions()}
    return TowerOperator(
        dims, {(c, c): linalg.scale(c[a - 1] - c[a], linalg.identity(dims[c])) for c in tower.compositions()}
    )


def tower_relation_failures(tower: InvariantTower, dual: bool = False) -> list:
    """gl_n relations for the tower generators (commutators, Cartan eigenvalues, Serre)."""
    n = tower.n
    E = {a: tower_generator(tower, a, "E", dual) for a in range(1, n)}
    F = {a: tower_generator(tower, a, "F", dual) for a in range(1, n)}
    bad = []
    for a in range(1, n):
        for b in range(1, n):
            rel = E[a] @ F[b] - F[b] @ E[a]
            if a == b:
                rel = rel - tower_cartan(tower, a)
            if not rel.is_zero():
                bad.append(f"[E{a},F{b}]")
    for X, name in ((E, "E"), (F, "F")):
        for a in range(1, n):
            for b in range(1, n):
                if a == b:
                    continue
                if abs(a - b) > 1:
                    rel = X[a] @ X[b] - X[b] @ X[a]
                else:
                    rel = X[a] @ X[a] @ X[b] - (X[a] @ X[b] @ X[a]).scale(2) + X[b] @ X[a] @ X[a]
                if not rel.is_zero():
                    bad.append(f"serre {name}{a},{name}{b}")
    return bad


def weight_zero_T(tower: InvariantTower, a: int):
    """1 - E_a F_a on the 1^d block (n = d)."""
    if tower.n != tower.d:
        raise DomainError("weight-zero operators need n = d")
    ones = (1,) * tower.d
    E = tower_generator(tower, a, "E")
    F = tower_generator(tower, a, "F")
    EF = (E @ F).block(ones, ones)
    return linalg.sub(linalg.identity(tower.dim(ones)), EF)


def weight_zero_T_full(tower: InvariantTower, a: int):
    """1 - E_a F_a - F_a E_a + (1/2) E_a F_a^2 E_a on the 1^d block."""
    ones = (1,) * tower.d
    E = tower_generator(tower, a, "E")
    F = tower_generator(tower, a, "F")
    k = tower.dim(ones)
    M = linalg.identity(k)
    M = linalg.sub(M, (E @ F).block(ones, ones))
    M = linalg.sub(M, (F @ E).block(ones, ones))
    M = linalg.add(M, linalg.scale(Fraction(1, 2), (E @ F @ F @ E).block(ones, ones)))
    return M
