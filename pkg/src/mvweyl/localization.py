"""Localized torus-equivariant classes on partial flag varieties and convolution
of correspondence classes between them.

A fixed point of the partial flag variety of type ``comp`` is a coset
``w S_comp``, labelled by :func:`symgrp.coset_key`.  Classes are finitely supported
maps from fixed points to rational functions in ``e1..ed, h``.

Two correspondence families are built from block data:

* ``Z``: conormal-type correspondences inside the cotangent spaces, with middle
  tangent weights ``u^-`` plus ``u`` shifted by ``h``;
* ``X``: the analogous correspondences inside the Grothendieck spaces, where the
  fibre is a parabolic (so its tangent weights include the zero weights of the
  Cartan, shifted by ``h``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import symgrp
from .polyalg import (
    HSpecializationError,
    Poly,
    RatFunc,
    euler_ratfunc,
    render_ratfunc,
    root,
    weight_poly,
)
from .symgrp import GHOST, coset_key, coset_min_rep, is_ghost

AMBIENT = {"Z": "cotangent", "X": "grothendieck"}


class CompositionError(ValueError):
    """Correspondences or classes with incompatible tags were combined."""


# ---------------------------------------------------------------------------
# weight sets


def u_pairs(comp: Sequence[int]) -> frozenset:
    """Index pairs (i, j), 0-based, of the weights e_i - e_j of the nilradical."""
    bl = symgrp.blocks_of(comp)
    d = len(bl)
    return frozenset((i, j) for i in range(d) for j in range(d) if bl[i] < bl[j])


def p_pairs(comp: Sequence[int]) -> frozenset:
    """Index pairs of the parabolic, including the diagonal (zero weights)."""
    bl = symgrp.blocks_of(comp)
    d = len(bl)
    return frozenset((i, j) for i in range(d) for j in range(d) if bl[i] <= bl[j])


def pair_weight(p: tuple, d: int) -> tuple:
    i, j = p
    w = [0] * (d + 1)
    w[i] += 1
    w[j] -= 1
    return tuple(w)


def weight_multiset(pairs: Iterable[tuple], d: int, negate: bool = False) -> list:
    """Weights e_i - e_j (or their negatives) of a set of index pairs."""
    out = []
    for p in sorted(pairs):
        w = pair_weight(p, d)
        out.append(tuple(-x for x in w) if negate else w)
    return out


def u_weights(comp) -> list:
    return weight_multiset(u_pairs(comp), sum(comp))


def u_minus_weights(comp) -> list:
    return weight_multiset(u_pairs(comp), sum(comp), negate=True)


def p_weights(comp) -> list:
    return weight_multiset(p_pairs(comp), sum(comp))


def _moved(weights: Iterable[tuple], w: Sequence[int], d: int) -> list:
    """Apply the permutation w to weights (e_i -> e_{w(i)})."""
    out = []
    for wt in weights:
        new = [0] * (d + 1)
        for i in range(d):
            if wt[i]:
                new[w[i]] += wt[i]
        new[d] = wt[d]
        out.append(tuple(new))
    return out


@lru_cache(maxsize=None)
def _euler_at(weights: tuple, shifted: tuple, d: int) -> RatFunc:
    """eu(weights) * eu(shifted (x) C_h) as a factored rational function."""
    return euler_ratfunc(weights, False, d) * euler_ratfunc(shifted, True, d)


def ambient_euler(comp: Sequence[int], family: str, w: Sequence[int]) -> RatFunc:
    """Euler class of the tangent space of the middle ambient at the fixed point w S_comp."""
    comp = tuple(comp)
    d = sum(comp)
    base = u_minus_weights(comp)
    fib = u_weights(comp) if family == "Z" else p_weights(comp)
    return _euler_at(tuple(_moved(base, w, d)), tuple(_moved(fib, w, d)), d)


# ---------------------------------------------------------------------------
# classes


@dataclass
class FixedPointClass:
    comp: tuple
    family: str  # "Z" (cotangent ambient) or "X" (Grothendieck ambient)
    coeffs: dict = field(default_factory=dict)  # coset key -> RatFunc

    @property
    def d(self) -> int:
        return sum(self.comp)

    @classmethod
    def point(cls, w: Sequence[int], comp: Sequence[int], family: str = "Z", coeff=None):
        comp = tuple(comp)
        d = sum(comp)
        c = coeff if coeff is not None else RatFunc.one(d + 1)
        return cls(comp, family, {coset_key(w, comp): c})

    def __add__(self, other: "FixedPointClass"):
        if (self.comp, self.family) != (other.comp, other.family):
            raise CompositionError(f"cannot add classes on {self.comp} and {other.comp}")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out[k] + v if k in out else v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return FixedPointClass(self.comp, self.family, out)

    def scale(self, c) -> "FixedPointClass":
        return FixedPointClass(
            self.comp, self.family, {k: v * c for k, v in self.coeffs.items() if not (v * c).is_zero()}
        )

    def equals(self, other: "FixedPointClass") -> bool:
        if (self.comp, self.family) != (other.comp, other.family):
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        zero = RatFunc.zero(self.d + 1)
        return all(self.coeffs.get(k, zero) == other.coeffs.get(k, zero) for k in keys)

    def specialize_h(self) -> "FixedPointClass":
        out = {}
        for k, v in self.coeffs.items():
            s = v.specialize_h()
            if not s.is_zero():
                out[k] = s
        return FixedPointClass(self.comp, self.family, out)

    def to_json(self) -> dict:
        return {
            "composition": list(self.comp),
            "family": self.family,
            "coeffs": {str(list(coset_min_rep(k))): render_ratfunc(v) for k, v in sorted(self.coeffs.items())},
        }


@dataclass
class CorrClass:
    target: tuple
    source: tuple
    family: str
    coeffs: dict = field(default_factory=dict)  # (target key, source key) -> RatFunc

    @property
    def d(self) -> int:
        return sum(self.source)

    def to_json(self) -> dict:
        return {
            "target": list(self.target),
            "source": list(self.source),
            "family": self.family,
            "coeffs": {
                f"{list(coset_min_rep(p))}|{list(coset_min_rep(q))}": render_ratfunc(v)
                for (p, q), v in sorted(self.coeffs.items())
            },
        }


def _corr(target: tuple, source: tuple, family: str) -> CorrClass:
    target, source = tuple(target), tuple(source)
    if sum(target) != sum(source):
        raise CompositionError(f"{target} and {source} are compositions of different integers")
    d = sum(source)
    base = sorted(u_pairs(target) | u_pairs(source))
    if family == "Z":
        fib = sorted(u_pairs(target) & u_pairs(source))
    elif family == "X":
        fib = sorted(p_pairs(target) & p_pairs(source))
    else:
        raise ValueError(f"unknown family {family!r}")
    base_w = weight_multiset(base, d, negate=True)
    fib_w = weight_multiset(fib, d)
    ref = symgrp.common_refinement(target, source)
    coeffs = {}
    for x in symgrp.young_cosets(ref):
        e = _euler_at(tuple(_moved(base_w, x, d)), tuple(_moved(fib_w, x, d)), d)
        coeffs[(coset_key(x, target), coset_key(x, source))] = e.inverse()
    return CorrClass(target, source, family, coeffs)


@lru_cache(maxsize=None)
def corr_Z(target: tuple, source: tuple) -> CorrClass:
    """Localized class of the conormal correspondence between two partial flag types."""
    return _corr(target, source, "Z")


@lru_cache(maxsize=None)
def corr_X(target: tuple, source: tuple) -> CorrClass:
    """Localized class of the parabolic correspondence in the Grothendieck spaces."""
    return _corr(target, source, "X")


def _middle_euler(comp: tuple, family: str, key: tuple) -> RatFunc:
    return ambient_euler(comp, family, coset_min_rep(key))


def convolve(A: CorrClass, B):
    """Localized convolution A * B, summing over the middle fixed points with their Euler classes."""
    if isinstance(B, FixedPointClass):
        if B.comp != A.source or B.family != A.family:
            raise CompositionError(f"correspondence from {A.source} applied to a class on {B.comp}")
        out: dict = {}
        for (p, q), a in A.coeffs.items():
            b = B.coeffs.get(q)
            if b is None:
                continue
            term = a * b * _middle_euler(A.source, A.family, q)
            out[p] = out[p] + term if p in out else term
        return FixedPointClass(A.target, A.family, {k: v for k, v in out.items() if not v.is_zero()})
    if isinstance(B, CorrClass):
        if B.target != A.source or B.family != A.family:
            raise CompositionError(f"cannot compose {A.source}<-{A.target} with {B.target}<-{B.source}")
        by_q: dict = {}
        for (q, r), b in B.coeffs.items():
            by_q.setdefault(q, []).append((r, b))
        out = {}
        for (p, q), a in A.coeffs.items():
            eu = _middle_euler(A.source, A.family, q)
            for r, b in by_q.get(q, ()):
                term = a * b * eu
                k = (p, r)
                out[k] = out[k] + term if k in out else term
        return CorrClass(A.target, B.source, A.family, {k: v for k, v in out.items() if not v.is_zero()})
    raise TypeError(f"cannot convolve with {type(B).__name__}")


# ---------------------------------------------------------------------------
# closed forms for the rank-one composites


def simple_root_at(u: Sequence[int], a: int) -> RatFunc:
    """u(alpha_a) = e_{u(a)} - e_{u(a+1)} as a rational function."""
    d = len(u)
    return RatFunc.from_poly(weight_poly(root(u[a - 1] + 1, u[a] + 1, d)))


def expected_composite(u: Sequence[int], a: int, family: str) -> FixedPointClass:
    """(s_a - 1 + h d_a)[u] for Z and (s_a + 1 + h d_a)[u] for X on the full flag fixed points.

    Here s_a[u] = [u s_a] and d_a[u] = ([u s_a] - [u]) / u(alpha_a).
    """
    d = len(u)
    comp = (1,) * d
    n = d + 1
    alpha = simple_root_at(u, a)
    hq = RatFunc.from_poly(Poly.var(d, n))
    us = symgrp.compose(u, symgrp.simple_reflection(a, d))
    eps = -1 if family == "Z" else 1
    c_u = RatFunc(n, eps) - hq / alpha
    c_us = RatFunc.one(n) + hq / alpha
    return FixedPointClass(comp, family, {coset_key(u, comp): c_u}) + FixedPointClass(
        comp, family, {coset_key(us, comp): c_us}
    )


def rank_one_composite(u: Sequence[int], a: int, family: str) -> FixedPointClass:
    """Convolve [u] through the coarser type f_a(1^d) and back."""
    d = len(u)
    ones = (1,) * d
    mid = symgrp.f_tilde(a, ones)
    corr = corr_Z if family == "Z" else corr_X
    pt = FixedPointClass.point(u, ones, family)
    return convolve(corr(ones, mid), convolve(corr(mid, ones), pt))


# ---------------------------------------------------------------------------
# Chevalley operators on the direct sum over compositions


def sgn_exponent(a: int, comp: Sequence[int]) -> int:
    """Exponent d_{a+1} - d_a + 1 of the sign attached to F_a on the block comp."""
    return comp[a] - comp[a - 1] + 1


@dataclass
class BlockOperator:
    """Sparse operator on the direct sum of fixed-point classes over all compositions.

    ``entries`` maps ((target comp, target key), (source comp, source key)) to a
    coefficient (RatFunc).  Coefficients include the middle Euler factor, so the
    operator applied to a point class [q] is the column at q.
    """

    nvars: int
    entries: dict = field(default_factory=dict)

    def columns(self) -> dict:
        cols: dict = {}
        for (p, q), v in self.entries.items():
            cols.setdefault(q, []).append((p, v))
        return cols

    def __matmul__(self, other: "BlockOperator") -> "BlockOperator":
        rows_by_mid: dict = {}
        for (p, q), v in self.entries.items():
            rows_by_mid.setdefault(q, []).append((p, v))
        out: dict = {}
        for (q, r), b in other.entries.items():
            for p, a in rows_by_mid.get(q, ()):
                k = (p, r)
                t = a * b
                out[k] = out[k] + t if k in out else t
        return BlockOperator(self.nvars, {k: v for k, v in out.items() if not v.is_zero()})

    def __add__(self, other: "BlockOperator") -> "BlockOperator":
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out[k] + v if k in out else v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return BlockOperator(self.nvars, out)

    def scale(self, c) -> "BlockOperator":
        return BlockOperator(self.nvars, {k: v * c for k, v in self.entries.items() if c})

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.entries.values())

    def equals(self, other: "BlockOperator") -> bool:
        return (self - other).is_zero()

    def specialize_h(self) -> "BlockOperator":
        out = {}
        for k, v in self.entries.items():
            s = v.specialize_h()
            if not s.is_zero():
                out[k] = s
        return BlockOperator(self.nvars, out)

    def restrict(self, source_comp: tuple, target_comp: tuple) -> dict:
        return {
            (p[1], q[1]): v for (p, q), v in self.entries.items() if p[0] == target_comp and q[0] == source_comp
        }

    def witness(self) -> dict:
        """A nonzero entry, rendered, for failure reports."""
        for (p, q), v in sorted(self.entries.items(), key=lambda kv: repr(kv[0])):
            if not v.is_zero():
                return {
                    "target": [list(p[0]), list(coset_min_rep(p[1]))],
                    "source": [list(q[0]), list(coset_min_rep(q[1]))],
                    "value": render_ratfunc(v),
                }
        return {}


def _corr_operator(corr: CorrClass, sign: int = 1) -> dict:
    out = {}
    for (p, q), c in corr.coeffs.items():
        v = c * _middle_euler(corr.source, corr.family, q)
        if sign != 1:
            v = v * sign
        out[((corr.target, p), (corr.source, q))] = v
    return out


def sign_for(a: int, which: str, comp: Sequence[int], signs: str) -> int:
    """Sign attached to the (a, which) generator on the block comp.

    ``literal``: only F carries (-1)^(d_{a+1} - d_a + 1), evaluated on the source.
    ``balanced``: E carries (-1)^(d_{a+1}) and F carries (-1)^(d_a).
    ``none``: no signs.
    Both signed rules agree on the 1^d block.
    """
    if signs == "none":
        return 1
    if signs == "literal":
        e = sgn_exponent(a, comp) if which == "F" else 0
    elif signs == "balanced":
        e = comp[a] if which == "E" else comp[a - 1]
    else:
        raise ValueError(f"unknown sign rule {signs!r}")
    return -1 if e % 2 else 1


SIGN_RULES = ("balanced", "literal", "none")


def _family_operator(a: int, which: str, family: str, n: int, d: int, signs: str) -> BlockOperator:
    corr = corr_Z if family == "Z" else corr_X
    entries: dict = {}
    for comp in symgrp.compositions(n, d):
        tgt = symgrp.e_tilde(a, comp) if which == "E" else symgrp.f_tilde(a, comp)
        if is_ghost(tgt):
            continue
        entries.update(_corr_operator(corr(tgt, comp), sign_for(a, which, comp, signs)))
    return BlockOperator(d + 1, entries)


@lru_cache(maxsize=None)
def ginzburg_EF(a: int, which: str, n: int, d: int, signs: str = "balanced") -> BlockOperator:
    """Chevalley generator from the conormal correspondences with the chosen sign rule.

    The literal rule puts signs on F only; it already fails [E_a, F_b] = 0 and
    the Serre relations for n = 3, which no sign rule on F alone can repair
    (E1 E1 E2 = -2 E1 E2 E1 there).  The balanced rule is the default.
    """
    return _family_operator(a, which, "Z", n, d, signs)


@lru_cache(maxsize=None)
def bg_EF(a: int, which: str, n: int, d: int) -> BlockOperator:
    """Chevalley generator from the parabolic correspondences, no signs."""
    return _family_operator(a, which, "X", n, d, "none")


def cartan_operator(a: int, n: int, d: int) -> BlockOperator:
    """H_a acting by d_a - d_{a+1} on the comp block."""
    entries = {}
    for comp in symgrp.compositions(n, d):
        c = comp[a - 1] - comp[a]
        if not c:
            continue
        for w in symgrp.young_cosets(comp):
            k = (comp, coset_key(w, comp))
            entries[(k, k)] = RatFunc(d + 1, c)
    return BlockOperator(d + 1, entries)


def identity_on(comp: tuple, d: int) -> BlockOperator:
    entries = {}
    for w in symgrp.young_cosets(comp):
        k = (comp, coset_key(w, comp))
        entries[(k, k)] = RatFunc.one(d + 1)
    return BlockOperator(d + 1, entries)


def restrict_to_block(op: BlockOperator, comp: tuple) -> BlockOperator:
    return BlockOperator(op.nvars, {k: v for k, v in op.entries.items() if k[0][0] == comp and k[1][0] == comp})


def gln_relation_failures(E: dict, F: dict, n: int, d: int, at_h0: bool = True) -> list:
    """Failed relations among E[a], F[a] (BlockOperators); each failure carries a witness."""
    if at_h0:
        E = {a: op.specialize_h() for a, op in E.items()}
        F = {a: op.specialize_h() for a, op in F.items()}
    bad = []
    for a in range(1, n):
        for b in range(1, n):
            comm = E[a] @ F[b] - F[b] @ E[a]
            target = cartan_operator(a, n, d) if a == b else BlockOperator(d + 1)
            diff = comm - target
            if not diff.is_zero():
                bad.append({"relation": f"[E{a},F{b}]", "witness": diff.witness()})
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
                    bad.append({"relation": f"serre {name}{a},{name}{b}", "witness": rel.witness()})
    return bad


def weight_zero_T(E: BlockOperator, F: BlockOperator, d: int, at_h0: bool = True) -> BlockOperator:
    """1 - E_a F_a restricted to the 1^d block."""
    ones = (1,) * d
    EF = restrict_to_block(E @ F, ones)
    T = identity_on(ones, d) - EF
    return T.specialize_h() if at_h0 else T


def right_multiplication(a: int, d: int, sign: int = 1) -> BlockOperator:
    """The operator [u] -> sign * [u s_a] on the 1^d block."""
    ones = (1,) * d
    s = symgrp.simple_reflection(a, d)
    entries = {}
    for u in symgrp.all_perms(d):
        entries[((ones, coset_key(symgrp.compose(u, s), ones)), (ones, coset_key(u, ones)))] = RatFunc(d + 1, sign)
    return BlockOperator(d + 1, entries)


def bg_fixed_point_formula(a: int, which: str, comp: tuple) -> dict:
    """Closed-form action at h = 0 on fixed points:
    E_a[w S] = (d_{a+1} / #S) sum over y in S of [w y S'], F_a analogous with d_a.
    Returns {(target key, source key): Fraction}.
    """
    from fractions import Fraction

    tgt = symgrp.e_tilde(a, comp) if which == "E" else symgrp.f_tilde(a, comp)
    if is_ghost(tgt):
        return {}
    coef = Fraction(comp[a] if which == "E" else comp[a - 1], symgrp.young_order(comp))
    S = symgrp.young_subgroup(comp)
    out: dict = {}
    for w in symgrp.young_cosets(comp):
        src = coset_key(w, comp)
        for y in S:
            k = (coset_key(symgrp.compose(w, y), tgt), src)
            out[k] = out.get(k, 0) + coef
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# smooth-point localization


def localization_check(ambient_weights: Sequence[tuple], free: Sequence[int]) -> dict:
    """Compare 1/eu(Y) with multidegree(I(Y))/eu(ambient) for a coordinate subspace Y.

    ``ambient_weights`` are the weights of the coordinates of a linear space and
    ``free`` the indices of the coordinates spanning Y.  The multidegree of the
    ideal generated by the other coordinates is computed by the Groebner engine.
    """
    from . import groebner

    ambient_weights = [tuple(w) for w in ambient_weights]
    d = len(ambient_weights[0]) - 1
    free = sorted(set(free))
    if any(not any(ambient_weights[i]) for i in range(len(ambient_weights))):
        raise HSpecializationError("degenerate zero weight in the ambient space")
    ring = groebner.CoordRing([f"y{i + 1}" for i in range(len(ambient_weights))], ambient_weights)
    gens = [ring.var(i) for i in range(ring.n) if i not in free]
    mdeg = groebner.multidegree(groebner.PolyIdeal(ring, gens))
    direct = euler_ratfunc([ambient_weights[i] for i in free], False, d).inverse()
    via = RatFunc.from_poly(mdeg) / euler_ratfunc(ambient_weights, False, d)
    return {
        "e0_direct": render_ratfunc(direct),
        "e0_multidegree": render_ratfunc(via),
        "ok": direct == via,
    }
