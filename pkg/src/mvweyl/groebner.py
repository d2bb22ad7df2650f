"""Desk-scale Groebner bases over Q with torus-weighted coordinates.

The engine is a plain Buchberger algorithm (normal selection, product and
chain criteria) on dict-based polynomials.  Everything above it, from
dimension and K-polynomials to multidegrees, splitting into minimal primes
and interpolation, works from reduced Groebner bases.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Sequence

from . import linalg
from .polyalg import Poly, render_poly, weight_poly


class BudgetError(RuntimeError):
    """A Groebner computation exceeded its configured resource caps."""


@dataclass
class Budget:
    pair_cap: int = 200_000
    monomial_cap: int = 5_000_000


DEFAULT_BUDGET = Budget()


# ---------------------------------------------------------------------------
# term orders


def grevlex_key(e):
    """Degree reverse lexicographic with the first listed variable smallest."""
    return (sum(e),) + tuple(-x for x in e)


def lex_key(e):
    """Lexicographic with the last listed variable largest."""
    return tuple(reversed(e))


def grevlex_with_smallest(k: int) -> Callable:
    """Grevlex in which variable k is the smallest (used for saturation by x_k)."""

    def key(e):
        return (sum(e), -e[k]) + tuple(-x for x in e)

    return key


def elimination_key(n: int) -> Callable:
    """Block order eliminating the variable with index n (the last one)."""

    def key(e):
        return (e[n],) + grevlex_key(e[:n])

    return key


ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


@dataclass
class CoordRing:
    """Polynomial ring over Q with named, torus-weighted variables."""

    names: list
    weights: list  # one torus weight (tuple of length d+1) per variable
    order: str = "grevlex"

    def __post_init__(self):
        self.names = list(self.names)
        self.weights = [tuple(w) for w in self.weights]
        if len(self.names) != len(self.weights):
            raise ValueError("one weight per variable is required")
        if self.order not in ORDERS:
            raise ValueError(f"unknown term order {self.order!r}")

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def key(self) -> Callable:
        return ORDERS[self.order]

    @property
    def torus_nvars(self) -> int:
        return len(self.weights[0]) if self.weights else 1

    def var(self, i: int) -> Poly:
        return Poly.var(i, self.n)

    def with_order(self, order: str) -> "CoordRing":
        return CoordRing(self.names, self.weights, order)

    def render(self, p: Poly) -> str:
        return render_poly(p, self.names)


def u_ring(d: int, order: str = "grevlex") -> CoordRing:
    """Coordinates x_ij (i < j) of strictly upper triangular d x d matrices.

    Variables are listed column by column, x12, x13, x23, x14, ...; x_ij has
    torus weight e_i - e_j.
    """
    names, weights = [], []
    for j in range(2, d + 1):
        for i in range(1, j):
            names.append(f"x{i}{j}" if d < 10 else f"x{i}_{j}")
            w = [0] * (d + 1)
            w[i - 1] += 1
            w[j - 1] -= 1
            weights.append(tuple(w))
    return CoordRing(names, weights, order)


def u_index(d: int) -> dict:
    """Map (i, j), 1-based with i < j, to the variable index in u_ring(d)."""
    out = {}
    k = 0
    for j in range(2, d + 1):
        for i in range(1, j):
            out[(i, j)] = k
            k += 1
    return out


# ---------------------------------------------------------------------------
# core dict arithmetic


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _GB:
    """Working state of one Buchberger run."""

    def __init__(self, key, budget: Budget):
        self.key = key
        self.budget = budget
        self.polys: list = []  # dicts
        self.lts: list = []
        self.alive: list = []
        self.monomials = 0

    def lt(self, p):
        return max(p, key=self.key)

    def monic(self, p):
        e = self.lt(p)
        c = p[e]
        if c == 1:
            return p
        inv = 1 / c
        return {k: v * inv for k, v in p.items()}

    def reduce(self, p, full=True):
        """Normal form of p modulo the live basis elements."""
        p = dict(p)
        rem = {}
        key = self.key
        polys, lts, alive = self.polys, self.lts, self.alive
        while p:
            e = max(p, key=key)
            c = p[e]
            for i, lt in enumerate(lts):
                if alive[i] and _divides(lt, e):
                    m = tuple(x - y for x, y in zip(e, lt))
                    for ge, gc in polys[i].items():
                        k = tuple(x + y for x, y in zip(ge, m))
                        v = p.get(k, 0) - c * gc
                        if v:
                            p[k] = v
                        else:
                            p.pop(k, None)
                    break
            else:
                if not full:
                    rem.update(p)
                    return rem
                rem[e] = c
                del p[e]
            if len(p) > self.budget.monomial_cap:
                raise BudgetError(f"intermediate polynomial exceeds {self.budget.monomial_cap} terms")
        return rem

    def spoly(self, i, j):
        a, b = self.polys[i], self.polys[j]
        L = _lcm(self.lts[i], self.lts[j])
        ma = tuple(x - y for x, y in zip(L, self.lts[i]))
        mb = tuple(x - y for x, y in zip(L, self.lts[j]))
        out = {}
        for e, c in a.items():
            out[tuple(x + y for x, y in zip(e, ma))] = c
        for e, c in b.items():
            k = tuple(x + y for x, y in zip(e, mb))
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out

    def add(self, p):
        p = self.monic(p)
        self.polys.append(p)
        self.lts.append(self.lt(p))
        self.alive.append(True)
        self.monomials += len(p)
        if self.monomials > self.budget.monomial_cap:
            raise BudgetError(f"Groebner basis exceeds {self.budget.monomial_cap} stored terms")
        return len(self.polys) - 1

    def run(self, gens):
        pairs: set = set()
        for g in gens:
            r = self.reduce(g)
            if not r:
                continue
            if all(not any(e) for e in r):
                return [{tuple([0] * len(next(iter(r)))): Fraction(1)}]
            j = self.add(r)
            for i in range(j):
                if self.alive[i]:
                    pairs.add((i, j))
        processed = 0
        done: set = set()
        while pairs:
            i, j = min(pairs, key=lambda ij: self.key(_lcm(self.lts[ij[0]], self.lts[ij[1]])))
            pairs.discard((i, j))
            done.add((i, j))
            if not (self.alive[i] and self.alive[j]):
                continue
            li, lj = self.lts[i], self.lts[j]
            if _coprime(li, lj):
                continue
            L = _lcm(li, lj)
            skip = False
            for k in range(len(self.polys)):
                if k in (i, j) or not self.alive[k]:
                    continue
                if _divides(self.lts[k], L):
                    pik = (min(i, k), max(i, k))
                    pjk = (min(j, k), max(j, k))
                    if pik not in pairs and pjk not in pairs:
                        skip = True
                        break
            if skip:
                continue
            processed += 1
            if processed > self.budget.pair_cap:
                raise BudgetError(f"more than {self.budget.pair_cap} S-pairs reduced")
            r = self.reduce(self.spoly(i, j))
            if not r:
                continue
            if all(not any(e) for e in r):
                return [{tuple([0] * len(next(iter(r)))): Fraction(1)}]
            new = self.add(r)
            for k in range(new):
                if self.alive[k]:
                    pairs.add((k, new))
        return self.reduced()

    def reduced(self):
        idx = [i for i in range(len(self.polys)) if self.alive[i]]
        minimal = []
        for i in idx:
            if any(j != i and _divides(self.lts[j], self.lts[i]) and (self.lts[j] != self.lts[i] or j < i) for j in idx):
                continue
            minimal.append(i)
        self.alive = [i in minimal for i in range(len(self.polys))]
        out = []
        for i in minimal:
            self.alive[i] = False
            r = self.reduce(self.polys[i])
            self.alive[i] = True
            r = self.monic(r)
            self.polys[i] = r
            out.append(r)
        out.sort(key=lambda p: self.key(self.lt(p)))
        return out


def _to_dict(p: Poly) -> dict:
    return dict(p.terms)


def _to_poly(d: dict, n: int) -> Poly:
    return Poly(n, d)


def groebner_basis(gens: Sequence[Poly], n: int, key=grevlex_key, budget: Budget | None = None) -> list:
    """Reduced Groebner basis (monic) of the ideal generated by gens."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    eng = _GB(key, budget or DEFAULT_BUDGET)
    # feed generators by increasing leading term for smaller intermediate bases
    ds = sorted((_to_dict(g) for g in gens), key=lambda p: key(max(p, key=key)))
    return [_to_poly(p, n) for p in eng.run(ds)]


def normal_form(f: Poly, gb: Sequence[Poly], key=grevlex_key) -> Poly:
    eng = _GB(key, DEFAULT_BUDGET)
    for g in gb:
        eng.polys.append(_to_dict(g))
        eng.lts.append(max(g.terms, key=key))
        eng.alive.append(True)
    return _to_poly(eng.reduce(_to_dict(f)), f.nvars)


def leading_exponent(p: Poly, key=grevlex_key) -> tuple:
    return max(p.terms, key=key)


# ---------------------------------------------------------------------------
# ideals


@dataclass
class PolyIdeal:
    ring: CoordRing
    gens: list
    budget: Budget | None = None
    _gb: list | None = field(default=None, repr=False)

    def __post_init__(self):
        self.gens = [g for g in self.gens if not g.is_zero()]
        for g in self.gens:
            if g.nvars != self.ring.n:
                raise ValueError("generator lives in a ring of the wrong size")

    def gb(self) -> list:
        if self._gb is None:
            self._gb = groebner_basis(self.gens, self.ring.n, self.ring.key, self.budget)
        return self._gb

    def is_unit(self) -> bool:
        gb = self.gb()
        return len(gb) == 1 and gb[0].is_constant()

    def contains(self, f: Poly) -> bool:
        return normal_form(f, self.gb(), self.ring.key).is_zero()

    def contains_ideal(self, other: "PolyIdeal") -> bool:
        return all(self.contains(g) for g in other.gb())

    def same_as(self, other: "PolyIdeal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def normal_form(self, f: Poly) -> Poly:
        return normal_form(f, self.gb(), self.ring.key)

    def plus(self, extra: Iterable[Poly]) -> "PolyIdeal":
        return PolyIdeal(self.ring, list(self.gb()) + list(extra), self.budget)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def render(self) -> list:
        return [self.ring.render(g) for g in self.gb()]


def buchberger(I: PolyIdeal) -> list:
    """Reduced Groebner basis of I with respect to its ring's term order."""
    return I.gb()


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple  # minimal exponent vectors

    @classmethod
    def from_exponents(cls, n: int, exps: Iterable[Sequence[int]]) -> "MonomialIdeal":
        exps = sorted(set(tuple(e) for e in exps))
        minimal = [e for e in exps if not any(f != e and _divides(f, e) for f in exps)]
        return cls(n, tuple(minimal))

    def contains_monomial(self, e) -> bool:
        return any(_divides(g, e) for g in self.gens)


def initial_ideal(I: PolyIdeal) -> MonomialIdeal:
    key = I.ring.key
    return MonomialIdeal.from_exponents(I.ring.n, [max(g.terms, key=key) for g in I.gb()])


def monomial_dimension(M: MonomialIdeal) -> int:
    """Largest size of a variable set containing no generator's support."""
    n = M.n
    if any(not any(g) for g in M.gens):
        return -1
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in M.gens]
    for k in range(n, -1, -1):
        for S in combinations(range(n), k):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return k
    return 0


def dimension(I: PolyIdeal) -> int:
    """Krull dimension of the quotient ring (-1 for the unit ideal)."""
    return monomial_dimension(initial_ideal(I))


# ---------------------------------------------------------------------------
# K-polynomials and multidegrees


def _mono(n: int, e) -> Poly:
    return Poly._raw(n, {tuple(e): Fraction(1)})


def k_polynomial(M: MonomialIdeal, method: str = "recursive", budget: Budget | None = None) -> Poly:
    """Finely graded K-polynomial of S/M as a polynomial in t_1..t_n.

    ``recursive`` uses K(M' + (m)) = K(M') - t^m K(M' : m); ``inclusion_exclusion``
    sums (-1)^|A| t^lcm(A) over generator subsets A.
    """
    budget = budget or DEFAULT_BUDGET
    n = M.n
    if method == "inclusion_exclusion":
        if 2 ** len(M.gens) > budget.monomial_cap:
            raise BudgetError(f"inclusion-exclusion over {len(M.gens)} generators exceeds the budget")
        out: dict = {}
        gens = list(M.gens)
        for k in range(len(gens) + 1):
            sgn = -1 if k % 2 else 1
            for A in combinations(gens, k):
                e = tuple([0] * n)
                for g in A:
                    e = _lcm(e, g)
                out[e] = out.get(e, 0) + sgn
        return Poly(n, out)
    if method != "recursive":
        raise ValueError(f"unknown method {method!r}")
    memo: dict = {}
    counter = [0]

    def rec(gens: tuple) -> Poly:
        if gens in memo:
            return memo[gens]
        counter[0] += 1
        if counter[0] > budget.pair_cap:
            raise BudgetError("K-polynomial recursion exceeded the budget")
        if not gens:
            res = Poly.const(1, n)
        elif all(_coprime(a, b) for a, b in combinations(gens, 2)):
            res = Poly.const(1, n)
            for g in gens:
                res = res * (Poly.const(1, n) - _mono(n, g))
        else:
            # pivot on the generator of largest degree
            m = max(gens, key=lambda g: (sum(g), g))
            rest = tuple(g for g in gens if g != m)
            quot = MonomialIdeal.from_exponents(n, [tuple(x - y for x, y in zip(_lcm(g, m), m)) for g in rest])
            res = rec(rest) - _mono(n, m) * rec(quot.gens)
        memo[gens] = res
        return res

    return rec(tuple(sorted(M.gens)))


def _truncated_substitution(K: Poly, top: int) -> Poly:
    """K(1 - x) keeping homogeneous parts of degree <= top."""
    n = K.nvars
    one = Poly.const(1, n)
    powers: dict = {}

    def trunc(p: Poly) -> Poly:
        return Poly._raw(n, {e: c for e, c in p.terms.items() if sum(e) <= top})

    def power(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = trunc((one - Poly.var(i, n)) ** k)
        return powers[(i, k)]

    out = Poly.zero(n)
    for e, c in K.terms.items():
        term = Poly.const(c, n)
        for i, k in enumerate(e):
            if k:
                term = trunc(term * power(i, k))
        out = out + term
    return out


def fine_multidegree(M: MonomialIdeal) -> Poly:
    """Multidegree of S/M in the fine grading, as a polynomial in x_1..x_n."""
    codim = M.n - monomial_dimension(M)
    K = k_polynomial(M)
    sub = _truncated_substitution(K, codim)
    for k in range(codim):
        if not sub.homogeneous_part(k).is_zero():
            raise ArithmeticError(f"K(1-x) has a nonzero part in degree {k} < codim {codim}")
    C = sub.homogeneous_part(codim)
    if C.is_zero():
        raise ArithmeticError("multidegree vanished")
    return C


def multidegree(I: PolyIdeal) -> Poly:
    """Torus-weighted multidegree of S/I, a homogeneous polynomial of degree codim(I)."""
    M = initial_ideal(I)
    C = fine_multidegree(M)
    images = [weight_poly(w) for w in I.ring.weights]
    return C.compose_linear(images)


# ---------------------------------------------------------------------------
# quotients, saturation, splitting


def saturate_by_variable(I: PolyIdeal, k: int) -> PolyIdeal:
    """I : x_k^infinity.  Homogeneous ideals use a grevlex order with x_k last."""
    n = I.ring.n
    if I.is_homogeneous():
        key = grevlex_with_smallest(k)
        gb = groebner_basis(I.gens, n, key, I.budget)
        out = []
        for g in gb:
            m = min(e[k] for e in g.terms)
            if m:
                g = Poly._raw(n, {e[:k] + (e[k] - m,) + e[k + 1 :]: c for e, c in g.terms.items()})
            out.append(g)
        return PolyIdeal(I.ring, out, I.budget)
    return saturate(I, I.ring.var(k))


def saturate(I: PolyIdeal, f: Poly) -> PolyIdeal:
    """I : f^infinity via the elimination of y from I + (1 - y f)."""
    n = I.ring.n
    lift = [g.compose_linear([Poly.var(i, n + 1) for i in range(n)]) for g in I.gens]
    fy = f.compose_linear([Poly.var(i, n + 1) for i in range(n)])
    lift.append(Poly.const(1, n + 1) - Poly.var(n, n + 1) * fy)
    gb = groebner_basis(lift, n + 1, elimination_key(n), I.budget)
    keep = []
    for g in gb:
        if all(e[n] == 0 for e in g.terms):
            keep.append(Poly._raw(n, {e[:n]: c for e, c in g.terms.items()}))
    return PolyIdeal(I.ring, keep, I.budget)


def ideal_quotient_by_variable(I: PolyIdeal, k: int) -> PolyIdeal:
    """I : x_k (one step), for homogeneous I."""
    n = I.ring.n
    key = grevlex_with_smallest(k)
    gb = groebner_basis(I.gens, n, key, I.budget)
    out = []
    for g in gb:
        if min(e[k] for e in g.terms) >= 1:
            g = Poly._raw(n, {e[:k] + (e[k] - 1,) + e[k + 1 :]: c for e, c in g.terms.items()})
        else:
            g = g * I.ring.var(k)
            g = Poly._raw(n, {e[:k] + (e[k] - 1,) + e[k + 1 :]: c for e, c in g.terms.items()})
        out.append(g)
    return PolyIdeal(I.ring, out, I.budget)


def _variable_factors(g: Poly) -> list:
    """Variables dividing every term of g."""
    n = g.nvars
    return [i for i in range(n) if all(e[i] for e in g.terms)]


def _strip_variables(g: Poly) -> Poly:
    n = g.nvars
    mins = [min(e[i] for e in g.terms) for i in range(n)]
    if not any(mins):
        return g
    return Poly._raw(n, {tuple(x - m for x, m in zip(e, mins)): c for e, c in g.terms.items()})


def _find_splitting_factor(I: PolyIdeal):
    """A nonconstant f with f | g for some GB element g, g != f up to scalar."""
    gb = I.gb()
    n = I.ring.n
    for g in gb:
        vs = _variable_factors(g)
        if vs and (len(g.terms) > 1 or sum(next(iter(g.terms))) > 1):
            return ("variable", I.ring.var(vs[0]))
    for g in gb:
        for h in gb:
            if h is g or h.degree() >= g.degree() or h.is_constant():
                continue
            q = g.divexact(h)
            if q is not None and not q.is_constant():
                return ("gb-element", h)
    for g in gb:
        if len(g.terms) == 2:
            # binomial m1 - c m2 with a common monomial factor is caught above;
            # a pure-power binomial x^k - c y^k with k > 1 splits off x - c^(1/k) y when rational
            (e1, c1), (e2, c2) = sorted(g.terms.items())
            k = sum(e1)
            if k > 1 and sum(e2) == k and all(x % k == 0 for x in e1 + e2):
                r = -c2 / c1
                root = _rational_root(r, k)
                if root is not None:
                    base1 = tuple(x // k for x in e1)
                    base2 = tuple(x // k for x in e2)
                    return ("binomial", _mono(n, base1) - _mono(n, base2) * root)
    return None


def _rational_root(r: Fraction, k: int):
    from math import isqrt

    def iroot(x):
        if x < 0:
            return None
        y = round(x ** (1.0 / k))
        for z in (y - 1, y, y + 1):
            if z >= 0 and z ** k == x:
                return z
        return None

    sign = 1
    if r < 0:
        if k % 2 == 0:
            return None
        sign = -1
        r = -r
    a, b = iroot(r.numerator), iroot(r.denominator)
    if a is None or b is None:
        return None
    del isqrt
    return sign * Fraction(a, b)


@dataclass
class PrimeDecomposition:
    components: list  # PolyIdeal
    incomplete: bool
    log: list = field(default_factory=list)


def minimal_primes_desk(I: PolyIdeal, top_only: bool = False, max_pieces: int = 5000) -> PrimeDecomposition:
    """Candidate minimal primes of I by iterated splitting.

    A piece is split along a factor f of one of its Groebner basis elements, or
    along a coordinate variable, as V(I) = V(I : f^inf) u V(I + (f)).  Pieces
    on which every coordinate is a non-zero-divisor and no factor is visible are
    kept as prime candidates.  With ``top_only`` pieces of dimension below that
    of I are pruned early.
    """
    n = I.ring.n
    log: list = []
    top = dimension(I)
    leaves: list = []
    incomplete = False
    stack = [(I, frozenset())]  # frozenset: variables already known to be non-zero-divisors
    seen: list = []
    count = 0
    while stack:
        J, nzd = stack.pop()
        count += 1
        if count > max_pieces:
            raise BudgetError(f"more than {max_pieces} pieces while splitting")
        if J.is_unit():
            continue
        dim = dimension(J)
        if top_only and dim < top:
            continue
        if any(J.same_as(K) for K in seen):
            continue
        seen.append(J)
        fac = _find_splitting_factor(J)
        if fac is not None:
            kind, f = fac
            log.append(f"split on {kind} {I.ring.render(f)}")
            if kind == "variable":
                k = next(iter(f.variables()))
                sat = saturate_by_variable(J, k)
            else:
                sat = saturate(J, f)
            stack.append((J.plus([f]), nzd))
            if not sat.same_as(J):
                stack.append((sat, nzd))
            else:
                incomplete = True
                log.append("factor is a non-zero-divisor; splitting made no progress")
            continue
        # coordinate splitting: find a variable that is a zero divisor on some component
        split = False
        for k in range(n):
            if k in nzd:
                continue
            if J.contains(I.ring.var(k)):
                continue
            sat = saturate_by_variable(J, k)
            if sat.same_as(J):
                nzd = nzd | {k}
                continue
            log.append(f"split on coordinate {I.ring.names[k]}")
            stack.append((J.plus([I.ring.var(k)]), nzd))
            stack.append((sat, nzd | {k}))
            split = True
            break
        if not split:
            leaves.append(J)
    # minimality: drop pieces containing another piece (their varieties are smaller)
    leaves = [_radical_gens_cleanup(L) for L in leaves]
    uniq: list = []
    for L in leaves:
        if any(L.same_as(U) for U in uniq):
            continue
        uniq.append(L)
    minimal = [L for L in uniq if not any(U is not L and L.contains_ideal(U) for U in uniq)]
    if top_only:
        minimal = [L for L in minimal if dimension(L) == top]
    for L in minimal:
        if _looks_reducible(L):
            incomplete = True
            log.append(f"piece with visible factor left unsplit: {L.render()}")
    minimal.sort(key=lambda L: L.render())
    return PrimeDecomposition(minimal, incomplete, log)


def _radical_gens_cleanup(J: PolyIdeal) -> PolyIdeal:
    """Replace pure powers x^k in the basis by x (same radical), recomputing the basis."""
    gens = []
    changed = False
    for g in J.gb():
        if len(g.terms) == 1:
            e = next(iter(g.terms))
            if sum(e) > 1 and sum(1 for x in e if x) == 1:
                i = next(i for i, x in enumerate(e) if x)
                gens.append(J.ring.var(i))
                changed = True
                continue
        gens.append(g)
    if not changed:
        return J
    return _radical_gens_cleanup(PolyIdeal(J.ring, gens, J.budget))


def _looks_reducible(J: PolyIdeal) -> bool:
    for g in J.gb():
        if _variable_factors(g) and not (len(g.terms) == 1 and sum(next(iter(g.terms))) == 1):
            return True
    return False


# ---------------------------------------------------------------------------
# interpolation


def monomials_up_to(n: int, degree: int) -> list:
    out = []
    for k in range(degree + 1):
        for combo in combinations_with_replacement(range(n), k):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def vanishing_ideal_interpolate(points: Sequence[Sequence], degree_bound: int, ring: CoordRing) -> PolyIdeal:
    """All polynomials of degree <= degree_bound vanishing on the points (exact nullspace)."""
    if degree_bound < 1:
        raise ValueError("degree bound must be at least 1")
    n = ring.n
    monos = monomials_up_to(n, degree_bound)
    rows = []
    for p in points:
        p = [Fraction(x) for x in p]
        row = []
        for e in monos:
            v = Fraction(1)
            for x, k in zip(p, e):
                if k:
                    v *= x ** k
            row.append(v)
        rows.append(row)
    basis = linalg.nullspace(rows, len(monos)) if rows else [
        [Fraction(int(i == j)) for i in range(len(monos))] for j in range(len(monos))
    ]
    gens = [Poly(n, {e: c for e, c in zip(monos, v) if c}) for v in basis]
    return PolyIdeal(ring, gens)
