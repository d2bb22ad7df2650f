"""Symmetric-group combinatorics: permutations, compositions, Young subgroups,
tableaux, Specht modules and characters, Jordan and Spaltenstein data.

Permutations are 0-based one-line tuples ``w`` with ``w[i]`` the image of ``i``;
products compose right to left, ``(v*w)(i) = v(w(i))``.  Simple reflections are
indexed 1-based: ``s_a`` swaps ``a-1`` and ``a`` in 0-based terms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Sequence

from . import linalg


class DomainError(ValueError):
    """Input outside the domain of an operation."""


# ---------------------------------------------------------------------------
# permutations


def identity_perm(d: int) -> tuple:
    return tuple(range(d))


def compose(v: Sequence[int], w: Sequence[int]) -> tuple:
    return tuple(v[i] for i in w)


def inverse_perm(w: Sequence[int]) -> tuple:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x] = i
    return tuple(inv)


def simple_reflection(a: int, d: int) -> tuple:
    if not 1 <= a <= d - 1:
        raise DomainError(f"s_{a} does not exist in S_{d}")
    w = list(range(d))
    w[a - 1], w[a] = a, a - 1
    return tuple(w)


def all_perms(d: int) -> list:
    return [tuple(p) for p in permutations(range(d))]


def length(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def sign(w: Sequence[int]) -> int:
    return -1 if length(w) % 2 else 1


def reduced_word(w: Sequence[int]) -> list:
    """Indices a_1..a_k with w = s_{a_1} ... s_{a_k} (reduced)."""
    w = list(w)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                changed = True
    return word[::-1]


def cycle_type(w: Sequence[int]) -> tuple:
    seen = [False] * len(w)
    parts = []
    for i in range(len(w)):
        if not seen[i]:
            n = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = w[j]
                n += 1
            parts.append(n)
    return tuple(sorted(parts, reverse=True))


def class_representative(mu: Sequence[int]) -> tuple:
    """A permutation of cycle type mu made of consecutive cycles."""
    w = []
    start = 0
    for m in mu:
        w.extend(range(start + 1, start + m))
        w.append(start)
        start += m
    return tuple(w)


def class_size(mu: Sequence[int]) -> int:
    d = sum(mu)
    denom = 1
    for k in set(mu):
        m = list(mu).count(k)
        denom *= k ** m * factorial(m)
    return factorial(d) // denom


# ---------------------------------------------------------------------------
# compositions


class _Ghost:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "GHOST"

    def __reduce__(self):
        return (_Ghost, ())


GHOST = _Ghost()


def is_ghost(c) -> bool:
    return c is GHOST


def compositions(n: int, d: int) -> list:
    """All length-n compositions of d, lexicographically descending."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in compositions(n - 1, d - first):
            out.append((first,) + rest)
    return out


def e_tilde(a: int, comp):
    """Move one unit from slot a+1 to slot a (1-based); GHOST if slot a+1 is empty."""
    if is_ghost(comp):
        raise DomainError("e_tilde of the ghost composition")
    if not 1 <= a < len(comp):
        raise DomainError(f"index {a} out of range for {comp}")
    if comp[a] == 0:
        return GHOST
    c = list(comp)
    c[a - 1] += 1
    c[a] -= 1
    return tuple(c)


def f_tilde(a: int, comp):
    """Move one unit from slot a to slot a+1 (1-based); GHOST if slot a is empty."""
    if is_ghost(comp):
        raise DomainError("f_tilde of the ghost composition")
    if not 1 <= a < len(comp):
        raise DomainError(f"index {a} out of range for {comp}")
    if comp[a - 1] == 0:
        return GHOST
    c = list(comp)
    c[a - 1] -= 1
    c[a] += 1
    return tuple(c)


def blocks_of(comp: Sequence[int]) -> tuple:
    """Block index of each position 0..d-1."""
    out = []
    for b, k in enumerate(comp):
        out.extend([b] * k)
    return tuple(out)


def block_ranges(comp: Sequence[int]) -> list:
    out = []
    start = 0
    for k in comp:
        out.append(range(start, start + k))
        start += k
    return out


def young_order(comp: Sequence[int]) -> int:
    return prod(factorial(k) for k in comp)


def young_subgroup(comp: Sequence[int]) -> list:
    """All elements of S_comp (permuting positions within each block)."""
    d = sum(comp)
    elems = [list(range(d))]
    for r in block_ranges(comp):
        if len(r) < 2:
            continue
        new = []
        for e in elems:
            for p in permutations(r):
                f = list(e)
                for i, j in zip(r, p):
                    f[i] = j
                new.append(f)
        elems = new
    return [tuple(e) for e in elems]


def young_generators(comp: Sequence[int]) -> list:
    """Simple reflections s_a lying in S_comp."""
    d = sum(comp)
    bl = blocks_of(comp)
    return [a for a in range(1, d) if bl[a - 1] == bl[a]]


def coset_key(w: Sequence[int], comp: Sequence[int]) -> tuple:
    """Canonical label of the coset w S_comp: the sorted values of w on each block."""
    return tuple(tuple(sorted(w[i] for i in r)) for r in block_ranges(comp))


def coset_min_rep(key: tuple) -> tuple:
    return tuple(x for block in key for x in block)


def young_cosets(comp: Sequence[int]) -> list:
    """Minimal-length representatives of S_d / S_comp, in lexicographic order."""
    if is_ghost(comp):
        raise DomainError("cosets of the ghost composition")
    d = sum(comp)
    reps = set()
    for w in permutations(range(d)):
        reps.add(coset_min_rep(coset_key(w, comp)))
    return sorted(reps)


def common_refinement(c1: Sequence[int], c2: Sequence[int]) -> tuple:
    """Composition whose Young subgroup is S_c1 intersected with S_c2 (zero parts dropped)."""
    if sum(c1) != sum(c2):
        raise DomainError(f"{c1} and {c2} are compositions of different integers")
    cuts = set()
    for c in (c1, c2):
        s = 0
        for k in c:
            s += k
            cuts.add(s)
    cuts.add(0)
    pts = sorted(cuts)
    return tuple(b - a for a, b in zip(pts, pts[1:]))


# ---------------------------------------------------------------------------
# partitions and tableaux


def partitions(d: int, max_part: int | None = None) -> list:
    """Partitions of d in reverse lexicographic order, (d) first."""
    if max_part is None:
        max_part = d
    if d == 0:
        return [()]
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            out.append((first,) + rest)
    return out


def is_partition(lam: Sequence[int]) -> bool:
    return all(x > 0 for x in lam) and all(a >= b for a, b in zip(lam, lam[1:]))


def transpose_partition(lam: Sequence[int]) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > k) for k in range(lam[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam >= mu in dominance order."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def hook_length_count(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape lam by the hook length formula."""
    lt = transpose_partition(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (lt[j] - i - 1) + 1
    return factorial(sum(lam)) // hooks


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        sh = tuple(len(r) for r in rows)
        if not is_partition(sh):
            raise DomainError(f"row lengths {sh} are not a partition")
        flat = sorted(x for r in rows for x in r)
        if flat != list(range(1, len(flat) + 1)):
            raise DomainError(f"entries of {rows} are not 1..n")
        for r in rows:
            if any(x >= y for x, y in zip(r, r[1:])):
                raise DomainError(f"row {r} is not increasing")
        for i in range(1, len(rows)):
            for j, x in enumerate(rows[i]):
                if rows[i - 1][j] >= x:
                    raise DomainError(f"column {j} is not increasing in {rows}")

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def columns(self) -> list:
        sh = self.shape
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(sh[0])] if sh else []

    def position(self, k: int) -> tuple:
        for i, r in enumerate(self.rows):
            if k in r:
                return i, r.index(k)
        raise KeyError(k)

    def to_json(self) -> list:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "/".join(",".join(map(str, r)) for r in self.rows)


def standard_tableaux(lam: Sequence[int]) -> list:
    """All standard tableaux of shape lam, ordered by their reading words."""
    lam = tuple(lam)
    d = sum(lam)
    out = []

    def rec(rows, k):
        if k > d:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(rows, k + 1)
                rows[i].pop()

    rec([[] for _ in lam], 1)
    out.sort(key=lambda t: [x for r in t.rows for x in r])
    return out


def tableau_from_chain(chain: Sequence[Sequence[int]]) -> StandardTableau:
    """Tableau whose entry k sits in the box added from chain[k-1] to chain[k]."""
    rows: list = []
    prev: tuple = ()
    for k, sh in enumerate(chain[1:], start=1):
        sh = tuple(sh)
        diff = [i for i in range(len(sh)) if sh[i] != (prev[i] if i < len(prev) else 0)]
        if len(diff) != 1 or sum(sh) != sum(prev) + 1:
            raise DomainError(f"shapes {prev} -> {sh} do not differ by one box")
        i = diff[0]
        while len(rows) <= i:
            rows.append([])
        rows[i].append(k)
        prev = sh
    return StandardTableau(tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# characters


@lru_cache(maxsize=None)
def mn_character(lam: tuple, mu: tuple) -> int:
    """chi^lam on the class of cycle type mu, by Murnaghan-Nakayama on beta-sets."""
    lam = tuple(x for x in lam if x)
    mu = tuple(x for x in mu if x)
    if sum(lam) != sum(mu):
        raise DomainError(f"{lam} and {mu} are partitions of different integers")
    if not mu:
        return 1
    r = mu[0]
    rest = mu[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    bset = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in bset:
            continue
        height = sum(1 for x in beta if t < x < b)
        nb = sorted((bset - {b}) | {t}, reverse=True)
        new = tuple(nb[i] - (k - 1 - i) for i in range(k))
        total += (-1) ** height * mn_character(new, rest)
    return total


def character_of(matrices: dict, d: int) -> dict:
    """Character table row of a representation given by generator matrices {a: M}."""
    out = {}
    for mu in partitions(d):
        w = class_representative(mu)
        out[mu] = linalg.trace(rep_matrix(matrices, w, d))
    return out


def rep_matrix(matrices: dict, w: Sequence[int], d: int):
    """Image of w under the representation with rho(s_a) = matrices[a]."""
    n = len(next(iter(matrices.values()))) if matrices else 1
    m = linalg.identity(n)
    for a in reduced_word(w):
        m = linalg.matmul(m, matrices[a])
    return m


def check_coxeter(matrices: dict, d: int) -> list:
    """Names of the Coxeter relations that fail for the generator matrices."""
    bad = []
    if not matrices:
        return bad
    n = len(next(iter(matrices.values())))
    one = linalg.identity(n)
    for a in range(1, d):
        s = matrices[a]
        if linalg.matmul(s, s) != one:
            bad.append(f"s{a}^2")
        for b in range(a + 1, d):
            t = matrices[b]
            if b == a + 1:
                lhs = linalg.matmul(linalg.matmul(s, t), s)
                rhs = linalg.matmul(linalg.matmul(t, s), t)
            else:
                lhs = linalg.matmul(s, t)
                rhs = linalg.matmul(t, s)
            if lhs != rhs:
                bad.append(f"braid({a},{b})")
    return bad


# ---------------------------------------------------------------------------
# Specht modules


@dataclass(frozen=True)
class SpechtModule:
    shape: tuple
    basis: tuple  # standard tableaux indexing the basis
    generator_matrices: dict  # a -> matrix, columns are images of basis vectors

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def d(self) -> int:
        return sum(self.shape)

    def matrix(self, w: Sequence[int]):
        return rep_matrix(self.generator_matrices, w, self.d)


def _tabloid(rows) -> tuple:
    return tuple(tuple(sorted(r)) for r in rows)


def _polytabloid(rows: Sequence[Sequence[int]]) -> dict:
    """Tabloid expansion of the polytabloid of a (not necessarily standard) filling."""
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    cols = [[i for i in range(len(rows)) if len(rows[i]) > j] for j in range(ncols)]
    expansions = [((), 1)]
    for j, col in enumerate(cols):
        new = []
        for assignment, sg in expansions:
            for p in permutations(range(len(col))):
                new.append((assignment + (p,), sg * sign(p)))
        expansions = new
    terms = {}
    for assignment, sg in expansions:
        filled = [list(r) for r in rows]
        for j, p in enumerate(assignment):
            col = cols[j]
            vals = [rows[i][j] for i in col]
            for idx, i in enumerate(col):
                filled[i][j] = vals[p[idx]]
        t = _tabloid(filled)
        terms[t] = terms.get(t, 0) + sg
    return {t: c for t, c in terms.items() if c}


@lru_cache(maxsize=None)
def specht_module(lam: tuple) -> SpechtModule:
    """Young's natural representation on standard polytabloids."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise DomainError(f"{lam} is not a partition")
    d = sum(lam)
    syt = standard_tableaux(lam)
    polys = [_polytabloid(t.rows) for t in syt]
    index = sorted({k for p in polys for k in p})
    pos = {k: i for i, k in enumerate(index)}
    basis_mat = linalg.zeros(len(index), len(syt))
    for j, p in enumerate(polys):
        for k, c in p.items():
            basis_mat[pos[k]][j] = Fraction(c)
    mats = {}
    for a in range(1, d):
        images = linalg.zeros(len(index), len(syt))
        for j, t in enumerate(syt):
            swapped = [[a + 1 if x == a else a if x == a + 1 else x for x in r] for r in t.rows]
            for k, c in _polytabloid(swapped).items():
                if k not in pos:
                    raise ArithmeticError("tabloid outside the standard span")
                images[pos[k]][j] = Fraction(c)
        coords = linalg.solve(basis_mat, images)
        if coords is None:
            raise ArithmeticError("straightening failed")
        mats[a] = coords
    return SpechtModule(lam, tuple(syt), mats)


# ---------------------------------------------------------------------------
# Jordan and Spaltenstein data


def _is_nilpotent(x) -> bool:
    n = len(x)
    p = linalg.to_frac(x)
    for _ in range(n):
        p = linalg.matmul(p, x)
    return linalg.is_zero(p) if n else True


def jordan_type(x) -> tuple:
    """Partition of Jordan block sizes of a nilpotent matrix."""
    x = linalg.to_frac(x)
    n = len(x)
    if n == 0:
        return ()
    ranks = [n]
    p = linalg.identity(n)
    for _ in range(n):
        p = linalg.matmul(p, x)
        ranks.append(linalg.rank(p))
        if ranks[-1] == 0:
            break
    if ranks[-1] != 0:
        raise DomainError("matrix is not nilpotent")
    lt = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    lt = tuple(v for v in lt if v)
    return transpose_partition(lt)


def is_strictly_upper(x) -> bool:
    return all(not x[i][j] for i in range(len(x)) for j in range(i + 1))


def spaltenstein_tableau(x) -> StandardTableau:
    """Tableau recording the Jordan types of x on span(v_1..v_k), k = 1..d."""
    if not is_strictly_upper(x):
        raise DomainError("matrix is not strictly upper triangular")
    n = len(x)
    chain = [()]
    for k in range(1, n + 1):
        sub = [row[:k] for row in x[:k]]
        chain.append(jordan_type(sub))
    return tableau_from_chain(chain)
