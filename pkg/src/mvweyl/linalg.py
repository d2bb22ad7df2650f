"""Exact dense linear algebra over Q on lists of lists of Fractions."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list of rows


def to_frac(m) -> Matrix:
    return [[Fraction(x) for x in row] for row in m]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def shape(m) -> tuple:
    return (len(m), len(m[0]) if m else 0)


def transpose(m) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b) -> Matrix:
    if not a:
        return []
    bt = transpose(b)
    if not bt:
        return [[] for _ in a]
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * col[k] for k, x in nz), Fraction(0)) for col in bt])
    return out


def matvec(a, v) -> list:
    return [sum((x * y for x, y in zip(row, v) if x), Fraction(0)) for row in a]


def add(a, b) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def sub(a, b) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def scale(c, a) -> Matrix:
    c = Fraction(c)
    return [[c * x for x in row] for row in a]


def is_zero(a) -> bool:
    return all(not x for row in a for x in row)


def trace(a) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def rref(m) -> tuple[Matrix, list]:
    """Reduced row echelon form and pivot columns."""
    a = [list(r) for r in to_frac(m)]
    rows, cols = shape(a)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def nullspace(m, ncols: int | None = None) -> list:
    """Basis of {v : m v = 0} as a list of vectors."""
    if not m:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    a, piv = rref(m)
    n = len(a[0])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -a[i][f]
        basis.append(v)
    return basis


def solve(a, b) -> Matrix | None:
    """Some X with a X = b (b a matrix), or None when inconsistent."""
    rows, n = shape(a)
    k = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(rows)]
    r, piv = rref(aug)
    if any(p >= n for p in piv):
        return None
    x = zeros(n, k)
    for i, p in enumerate(piv):
        for j in range(k):
            x[p][j] = r[i][n + j]
    return x


def inverse(a) -> Matrix:
    n = len(a)
    x = solve(a, identity(n))
    if x is None or rank(a) < n:
        raise ZeroDivisionError("singular matrix")
    return x


def column_space_basis(m) -> Matrix:
    """Columns of m forming a basis of its column space, returned as a matrix."""
    _, piv = rref(m)
    return [[row[c] for c in piv] for row in m]


def render(m) -> list:
    return [[str(x) for x in row] for row in m]


def equal(a: Sequence, b: Sequence) -> bool:
    return len(a) == len(b) and all(list(r) == list(s) for r, s in zip(a, b))
