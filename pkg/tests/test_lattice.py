import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from mvweyl import linalg, orbital, symgrp
from mvweyl.lattice import (
    LatticeType,
    LaurentMatrix,
    determinant,
    lusztig_embed,
    mv_type_check,
    render_laurent,
    smith_type,
    smith_type_minors,
    valuation,
)
from mvweyl.symgrp import DomainError
from strategies import partitions_of


def test_embed_zero_and_E12():
    Z = lusztig_embed(linalg.zeros(3, 3))
    assert Z.render() == [["t^(-1)", "0", "0"], ["0", "t^(-1)", "0"], ["0", "0", "t^(-1)"]]
    E12 = [[0, 1], [0, 0]]
    assert lusztig_embed(E12).render() == [["t^(-1)", "t^(-2)"], ["0", "t^(-1)"]]


def test_embed_rejects_non_nilpotent():
    with pytest.raises(DomainError):
        lusztig_embed([[1, 0], [0, 0]])


def test_types_of_extremes():
    d = 3
    assert smith_type(lusztig_embed(linalg.zeros(d, d))).exponents == (-1, -1, -1)
    assert smith_type(lusztig_embed(linalg.zeros(d, d))).partition == (1, 1, 1)
    reg = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    ty = smith_type(lusztig_embed(reg))
    assert ty.exponents == (0, 0, -3)
    assert ty.partition == (3,)


def test_diagonal_smith_type():
    M = LaurentMatrix([[{2: Fraction(1)}, {}, {}], [{}, {-1: Fraction(3)}, {}], [{}, {}, {0: Fraction(-1)}]])
    assert smith_type(M).exponents == (2, 0, -1)


def test_singular_matrix_rejected():
    M = LaurentMatrix([[{0: Fraction(1)}, {0: Fraction(1)}], [{0: Fraction(1)}, {0: Fraction(1)}]])
    with pytest.raises(DomainError):
        smith_type(M)
    with pytest.raises(DomainError):
        smith_type_minors(M)


def test_render_laurent():
    assert render_laurent({}) == "0"
    assert render_laurent({-2: Fraction(1), 0: Fraction(-3), 1: Fraction(1)}) == "t - 3 + t^(-2)"


@pytest.mark.parametrize("d", [2, 3, 4])
def test_mv_type_check_all_partitions(d):
    for lam in symgrp.partitions(d):
        rep = mv_type_check(lam, samples=20, seed=d)
        assert rep["verdict"] == "PASS", rep["failures"]


def test_boundary_strata_listed():
    rep = mv_type_check((3,), samples=5, seed=0)
    assert rep["boundary_strata"] == [[2, 1], [1, 1, 1]]
    assert mv_type_check((1, 1, 1), samples=5)["boundary_strata"] == []


# ---------------------------------------------------------------------------
# properties


laurent = st.dictionaries(st.integers(-3, 2), st.integers(-3, 3).filter(bool).map(Fraction), max_size=2)


@st.composite
def laurent_matrices(draw):
    n = draw(st.integers(1, 3))
    return LaurentMatrix([[draw(laurent) for _ in range(n)] for _ in range(n)])


@pytest.mark.property
@given(laurent_matrices())
def test_smith_matches_determinantal_divisors(M):
    assume(determinant(M))
    got = smith_type(M)
    assert got == smith_type_minors(M)
    assert got.det_valuation == valuation(determinant(M))


poly_entry = st.dictionaries(st.integers(0, 2), st.integers(-3, 3).filter(bool).map(Fraction), max_size=2)


@st.composite
def unimodular(draw, n):
    """Product of a unit upper and a unit lower triangular matrix over Q[t]."""
    U = [[{0: Fraction(1)} if i == j else (draw(poly_entry) if j > i else {}) for j in range(n)] for i in range(n)]
    L = [[{0: Fraction(1)} if i == j else (draw(poly_entry) if j < i else {}) for j in range(n)] for i in range(n)]
    return LaurentMatrix(U).matmul(LaurentMatrix(L))


@pytest.mark.property
@given(st.integers(2, 3).flatmap(lambda d: st.tuples(partitions_of(d), unimodular(d), unimodular(d), st.integers(0, 2**32))))
def test_type_invariant_under_unimodular_multiplication(args):
    lam, A, B, seed = args
    x = orbital.sample_orbit(lam, random.Random(seed))
    M = lusztig_embed(x)
    assert smith_type(A.matmul(M).matmul(B)) == smith_type(M)


@pytest.mark.property
@given(st.integers(2, 4).flatmap(partitions_of), st.integers(0, 2**32))
def test_type_depends_only_on_jordan_type(lam, seed):
    rng = random.Random(seed)
    x = orbital.sample_orbit(lam, rng)
    b, binv = orbital.random_borel(len(x), rng)
    y = linalg.matmul(linalg.matmul(b, x), binv)
    tx, ty = smith_type(lusztig_embed(x)), smith_type(lusztig_embed(y))
    assert tx == ty
    assert tx.partition == symgrp.jordan_type(x) == lam
    assert tx.det_valuation == -len(x)


def test_lattice_type_json():
    assert LatticeType((0, -1, -2)).to_json() == {"exponents": [0, -1, -2], "partition": [2, 1]}
