from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvweyl import linalg, symgrp
from mvweyl.symgrp import GHOST, DomainError, StandardTableau
from strategies import compositions_, perms


def test_compositions_count_and_order():
    for n in range(1, 5):
        for d in range(0, 5):
            cs = symgrp.compositions(n, d)
            assert len(cs) == comb(n + d - 1, n - 1)
    assert symgrp.compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]


def test_raising_lowering_and_ghost():
    assert symgrp.e_tilde(1, (1, 1)) == (2, 0)
    assert symgrp.f_tilde(1, (1, 1)) == (0, 2)
    assert symgrp.e_tilde(1, (2, 0)) is GHOST
    assert symgrp.is_ghost(symgrp.f_tilde(1, (0, 2)))


def test_young_cosets_are_min_reps():
    comp = (2, 1)
    reps = symgrp.young_cosets(comp)
    assert len(reps) == 3
    S = symgrp.young_subgroup(comp)
    for w in reps:
        assert all(symgrp.length(w) <= symgrp.length(symgrp.compose(w, x)) for x in S)


def test_partitions_and_hooks():
    assert symgrp.partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [symgrp.hook_length_count(l) for l in symgrp.partitions(4)] == [1, 3, 2, 3, 1]
    for d in range(1, 7):
        for lam in symgrp.partitions(d):
            assert len(symgrp.standard_tableaux(lam)) == symgrp.hook_length_count(lam)
        assert sum(symgrp.hook_length_count(l) ** 2 for l in symgrp.partitions(d)) == factorial(d)


def test_transpose_and_dominance():
    assert symgrp.transpose_partition((3, 1)) == (2, 1, 1)
    assert symgrp.dominates((3,), (2, 1))
    assert not symgrp.dominates((2, 2), (3, 1))


def test_tableau_validation():
    with pytest.raises(DomainError):
        StandardTableau(((2, 1),))
    with pytest.raises(DomainError):
        StandardTableau(((1, 3), (2, 4), (5,), (6, 7)))
    assert str(StandardTableau(((1, 3), (2,)))) == "1,3/2"


def test_mn_character_table_d3():
    table = {lam: [symgrp.mn_character(lam, mu) for mu in symgrp.partitions(3)] for lam in symgrp.partitions(3)}
    # classes in the order (3), (2,1), (1,1,1)
    assert table == {(3,): [1, 1, 1], (2, 1): [-1, 0, 2], (1, 1, 1): [1, -1, 1]}


def test_character_orthogonality():
    for d in range(1, 7):
        parts = symgrp.partitions(d)
        for lam in parts:
            for nu in parts:
                s = sum(symgrp.class_size(mu) * symgrp.mn_character(lam, mu) * symgrp.mn_character(nu, mu) for mu in parts)
                assert s == (factorial(d) if lam == nu else 0)


def test_specht_modules_match_characters():
    for d in range(2, 6):
        for lam in symgrp.partitions(d):
            S = symgrp.specht_module(lam)
            assert S.dim == symgrp.hook_length_count(lam)
            assert symgrp.check_coxeter(S.generator_matrices, d) == []
            chi = symgrp.character_of(S.generator_matrices, d)
            assert all(chi[mu] == symgrp.mn_character(lam, mu) for mu in symgrp.partitions(d))


def test_jordan_and_spaltenstein():
    z = linalg.zeros(3, 3)
    assert symgrp.jordan_type(z) == (1, 1, 1)
    E13 = linalg.zeros(3, 3)
    E13[0][2] = Fraction(1)
    assert str(symgrp.spaltenstein_tableau(E13)) == "1,3/2"
    reg = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    assert symgrp.jordan_type(reg) == (3,)
    assert str(symgrp.spaltenstein_tableau(reg)) == "1,2,3"
    assert str(symgrp.spaltenstein_tableau(z)) == "1/2/3"
    with pytest.raises(DomainError):
        symgrp.jordan_type([[1, 0], [0, 0]])
    with pytest.raises(DomainError):
        symgrp.spaltenstein_tableau([[0, 0], [1, 0]])


# ---------------------------------------------------------------------------
# properties


@pytest.mark.property
@given(perms(5), perms(5), perms(5))
def test_group_axioms(u, v, w):
    c = symgrp.compose
    assert c(c(u, v), w) == c(u, c(v, w))
    assert c(u, symgrp.inverse_perm(u)) == symgrp.identity_perm(5)
    assert symgrp.sign(c(u, v)) == symgrp.sign(u) * symgrp.sign(v)


@pytest.mark.property
@given(perms(5))
def test_reduced_word(w):
    word = symgrp.reduced_word(w)
    assert len(word) == symgrp.length(w)
    x = symgrp.identity_perm(5)
    for a in word:
        x = symgrp.compose(x, symgrp.simple_reflection(a, 5))
    assert x == w


@pytest.mark.property
@given(compositions_(3, 4), perms(4))
def test_coset_key_is_class_invariant(comp, w):
    S = symgrp.young_subgroup(comp)
    key = symgrp.coset_key(w, comp)
    assert all(symgrp.coset_key(symgrp.compose(w, x), comp) == key for x in S)
    rep = symgrp.coset_min_rep(key)
    assert rep in symgrp.young_cosets(comp)


@pytest.mark.property
@given(compositions_(4, 4), st.integers(1, 3))
def test_raise_then_lower(comp, a):
    up = symgrp.e_tilde(a, comp)
    if not symgrp.is_ghost(up):
        assert symgrp.f_tilde(a, up) == comp


@pytest.mark.property
@given(perms(4), st.integers(0, 3))
def test_spaltenstein_shape_is_jordan_type(w, k):
    # a random strictly upper triangular 0/1 matrix built from a permutation pattern
    x = linalg.zeros(4, 4)
    for i in range(4):
        j = w[i]
        if j > i and (i + j + k) % 2 == 0:
            x[i][j] = Fraction(1)
    T = symgrp.spaltenstein_tableau(x)
    assert T.shape == symgrp.jordan_type(x)
