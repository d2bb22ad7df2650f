from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvweyl import linalg, schurweyl, symgrp
from mvweyl.symgrp import DomainError
from strategies import compositions_, partitions_of, small_int


def _unit(k, i):
    v = [Fraction(0)] * k
    v[i] = Fraction(1)
    return v


def test_psi_two_one_on_regular_basis_vector():
    tower = schurweyl.regular_tower(3)
    perms = symgrp.all_perms(3)
    s1 = tower.module.generators[1]
    for i in range(len(perms)):
        v = _unit(6, i)
        want = [(x + y) / 2 for x, y in zip(v, linalg.matvec(s1, v))]
        assert schurweyl.psi(tower, (2, 1), v) == want


def test_psi_fixes_invariants_and_full_symmetrization():
    tower = schurweyl.regular_tower(3)
    for comp in tower.compositions():
        B = tower.bases[comp]
        for j in range(len(B[0])):
            col = [row[j] for row in B]
            assert schurweyl.psi(tower, comp, col) == col
    # full symmetrization of the regular module lands on the one-dimensional trivial line
    images = [schurweyl.psi(tower, (3, 0, 0), _unit(6, i)) for i in range(6)]
    assert all(x == Fraction(1, 6) for v in images for x in v)


def test_regular_d2_E1_coefficient():
    tower = schurweyl.regular_tower(2)
    M = schurweyl.chev_E(tower, 1, (1, 1))
    # two fixed points in the source, one in the target, coefficient d_2 = 1
    assert M == [[Fraction(1), Fraction(1)]]


def test_ghost_raises():
    tower = schurweyl.regular_tower(2)
    with pytest.raises(DomainError):
        schurweyl.chev_E(tower, 1, (2, 0))
    with pytest.raises(DomainError):
        schurweyl.chev_F(tower, 1, (0, 2))
    with pytest.raises(DomainError):
        schurweyl.dual_chev(tower, 1, (2, 0), "E")


def test_commutator_on_weight_space():
    tower = schurweyl.regular_tower(3)
    E = schurweyl.tower_generator(tower, 1, "E")
    F = schurweyl.tower_generator(tower, 1, "F")
    comm = E @ F - F @ E
    for comp in tower.compositions():
        want = linalg.scale(comp[0] - comp[1], linalg.identity(tower.dim(comp)))
        assert comm.block(comp, comp) == want


@pytest.mark.parametrize("d", [2, 3])
def test_regular_tower_relations(d):
    tower = schurweyl.regular_tower(d)
    assert tower.invariance_failures() == []
    assert schurweyl.tower_relation_failures(tower) == []
    assert schurweyl.tower_relation_failures(tower, dual=True) == []


@pytest.mark.parametrize("d", [2, 3, 4])
def test_specht_towers(d):
    for lam in symgrp.partitions(d):
        tower = schurweyl.build_tower(schurweyl.specht_model(lam), d)
        assert schurweyl.tower_relation_failures(tower) == []
        Ts = {a: schurweyl.weight_zero_T(tower, a) for a in range(1, d)}
        for a, T in Ts.items():
            assert linalg.matmul(T, T) == linalg.identity(len(T))
            assert schurweyl.weight_zero_T_full(tower, a) == T
        assert symgrp.check_coxeter(Ts, d) == []


def test_regular_d2_T_is_minus_s1():
    tower = schurweyl.regular_tower(2)
    T = schurweyl.weight_zero_T(tower, 1)
    assert T == linalg.scale(-1, tower.module.generators[1])


def test_weight_zero_needs_n_equal_d():
    tower = schurweyl.regular_tower(2, n=3)
    with pytest.raises(DomainError):
        schurweyl.weight_zero_T(tower, 1)


def test_dual_of_dual_is_rescaled_original():
    tower = schurweyl.regular_tower(3)
    for a in (1, 2):
        for comp in tower.compositions():
            tgt = symgrp.e_tilde(a, comp)
            if symgrp.is_ghost(tgt):
                continue
            back = linalg.transpose(schurweyl.dual_chev(tower, a, tgt, "F"))
            c = Fraction(tgt[a - 1], tgt[a] + 1)
            assert back == linalg.scale(c, schurweyl.chev_E(tower, a, comp))


# ---------------------------------------------------------------------------
# properties


@pytest.mark.property
@given(st.integers(2, 4).flatmap(lambda d: st.tuples(partitions_of(d), st.integers(2, 3))))
def test_tower_spaces_are_invariant(args):
    lam, n = args
    tower = schurweyl.build_tower(schurweyl.specht_model(lam), n)
    assert tower.invariance_failures() == []


@pytest.mark.property
@given(compositions_(3, 3), st.lists(small_int, min_size=6, max_size=6))
def test_psi_idempotent(comp, v):
    tower = schurweyl.regular_tower(3)
    once = schurweyl.psi(tower, comp, v)
    assert schurweyl.psi(tower, comp, once) == once


@pytest.mark.property
@given(
    st.sampled_from([c for c in symgrp.compositions(3, 3) if not symgrp.is_ghost(symgrp.e_tilde(1, c))]),
    st.lists(small_int, min_size=6, max_size=6),
    st.lists(small_int, min_size=6, max_size=6),
)
def test_dual_pairing(comp, phi, v):
    # <E^vee phi, v> = d_{a+1}/(d_a+1) <phi, F v>
    tower = schurweyl.regular_tower(3)
    a = 1
    tgt = symgrp.e_tilde(a, comp)
    phi = [Fraction(x) for x in phi[: tower.dim(comp)]]
    v = [Fraction(x) for x in v[: tower.dim(tgt)]]
    lhs = sum(x * y for x, y in zip(linalg.matvec(schurweyl.dual_chev(tower, a, comp, "E"), phi), v))
    Fv = linalg.matvec(schurweyl.chev_F(tower, a, tgt), v)
    rhs = Fraction(comp[a], comp[a - 1] + 1) * sum(x * y for x, y in zip(phi, Fv))
    assert lhs == rhs
