from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvweyl.polyalg import (
    ContextError,
    HSpecializationError,
    Poly,
    RatFunc,
    SingularEulerClass,
    bgg_delta,
    euler_class,
    euler_ratfunc,
    h_poly,
    render_poly,
    render_ratfunc,
    root,
    simple_root_poly,
    weight_poly,
    weyl_act,
)
from strategies import nonzero_int, perms, polys

D = 3
N = D + 1


def e(i):
    return Poly.var(i - 1, N)


def test_render_is_canonical():
    p = e(1) ** 2 - e(1) * e(2) * 2 + h_poly(D)
    assert render_poly(p) == "e1^2 - 2*e1*e2 + h"
    assert render_poly(Poly.zero(N)) == "0"


def test_weight_and_root_polys():
    assert weight_poly(root(1, 3, D)) == e(1) - e(3)
    assert simple_root_poly(2, D) == e(2) - e(3)


def test_weyl_act_on_variables():
    s1 = (1, 0, 2)
    assert weyl_act(s1, e(1) - e(2)) == e(2) - e(1)
    assert weyl_act(s1, h_poly(D)) == h_poly(D)


def test_weyl_act_context_mismatch():
    with pytest.raises(ContextError):
        weyl_act((1, 0), e(1))


def test_euler_class_and_zero_weight():
    w = [root(1, 2, D), root(2, 3, D)]
    assert euler_class(w, False) == (e(1) - e(2)) * (e(2) - e(3))
    assert euler_class(w, True) == (e(1) - e(2) + h_poly(D)) * (e(2) - e(3) + h_poly(D))
    with pytest.raises(SingularEulerClass):
        euler_class([(0, 0, 0, 0)], False)
    # the h-shifted zero weight is fine: it is h itself
    assert euler_class([(0, 0, 0, 0)], True) == h_poly(D)


def test_bgg_delta_examples():
    assert bgg_delta(1, e(1)) == Poly.const(1, N)
    assert bgg_delta(1, e(3)).is_zero()
    assert bgg_delta(1, e(1) * e(1)) == e(1) + e(2)


def test_ratfunc_cancellation_and_render():
    a = RatFunc.from_poly(e(1) - e(2))
    b = RatFunc.from_poly(e(2) - e(3))
    r = (a * b) / a
    assert r == b
    assert r.is_polynomial()
    q = RatFunc.one(N) / (a * b)
    assert render_ratfunc(q) == "1/((e1 - e2)*(e2 - e3))"


def test_specialize_h_raises_on_vanishing_denominator():
    r = RatFunc.one(N) / RatFunc.from_poly(h_poly(D))
    with pytest.raises(HSpecializationError):
        r.specialize_h()
    ok = RatFunc.from_poly(e(1) + h_poly(D)) / RatFunc.from_poly(e(1) - e(2) + h_poly(D))
    assert ok.specialize_h() == RatFunc.from_poly(e(1)) / RatFunc.from_poly(e(1) - e(2))


def test_euler_ratfunc_matches_poly():
    w = [root(1, 2, D), root(1, 3, D), root(1, 2, D)]
    assert euler_ratfunc(w, True, D).to_poly() == euler_class(w, True)


def test_divexact():
    f = (e(1) - e(2)) * (e(1) + e(3))
    assert f.divexact(e(1) - e(2)) == e(1) + e(3)
    assert f.divexact(e(2) - e(3)) is None


# ---------------------------------------------------------------------------
# properties

P = polys(N, max_terms=3, max_deg=2)


@pytest.mark.property
@given(P, P, P)
def test_ring_axioms(f, g, k):
    assert (f + g) * k == f * k + g * k
    assert (f * g) * k == f * (g * k)
    assert f * g == g * f
    assert f - f == Poly.zero(N)


@pytest.mark.property
@given(perms(D), perms(D), P, P)
def test_weyl_action_is_ring_action(v, w, f, g):
    from mvweyl.symgrp import compose

    assert weyl_act(v, f * g) == weyl_act(v, f) * weyl_act(v, g)
    assert weyl_act(compose(v, w), f) == weyl_act(v, weyl_act(w, f))


@pytest.mark.property
@given(st.integers(1, D - 1), P, P)
def test_bgg_twisted_leibniz(a, f, g):
    s = [0, 1, 2]
    s[a - 1], s[a] = s[a], s[a - 1]
    lhs = bgg_delta(a, f * g)
    rhs = bgg_delta(a, f) * g + weyl_act(tuple(s), f) * bgg_delta(a, g)
    assert lhs == rhs
    assert bgg_delta(a, bgg_delta(a, f)).is_zero()


@pytest.mark.property
@given(P, P.filter(lambda p: not p.is_zero()), st.lists(nonzero_int, min_size=N, max_size=N))
def test_ratfunc_field_ops_match_evaluation(f, g, pt):
    pt = [Fraction(x) for x in pt]
    if g.evaluate(pt) == 0:
        return
    F, G = RatFunc.from_poly(f), RatFunc.from_poly(g)
    q = F / G
    assert q.evaluate(pt) == f.evaluate(pt) / g.evaluate(pt)
    assert (q * G) == F
    assert (q + F).evaluate(pt) == f.evaluate(pt) / g.evaluate(pt) + f.evaluate(pt)


@pytest.mark.property
@given(P, P)
def test_divexact_recovers_factor(f, g):
    if g.is_zero():
        return
    assert (f * g).divexact(g) == f
