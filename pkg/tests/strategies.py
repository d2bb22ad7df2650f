"""Hypothesis strategies shared by the property suites."""
from fractions import Fraction

from hypothesis import strategies as st

from mvweyl.polyalg import Poly

small_int = st.integers(min_value=-4, max_value=4)
nonzero_int = small_int.filter(bool)


def perms(d):
    return st.permutations(list(range(d))).map(tuple)


@st.composite
def polys(draw, nvars, max_terms=4, max_deg=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        terms[e] = terms.get(e, 0) + draw(nonzero_int)
    return Poly(nvars, terms)


@st.composite
def exponents(draw, nvars, max_deg=3):
    return tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))


@st.composite
def partitions_of(draw, d):
    from mvweyl.symgrp import partitions

    return draw(st.sampled_from(partitions(d)))


@st.composite
def compositions_(draw, n, d):
    from mvweyl.symgrp import compositions

    return draw(st.sampled_from(compositions(n, d)))


fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
