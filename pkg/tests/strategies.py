"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from fibredim.domains import GF, QQ, ZZ
from fibredim.poly import GREVLEX, normalize

DOMAINS = [ZZ, QQ, GF(2), GF(3), GF(5)]


def monomials(nvars, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def raw_terms(nvars, max_terms=5, coeffs=st.integers(-20, 20)):
    return st.lists(st.tuples(monomials(nvars), coeffs), max_size=max_terms)


@st.composite
def polys(draw, domain, nvars, order=GREVLEX, max_terms=5):
    return normalize(draw(raw_terms(nvars, max_terms)), domain, order, nvars)


@st.composite
def poly_triples(draw):
    domain = draw(st.sampled_from(DOMAINS))
    n = draw(st.integers(0, 3))
    return tuple(draw(polys(domain, n)) for _ in range(3))
