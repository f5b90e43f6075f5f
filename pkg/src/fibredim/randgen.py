"""Seeded random presentations for the cross-check harness and the test suite."""

from __future__ import annotations

import itertools
import random

from sympy import primefactors

from .poly import GREVLEX, Polynomial, normalize
from .presentation import Affine, BaseRing, Z

VAR_POOL = ("x", "y", "z", "u", "v", "w")


def random_polynomial(rng: random.Random, domain, nvars, *, max_degree=2, max_terms=3,
                      coeff_range=(-10, 10), order=GREVLEX) -> Polynomial:
    """Sparse random polynomial; never zero."""
    monos = [m for m in itertools.product(range(max_degree + 1), repeat=nvars)
             if sum(m) <= max_degree]
    lo, hi = coeff_range
    while True:
        k = rng.randint(1, max_terms)
        terms = [(rng.choice(monos), rng.randint(lo, hi)) for _ in range(k)]
        p = normalize(terms, domain, order, nvars)
        if p:
            return p


def random_algebra(rng: random.Random, base: BaseRing = Z, *, max_vars=3, max_relations=3,
                   max_degree=2, max_terms=3, coeff_range=(-10, 10), constant=None,
                   names=VAR_POOL) -> Affine:
    """Random affine algebra; ``constant`` (an int) is added as an extra relation."""
    n = rng.randint(1, max_vars)
    vars = tuple(names[:n])
    dom = base.coefficient_domain
    rels = [random_polynomial(rng, dom, n, max_degree=max_degree, max_terms=max_terms,
                              coeff_range=coeff_range)
            for _ in range(rng.randint(0, max_relations))]
    if constant is not None:
        if len(rels) >= max_relations and rels:
            rels[-1] = Polynomial.constant(constant, dom, n)
        else:
            rels.append(Polynomial.constant(constant, dom, n))
    return Affine(base, vars, tuple(rels))


def random_pair(rng: random.Random, *, char_range=(2, 36), coprime_rate=0.15, **opts):
    """Two algebras over Z, each with a nonzero constant relation, hence nonzero characteristic.

    Unless a coprime pair is drawn, the second constant shares a prime with the first.
    """
    n = rng.randint(*char_range)
    if rng.random() < coprime_rate:
        m = rng.randint(*char_range)
    else:
        m = rng.choice(primefactors(n)) * rng.randint(1, 6)
    a = random_algebra(rng, Z, constant=n, **opts)
    b = random_algebra(rng, Z, constant=m, **opts)
    return a, b


def random_ideal(rng: random.Random, domain, *, max_vars=3, max_gens=3, max_degree=3,
                 max_terms=3, coeff_range=(-10, 10), order=GREVLEX):
    n = rng.randint(1, max_vars)
    gens = [random_polynomial(rng, domain, n, max_degree=max_degree, max_terms=max_terms,
                              coeff_range=coeff_range, order=order)
            for _ in range(rng.randint(1, max_gens))]
    return gens, n


def random_combination(rng: random.Random, gens, *, max_degree=1, max_terms=2):
    """A random element sum(h_i * g_i) of the ideal generated by ``gens``."""
    g0 = gens[0]
    total = Polynomial.zero(g0.domain, g0.nvars, g0.order)
    for g in gens:
        h = random_polynomial(rng, g.domain, g.nvars, max_degree=max_degree,
                              max_terms=max_terms, coeff_range=(-5, 5), order=g.order)
        total = total + h * g
    return total
