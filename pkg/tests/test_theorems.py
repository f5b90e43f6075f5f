import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibredim.dimension import EMPTY, Dim
from fibredim.dsl import parse_algebra, parse_polynomial
from fibredim.errors import (BaseMismatchError, NotATripletError, NotZeroDimensionalError,
                             UnsupportedConfigurationError)
from fibredim.presentation import Fp, Z, boolean_atoms, tensor_presentation
from fibredim.randgen import random_algebra, random_pair
from fibredim.spectra import (GENERIC, EffectiveSpectrum, PrimeWitness, closed, dim_at,
                              effective_dim, effective_spectrum, fibre_at, fibre_dim)
from fibredim.theorems import (PATH_BOOLEAN, DValueRequest, boolean_dim, cross_check, d_value,
                               dim_tensor, dim_tensor_at, dim_tensor_at_witnessed,
                               dim_tensor_auto, dim_tensor_zero_dim,
                               effective_spectrum_tensor, is_triplet)


def alg(kind, vars, rels=(), n=None):
    base = {"kind": kind} if n is None else {"kind": kind, "n": n}
    return parse_algebra(json.dumps({"base": base, "vars": list(vars), "relations": list(rels)}))


def ideal(fr, *gens):
    f = fr.algebra
    return PrimeWitness(tuple(parse_polynomial(g, f.vars, f.base.coefficient_domain)
                              for g in gens))


# -- D(s, d, fibre) --------------------------------------------------------------

def test_d_value_field():
    fr = fibre_at(alg("Fp", [], n=3), closed(3))
    for s, d in ((0, 0), (3, 1), (5, 5)):
        assert d_value(DValueRequest(s, d, fr)) == Dim(d)
        assert d_value(DValueRequest(s, d, fr, witnesses=(ideal(fr),),
                                     components=(ideal(fr),))) == Dim(d)


def test_d_value_reducible_curve():
    fr = fibre_at(alg("Fp", ["x", "y"], ["x*y"], n=2), closed(2))
    comps = (ideal(fr, "x"), ideal(fr, "y"))
    assert d_value(DValueRequest(3, 1, fr)) == Dim(2)
    ws = comps + (ideal(fr, "x", "y"), ideal(fr, "x", "y - 1"))
    assert d_value(DValueRequest(3, 1, fr, witnesses=ws, components=comps)) == Dim(2)


def test_d_value_line_with_s_zero():
    fr = fibre_at(alg("Q", ["x"]), GENERIC)
    comps = (ideal(fr),)
    assert d_value(DValueRequest(0, 0, fr)) == Dim(1)
    assert d_value(DValueRequest(0, 0, fr, witnesses=(ideal(fr),), components=comps)) == Dim(0)
    assert d_value(DValueRequest(0, 0, fr, witnesses=(ideal(fr, "x"),),
                                 components=comps)) == Dim(1)


def test_d_value_rejects_d_above_s():
    fr = fibre_at(alg("Q", ["x"]), GENERIC)
    with pytest.raises(ValueError):
        DValueRequest(1, 2, fr)
    with pytest.raises(ValueError):
        d_value(DValueRequest(1, 0, fibre_at(alg("Q", ["x"], ["1"]), GENERIC)))


# -- triplets and spectra -------------------------------------------------------------

def test_is_triplet():
    assert not is_triplet(alg("Z", ["x"], ["3"]), alg("Z", ["y"], ["2"]))
    assert is_triplet(alg("Z", ["x"], ["12"]), alg("Z", ["y"], ["18"]))
    assert is_triplet(alg("Z", ["x"]), alg("Z", ["x"]))
    with pytest.raises(BaseMismatchError):
        is_triplet(alg("Z", ["x"]), alg("Q", ["x"]))


def test_tensor_spectra():
    A, B = alg("Zmod", ["x"], n=12), alg("Zmod", ["y"], n=18)
    assert effective_spectrum_tensor(A, B) == EffectiveSpectrum(False, {2, 3})
    F = alg("Fp", ["x"], n=5)
    assert effective_spectrum_tensor(F, F) == EffectiveSpectrum(False, {5})
    C, D = alg("Z", ["x"], ["2*x - 1"]), alg("Z", [], ["2"])
    assert effective_spectrum_tensor(C, D).is_empty
    assert effective_spectrum_tensor(C, alg("Z", ["y"])) == EffectiveSpectrum(True, {2}, True)


# -- tensor dimension ----------------------------------------------------------------

def test_dim_tensor_at():
    A, B = alg("Zmod", ["x"], n=4), alg("Zmod", ["y"], n=6)
    assert dim_tensor_at(A, B, closed(2)) == Dim(2)
    assert dim_tensor_at(A, alg("Zmod", ["y"], n=3), closed(2)) == EMPTY
    assert dim_tensor_at(boolean_atoms(2), alg("Z", ["y"]), closed(2)) == Dim(1)
    assert dim_tensor_at(alg("Z", ["x"]), alg("Z", ["y"], ["3*y - 1"]), closed(3)) == EMPTY


def test_dim_tensor_examples():
    A, B = alg("Zmod", ["x"], n=12), alg("Zmod", ["y"], ["y^2"], n=18)
    r = dim_tensor(A, B)
    assert r.formula == Dim(1) and r.agreement
    assert [(p.point.prime, p.formula) for p in r.points] == [(2, Dim(1)), (3, Dim(1))]
    r = dim_tensor(alg("Z", ["x"], ["3"]), alg("Z", ["y"], ["2"]))
    assert r.formula == EMPTY and r.oracle == EMPTY and r.agreement
    r = dim_tensor(alg("Fp", ["x", "y"], n=5), alg("Fp", ["z"], n=5))
    assert r.formula == Dim(3) and r.agreement


def test_dim_tensor_unsupported():
    with pytest.raises(UnsupportedConfigurationError):
        dim_tensor(alg("Z", ["x"]), alg("Z", ["y"]))
    # one nonzero characteristic suffices
    r = dim_tensor(alg("Z", ["x"]), alg("Z", ["y"], ["y^2", "6"]))
    assert r.formula == Dim(1) and r.agreement


def test_zero_dimensional_factor():
    r = dim_tensor_zero_dim(alg("Zmod", ["x"], ["x^2"], n=8), alg("Z", ["y"]))
    assert r.formula == Dim(1) and r.agreement
    r = dim_tensor_zero_dim(alg("Fp", [], n=3), alg("Fp", ["x", "y"], n=3))
    assert r.formula == Dim(2) and r.agreement
    r = dim_tensor_zero_dim(boolean_atoms(4), alg("Z", []))
    assert r.formula == Dim(0) and r.agreement
    with pytest.raises(NotZeroDimensionalError):
        dim_tensor_zero_dim(alg("Zmod", ["x"], n=8), alg("Z", ["y"]))


def test_boolean_dim():
    assert boolean_dim(2, alg("Z", ["x", "y"])).formula == Dim(2)
    assert boolean_dim(1, alg("Z", [])).formula == Dim(0)
    r = boolean_dim(3, alg("Z", ["x"], ["x^2 + x"]))
    assert r.formula == Dim(0) and r.agreement and r.path == PATH_BOOLEAN
    with pytest.raises(NotATripletError):
        boolean_dim(2, alg("Z", ["x"], ["3"]))
    with pytest.raises(BaseMismatchError):
        boolean_dim(2, alg("Q", ["x"]))
    assert dim_tensor_auto(boolean_atoms(2), alg("Zmod", ["x"], n=4)).formula == Dim(1)


def test_boolean_independent_of_k():
    rng = random.Random(17)
    for _ in range(10):
        B = random_algebra(rng)
        if dim_at(B, closed(2)).is_empty:
            continue
        vals = {boolean_dim(k, B, oracle=False).formula for k in (1, 2, 3, 5)}
        assert vals == {dim_at(B, closed(2))}


def test_auto_dispatch_picks_boolean_side():
    B = alg("Z", ["x"])
    assert dim_tensor_auto(B, boolean_atoms(2)).path == PATH_BOOLEAN


def test_witnessed_tensor_value_bounded_by_formula():
    A = alg("Zmod", ["x", "y"], ["x*y"], n=6)
    B = alg("Zmod", ["z"], n=4)
    pt = closed(2)
    fr = fibre_at(A, pt)
    comps = (ideal(fr, "x"), ideal(fr, "y"))
    ws = comps + (ideal(fr, "x", "y"), ideal(fr, "x - 1", "y"))
    closed_form = dim_tensor_at(A, B, pt)
    assert dim_tensor_at_witnessed(A, B, pt, ws, comps) == closed_form == Dim(2)
    assert dim_tensor_at_witnessed(A, B, pt, comps, comps) <= closed_form


def test_field_additivity():
    rng = random.Random(23)
    for p in (2, 3, 5):
        for _ in range(8):
            A = random_algebra(rng, Fp(p), names=("x", "y", "z"))
            B = random_algebra(rng, Fp(p), names=("u", "v", "w"))
            r = dim_tensor(A, B)
            da, db = dim_at(A, closed(p)), dim_at(B, closed(p))
            assert r.formula == da + db and r.agreement


@settings(max_examples=40)
@given(st.integers(0, 2 ** 32))
def test_tensor_laws_on_random_pairs(seed):
    A, B = random_pair(random.Random(seed))
    T = tensor_presentation(A, B)
    spec = effective_spectrum_tensor(A, B)
    assert spec == effective_spectrum(T)
    assert effective_dim(T) <= min(effective_dim(A), effective_dim(B))
    r = dim_tensor(A, B)
    assert r.agreement
    for row in r.points:
        if row.point in spec:
            assert row.formula == dim_at(T, row.point)
    f, e = fibre_dim(T), effective_dim(T)
    if not f.is_empty:
        assert f <= r.formula <= Dim(f.value + (1 + f.value) * e.value)
        assert e == Dim(0) and f == r.formula


def test_cross_check_is_seeded():
    A, B = alg("Zmod", ["x"], n=4), alg("Zmod", ["y"], n=6)
    one = cross_check(A, B, seed=5, random_pairs=8)
    two = cross_check(A, B, seed=5, random_pairs=8)
    assert one.to_json() == two.to_json()
    assert one.failures == 0 and len(one.reports) == 9
    first = one.reports[0]
    assert first.formula == first.oracle == Dim(2)
    assert [(p.point.prime, p.formula) for p in first.points] == [(2, Dim(2))]
