import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibredim.domains import ZZ
from fibredim.dsl import parse_algebra
from fibredim.errors import BaseMismatchError, ParseError
from fibredim.presentation import (Affine, Product, Z, Zmod, boolean_atoms, is_boolean,
                                   polynomial_extension, tensor_presentation)

from strategies import polys


def alg(doc):
    return parse_algebra(doc)


def test_tensor_concatenates():
    A = alg('{"base": {"kind": "Z"}, "vars": ["x"], "relations": ["2"]}')
    B = alg('{"base": {"kind": "Z"}, "vars": ["y"], "relations": ["3"]}')
    T = tensor_presentation(A, B)
    assert T.vars == ("x", "y")
    assert [r.as_dict() for r in T.relations] == [{(0, 0): 2}, {(0, 0): 3}]


def test_tensor_renames_clashes():
    A = alg('{"base": {"kind": "Z"}, "vars": ["x"], "relations": ["2 + x"]}')
    T = tensor_presentation(A, A)
    assert T.vars == ("x_L", "x_R")
    assert [r.as_dict() for r in T.relations] == [{(1, 0): 1, (0, 0): 2},
                                                  {(0, 1): 1, (0, 0): 2}]


def test_tensor_rename_avoids_existing_names():
    A = alg('{"base": {"kind": "Z"}, "vars": ["x", "x_L"]}')
    B = alg('{"base": {"kind": "Z"}, "vars": ["x"]}')
    T = tensor_presentation(A, B)
    assert len(set(T.vars)) == 3


def test_tensor_distributes_over_products():
    B = alg('{"base": {"kind": "Z"}, "vars": ["y"]}')
    T = tensor_presentation(boolean_atoms(2), B)
    assert isinstance(T, Product) and len(T.factors) == 2
    for f in T.factors:
        assert f.vars == ("y",) and [r.as_dict() for r in f.relations] == [{(0,): 2}]


def test_tensor_base_mismatch():
    A = alg('{"base": {"kind": "Z"}, "vars": ["x"]}')
    B = alg('{"base": {"kind": "Zmod", "n": 4}, "vars": ["y"]}')
    with pytest.raises(BaseMismatchError):
        tensor_presentation(A, B)


def test_product_needs_shared_base():
    with pytest.raises((BaseMismatchError, ParseError)):
        Product((Affine(Z, (), ()), Affine(Zmod(4), (), ())))


def test_boolean_detection():
    assert is_boolean(boolean_atoms(3))
    assert not is_boolean(alg('{"base": {"kind": "Z"}, "vars": [], "relations": ["4"]}'))


def test_lifted_relations_add_modulus():
    A = alg('{"base": {"kind": "Zmod", "n": 12}, "vars": ["x"], "relations": ["x^2"]}')
    lifted = A.lifted_relations()
    assert {(0,): 12} in [r.as_dict() for r in lifted]


def test_polynomial_extension():
    A = alg('{"base": {"kind": "Fp", "n": 3}, "vars": ["t"], "relations": ["t^2"]}')
    E = polynomial_extension(A)
    assert len(E.vars) == 2 and E.vars[0] == "t" and E.vars[1] != "t"
    assert E.relations[0].nvars == 2


@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_tensor_counts(n, m, data):
    ra = data.draw(st.lists(polys(ZZ, n), max_size=3))
    rb = data.draw(st.lists(polys(ZZ, m), max_size=3))
    A = Affine(Z, tuple(f"a{i}" for i in range(n)), tuple(ra))
    B = Affine(Z, tuple(f"b{i}" for i in range(m)), tuple(rb))
    T = tensor_presentation(A, B)
    assert T.nvars == n + m
    assert len(T.relations) == len(ra) + len(rb)
