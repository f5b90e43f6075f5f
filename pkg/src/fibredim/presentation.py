"""Finitely presented algebras over Z, Z/n, F_p and Q, and constructions on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple, Union

from sympy import isprime

from .domains import GF, QQ, ZZ
from .errors import BaseMismatchError, ParseError
from .poly import GREVLEX, Polynomial, as_order

BASE_KINDS = ("Z", "Zmod", "Fp", "Q")


@dataclass(frozen=True)
class BaseRing:
    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind not in BASE_KINDS:
            raise ParseError(f"unknown base kind {self.kind!r}")
        if self.kind == "Zmod" and (self.n is None or self.n < 2):
            raise ParseError(f"Zmod modulus must be >= 2, got {self.n}")
        if self.kind == "Fp" and (self.n is None or not isprime(self.n)):
            raise ParseError(f"Fp modulus must be prime, got {self.n}")
        if self.kind in ("Z", "Q") and self.n is not None:
            raise ParseError(f"base {self.kind} takes no modulus")

    @property
    def coefficient_domain(self):
        if self.kind in ("Z", "Zmod"):
            return ZZ
        if self.kind == "Fp":
            return GF(self.n)
        return QQ

    @property
    def is_field(self):
        return self.kind in ("Fp", "Q")

    def to_json(self):
        if self.n is None:
            return {"kind": self.kind}
        return {"kind": self.kind, "n": self.n}

    def __str__(self):
        return {"Z": "ZZ", "Q": "QQ"}.get(self.kind) or (
            f"ZZ/{self.n}" if self.kind == "Zmod" else f"GF({self.n})")


Z = BaseRing("Z")
Q = BaseRing("Q")


def Zmod(n):
    return BaseRing("Zmod", n)


def Fp(p):
    return BaseRing("Fp", p)


@dataclass(frozen=True)
class Affine:
    """base[vars] / (relations); for base Zmod(n) the modulus n is implicit."""

    base: BaseRing
    vars: Tuple[str, ...] = ()
    relations: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "relations", tuple(self.relations))
        if len(set(self.vars)) != len(self.vars):
            raise ParseError(f"duplicate variable names in {list(self.vars)}")
        dom = self.base.coefficient_domain
        for r in self.relations:
            if r.domain != dom:
                raise ParseError(f"relation over {r.domain}, base expects {dom}")
            if r.nvars != len(self.vars):
                raise ParseError("relation variable count does not match vars")

    @property
    def nvars(self):
        return len(self.vars)

    @property
    def factors(self):
        return (self,)

    def lifted_relations(self, order=GREVLEX):
        """Relations over the coefficient domain, with the modulus added for Zmod."""
        order = as_order(order)
        rels = [r.reorder(order) for r in self.relations]
        if self.base.kind == "Zmod":
            rels.append(Polynomial.constant(self.base.n, ZZ, self.nvars, order))
        return rels

    def is_polynomial_ring(self):
        return not self.relations

    def gens(self, order=GREVLEX):
        dom = self.base.coefficient_domain
        return [Polynomial.variable(i, dom, self.nvars, order) for i in range(self.nvars)]


@dataclass(frozen=True)
class Product:
    factors: Tuple[Affine, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ParseError("a product needs at least one factor")
        bases = {f.base for f in self.factors}
        if len(bases) != 1:
            raise BaseMismatchError("product factors must share one base ring")

    @property
    def base(self):
        return self.factors[0].base


AlgebraPresentation = Union[Affine, Product]


def boolean_atoms(k: int) -> Product:
    """(F_2)^k over Z, each factor presented as Z[]/(2)."""
    if k < 1:
        raise ParseError("boolean_atoms needs k >= 1")
    two = Polynomial.constant(2, ZZ, 0)
    return Product(tuple(Affine(Z, (), (two,)) for _ in range(k)))


def is_boolean(A) -> bool:
    return all(f.base == Z and not f.vars and f.relations == (Polynomial.constant(2, ZZ, 0),)
               for f in A.factors)


def polynomial_extension(A, name="t"):
    """A[t] for a fresh variable name."""
    def ext(f):
        v = name
        while v in f.vars:
            v += "_"
        n = f.nvars + 1
        return Affine(f.base, f.vars + (v,), tuple(r.embed(n, 0) for r in f.relations))
    if isinstance(A, Affine):
        return ext(A)
    return Product(tuple(ext(f) for f in A.factors))


def as_integer_algebra(A):
    """View an algebra over Z/n as a Z-algebra by adding n as a relation.

    Tensor products are unchanged: for Z/n-algebras A and B,
    A (x)_Z B = A (x)_{Z/n} B because Z -> Z/n is surjective.
    """
    def lift(f):
        if f.base.kind == "Z":
            return f
        if f.base.kind != "Zmod":
            raise BaseMismatchError(f"cannot view an algebra over {f.base} as a Z-algebra")
        return Affine(Z, f.vars, tuple(f.lifted_relations()))
    if isinstance(A, Product):
        return Product(tuple(lift(f) for f in A.factors))
    return lift(A)


def _fresh(name, suffix, taken):
    cand = f"{name}_{suffix}"
    while cand in taken:
        cand += "_"
    return cand


def _tensor_affine(a: Affine, b: Affine) -> Affine:
    clash = set(a.vars) & set(b.vars)
    taken = set(a.vars) | set(b.vars)
    left, right = [], []
    for v in a.vars:
        if v in clash:
            v = _fresh(v, "L", taken)
            taken.add(v)
        left.append(v)
    for v in b.vars:
        if v in clash:
            v = _fresh(v, "R", taken)
            taken.add(v)
        right.append(v)
    n = a.nvars + b.nvars
    rels = [r.embed(n, 0) for r in a.relations] + [r.embed(n, a.nvars) for r in b.relations]
    return Affine(a.base, tuple(left + right), tuple(rels))


def tensor_presentation(A, B):
    if A.base != B.base:
        raise BaseMismatchError(f"cannot tensor over different bases {A.base} and {B.base}")
    if isinstance(A, Affine) and isinstance(B, Affine):
        return _tensor_affine(A, B)
    return Product(tuple(_tensor_affine(a, b) for a in A.factors for b in B.factors))
