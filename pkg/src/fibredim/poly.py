"""Sparse multivariate polynomials with exact coefficients.

A monomial is a tuple of non-negative exponents, one per ring variable.
A :class:`Polynomial` keeps its terms sorted strictly descending in its
monomial order, with no zero coefficients and no repeated monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from .domains import QQ, ZZ, same_domain
from .errors import DomainMismatchError

Monomial = Tuple[int, ...]


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _lex_key(m):
    return m


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    @property
    def key(self):
        return _grevlex_key if self.kind == "grevlex" else _lex_key

    def __str__(self):
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def as_order(order) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(order)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class Polynomial:
    domain: object
    nvars: int
    terms: Tuple[Tuple[Monomial, object], ...]
    order: MonomialOrder = GREVLEX

    # construction -----------------------------------------------------

    @classmethod
    def from_dict(cls, d, domain, nvars, order=GREVLEX):
        order = as_order(order)
        items = sorted(d.items(), key=lambda t: order.key(t[0]), reverse=True)
        return cls(domain, nvars, tuple(items), order)

    @classmethod
    def zero(cls, domain, nvars, order=GREVLEX):
        return cls(domain, nvars, (), as_order(order))

    @classmethod
    def constant(cls, c, domain, nvars, order=GREVLEX):
        return normalize([((0,) * nvars, c)], domain, order, nvars)

    @classmethod
    def variable(cls, i, domain, nvars, order=GREVLEX):
        m = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(domain, nvars, ((m, domain.convert(1)),), as_order(order))

    # accessors --------------------------------------------------------

    def as_dict(self):
        return dict(self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self) -> Monomial:
        return self.terms[0][0]

    @property
    def lc(self):
        return self.terms[0][1]

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(self.lm))

    def total_degree(self):
        return max((sum(m) for m, _ in self.terms), default=-1)

    # arithmetic -------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")
        same_domain(self.domain, other.domain)
        if self.nvars != other.nvars:
            raise DomainMismatchError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other, self.domain, self.nvars, self.order)
        return other

    def __add__(self, other):
        other = self._lift(other)
        self._check(other)
        return normalize(self.terms + other.terms, self.domain, self.order, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        dom = self.domain
        return Polynomial(self.domain, self.nvars,
                          tuple((m, dom.convert(-c)) for m, c in self.terms), self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_mul(self, other)
        c = self.domain.convert(other)
        return normalize([(m, a * c) for m, a in self.terms], self.domain, self.order,
                         self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1, self.domain, self.nvars, self.order)
        base = self
        while n:
            if n & 1:
                result = poly_mul(result, base)
            base = poly_mul(base, base)
            n >>= 1
        return result

    # conversions ------------------------------------------------------

    def reorder(self, order) -> Polynomial:
        order = as_order(order)
        if order == self.order:
            return self
        return Polynomial.from_dict(dict(self.terms), self.domain, self.nvars, order)

    def change_domain(self, domain) -> Polynomial:
        """Map coefficients into ``domain`` (e.g. ZZ -> GF(p) or ZZ -> QQ)."""
        return normalize(self.terms, domain, self.order, self.nvars, convert=True)

    def embed(self, nvars: int, offset: int) -> Polynomial:
        """Place this polynomial's variables at slots offset..offset+n-1 of a larger ring."""
        pad_l = (0,) * offset
        pad_r = (0,) * (nvars - offset - self.nvars)
        return Polynomial.from_dict({pad_l + m + pad_r: c for m, c in self.terms},
                                    self.domain, nvars, self.order)

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self * self.domain.inv(self.lc)

    def primitive_integer(self) -> Polynomial:
        """Scale a QQ polynomial to a ZZ polynomial with coprime coefficients."""
        from math import gcd, lcm
        den = 1
        for _, c in self.terms:
            den = lcm(den, Fraction(c).denominator)
        ints = [(m, int(Fraction(c) * den)) for m, c in self.terms]
        g = 0
        for _, c in ints:
            g = gcd(g, c)
        g = g or 1
        return Polynomial(ZZ, self.nvars, tuple((m, c // g) for m, c in ints), self.order)

    def to_str(self, names=None) -> str:
        names = names or [f"x{i}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.terms):
            neg = self.domain in (ZZ, QQ) and c < 0
            a = -c if neg else c
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if k == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.to_str()


def normalize(raw_terms: Iterable, domain, order=GREVLEX, nvars=None,
              convert=True) -> Polynomial:
    """Merge, canonicalize and sort a raw list of (monomial, coefficient) pairs."""
    order = as_order(order)
    acc = {}
    for m, c in raw_terms:
        if nvars is None:
            nvars = len(m)
        elif len(m) != nvars:
            raise DomainMismatchError(
                f"monomial {m} has length {len(m)}, expected {nvars}")
        acc[m] = acc.get(m, 0) + c
    merged = {}
    for m, c in acc.items():
        c = domain.convert(c) if convert else c
        if c:
            merged[m] = c
    return Polynomial.from_dict(merged, domain, nvars or 0, order)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    a._check(b)
    acc = {}
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            m = mono_mul(ma, mb)
            acc[m] = acc.get(m, 0) + ca * cb
    return normalize(acc.items(), a.domain, a.order, a.nvars)
