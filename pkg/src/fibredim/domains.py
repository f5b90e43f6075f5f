"""Exact coefficient domains: the integers, the rationals and prime fields.

Coefficients are plain Python values (``int`` for ZZ and GF(p), ``Fraction``
for QQ); a domain object knows how to put them in canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import isprime

from .errors import DomainMismatchError, WrongDomainError


@dataclass(frozen=True)
class IntegerRing:
    is_field = False

    def convert(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise DomainMismatchError(f"{value} is not an integer")
            return value.numerator
        return int(value)

    def inv(self, value):
        if value in (1, -1):
            return value
        raise ZeroDivisionError(f"{value} is not a unit in ZZ")

    def __str__(self):
        return "ZZ"


@dataclass(frozen=True)
class RationalField:
    is_field = True

    def convert(self, value):
        return Fraction(value)

    def inv(self, value):
        return 1 / Fraction(value)

    def __str__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    p: int
    is_field = True

    def __post_init__(self):
        if self.p < 2 or not isprime(self.p):
            raise ValueError(f"prime field modulus must be prime, got {self.p}")

    def convert(self, value):
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def inv(self, value):
        if value % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return pow(value, -1, self.p)

    def __str__(self):
        return f"GF({self.p})"


ZZ = IntegerRing()
QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def same_domain(*domains):
    first = domains[0]
    for d in domains[1:]:
        if d != first:
            raise DomainMismatchError(f"domain mismatch: {first} vs {d}")
    return first


def require_field(domain):
    if not domain.is_field:
        raise WrongDomainError(f"{domain} is not a field")
    return domain
