"""Fibre rings, effective spectra and the local dimension invariants built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple

from sympy import isprime, primefactors

from .dimension import EMPTY, Dim, dim_sup
from .domains import GF, QQ, ZZ
from .errors import IncompatiblePointError, InconsistentWitnessError
from .groebner import (cached_groebner, characteristic, is_trivial,
                       krull_dim_affine, normal_form)
from .poly import GREVLEX, as_order
from .presentation import Affine, Fp, Product, Q


@dataclass(frozen=True)
class SpecPoint:
    """A prime of the base: ``prime=None`` is the zero ideal of Z or Q."""

    prime: Optional[int] = None

    def __post_init__(self):
        if self.prime is not None and not isprime(self.prime):
            raise IncompatiblePointError(f"{self.prime} is not prime")

    @property
    def is_generic(self):
        return self.prime is None

    def to_json(self):
        return "generic" if self.prime is None else self.prime

    @classmethod
    def from_json(cls, obj):
        if obj == "generic":
            return GENERIC
        if isinstance(obj, int) and not isinstance(obj, bool):
            return cls(obj)
        raise IncompatiblePointError(f"bad point spec {obj!r}")

    def __str__(self):
        return "(0)" if self.prime is None else f"({self.prime})"


GENERIC = SpecPoint(None)


def closed(p: int) -> SpecPoint:
    return SpecPoint(p)


def check_point(base, pt: SpecPoint):
    kind = base.kind
    if kind == "Z":
        ok = True
    elif kind == "Q":
        ok = pt.is_generic
    elif kind == "Fp":
        ok = pt.prime == base.n
    else:
        ok = not pt.is_generic and base.n % pt.prime == 0
    if not ok:
        raise IncompatiblePointError(f"point {pt} is not a prime of {base}")


def base_points(base):
    """All primes of a base with finite spectrum (every kind except Z)."""
    if base.kind == "Q":
        return [GENERIC]
    if base.kind == "Fp":
        return [closed(base.n)]
    if base.kind == "Zmod":
        return [closed(p) for p in primefactors(base.n)]
    raise ValueError("Spec(Z) is infinite")


@dataclass(frozen=True)
class FibreRing:
    """k(p) (x)_R A, presented over GF(p) or QQ."""

    algebra: object
    point: SpecPoint
    source: object = field(compare=False, repr=False, default=None)

    @property
    def field(self):
        return self.algebra.base

    @property
    def is_affine(self):
        return isinstance(self.algebra, Affine)


def _fibre_factor(f: Affine, pt: SpecPoint) -> Affine:
    if f.base.kind in ("Fp", "Q"):
        return f
    if pt.is_generic:
        base, dom = Q, QQ
    else:
        base, dom = Fp(pt.prime), GF(pt.prime)
    rels = (r.change_domain(dom) for r in f.relations)
    return Affine(base, f.vars, tuple(r for r in rels if r))


def fibre_at(A, pt: SpecPoint) -> FibreRing:
    check_point(A.base, pt)
    if isinstance(A, Affine):
        return FibreRing(_fibre_factor(A, pt), pt, A)
    return FibreRing(Product(tuple(_fibre_factor(f, pt) for f in A.factors)), pt, A)


def _factor_nonzero(f: Affine, order=GREVLEX) -> bool:
    gb = cached_groebner(f.relations, order, domain=f.base.coefficient_domain, nvars=f.nvars)
    return not is_trivial(gb)


def is_effective(A, pt: SpecPoint, order=GREVLEX) -> bool:
    fr = fibre_at(A, pt)
    return any(_factor_nonzero(f, order) for f in fr.algebra.factors)


# -- effective spectrum -------------------------------------------------------

@dataclass(frozen=True)
class EffectiveSpectrum:
    """Effective primes of the base.

    With ``cofinite`` set (base Z only) the closed points are all primes
    *except* ``closed_points``.
    """

    includes_generic: bool = False
    closed_points: FrozenSet[int] = frozenset()
    cofinite: bool = False

    def __post_init__(self):
        object.__setattr__(self, "closed_points", frozenset(self.closed_points))
        if self.cofinite and not self.includes_generic:
            raise ValueError("a cofinite spectrum must contain the generic point")

    def __contains__(self, pt: SpecPoint):
        if pt.is_generic:
            return self.includes_generic
        return (pt.prime in self.closed_points) != self.cofinite

    @property
    def is_empty(self):
        return not self.includes_generic and not self.cofinite and not self.closed_points

    @property
    def has_closed(self):
        return self.cofinite or bool(self.closed_points)

    def points(self):
        """Explicit points; only defined for finite spectra."""
        if self.cofinite:
            raise ValueError("cofinite spectrum has infinitely many points")
        pts = [GENERIC] if self.includes_generic else []
        return pts + [closed(p) for p in sorted(self.closed_points)]

    def maximal_points(self):
        """Max_e: the closed points, or the generic point if it is alone."""
        if self.has_closed:
            return self
        return EffectiveSpectrum(self.includes_generic)

    def __and__(self, other):
        g = self.includes_generic and other.includes_generic
        a, b = self.closed_points, other.closed_points
        if self.cofinite and other.cofinite:
            return EffectiveSpectrum(g, a | b, True)
        if self.cofinite:
            return EffectiveSpectrum(g, b - a)
        if other.cofinite:
            return EffectiveSpectrum(g, a - b)
        return EffectiveSpectrum(g, a & b)

    def __or__(self, other):
        g = self.includes_generic or other.includes_generic
        a, b = self.closed_points, other.closed_points
        if self.cofinite and other.cofinite:
            return EffectiveSpectrum(g, a & b, True)
        if self.cofinite:
            return EffectiveSpectrum(g, a - b, True)
        if other.cofinite:
            return EffectiveSpectrum(g, b - a, True)
        return EffectiveSpectrum(g, a | b)

    def to_json(self):
        return {
            "includes_generic": self.includes_generic,
            "closed_points": sorted(self.closed_points),
            "cofinite": self.cofinite,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(bool(obj["includes_generic"]), frozenset(obj["closed_points"]),
                   bool(obj["cofinite"]))

    def __str__(self):
        if self.cofinite:
            ex = ", ".join(map(str, sorted(self.closed_points)))
            return "{(0)} + all (p)" + (f" except p in {{{ex}}}" if ex else "")
        return "{" + ", ".join(str(p) for p in self.points()) + "}"


def sieve_candidates(f: Affine, order=GREVLEX):
    """Primes dividing a leading coefficient of the strong basis of a Z-algebra."""
    gb = cached_groebner(f.relations, order, domain=ZZ, nvars=f.nvars)
    primes = set()
    for g in gb.elements:
        primes.update(primefactors(abs(g.lc)))
    return sorted(primes)


def _factor_spectrum(f: Affine, order) -> EffectiveSpectrum:
    kind = f.base.kind
    if kind in ("Fp", "Q", "Zmod"):
        pts = [pt for pt in base_points(f.base) if is_effective(f, pt, order)]
        return EffectiveSpectrum(GENERIC in pts, {p.prime for p in pts if p.prime})
    n = characteristic(f, order)
    if n != 0:
        return EffectiveSpectrum(False, {p for p in primefactors(n)
                                         if is_effective(f, closed(p), order)})
    excluded = {p for p in sieve_candidates(f, order)
                if not is_effective(f, closed(p), order)}
    return EffectiveSpectrum(True, excluded, True)


def effective_spectrum(A, order=GREVLEX) -> EffectiveSpectrum:
    order = as_order(order)
    spec = EffectiveSpectrum()
    for f in A.factors:
        spec = spec | _factor_spectrum(f, order)
    return spec


def effective_dim(A, order=GREVLEX) -> Dim:
    return _spectrum_dim(effective_spectrum(A, order))


def _spectrum_dim(spec: EffectiveSpectrum) -> Dim:
    if spec.is_empty:
        return EMPTY
    # chains in Spec(Z) have length at most one: (0) < (p)
    return Dim(1) if spec.includes_generic and spec.has_closed else Dim(0)


def effective_height(A, pt: SpecPoint, order=GREVLEX) -> Dim:
    spec = effective_spectrum(A, order)
    if pt not in spec:
        return EMPTY
    return Dim(1) if not pt.is_generic and spec.includes_generic else Dim(0)


# -- local dimensions ---------------------------------------------------------

def dim_at(A, pt: SpecPoint, order=GREVLEX) -> Dim:
    return krull_dim_affine(fibre_at(A, pt).algebra, order)


def td_at(A, pt: SpecPoint, order=GREVLEX) -> Dim:
    """Transcendence degree of the fibre; equals its Krull dimension for affine algebras."""
    return dim_at(A, pt, order)


def _check_points(A, spec, order):
    """Points at which the fibre dimension can change, for an effective spectrum."""
    if not spec.cofinite:
        return spec.points()
    pts = [GENERIC]
    for f in A.factors:
        if f.base.kind == "Z" and characteristic(f, order) == 0:
            pts += [closed(p) for p in sieve_candidates(f, order)]
        else:
            pts += [pt for pt in _factor_spectrum(f, order).points() if not pt.is_generic]
    return sorted(set(pts), key=lambda p: (p.prime is not None, p.prime or 0))


def fibre_dim(A, order=GREVLEX) -> Dim:
    """Supremum of dim_at over the effective spectrum.

    For a cofinite spectrum, primes dividing no leading coefficient of the
    strong basis have fibres with the generic leading monomials, so only the
    generic point and the sieve candidates need to be evaluated.
    """
    order = as_order(order)
    spec = effective_spectrum(A, order)
    return dim_sup(dim_at(A, pt, order) for pt in _check_points(A, spec, order)
                   if pt in spec)


@dataclass(frozen=True)
class SeidenbergBounds:
    lower: Dim
    upper: Dim
    dim: Optional[Dim]
    fibre_dim: Dim
    effective_dim: Dim
    polynomial_lower: Optional[Dim] = None

    def to_json(self):
        return {
            "lower": self.lower.to_json(),
            "upper": self.upper.to_json(),
            "dim": None if self.dim is None else self.dim.to_json(),
            "dim_known": self.dim is not None,
            "fibre_dim": self.fibre_dim.to_json(),
            "effective_dim": self.effective_dim.to_json(),
            "polynomial_lower": (None if self.polynomial_lower is None
                                 else self.polynomial_lower.to_json()),
        }


def seidenberg_bounds(A, order=GREVLEX) -> SeidenbergBounds:
    """fibre_dim <= dim A <= f + (1 + f) * e, exact when e = 0.

    For a pure polynomial ring over Z the going-down lower bound
    ``sup(ht p + dim_p)`` is reported as ``polynomial_lower``.
    """
    f = fibre_dim(A, order)
    e = effective_dim(A, order)
    if f.is_empty or e.is_empty:
        return SeidenbergBounds(EMPTY, EMPTY, EMPTY, f, e)
    upper = Dim(f.value + (1 + f.value) * e.value)
    known = f if e.value == 0 else None
    poly_lower = None
    if all(x.is_polynomial_ring() for x in A.factors):
        # polynomial extensions satisfy going-down, so every effective p contributes ht(p) + dim_p
        poly_lower = Dim(f.value + e.value)
    return SeidenbergBounds(f, upper, known, f, e, poly_lower)


# -- witnesses ----------------------------------------------------------------

@dataclass(frozen=True)
class PrimeWitness:
    """Generators of a (caller-asserted) prime ideal of an affine fibre ring."""

    generators: Tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))


def _affine_fibre(fr: FibreRing, factor=None) -> Affine:
    if isinstance(fr.algebra, Affine):
        return fr.algebra
    if factor is None:
        raise InconsistentWitnessError("witnesses on a product fibre need a factor index")
    return fr.algebra.factors[factor]


def _quotient_gb(f: Affine, P: PrimeWitness, order):
    gens = tuple(f.relations) + tuple(P.generators)
    return cached_groebner(gens, order, domain=f.base.coefficient_domain, nvars=f.nvars)


def quotient_dim(f: Affine, P: PrimeWitness, order=GREVLEX) -> Dim:
    return krull_dim_affine(Affine(f.base, f.vars, f.relations + P.generators), order)


def _contained(q: PrimeWitness, P: PrimeWitness, f: Affine, order) -> bool:
    gb = _quotient_gb(f, P, order)
    return all(normal_form(g.reorder(gb.order), gb).is_zero() for g in q.generators)


def validate_components(fr: FibreRing, comps, factor=None, order=GREVLEX):
    f = _affine_fibre(fr, factor)
    for q in comps:
        if is_trivial(_quotient_gb(f, q, order)):
            raise InconsistentWitnessError("a listed component is not a proper ideal")
    for i, a in enumerate(comps):
        for j, b in enumerate(comps):
            if i != j and _contained(a, b, f, order):
                raise InconsistentWitnessError(
                    f"component {i} is contained in component {j}; components must be minimal")


def height_at(fr: FibreRing, P: PrimeWitness, comps, *, factor=None, order=GREVLEX) -> Dim:
    """ht(P) = max over listed components q inside P of dim(fr/q) - dim(fr/P).

    Exact when ``comps`` are the true minimal primes of the fibre.
    """
    order = as_order(order)
    f = _affine_fibre(fr, factor)
    if is_trivial(_quotient_gb(f, P, order)):
        raise InconsistentWitnessError("the prime witness is not a proper ideal")
    dP = quotient_dim(f, P, order)
    inside = [q for q in comps if _contained(q, P, f, order)]
    if not inside:
        raise InconsistentWitnessError("the prime witness contains no listed component")
    return Dim(max(quotient_dim(f, q, order).value for q in inside) - dP.value)


def local_td(fr: FibreRing, P: PrimeWitness, comps, *, factor=None, order=GREVLEX) -> Dim:
    """Transcendence degree of the localization at P: max dim(fr/q) over components q in P."""
    f = _affine_fibre(fr, factor)
    inside = [q for q in comps if _contained(q, P, f, order)]
    if not inside:
        raise InconsistentWitnessError("the prime witness contains no listed component")
    return dim_sup(quotient_dim(f, q, order) for q in inside)


@dataclass(frozen=True)
class AFCheck:
    height: Dim
    td_quotient: Dim
    td_local: Dim

    @property
    def holds(self):
        return self.height + self.td_quotient == self.td_local

    def to_json(self):
        return {"height": self.height.to_json(), "td_quotient": self.td_quotient.to_json(),
                "td_local": self.td_local.to_json(), "holds": self.holds}


def af_check(A, pt, P, comps, *, factor=None, order=GREVLEX) -> AFCheck:
    fr = fibre_at(A, pt)
    if not is_effective(A, pt, order):
        raise InconsistentWitnessError(f"point {pt} is not effective")
    validate_components(fr, comps, factor, order)
    f = _affine_fibre(fr, factor)
    ht = height_at(fr, P, comps, factor=factor, order=order)
    return AFCheck(ht, quotient_dim(f, P, order),
                   local_td(fr, P, comps, factor=factor, order=order))


def verify_af_at_prime(A, pt, P, comps, *, factor=None, order=GREVLEX) -> bool:
    """Altitude formula ht(P) + td(A/P) == td(A_P) on the fibre at ``pt``."""
    return af_check(A, pt, P, comps, factor=factor, order=order).holds
