"""Dimension formulas for tensor products over Z, Z/n and fields.

Every formula-side computation works on A and B separately.  The oracle
side builds the joint presentation with :func:`tensor_presentation` and
computes its fibre dimensions directly; the two paths share only the
Groebner kernel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Tuple

from sympy import primefactors

from .dimension import EMPTY, Dim, dim_sup
from .errors import (BaseMismatchError, NotATripletError, NotZeroDimensionalError,
                     UnsupportedConfigurationError)
from .groebner import cached_groebner, characteristic, is_trivial, krull_dim_affine
from .poly import GREVLEX, as_order
from .presentation import (Z, as_integer_algebra, boolean_atoms, is_boolean,
                           tensor_presentation)
from .spectra import (GENERIC, EffectiveSpectrum, FibreRing, PrimeWitness, closed,
                      dim_at, effective_spectrum, fibre_at, height_at, is_effective,
                      local_td, quotient_dim, sieve_candidates, _affine_fibre)

PATH_FIBREWISE = "fibrewise"
PATH_EFFECTIVE_DIM_ZERO = "effective-dim-zero"
PATH_NONZERO_CHAR = "nonzero-characteristic"
PATH_ZERO_DIM_FACTOR = "zero-dimensional-factor"
PATH_BOOLEAN = "boolean"


def _same_base(A, B):
    """Return (A, B) over one base; Z and Z/n algebras are both read over Z."""
    if A.base == B.base:
        return A, B
    if {A.base.kind, B.base.kind} <= {"Z", "Zmod"}:
        return as_integer_algebra(A), as_integer_algebra(B)
    raise BaseMismatchError(f"algebras over different bases: {A.base} vs {B.base}")


def _point_key(pt):
    return (pt.prime is not None, pt.prime or 0)


# -- D(s, d, A) -------------------------------------------------------------

@dataclass(frozen=True)
class DValueRequest:
    """Request for D(s, d, fibre); witness mode when ``witnesses`` is given."""

    s: int
    d: int
    fibre: FibreRing
    witnesses: Optional[Tuple[PrimeWitness, ...]] = None
    components: Tuple[PrimeWitness, ...] = ()
    factor: Optional[int] = None

    def __post_init__(self):
        if not 0 <= self.d <= self.s:
            raise ValueError(f"need 0 <= d <= s, got d={self.d}, s={self.s}")

    @property
    def mode(self):
        return "closed-form" if self.witnesses is None else "witness"


def d_value(req: DValueRequest, order=GREVLEX) -> Dim:
    """sup over primes P of ht(P) + min(s, d + dim(fibre/P)).

    Closed form: d + dim(fibre), attained at a maximal ideal of a top
    component.  Witness mode evaluates the supremum over the supplied
    primes only, which is a lower bound for the closed form.
    """
    if req.witnesses is None:
        dim = krull_dim_affine(req.fibre.algebra, order)
        if dim.is_empty:
            raise ValueError("closed-form D needs a nonzero fibre")
        return dim + req.d
    f = _affine_fibre(req.fibre, req.factor)
    vals = []
    for P in req.witnesses:
        ht = height_at(req.fibre, P, req.components, factor=req.factor, order=order)
        vals.append(Dim(ht.value + min(req.s, req.d + quotient_dim(f, P, order).value)))
    return dim_sup(vals)


# -- reports ----------------------------------------------------------------

@dataclass(frozen=True)
class PointReport:
    point: object
    dim_a: Dim
    dim_b: Dim
    formula: Dim
    oracle: Optional[Dim] = None

    @property
    def agrees(self):
        return self.oracle is None or self.formula == self.oracle

    def to_json(self):
        return {
            "point": self.point.to_json(),
            "dim_a": self.dim_a.to_json(),
            "dim_b": self.dim_b.to_json(),
            "formula": self.formula.to_json(),
            "oracle": None if self.oracle is None else self.oracle.to_json(),
        }


@dataclass(frozen=True)
class TensorDimReport:
    points: Tuple[PointReport, ...]
    formula: Dim
    oracle: Optional[Dim]
    path: str

    @property
    def agreement(self):
        return (self.oracle is not None and self.formula == self.oracle
                and all(p.oracle is not None and p.agrees for p in self.points))

    def to_json(self):
        return {
            "path": self.path,
            "formula": self.formula.to_json(),
            "oracle": None if self.oracle is None else self.oracle.to_json(),
            "agreement": self.agreement,
            "points": [p.to_json() for p in self.points],
        }


@dataclass
class CrossCheckReport:
    seed: Optional[int]
    instances: list = field(default_factory=list)
    reports: list = field(default_factory=list)

    @property
    def failures(self):
        return sum(not r.agreement for r in self.reports)

    def to_json(self):
        return {
            "seed": self.seed,
            "count": len(self.reports),
            "failures": self.failures,
            "instances": [
                {"description": d, "report": r.to_json()}
                for d, r in zip(self.instances, self.reports)
            ],
        }


# -- triplets and spectra ---------------------------------------------------

def _joint_nonzero(T, order):
    """Direct test: does the joint presentation define a nonzero ring?"""
    for f in T.factors:
        gb = cached_groebner(f.lifted_relations(order), order,
                             domain=f.base.coefficient_domain, nvars=f.nvars)
        if not is_trivial(gb):
            return True
    return False


def is_triplet(A, B, order=GREVLEX) -> bool:
    """A (x) B != 0, decided by spectra intersection and by the joint ideal."""
    A, B = _same_base(A, B)
    order = as_order(order)
    by_spectra = not (effective_spectrum(A, order) & effective_spectrum(B, order)).is_empty
    direct = _joint_nonzero(tensor_presentation(A, B), order)
    if by_spectra != direct:
        raise AssertionError("spectra intersection and joint ideal disagree on A (x) B != 0")
    return by_spectra


def _points_in_play(A, B, sa, sb, order):
    """Closed points where the intersection could differ from direct tests."""
    primes = set(sa.closed_points) | set(sb.closed_points)
    if A.base.kind == "Zmod":
        primes |= set(primefactors(A.base.n))
    for X in (A, B):
        for f in X.factors:
            if f.base.kind == "Z":
                n = characteristic(f, order)
                if n == 0:
                    primes |= set(sieve_candidates(f, order))
                else:
                    primes |= set(primefactors(n))
    return sorted(primes)


def effective_spectrum_tensor(A, B, order=GREVLEX, verify=True) -> EffectiveSpectrum:
    """Spectra intersection, checked against direct fibre tests of the joint algebra."""
    A, B = _same_base(A, B)
    order = as_order(order)
    sa, sb = effective_spectrum(A, order), effective_spectrum(B, order)
    spec = sa & sb
    if verify:
        T = tensor_presentation(A, B)
        pts = []
        if A.base.kind in ("Z", "Q"):
            pts.append(GENERIC)
        if A.base.kind == "Fp":
            pts.append(closed(A.base.n))
        else:
            pts += [closed(p) for p in _points_in_play(A, B, sa, sb, order)]
        for pt in pts:
            if (pt in spec) != is_effective(T, pt, order):
                raise AssertionError(f"spectra intersection disagrees with the joint fibre at {pt}")
    return spec


# -- dimension formulas -----------------------------------------------------

def dim_tensor_at(A, B, pt, order=GREVLEX) -> Dim:
    """dim_p(A (x) B) via the fibrewise formula.

    The supremum over primes I of the fibre of A of D(td(A_I), ht(I), B_p)
    equals dim(A_p) + dim(B_p): each term is ht(I) + dim(B_p) and the
    height is maximal at a maximal ideal of a top component.
    """
    A, B = _same_base(A, B)
    da, db = dim_at(A, pt, order), dim_at(B, pt, order)
    return da + db


def dim_tensor_at_witnessed(A, B, pt, witnesses, components, *, factor=None,
                            order=GREVLEX) -> Dim:
    """The fibrewise supremum restricted to caller-supplied primes of A's fibre."""
    A, B = _same_base(A, B)
    frA, frB = fibre_at(A, pt), fibre_at(B, pt)
    if dim_at(B, pt, order).is_empty:
        return EMPTY
    vals = []
    for I in witnesses:
        ht = height_at(frA, I, components, factor=factor, order=order)
        td = local_td(frA, I, components, factor=factor, order=order)
        vals.append(d_value(DValueRequest(td.value, ht.value, frB), order))
    return dim_sup(vals)


def _require_supported(A, B, order):
    if A.base.kind != "Z":
        return PATH_EFFECTIVE_DIM_ZERO
    if characteristic(A, order) == 0 and characteristic(B, order) == 0:
        raise UnsupportedConfigurationError(
            "absolute dimension of A (x)_Z B needs effective dimension 0 over Z; "
            "both algebras have characteristic 0, so only dim_at per prime is available")
    return PATH_NONZERO_CHAR


def oracle_dimension(T, order=GREVLEX):
    """Fibrewise dimension of a presentation, computed from its own spectrum.

    Returns (overall, {point: dim}); requires a finite effective spectrum.
    """
    spec = effective_spectrum(T, order)
    if spec.cofinite:
        raise UnsupportedConfigurationError("oracle needs a finite effective spectrum")
    per = {pt: dim_at(T, pt, order) for pt in spec.points()}
    return dim_sup(per.values()), per


def _build_report(A, B, common, path, per_point_formula, oracle, order, T=None):
    pts = list(common.points())
    per_oracle = {}
    overall_oracle = None
    if oracle:
        T = T if T is not None else tensor_presentation(A, B)
        overall_oracle, per_oracle = oracle_dimension(T, order)
        pts = sorted(set(pts) | set(per_oracle), key=_point_key)
    rows = []
    for pt in pts:
        da, db = dim_at(A, pt, order), dim_at(B, pt, order)
        formula = per_point_formula(pt, da, db) if pt in common else EMPTY
        o = per_oracle.get(pt, EMPTY) if oracle else None
        rows.append(PointReport(pt, da, db, formula, o))
    overall = dim_sup(r.formula for r in rows)
    return TensorDimReport(tuple(rows), overall, overall_oracle, path)


def dim_tensor(A, B, order=GREVLEX, oracle=True) -> TensorDimReport:
    """dim(A (x) B) as the maximum of the fibrewise formula over common effective points."""
    A, B = _same_base(A, B)
    order = as_order(order)
    path = _require_supported(A, B, order)
    common = effective_spectrum_tensor(A, B, order, verify=False)
    return _build_report(A, B, common, path, lambda pt, da, db: da + db, oracle, order)


def dim_tensor_zero_dim(A, B, order=GREVLEX, oracle=True) -> TensorDimReport:
    """Tensor dimension when every fibre of A is zero-dimensional.

    Each common point contributes D(s, 0, B_p) = dim(B_p); the result is
    checked against :func:`dim_tensor`.
    """
    A, B = _same_base(A, B)
    order = as_order(order)
    _require_supported(A, B, order)
    sa = effective_spectrum(A, order)
    if sa.cofinite:
        raise UnsupportedConfigurationError("zero-dimensional path needs a finite spectrum for A")
    bad = [pt for pt in sa.points() if dim_at(A, pt, order) > Dim(0)]
    if bad:
        raise NotZeroDimensionalError(f"A has a positive-dimensional fibre at {bad[0]}")
    common = effective_spectrum_tensor(A, B, order, verify=False)
    report = _build_report(A, B, common, PATH_ZERO_DIM_FACTOR, lambda pt, da, db: db,
                           oracle, order)
    generic = dim_tensor(A, B, order, oracle=False)
    if generic.formula != report.formula:
        raise AssertionError("zero-dimensional formula disagrees with the general formula")
    return report


def boolean_dim(k: int, B, order=GREVLEX, oracle=True) -> TensorDimReport:
    """dim((F_2)^k (x)_Z B) = dim(B / 2B)."""
    if B.base != Z:
        raise BaseMismatchError("the Boolean formula needs B over base Z")
    order = as_order(order)
    two = closed(2)
    db = dim_at(B, two, order)
    if db.is_empty:
        raise NotATripletError("B/2B is the zero ring, so (F_2)^k (x) B = 0")
    A = boolean_atoms(k)
    common = EffectiveSpectrum(False, {2})
    return _build_report(A, B, common, PATH_BOOLEAN, lambda pt, da, db: db, oracle, order)


def dim_tensor_auto(A, B, order=GREVLEX, oracle=True) -> TensorDimReport:
    """Dispatch to the most specific applicable formula."""
    A, B = _same_base(A, B)
    if A.base == Z and is_boolean(A):
        return boolean_dim(len(A.factors), B, order, oracle)
    if B.base == Z and is_boolean(B):
        return boolean_dim(len(B.factors), A, order, oracle)
    return dim_tensor(A, B, order, oracle)


# -- harness ----------------------------------------------------------------

def cross_check(A, B, *, seed=None, random_pairs=0, order=GREVLEX, **gen_opts) -> CrossCheckReport:
    """Compare formula and oracle on (A, B) and on ``random_pairs`` seeded random pairs."""
    from .dsl import to_json
    from .randgen import random_pair
    report = CrossCheckReport(seed)
    pairs = [] if A is None else [(A, B)]
    rng = random.Random(seed)
    for _ in range(random_pairs):
        pairs.append(random_pair(rng, **gen_opts))
    for X, Y in pairs:
        report.instances.append({"A": to_json(X), "B": to_json(Y)})
        report.reports.append(dim_tensor_auto(X, Y, order, oracle=True))
    return report
