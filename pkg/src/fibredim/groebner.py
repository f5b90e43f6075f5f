"""Buchberger's algorithm over fields, strong Groebner bases over ZZ, and
the combinatorial Krull dimension of affine algebras.

Internally polynomials are plain ``{monomial: coefficient}`` dicts; the
public functions take and return :class:`~fibredim.poly.Polynomial`.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm
from typing import Tuple

from .dimension import EMPTY, Dim, dim_sup
from .domains import ZZ, PrimeField, require_field, same_domain
from .errors import DomainMismatchError, WrongDomainError
from .poly import (GREVLEX, MonomialOrder, Polynomial, as_order, mono_div,
                   mono_divides, mono_lcm, mono_mul)

FIELD_REDUCED = "field-reduced"
INTEGER_STRONG = "integer-strong"


@dataclass(frozen=True)
class GroebnerBasis:
    domain: object
    nvars: int
    order: MonomialOrder
    elements: Tuple[Polynomial, ...]
    strength: str

    @property
    def leading_monomials(self):
        return [g.lm for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def dump(self, names=None) -> str:
        """One polynomial per line, terms in order."""
        return "\n".join(g.to_str(names) for g in self.elements)


# -- dict-level helpers -------------------------------------------------------

def _normalizer(domain):
    if isinstance(domain, PrimeField):
        p = domain.p
        return lambda v: v % p
    return lambda v: v


def _sub_scaled(p, g, c, shift, norm):
    """p -= c * x^shift * g, in place."""
    for m, gc in g.items():
        nm = mono_mul(shift, m)
        v = norm(p.get(nm, 0) - c * gc)
        if v:
            p[nm] = v
        else:
            p.pop(nm, None)


def _nf_field(f, basis, key, norm):
    """Full reduction of dict ``f`` by monic (lm, dict) pairs."""
    p = dict(f)
    r = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if mono_divides(lm, m):
                _sub_scaled(p, g, c, mono_div(m, lm), norm)
                break
        else:
            r[m] = c
            del p[m]
    return r


def _nf_integer(f, basis, key):
    """Full reduction over ZZ by (lm, lc, dict) triples with lc > 0.

    Each term is reduced modulo the divisor with the smallest leading
    coefficient, leaving a remainder in [0, lc).
    """
    ident = _normalizer(ZZ)
    p = dict(f)
    r = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        best = None
        for item in basis:
            if mono_divides(item[0], m) and (best is None or item[1] < best[1]):
                best = item
        if best is not None:
            lm, b, g = best
            q, rem = divmod(c, b)
            if q:
                _sub_scaled(p, g, q, mono_div(m, lm), ident)
            if not rem:
                continue
            c = rem
        r[m] = c
        p.pop(m, None)
    return r


def _top_reduce_integer(f, basis, key):
    """Reduce only the leading term of ``f`` until it is not strongly reducible."""
    ident = _normalizer(ZZ)
    p = dict(f)
    while p:
        m = max(p, key=key)
        c = p[m]
        best = None
        for item in basis:
            if mono_divides(item[0], m) and (best is None or item[1] < best[1]):
                best = item
        if best is None:
            return p
        lm, b, g = best
        q = c // b
        if q:
            _sub_scaled(p, g, q, mono_div(m, lm), ident)
        if m in p:
            return p
    return p


def _lead(p, key):
    m = max(p, key=key)
    return m, p[m]


def _monic(p, key, domain):
    m, c = _lead(p, key)
    inv = domain.inv(c)
    norm = _normalizer(domain)
    return {k: norm(v * inv) for k, v in p.items()}


def _spoly_dict(f, g, key, norm):
    (mf, cf), (mg, cg) = _lead(f, key), _lead(g, key)
    L = mono_lcm(mf, mg)
    out = {}
    _sub_scaled(out, f, -cg, mono_div(L, mf), norm)
    _sub_scaled(out, g, cf, mono_div(L, mg), norm)
    return out


def _spoly_int(f, g, key):
    (mf, a), (mg, b) = _lead(f, key), _lead(g, key)
    L, l = mono_lcm(mf, mg), lcm(a, b)
    out = {}
    ident = _normalizer(ZZ)
    _sub_scaled(out, f, -(l // a), mono_div(L, mf), ident)
    _sub_scaled(out, g, l // b, mono_div(L, mg), ident)
    return out


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _gpoly_int(f, g, key):
    (mf, a), (mg, b) = _lead(f, key), _lead(g, key)
    L = mono_lcm(mf, mg)
    _, u, v = _xgcd(a, b)
    out = {}
    ident = _normalizer(ZZ)
    _sub_scaled(out, f, -u, mono_div(L, mf), ident)
    _sub_scaled(out, g, -v, mono_div(L, mg), ident)
    return out


def _check_gens(gens, domain, nvars, order):
    gens = list(gens)
    if gens:
        domain = same_domain(*(g.domain for g in gens)) if domain is None else \
            same_domain(domain, *(g.domain for g in gens))
        nv = {g.nvars for g in gens}
        if nvars is not None:
            nv.add(nvars)
        if len(nv) != 1:
            raise DomainMismatchError(f"generators live in different rings: {sorted(nv)}")
        nvars = nv.pop()
    if domain is None or nvars is None:
        raise ValueError("empty generator list needs explicit domain and nvars")
    return [g.reorder(order) for g in gens], domain, nvars


def _select(pairs, lms, key):
    def rank(pair):
        L = mono_lcm(lms[pair[0]], lms[pair[1]])
        return (sum(L), key(L), pair)
    best = min(pairs, key=rank)
    pairs.remove(best)
    return best


def _gm_update(pairs, lms, new):
    """Gebauer-Moeller pair pruning when basis element ``new`` is added."""
    lmf = lms[new]
    pairs = {(i, j) for (i, j) in pairs
             if not mono_divides(lmf, mono_lcm(lms[i], lms[j]))
             or mono_lcm(lms[i], lms[j]) == mono_lcm(lms[i], lmf)
             or mono_lcm(lms[i], lms[j]) == mono_lcm(lms[j], lmf)}
    by_lcm = {}
    for i in range(new):
        by_lcm.setdefault(mono_lcm(lms[i], lmf), []).append(i)
    kept = []
    for L in sorted(by_lcm, key=lambda m: (sum(m), m)):
        if not any(mono_divides(K, L) for K in kept):
            kept.append(L)
    for L in kept:
        idx = by_lcm[L]
        if not any(mono_lcm(lms[i], lmf) == mono_mul(lms[i], lmf) for i in idx):
            pairs.add((min(idx), new))
    return pairs


def buchberger_field(gens, order=GREVLEX, *, domain=None, nvars=None,
                     gebauer_moeller=False) -> GroebnerBasis:
    """Reduced Groebner basis over GF(p) or QQ (normal selection strategy)."""
    order = as_order(order)
    gens, domain, nvars = _check_gens(gens, domain, nvars, order)
    if not domain.is_field:
        raise WrongDomainError("buchberger_field needs field coefficients; "
                               "use buchberger_integer over ZZ")
    key, norm = order.key, _normalizer(domain)
    one = (0,) * nvars

    G, lms, pairs = [], [], set()

    def add(h):
        h = _monic(h, key, domain)
        G.append(h)
        lms.append(_lead(h, key)[0])
        k = len(G) - 1
        nonlocal pairs
        if gebauer_moeller:
            pairs = _gm_update(pairs, lms, k)
        else:
            for i in range(k):
                # product criterion: coprime leading monomials
                if mono_lcm(lms[i], lms[k]) != mono_mul(lms[i], lms[k]):
                    pairs.add((i, k))

    for g in gens:
        h = _nf_field(g.as_dict(), list(zip(lms, G)), key, norm)
        if h:
            add(h)
            if lms[-1] == one:
                break
    while pairs and one not in lms:
        i, j = _select(pairs, lms, key)
        h = _nf_field(_spoly_dict(G[i], G[j], key, norm), list(zip(lms, G)), key, norm)
        if h:
            add(h)

    if one in lms:
        elements = [Polynomial.constant(1, domain, nvars, order)]
    else:
        elements = [Polynomial.from_dict(g, domain, nvars, order)
                    for g in _interreduce_field(G, lms, key, norm)]
    elements.sort(key=lambda p: key(p.lm), reverse=True)
    return GroebnerBasis(domain, nvars, order, tuple(elements), FIELD_REDUCED)


def _interreduce_field(G, lms, key, norm):
    minimal = []
    for idx in sorted(range(len(G)), key=lambda i: (key(lms[i]), i)):
        if not any(mono_divides(lms[j], lms[idx]) for j in minimal):
            minimal.append(idx)
    out = []
    for idx in minimal:
        others = [(lms[j], G[j]) for j in minimal if j != idx]
        out.append(_nf_field(G[idx], others, key, norm))
    return out


def buchberger_integer(gens, order=GREVLEX, *, domain=None, nvars=None) -> GroebnerBasis:
    """Strong Groebner basis over ZZ via S-polynomials and GCD-polynomials.

    An element whose leading term becomes strongly divisible by a newer
    element is retired and its remainder re-enters the basis; pairs that
    touch retired elements are skipped. Pairs are taken in order of sugar
    degree, which coincides with the lcm degree for homogeneous input.
    """
    order = as_order(order)
    gens, domain, nvars = _check_gens(gens, domain, nvars, order)
    if domain != ZZ:
        raise WrongDomainError(f"buchberger_integer needs ZZ coefficients, got {domain}")
    key = order.key

    G, lms, lcs, alive, sugar = [], [], [], [], []
    heap = []

    def basis():
        return [(lms[i], lcs[i], G[i]) for i in range(len(G)) if alive[i]]

    def push(i, k):
        L = mono_lcm(lms[i], lms[k])
        s = max(sugar[i] + sum(L) - sum(lms[i]), sugar[k] + sum(L) - sum(lms[k]))
        heapq.heappush(heap, (s, key(L), i, k))

    def add(h, s):
        m, c = _lead(h, key)
        if c < 0:
            h = {t: -v for t, v in h.items()}
            c = -c
        retired = [i for i in range(len(G)) if alive[i]
                   and mono_divides(m, lms[i]) and lcs[i] % c == 0]
        for i in retired:
            alive[i] = False
        k = len(G)
        G.append(h)
        lms.append(m)
        lcs.append(c)
        alive.append(True)
        sugar.append(max(s, sum(m)))
        for i in range(k):
            if alive[i]:
                push(i, k)
        for i in retired:
            r = _top_reduce_integer(G[i], basis(), key)
            if r:
                add(r, sugar[i])

    for g in gens:
        h = _nf_integer(g.as_dict(), basis(), key)
        if h:
            add(h, g.total_degree())
    while heap:
        s, _, i, j = heapq.heappop(heap)
        if not (alive[i] and alive[j]):
            continue
        a, b = lcs[i], lcs[j]
        cands = []
        # S-polynomial is redundant for coprime leading monomials and coefficients
        if gcd(a, b) != 1 or mono_lcm(lms[i], lms[j]) != mono_mul(lms[i], lms[j]):
            cands.append(_spoly_int(G[i], G[j], key))
        if a % b and b % a:
            cands.append(_gpoly_int(G[i], G[j], key))
        for c in cands:
            h = _top_reduce_integer(c, basis(), key)
            if h:
                add(h, s)

    live = [i for i in range(len(G)) if alive[i]]
    elements = [Polynomial.from_dict(g, ZZ, nvars, order)
                for g in _interreduce_integer([G[i] for i in live], [lms[i] for i in live],
                                              [lcs[i] for i in live], key)]
    elements.sort(key=lambda p: (key(p.lm), p.lc), reverse=True)
    return GroebnerBasis(ZZ, nvars, order, tuple(elements), INTEGER_STRONG)


def _interreduce_integer(G, lms, lcs, key):
    minimal = []
    for idx in sorted(range(len(G)), key=lambda i: (key(lms[i]), lcs[i], i)):
        if not any(mono_divides(lms[j], lms[idx]) and lcs[idx] % lcs[j] == 0
                   for j in minimal):
            minimal.append(idx)
    out = []
    for idx in minimal:
        others = [(lms[j], lcs[j], G[j]) for j in minimal if j != idx]
        lm, lc = lms[idx], lcs[idx]
        tail = {m: c for m, c in G[idx].items() if m != lm}
        reduced = _nf_integer(tail, others, key)
        reduced[lm] = lc
        out.append(reduced)
    return out


def groebner(gens, order=GREVLEX, *, domain=None, nvars=None) -> GroebnerBasis:
    gens = list(gens)
    dom = domain if domain is not None else (gens[0].domain if gens else None)
    if dom == ZZ:
        return buchberger_integer(gens, order, domain=domain, nvars=nvars)
    return buchberger_field(gens, order, domain=domain, nvars=nvars)


@lru_cache(maxsize=4096)
def _cached_groebner(gens, order, domain, nvars):
    return groebner(gens, order, domain=domain, nvars=nvars)


def cached_groebner(gens, order=GREVLEX, *, domain, nvars) -> GroebnerBasis:
    """Memoized :func:`groebner`; the inputs are immutable so results are identical."""
    order = as_order(order)
    return _cached_groebner(tuple(g.reorder(order) for g in gens), order, domain, nvars)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    same_domain(f.domain, gb.domain)
    if f.nvars != gb.nvars:
        raise DomainMismatchError("polynomial and basis live in different rings")
    key = gb.order.key
    if gb.strength == INTEGER_STRONG:
        basis = [(g.lm, g.lc, g.as_dict()) for g in gb.elements]
        r = _nf_integer(f.as_dict(), basis, key)
    else:
        basis = [(g.lm, g.as_dict()) for g in gb.elements]
        r = _nf_field(f.as_dict(), basis, key, _normalizer(gb.domain))
    return Polynomial.from_dict(r, gb.domain, gb.nvars, gb.order)


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial; over ZZ uses the lcm of the leading coefficients."""
    key = f.order.key
    if f.domain == ZZ:
        d = _spoly_int(f.as_dict(), g.as_dict(), key)
    else:
        d = _spoly_dict(f.as_dict(), g.as_dict(), key, _normalizer(f.domain))
    return Polynomial.from_dict(d, f.domain, f.nvars, f.order)


def gpoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """GCD-polynomial over ZZ: leading term gcd(lc f, lc g) * lcm(lm f, lm g)."""
    if f.domain != ZZ:
        raise WrongDomainError("G-polynomials are defined over ZZ only")
    d = _gpoly_int(f.as_dict(), g.as_dict(), f.order.key)
    return Polynomial.from_dict(d, ZZ, f.nvars, f.order)


def is_trivial(gb: GroebnerBasis) -> bool:
    """True iff the ideal is the whole ring (a unit constant is in the basis)."""
    for g in gb.elements:
        if g.is_constant() and g:
            if gb.domain.is_field or abs(g.lc) == 1:
                return True
    return False


def characteristic(A, order=GREVLEX) -> int:
    """Non-negative generator of the kernel of Z -> A, for bases Z and Zmod(n).

    Returns 1 exactly for the zero ring; a product gets the lcm of its factors.
    """
    result = 1
    for f in A.factors:
        if f.base.kind not in ("Z", "Zmod"):
            raise WrongDomainError(f"characteristic needs base Z or Zmod, got {f.base}")
        gb = cached_groebner(f.lifted_relations(order), order, domain=ZZ, nvars=f.nvars)
        consts = [g.lc for g in gb.elements if g.is_constant()]
        n = min(consts) if consts else 0
        if n == 0:
            return 0
        result = lcm(result, n)
    return result


# -- dimension ----------------------------------------------------------------

def _support_mask(m):
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def max_independent_set(lead_monomials, nvars) -> int:
    """Largest variable subset S such that no leading monomial is supported in S.

    Depth-first search with a bound and a memo of visited subsets; returns
    -1 when the monomial 1 is present (no subset qualifies).
    """
    supports = {_support_mask(m) for m in lead_monomials}
    if 0 in supports:
        return -1
    best = 0
    seen = set()

    def independent(S):
        return all(s & ~S for s in supports)

    def dfs(S, start, size):
        nonlocal best
        if S in seen:
            return
        seen.add(S)
        best = max(best, size)
        for i in range(start, nvars):
            if size + (nvars - i) <= best:
                return
            T = S | (1 << i)
            if independent(T):
                dfs(T, i + 1, size + 1)

    dfs(0, 0, 0)
    return best


def krull_dim_affine(A, order=GREVLEX) -> Dim:
    """Krull dimension of an algebra presented over GF(p) or QQ."""
    out = []
    for f in A.factors:
        dom = require_field(f.base.coefficient_domain)
        gb = cached_groebner(f.relations, order, domain=dom, nvars=f.nvars)
        d = max_independent_set(gb.leading_monomials, f.nvars)
        out.append(EMPTY if d < 0 else Dim(d))
    return dim_sup(out)
