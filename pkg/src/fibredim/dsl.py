"""JSON presentation DSL: parsing and canonical serialization.

Affine:   {"base": {"kind": "Z"|"Zmod"|"Fp"|"Q", "n": int}, "vars": [...], "relations": [...]}
Product:  {"product": [<affine>, ...]}
Sugar:    {"boolean_atoms": k}
Witness:  {"fibre": "generic"|p, "prime": [...], "components": [[...], ...], "factor": i}

Relations are strings over integer literals, variable names, ``+ - * ^`` and
parentheses; ``^`` takes a non-negative integer literal.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional, Tuple

from .domains import QQ
from .errors import ParseError
from .poly import GREVLEX, Polynomial
from .presentation import Affine, BaseRing, Product, boolean_atoms
from .spectra import PrimeWitness, SpecPoint, fibre_at

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|(\^|\+|-|\*|\(|\)))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[col]!r}", 1, col + 1)
        kind = "int" if m.group(1) else "name" if m.group(2) else "op"
        start = m.start(m.lastindex)
        out.append((kind, m.group(m.lastindex), start + 1))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _ExprParser:
    def __init__(self, text, vars, domain, order):
        self.toks = _tokenize(text)
        self.i = 0
        self.index = {v: k for k, v in enumerate(vars)}
        self.domain = domain
        self.order = order
        self.n = len(vars)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, 1, tok[2])

    def const(self, c):
        return Polynomial.constant(c, self.domain, self.n, self.order)

    def parse(self):
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] == "op" and tok[1] == "-":
                self.error("exponent must be a non-negative integer literal", tok)
            if tok[0] != "int":
                self.error("exponent must be a non-negative integer literal", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        if tok[0] == "int":
            return self.const(int(tok[1]))
        if tok[0] == "name":
            if tok[1] not in self.index:
                self.error(f"unknown variable {tok[1]!r}", tok)
            return Polynomial.variable(self.index[tok[1]], self.domain, self.n, self.order)
        if tok[1] == "(":
            p = self.expr()
            if self.take()[1] != ")":
                self.error("expected ')'", self.toks[self.i - 1])
            return p
        self.error(f"unexpected token {tok[1] or 'end of input'!r}", tok)


def parse_polynomial(text, vars, domain, order=GREVLEX) -> Polynomial:
    return _ExprParser(text, tuple(vars), domain, order).parse()


def _locate(doc_text, needle, start):
    """1-based (line, column) of the first occurrence of ``needle`` at/after ``start``."""
    if doc_text is None:
        return None, None, start
    k = doc_text.find(needle, start)
    if k < 0:
        return None, None, start
    line = doc_text.count("\n", 0, k) + 1
    col = k - (doc_text.rfind("\n", 0, k) + 1) + 1
    return line, col, k + len(needle)


def _parse_affine(obj, doc_text=None, cursor=0):
    if not isinstance(obj, dict):
        raise ParseError("an affine presentation must be a JSON object")
    unknown = set(obj) - {"base", "vars", "relations"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    base_obj = obj.get("base")
    if not isinstance(base_obj, dict) or "kind" not in base_obj:
        raise ParseError("missing or malformed 'base'")
    n = base_obj.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool)):
        raise ParseError("base modulus must be an integer")
    base = BaseRing(base_obj["kind"], n)
    vars = obj.get("vars", [])
    if not isinstance(vars, list) or not all(isinstance(v, str) for v in vars):
        raise ParseError("'vars' must be a list of names")
    for v in vars:
        if not re.fullmatch(r"[a-zA-Z][a-zA-Z0-9_]*", v):
            raise ParseError(f"invalid variable name {v!r}")
    rels = []
    for text in obj.get("relations", []):
        if not isinstance(text, str):
            raise ParseError("relations must be strings")
        line, col, cursor = _locate(doc_text, json.dumps(text), cursor)
        try:
            rels.append(parse_polynomial(text, vars, base.coefficient_domain))
        except ParseError as e:
            if line is None:
                raise ParseError(f"in relation {text!r}: {e.args[0]}") from None
            # col is the opening quote, so expression column k sits at col + k
            raise ParseError(f"in relation {text!r}: {str(e).split(' (line')[0]}",
                             line, col + e.column) from None
    return Affine(base, tuple(vars), tuple(rels)), cursor


def from_json(obj, doc_text=None):
    if isinstance(obj, dict) and "boolean_atoms" in obj:
        k = obj["boolean_atoms"]
        if not isinstance(k, int) or isinstance(k, bool) or len(obj) != 1:
            raise ParseError("'boolean_atoms' must be the only key and an integer")
        return boolean_atoms(k)
    if isinstance(obj, dict) and "product" in obj:
        if len(obj) != 1 or not isinstance(obj["product"], list):
            raise ParseError("'product' must be the only key and hold a list")
        factors, cursor = [], 0
        for f in obj["product"]:
            a, cursor = _parse_affine(f, doc_text, cursor)
            factors.append(a)
        return Product(tuple(factors))
    return _parse_affine(obj, doc_text)[0]


def parse_algebra(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    return from_json(obj, text)


def _render_relation(r, vars):
    if r.domain == QQ:
        r = r.primitive_integer()
    return r.to_str(list(vars))


def _affine_json(a: Affine):
    return {
        "base": a.base.to_json(),
        "vars": list(a.vars),
        "relations": [_render_relation(r, a.vars) for r in a.relations],
    }


def to_json(A):
    if isinstance(A, Product):
        return {"product": [_affine_json(f) for f in A.factors]}
    return _affine_json(A)


def render(A) -> str:
    """Canonical serializer; ``parse_algebra(render(A)) == A``."""
    return json.dumps(to_json(A), indent=2)


@dataclass(frozen=True)
class WitnessFile:
    """A prime witness and component list for one fibre of an algebra."""

    point: SpecPoint
    prime: PrimeWitness
    components: Tuple[PrimeWitness, ...]
    factor: Optional[int] = None


def parse_witness(text: str, A, order=GREVLEX) -> WitnessFile:
    """Parse {"fibre": "generic"|p, "prime": [...], "components": [[...], ...]}.

    Expressions are read in the variables and coefficient field of the
    fibre; an optional "factor" index selects the factor of a product.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid witness JSON: {e.msg}", e.lineno, e.colno) from None
    if not isinstance(obj, dict):
        raise ParseError("a witness file must be a JSON object")
    unknown = set(obj) - {"fibre", "prime", "components", "factor"}
    if unknown:
        raise ParseError(f"unknown witness keys {sorted(unknown)}")
    for k in ("fibre", "prime", "components"):
        if k not in obj:
            raise ParseError(f"witness file is missing {k!r}")
    try:
        pt = SpecPoint.from_json(obj["fibre"])
    except (TypeError, ValueError) as e:
        raise ParseError(f"bad fibre point: {e}") from None
    factor = obj.get("factor")
    fr = fibre_at(A, pt)
    if isinstance(fr.algebra, Product):
        if not isinstance(factor, int) or not 0 <= factor < len(fr.algebra.factors):
            raise ParseError("witnesses on a product need a valid 'factor' index")
        f = fr.algebra.factors[factor]
    else:
        if factor not in (None, 0):
            raise ParseError("'factor' must be 0 or absent for a single presentation")
        factor = None
        f = fr.algebra

    def ideal(gens, where):
        if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            raise ParseError(f"{where} must be a list of expression strings")
        return PrimeWitness(tuple(
            parse_polynomial(g, f.vars, f.base.coefficient_domain, order) for g in gens))

    comps = obj["components"]
    if not isinstance(comps, list) or not comps:
        raise ParseError("'components' must be a non-empty list")
    return WitnessFile(pt, ideal(obj["prime"], "'prime'"),
                       tuple(ideal(c, "each component") for c in comps), factor)
