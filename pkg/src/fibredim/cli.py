"""Command-line front end.

    fibredim dim A.json [B.json] [--at p | --generic]
    fibredim fibre A.json [--at p | --generic]
    fibredim effspec A.json [B.json]
    fibredim tensor A.json B.json [--check] [--witness W.json]
    fibredim bounds A.json
    fibredim af A.json --witness W.json
    fibredim check A.json B.json [--random N] [--seed S]

Exit codes: 0 success, 1 a requested check disagreed, 2 parse or validation
error, 3 unsupported configuration, 4 inconsistent witnesses.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .dimension import Dim
from .dsl import parse_algebra, parse_witness, render
from .errors import (FibredimError, IncompatiblePointError, InconsistentWitnessError,
                     NotATripletError, NotZeroDimensionalError, ParseError,
                     UnsupportedConfigurationError)
from .spectra import (GENERIC, af_check, closed, dim_at, effective_dim, effective_spectrum,
                      fibre_at, fibre_dim, is_effective, seidenberg_bounds)
from .theorems import (cross_check, dim_tensor_at, dim_tensor_at_witnessed, dim_tensor_auto,
                       effective_spectrum_tensor)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3
EXIT_WITNESS = 4

VERBS = ("dim", "fibre", "effspec", "tensor", "bounds", "af", "check")
ARITY = {"dim": (1, 2), "fibre": (1, 1), "effspec": (1, 2), "tensor": (2, 2),
         "bounds": (1, 1), "af": (1, 1), "check": (2, 2)}


class UsageError(FibredimError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="fibredim", description="Fibrewise dimension calculator.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("inputs", nargs="+", metavar="FILE")
    pt = p.add_mutually_exclusive_group()
    pt.add_argument("--at", type=int, metavar="P", help="closed point (p)")
    pt.add_argument("--generic", action="store_true", help="generic point (0)")
    p.add_argument("--json", action="store_true", help="emit one JSON object on stdout")
    p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--witness", metavar="FILE")
    p.add_argument("--check", action="store_true", help="tensor: also run the oracle")
    p.add_argument("--random", type=int, default=0, metavar="N",
                   help="check: number of extra seeded random pairs")
    return p


@dataclass
class Report:
    verb: str
    inputs: list
    result: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)
    ok: bool = True

    def to_json(self):
        return {"verb": self.verb, "inputs": self.inputs, "result": self.result,
                "diagnostics": self.diagnostics}


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load(path):
    try:
        return parse_algebra(_read(path))
    except ParseError as e:
        raise ParseError(f"{path}: {e}") from None


def _point(args):
    if args.generic:
        return GENERIC
    if args.at is not None:
        return closed(args.at)
    return None


def _default_point(A):
    kind = A.base.kind
    if kind in ("Z", "Q"):
        return GENERIC
    if kind == "Fp":
        return closed(A.base.n)
    raise UsageError(f"{A.base} has several primes; choose one with --at")


def _dim_str(d: Dim):
    return "Empty" if d.is_empty else str(d.value)


def _color(text, good):
    if os.environ.get("NO_COLOR") is not None or not sys.stdout.isatty():
        return text
    return f"\033[{32 if good else 31}m{text}\033[0m"


def _cmd_dim(args, algebras, rep):
    order, pt = args.order, _point(args)
    if len(algebras) == 2:
        A, B = algebras
        if pt is not None:
            d = dim_tensor_at(A, B, pt, order)
            rep.result = {"point": pt.to_json(), "dim": d.to_json()}
            rep.lines.append(f"dim at {pt} of A (x) B: {_dim_str(d)}")
            return
        report = dim_tensor_auto(A, B, order, oracle=False)
        rep.result = {"dim": report.formula.to_json(), "path": report.path}
        rep.lines.append(f"dim of A (x) B: {_dim_str(report.formula)} (via {report.path})")
        return
    (A,) = algebras
    if pt is not None:
        d = dim_at(A, pt, order)
        rep.result = {"point": pt.to_json(), "dim": d.to_json()}
        rep.lines.append(f"dim at {pt}: {_dim_str(d)}")
        return
    e = effective_dim(A, order)
    if not e.is_empty and e.value > 0:
        raise UnsupportedConfigurationError(
            "absolute dimension needs effective dimension 0, but this algebra has "
            "characteristic 0 over Z; use --at or the bounds verb")
    d = fibre_dim(A, order)
    rep.result = {"dim": d.to_json(), "effective_dim": e.to_json()}
    rep.lines.append(f"dim: {_dim_str(d)}")


def _cmd_fibre(args, algebras, rep):
    (A,) = algebras
    pt = _point(args) or _default_point(A)
    fr = fibre_at(A, pt)
    d = dim_at(A, pt, args.order)
    eff = is_effective(A, pt, args.order)
    rep.result = {"point": pt.to_json(), "fibre": json.loads(render(fr.algebra)),
                  "effective": eff, "dim": d.to_json()}
    rep.lines += [f"fibre at {pt}:", render(fr.algebra),
                  f"effective: {'yes' if eff else 'no'}", f"dim: {_dim_str(d)}"]


def _cmd_effspec(args, algebras, rep):
    if len(algebras) == 2:
        spec = effective_spectrum_tensor(*algebras, args.order)
    else:
        spec = effective_spectrum(algebras[0], args.order)
    rep.result = spec.to_json()
    rep.lines.append(f"effective spectrum: {spec}")


def _cmd_tensor(args, algebras, rep):
    A, B = algebras
    report = dim_tensor_auto(A, B, args.order, oracle=args.check)
    rep.result = report.to_json()
    rep.lines.append(f"path: {report.path}")
    rep.lines.append(f"dim(A (x) B) = {_dim_str(report.formula)}")
    for row in report.points:
        o = "" if row.oracle is None else f", oracle {_dim_str(row.oracle)}"
        rep.lines.append(f"  {row.point}: dim_A {_dim_str(row.dim_a)}, dim_B "
                         f"{_dim_str(row.dim_b)}, formula {_dim_str(row.formula)}{o}")
    if args.check:
        rep.lines.append("oracle: " + _dim_str(report.oracle))
        rep.lines.append("agreement: " + _color(str(report.agreement).lower(),
                                                report.agreement))
        rep.ok = report.agreement
    if args.witness:
        w = parse_witness(_read(args.witness), A, args.order)
        d = dim_tensor_at_witnessed(A, B, w.point, (w.prime,), w.components,
                                    factor=w.factor, order=args.order)
        rep.result["witnessed"] = {"point": w.point.to_json(), "dim": d.to_json()}
        rep.lines.append(f"witness-restricted value at {w.point}: {_dim_str(d)}")


def _cmd_bounds(args, algebras, rep):
    b = seidenberg_bounds(algebras[0], args.order)
    rep.result = b.to_json()
    rep.lines.append(f"fibre_dim {_dim_str(b.fibre_dim)}, "
                     f"effective_dim {_dim_str(b.effective_dim)}")
    rep.lines.append(f"{_dim_str(b.lower)} <= dim <= {_dim_str(b.upper)}")
    if b.dim is not None:
        rep.lines.append(f"dim = {_dim_str(b.dim)}")
    if b.polynomial_lower is not None:
        rep.lines.append(f"polynomial ring lower bound: {_dim_str(b.polynomial_lower)}")


def _cmd_af(args, algebras, rep):
    (A,) = algebras
    if not args.witness:
        raise UsageError("af needs --witness FILE")
    w = parse_witness(_read(args.witness), A, args.order)
    pt = _point(args)
    if pt is not None and pt != w.point:
        raise IncompatiblePointError(f"--at {pt} differs from the witness fibre {w.point}")
    res = af_check(A, w.point, w.prime, w.components, factor=w.factor, order=args.order)
    rep.result = {"point": w.point.to_json(), **res.to_json()}
    rep.lines.append(f"at {w.point}: ht {_dim_str(res.height)} + td(A/P) "
                     f"{_dim_str(res.td_quotient)} vs td(A_P) {_dim_str(res.td_local)}")
    rep.lines.append("altitude formula holds: " + _color(str(res.holds).lower(), res.holds))


def _cmd_check(args, algebras, rep):
    A, B = algebras
    cc = cross_check(A, B, seed=args.seed, random_pairs=args.random, order=args.order)
    rep.result = cc.to_json()
    rep.lines.append(f"seed {cc.seed}: {len(cc.reports)} instances, {cc.failures} failures")
    rep.ok = cc.failures == 0


COMMANDS = {"dim": _cmd_dim, "fibre": _cmd_fibre, "effspec": _cmd_effspec,
            "tensor": _cmd_tensor, "bounds": _cmd_bounds, "af": _cmd_af, "check": _cmd_check}


def _exit_code(err):
    if isinstance(err, InconsistentWitnessError):
        return EXIT_WITNESS
    if isinstance(err, (UnsupportedConfigurationError, NotATripletError,
                        NotZeroDimensionalError)):
        return EXIT_UNSUPPORTED
    return EXIT_INVALID


def run(argv, stdout=None, stderr=None):
    """Execute one command; returns (exit code, Report or None)."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    verb, inputs, as_json = None, [], "--json" in argv
    rep = None
    try:
        args = build_parser().parse_args(argv)
        verb, inputs, as_json = args.verb, list(args.inputs), args.json
        lo, hi = ARITY[verb]
        if not lo <= len(inputs) <= hi:
            want = str(lo) if lo == hi else f"{lo} or {hi}"
            raise UsageError(f"{verb} takes {want} input file(s), got {len(inputs)}")
        algebras = [_load(p) for p in inputs]
        rep = Report(verb, inputs)
        COMMANDS[verb](args, algebras, rep)
    except FibredimError as e:
        code = _exit_code(e)
        print(f"fibredim: error: {e}", file=stderr)
        if as_json:
            payload = {"verb": verb, "inputs": inputs,
                       "error": {"kind": type(e).__name__, "message": str(e)},
                       "exit_code": code}
            print(json.dumps(payload, indent=2), file=stdout)
        return code, None
    for d in rep.diagnostics:
        print(d, file=stderr)
    if as_json:
        print(json.dumps(rep.to_json(), indent=2), file=stdout)
    else:
        for line in rep.lines:
            print(line, file=stdout)
    return (EXIT_OK if rep.ok else EXIT_CHECK_FAILED), rep


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    if argv in ([], ["-h"], ["--help"]):
        build_parser().print_help()
        return EXIT_OK if argv else EXIT_INVALID
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
