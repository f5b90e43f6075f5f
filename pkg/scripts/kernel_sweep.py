"""Randomized sweep of the Groebner kernel over QQ, GF(p) and ZZ.

For each random ideal: generators, S-polynomials (and G-polynomials over ZZ)
reduce to zero, dimension agrees between grevlex and lex, and random ideal
combinations reduce to zero.
"""

import argparse
import itertools
import random
import time

from fibredim.config import KernelSweepConfig
from fibredim.domains import GF, QQ, ZZ
from fibredim.groebner import gpoly, groebner, max_independent_set, normal_form, spoly
from fibredim.poly import LEX
from fibredim.randgen import random_combination, random_ideal


def sweep(domain, cfg: KernelSweepConfig):
    rng = random.Random(cfg.seed)
    degree = cfg.integer_max_degree if domain == ZZ else cfg.max_degree
    bad, sizes, worst = 0, [], 0.0
    for _ in range(cfg.count):
        gens, n = random_ideal(rng, domain, max_vars=cfg.max_vars, max_gens=cfg.max_gens,
                               max_degree=degree)
        t0 = time.time()
        gb = groebner(gens)
        lex = groebner([g.reorder(LEX) for g in gens], LEX)
        worst = max(worst, time.time() - t0)
        sizes.append(len(gb))
        ok = all(normal_form(g, gb).is_zero() for g in gens)
        for a, b in itertools.combinations(gb.elements, 2):
            ok = ok and normal_form(spoly(a, b), gb).is_zero()
            if domain == ZZ:
                ok = ok and normal_form(gpoly(a, b), gb).is_zero()
        ok = ok and (max_independent_set(gb.leading_monomials, n)
                     == max_independent_set(lex.leading_monomials, n))
        for _ in range(cfg.combinations):
            ok = ok and normal_form(random_combination(rng, gens), gb).is_zero()
        bad += not ok
    return bad, sum(sizes) / len(sizes), max(sizes), worst


def main():
    ap = argparse.ArgumentParser(description="Groebner kernel sweep")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--integer-max-degree", type=int, default=2)
    args = ap.parse_args()
    cfg = KernelSweepConfig(seed=args.seed, count=args.count, max_degree=args.max_degree,
                            integer_max_degree=args.integer_max_degree)
    failed = 0
    for domain in (QQ, GF(2), GF(3), GF(5), ZZ):
        t0 = time.time()
        bad, mean, biggest, worst = sweep(domain, cfg)
        failed += bad
        print(f"{str(domain):<6} {cfg.count - bad}/{cfg.count} ok, basis size mean {mean:.1f} "
              f"max {biggest}, slowest pair of bases {worst:.3f}s, total {time.time() - t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
