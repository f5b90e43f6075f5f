"""Formula vs oracle on a seeded batch of random pairs over Z.

    python scripts/run_crosscheck.py --seed 1 --pairs 200 --out crosscheck.json
"""

import argparse
import json
import time
from collections import Counter

from fibredim.config import RandomPairConfig
from fibredim.theorems import cross_check


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--pairs", type=int, default=100)
    ap.add_argument("--max-degree", type=int, default=2)
    ap.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    ap.add_argument("--out", help="write the full report as JSON")
    args = ap.parse_args()

    cfg = RandomPairConfig(seed=args.seed, pairs=args.pairs, max_degree=args.max_degree,
                           order=args.order)
    t0 = time.time()
    report = cross_check(None, None, seed=cfg.seed, random_pairs=cfg.pairs, order=cfg.order,
                         **cfg.generator_options())
    elapsed = time.time() - t0

    dims = Counter(str(r.formula) for r in report.reports)
    print(f"seed {cfg.seed}: {len(report.reports)} pairs in {elapsed:.2f}s, "
          f"{report.failures} disagreements")
    print("tensor dimensions:", ", ".join(f"{k}: {v}" for k, v in sorted(dims.items())))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"config": cfg.to_json(), "report": report.to_json()}, fh, indent=2)
    return 1 if report.failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
