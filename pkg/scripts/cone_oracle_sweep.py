"""Compare the double-description dual with Fourier–Motzkin on random cones.

usage: python3 scripts/cone_oracle_sweep.py [--count N] [--max-rank D] [--bound B] [--seed S]
"""
import argparse
import random
import sys

from bkn_forge.cones import cone_from_generators, cones_equal, dual_cone
from bkn_forge.fm import dual_generators_fm


def main() -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--bound", type=int, default=5)
    p.add_argument("--max-gens", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    rng = random.Random(args.seed)
    bad = 0
    for i in range(args.count):
        d = rng.randint(1, args.max_rank)
        gens = [tuple(rng.randint(-args.bound, args.bound) for _ in range(d))
                for _ in range(rng.randint(1, args.max_gens))]
        dd = dual_cone(cone_from_generators(gens, d))
        fm = cone_from_generators(dual_generators_fm(gens, d), d)
        if not cones_equal(dd, fm).equal:
            bad += 1
            print(f"mismatch #{i}: d={d} gens={gens}")
    print(f"{args.count - bad}/{args.count} cones agree")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
