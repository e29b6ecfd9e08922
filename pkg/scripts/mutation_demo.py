"""Perturb each ξ_λ pairing of one triple by ±1 and show that the comparison fails.

usage: python3 scripts/mutation_demo.py [family] [n]
"""
import sys
from dataclasses import replace

from bkn_forge.catalog import FAMILIES
from bkn_forge.monoid import compare_monoids, putcha_renner, vinberg_slice


def main() -> int:
    family = sys.argv[1] if len(sys.argv) > 1 else "gln-std"
    n = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    f = FAMILIES[family](n)
    s = vinberg_slice(f.g, f.lam)
    pr = putcha_renner(f.g, f.lam)
    print(f"{f.name}: unperturbed equal = {compare_monoids(s, pr).equal}")
    missed = 0
    for i, gen in enumerate(s.generators):
        for delta in (1, -1):
            gens = list(s.generators)
            gens[i] = replace(gen, pairing=gen.pairing + delta)
            mc = compare_monoids(s.with_generators(gens), pr)
            how = "cones differ" if not mc.cones.equal else "audit mismatch"
            print(f"  ω{gen.omega} weight {gen.weight} pairing {gen.pairing}{delta:+d}: "
                  f"{'FAIL' if not mc.equal else 'undetected'} ({how})")
            missed += mc.equal
    return 1 if missed else 0


if __name__ == "__main__":
    sys.exit(main())
