"""The bounded search for a small quadratic nonresidue.

Scanning c = 2, 3, 5, 6, ... (squares skipped) for jacobi(c, n) = -1 and
giving up after ceil(n^delta) candidates is guaranteed to succeed for every
odd nonsquare n once delta exceeds 1/(3*sqrt(e)) = 0.2021...; the default
exponent 0.2025 sits just above that threshold.  Along the way a zero
symbol hands back a factor of n for free.

Run: python demos/02_small_nonresidue_search.py
"""

import random
from collections import Counter

from frobprime import (
    DEFAULT_DELTA,
    DELTA_THRESHOLD,
    SearchConfig,
    find_small_nonresidue,
)

SEED = 20240902


def main() -> None:
    print(f"guarantee threshold: 1/(3*sqrt(e)) = {DELTA_THRESHOLD:.10f}")
    print(f"default search exponent: {DEFAULT_DELTA} = {float(DEFAULT_DELTA)}")
    print()

    print("=== small moduli, candidate by candidate ===")
    for n in (13, 7, 15, 169, 119):
        cfg = SearchConfig.for_modulus(n)
        out = find_small_nonresidue(n, cfg)
        print(f"  n = {n:>4} (cap {cfg.cap}): {out.kind:<9} c={out.c} factor={out.factor} examined={out.examined}")
    print("  (169 = 13^2 has no nonresidue at all; 119's first three candidates")
    print("   are all residues, and its tiny cap is exhausted -- at 48 bits and")
    print("   beyond, the cap grows fast enough that this can no longer happen)")
    print()

    print("=== how small is the found c in practice? ===")
    rng = random.Random(SEED)
    counts = Counter()
    caps = []
    for _ in range(2000):
        n = rng.getrandbits(64) | (1 << 63) | 1
        cfg = SearchConfig.for_modulus(n)
        caps.append(cfg.cap)
        out = find_small_nonresidue(n, cfg)
        counts[out.kind] += 1
        if out.c is not None and out.c <= 7:
            counts[f"c={out.c}"] += 1
    print(f"  2000 random 64-bit odd n, cap around {sum(caps) // len(caps)} candidates each")
    for key in ("small-c", "factor", "not-found"):
        print(f"  {key:<9}: {counts[key]}")
    for c in (2, 3, 5, 6, 7):
        if counts[f"c={c}"]:
            print(f"    least nonresidue {c}: {counts[f'c={c}']} times")


if __name__ == "__main__":
    main()
