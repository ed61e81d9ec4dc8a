"""Classical pseudoprimes and how the quadratic test handles them.

Fermat, strong (Miller-Rabin), and Lucas tests each have well-known
composite survivors at fixed parameters.  The quadratic extension test
combines a norm condition, a square-root chain, and trial division in a
single run, so the classic survivors all fall — including a number that
passes strong tests at every prime base through 23.

Run: python demos/05_pseudoprime_baselines.py
"""

import random

from frobprime import QftParams, fermat_test, lucas_test, qft, rqft_with_small_c, strong_test

SEED = 20240905

# Smallest / most quoted composite survivors of each classical test.
FERMAT_PSEUDOPRIMES = [341, 561, 645, 1105]       # pass base 2
CARMICHAEL = [561, 1105, 1729, 2465, 2821, 6601]  # pass every coprime base
STRONG_PSEUDOPRIMES = [2047, 3277, 4033, 4681]    # pass base 2
LUCAS_PSEUDOPRIMES = [323, 377, 1891, 3827]       # pass P=1, Q=-1


def cell(v) -> str:
    return "pass" if v.is_probable_prime else f"fail ({v.reason.value})"


def quad_small(n: int) -> str:
    # Small composites never reach the ring: the screen decides them first,
    # so placeholder parameters are fine.
    return cell(qft(n, QftParams(1, 1)))


def main() -> None:
    rng = random.Random(SEED)

    print("=== Fermat pseudoprimes to base 2 ===")
    for n in FERMAT_PSEUDOPRIMES:
        print(
            f"  n = {n:>4}: fermat(2) {cell(fermat_test(n, 2)):<6} "
            f"strong(2) {cell(strong_test(n, 2)):<25} quadratic {quad_small(n)}"
        )
    print()

    print("=== Carmichael numbers pass Fermat at every coprime base ===")
    for n in CARMICHAEL:
        bases = [b for b in (2, 3, 5, 7, 11, 13, 17, 19) if n % b]
        passed = sum(fermat_test(n, b).is_probable_prime for b in bases)
        print(f"  n = {n:>4}: fermat passes {passed}/{len(bases)} coprime bases; quadratic {quad_small(n)}")
    print()

    print("=== strong pseudoprimes to base 2 ===")
    for n in STRONG_PSEUDOPRIMES:
        print(
            f"  n = {n:>4}: strong(2) {cell(strong_test(n, 2)):<6} "
            f"strong(3) {cell(strong_test(n, 3)):<25} quadratic {quad_small(n)}"
        )
    print()

    print("=== Lucas pseudoprimes for P=1, Q=-1 ===")
    for n in LUCAS_PSEUDOPRIMES:
        print(
            f"  n = {n:>4}: lucas {cell(lucas_test(n, 1, -1)):<6} "
            f"strong(2) {cell(strong_test(n, 2)):<25} quadratic {quad_small(n)}"
        )
    print("  (Lucas and strong survivor sets barely overlap, which is why")
    print("   combining the two is so effective; the quadratic test bundles")
    print("   the same two kinds of obstruction into one ring computation)")
    print()

    print("=== trial division is part of the test ===")
    n = 3215031751  # passes strong tests at bases 2, 3, 5 and 7 at once
    strongs = " ".join(f"strong({b}) {cell(strong_test(n, b))}" for b in (2, 3, 5, 7))
    print(f"  n = {n}: {strongs}")
    verdict, _, _ = rqft_with_small_c(n, rng)
    print(f"  quadratic: {cell(verdict)} -- its least factor sits inside the screen")
    print()

    print("=== beyond the screen, the ring steps do the work ===")
    semiprime = 50021 * 50023
    verdict, _, _ = rqft_with_small_c(semiprime, rng)
    print(f"  n = {semiprime} (50021 * 50023, both factors beyond the screen)")
    print(f"    strong(2) {cell(strong_test(semiprime, 2))}; quadratic {cell(verdict)}")
    n = 3825123056546413051  # 149491 * 747451 * 34233211
    ok = all(strong_test(n, b).is_probable_prime for b in (2, 3, 5, 7, 11, 13, 17, 19, 23))
    print(f"  n = {n} passes strong tests at ALL prime bases through 23: {ok}")
    verdict, outcome, params = rqft_with_small_c(n, rng)
    print(f"    quadratic: {cell(verdict)} with nonresidue c = {params.c}")
    print("    (one quadratic run, no base-set tuning, settles it)")


if __name__ == "__main__":
    main()
