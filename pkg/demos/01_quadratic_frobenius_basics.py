"""Walkthrough of the quadratic Frobenius test in both ring forms.

The test works in a quadratic extension of the integers mod n.  The
general form uses Z[x]/(n, x^2 - b*x - c) with test element z = x; the
pure form uses Z[x]/(n, x^2 - c) with z = a*x + b.  For prime n with the
parameter symbol conditions satisfied, z^((n+1)/2) must be a scalar,
z^(n+1) must equal the norm of z, and the 2-power chain of z^((n^2-1)/2^j)
must pass through -1 in the right window.  Composites almost always trip
one of these.

Run: python demos/01_quadratic_frobenius_basics.py
"""

import random

from frobprime import (
    QftParams,
    generate_qft_params,
    generate_rqft_params,
    pure_form_of,
    qft,
    rqft,
    sample_nonresidue,
)

SEED = 20240901


def main() -> None:
    rng = random.Random(SEED)

    print("=== the six steps on a large prime ===")
    p = 2500000033  # just above the trial-division screen's reach
    params = generate_qft_params(p, rng)
    print(f"n = {p} with parameters b = {params.b}, c = {params.c}")
    print(f"  general form   -> {qft(p, params)}")
    mapped = pure_form_of(p, params)
    print(f"  same element in the pure ring (a={mapped.a}, b={mapped.b}, c={mapped.c})")
    print(f"  pure form      -> {rqft(p, mapped)}")

    print()
    print("=== composites fall out early or late ===")
    for n in (2500000011, 104729**2):
        verdict = qft(n, QftParams(1, 1))  # parameters are never reached here
        print(f"  n = {n:>12}: {verdict}")
    semiprime = 50021 * 50023  # neither factor within the screen's reach
    params = generate_qft_params(semiprime, rng)
    verdict = qft(semiprime, params)
    print(f"  n = {semiprime:>12}: {verdict}   (50021 * 50023, caught by the ring)")

    print()
    print("=== an independently drawn pure-form run ===")
    q = 10**12 + 39
    c = sample_nonresidue(q, rng)
    rparams = generate_rqft_params(q, c, rng)
    print(f"n = {q}, nonresidue c = {c}, a = {rparams.a}, b = {rparams.b}")
    print(f"  pure form      -> {rqft(q, rparams)}")

    print()
    print("=== the same machinery exposes small composites' structure ===")
    for n in (341, 561, 25, 49):  # classical Fermat pseudoprimes and squares
        print(f"  n = {n:>4}: {qft(n, QftParams(1, 1))}")


if __name__ == "__main__":
    main()
