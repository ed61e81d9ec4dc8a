"""Exact integer primitives.

Jacobi symbols, integer square/k-th roots, exact rational powers, 2-adic
decompositions, sieve-backed trial division, and instrumented modular
exponentiation.  Everything is exact integer arithmetic; fractional
exponents are taken as `Fraction`s and evaluated by integer root
extraction, never through floats, so boundary cases (floor/ceil of n**delta)
cannot be misjudged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

__all__ = [
    "TRIAL_DIVISION_BOUND",
    "SMALL_PRIMES",
    "OddModulus",
    "TwoAdic",
    "as_fraction",
    "ceil_frac_pow",
    "floor_frac_pow",
    "gcd",
    "iroot",
    "is_perfect_square",
    "isqrt",
    "jacobi",
    "mod_pow",
    "modulus_value",
    "primes_up_to",
    "trial_divide",
    "two_adic_split",
]

#: Trial-division sieve bound; step 1 of the quadratic tests divides by all
#: primes <= min(TRIAL_DIVISION_BOUND, isqrt(n)).
TRIAL_DIVISION_BOUND = 50000

isqrt = math.isqrt
gcd = math.gcd


def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes <= limit, by the sieve of Eratosthenes."""
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, f in enumerate(flags) if f)


# Computed once at import time and treated as read-only afterwards, so
# concurrent readers never observe partial initialization.
SMALL_PRIMES = primes_up_to(TRIAL_DIVISION_BOUND)


@dataclass(frozen=True)
class OddModulus:
    """A validated odd modulus n > 1 with its bit length cached."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 3 or self.n % 2 == 0:
            raise ValueError(f"modulus must be odd and > 1, got {self.n}")
        if self.bits != self.n.bit_length():
            raise ValueError("bits field does not match n.bit_length()")

    @classmethod
    def of(cls, n: "int | OddModulus") -> "OddModulus":
        if isinstance(n, OddModulus):
            return n
        n = int(n)
        return cls(n, n.bit_length())

    def __int__(self) -> int:
        return self.n


def modulus_value(n: "int | OddModulus") -> int:
    """Validate and unwrap a modulus given as an int or an OddModulus."""
    if isinstance(n, OddModulus):
        return n.n
    n = int(n)
    if n < 3 or n % 2 == 0:
        raise ValueError(f"modulus must be odd and > 1, got {n}")
    return n


def jacobi(a: int, n: "int | OddModulus") -> int:
    """Jacobi symbol (a/n) for odd n > 0.

    Computed by quadratic reciprocity with the factor-of-two extraction
    rule; a is reduced mod n first (so negative a is handled by
    periodicity).  Returns 0 exactly when gcd(a, n) > 1.
    """
    if isinstance(n, OddModulus):
        n = n.n
    if n <= 0 or n % 2 == 0:
        raise ValueError("Jacobi symbol requires a positive odd denominator")
    a %= n
    result = 1
    while a:
        tz = (a & -a).bit_length() - 1
        # (2/n) = -1 iff n = +-3 mod 8; applied once per extracted factor 2.
        if tz & 1 and (n & 7) in (3, 5):
            result = -result
        a >>= tz
        # reciprocity flip: both = 3 mod 4.
        if (a & 3) == 3 and (n & 3) == 3:
            result = -result
        a, n = n % a, a
    return result if n == 1 else 0


def is_perfect_square(x: int) -> bool:
    """True iff x is a perfect square (x >= 0 assumed meaningful)."""
    if x < 0:
        return False
    r = isqrt(x)
    return r * r == x


def iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0, k >= 1, by integer Newton iteration.

    The initial guess 2**ceil(bits/k) overestimates the root, and the
    iteration decreases monotonically from above, so termination is exact.
    """
    if x < 0 or k < 1:
        raise ValueError("iroot requires x >= 0 and k >= 1")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return isqrt(x)
    if x.bit_length() <= k:
        return 1
    r = 1 << -(-x.bit_length() // k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def as_fraction(value: "Fraction | int | str") -> Fraction:
    """Coerce an exact exponent (Fraction, int, or numeric string) to Fraction.

    Floats are rejected on purpose: a binary float silently misstates a
    decimal exponent like 0.2025, and the root-extraction code below needs
    the exponent exactly.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(
        f"exact exponent expected (Fraction, int, or str), got {type(value).__name__}"
    )


def floor_frac_pow(n: int, exponent: "Fraction | int | str") -> int:
    """floor(n ** exponent), exactly, for n >= 0 and a positive rational exponent."""
    e = as_fraction(exponent)
    if n < 0 or e <= 0:
        raise ValueError("floor_frac_pow requires n >= 0 and exponent > 0")
    return iroot(n ** e.numerator, e.denominator)


def ceil_frac_pow(n: int, exponent: "Fraction | int | str") -> int:
    """ceil(n ** exponent), exactly, for n >= 0 and a positive rational exponent."""
    e = as_fraction(exponent)
    if n < 0 or e <= 0:
        raise ValueError("ceil_frac_pow requires n >= 0 and exponent > 0")
    power = n ** e.numerator
    r = iroot(power, e.denominator)
    return r if r ** e.denominator == power else r + 1


class TwoAdic(NamedTuple):
    """m = 2**r * s with s odd."""

    r: int
    s: int


def two_adic_split(m: int) -> TwoAdic:
    """Split m >= 1 as 2**r * s with s odd."""
    if m < 1:
        raise ValueError("two_adic_split requires m >= 1")
    r = (m & -m).bit_length() - 1
    return TwoAdic(r, m >> r)


def trial_divide(n: int, bound: int) -> Optional[int]:
    """Smallest prime divisor of n that is <= bound, or None.

    bound must not exceed TRIAL_DIVISION_BOUND (the cached sieve's limit).
    """
    if bound > TRIAL_DIVISION_BOUND:
        raise ValueError(f"trial division bound is capped at {TRIAL_DIVISION_BOUND}")
    for p in SMALL_PRIMES:
        if p > bound:
            return None
        if n % p == 0:
            return p
    return None


def mod_pow(base: int, exp: int, n: "int | OddModulus", counter=None) -> int:
    """base**exp mod n by plain left-to-right binary exponentiation.

    When a counter is supplied it is incremented by one squaring per ladder
    step (one step per exponent bit after the leading bit) and one full
    multiplication per set bit after the leading bit.  No windowing: the
    operation count is exact and checkable.
    """
    if isinstance(n, OddModulus):
        n = n.n
    if exp < 0:
        raise ValueError("mod_pow requires a nonnegative exponent")
    base %= n
    if exp == 0:
        return 1 % n
    r = base
    if counter is None:
        for bit in bin(exp)[3:]:
            r = r * r % n
            if bit == "1":
                r = r * base % n
    else:
        for bit in bin(exp)[3:]:
            r = r * r % n
            counter.squarings += 1
            if bit == "1":
                r = r * base % n
                counter.full_mults += 1
    return r
