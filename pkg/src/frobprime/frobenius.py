"""Quadratic Frobenius compositeness tests and classical baselines.

The two main entry points are ``qft`` (the test in the general ring
Z[x]/(n, x^2 - b*x - c)) and ``rqft`` (the reformulation in the pure ring
Z[x]/(n, x^2 - c) with test element z = a*x + b).  Both execute the same
six steps, strictly in order:

1. trial division by primes <= min(B, isqrt(n)) with B = 50000;
2. perfect-square check;
3. z^((n+1)/2) must be a scalar (x-coefficient 0);
4. z^(n+1) must equal the scalar target (-c for the general form,
   b^2 - c*a^2 for the pure form);
5. with n^2 - 1 = 2^r * s (s odd): z^s = 1, or z^(2^j * s) = -1 for some
   0 <= j <= r - 2;
6. otherwise: probable prime.

Steps 1-2 fully decide any n <= B^2 (a composite there has a prime factor
<= isqrt(n) <= B), so by default the extension steps never run for such n;
pass ``force_extension_steps=True`` to exercise them anyway.

Parameter generation, the Fermat/strong/Lucas baseline tests, and the
change-of-form parameter map live here too.  Randomized helpers take an
injected ``random.Random``-style source so every behavior is reproducible
from a seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .arith import (
    TRIAL_DIVISION_BOUND,
    isqrt,
    jacobi,
    mod_pow,
    modulus_value,
    trial_divide,
    two_adic_split,
)
from .quadext import ExtensionRing, OpCounter, QuadExtElement, ext_pow, ext_square

__all__ = [
    "RETRY_CAP",
    "CompositeReason",
    "FactorFound",
    "ParamSearchExhausted",
    "PhaseCounters",
    "QftParams",
    "RqftParams",
    "Verdict",
    "fermat_test",
    "generate_qft_params",
    "generate_rqft_params",
    "initial_screen",
    "lucas_test",
    "lucas_uv",
    "pure_form_of",
    "qft",
    "rqft",
    "rqft_with_small_c",
    "sample_nonresidue",
    "step5_chain",
    "step5_naive",
    "strong_test",
]

#: Retry cap for all rejection-sampling parameter searches.
RETRY_CAP = 64


class CompositeReason(str, Enum):
    """Why a verdict declared n composite."""

    SMALL_FACTOR = "small-factor"
    PERFECT_SQUARE = "perfect-square"
    STEP3 = "step3"
    STEP4 = "step4"
    STEP5 = "step5"
    JACOBI_ZERO_FACTOR = "jacobi-zero-factor"
    SHARED_FACTOR = "shared-factor"
    FERMAT = "fermat-congruence"
    STRONG = "strong-congruence"
    LUCAS = "lucas-congruence"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a single test run.

    ``factor``, when present, is a nontrivial divisor of n discovered along
    the way (trial division, a perfect-square root, or a zero Jacobi
    symbol's gcd).
    """

    is_probable_prime: bool
    reason: Optional[CompositeReason] = None
    factor: Optional[int] = None

    def __post_init__(self) -> None:
        if self.is_probable_prime and self.reason is not None:
            raise ValueError("a probable-prime verdict carries no reason")
        if not self.is_probable_prime and self.reason is None:
            raise ValueError("a composite verdict needs a reason")

    @classmethod
    def probable_prime(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def composite(cls, reason: CompositeReason, factor: Optional[int] = None) -> "Verdict":
        return cls(False, reason, factor)

    def __str__(self) -> str:
        if self.is_probable_prime:
            return "probable prime"
        if self.factor is not None:
            return f"composite ({self.reason.value}, factor {self.factor})"
        return f"composite ({self.reason.value})"


class FactorFound(Exception):
    """A nontrivial factor of n surfaced during a parameter search."""

    def __init__(self, factor: int) -> None:
        super().__init__(f"nontrivial factor {factor}")
        self.factor = factor


class ParamSearchExhausted(Exception):
    """A rejection-sampling parameter search hit its retry cap."""


@dataclass(frozen=True)
class QftParams:
    """General-form parameters (b, c); valid for n when
    jacobi(b^2 + 4c, n) = -1 and jacobi(-c, n) = +1."""

    b: int
    c: int


@dataclass(frozen=True)
class RqftParams:
    """Pure-form parameters (a, b, c); valid for n when
    jacobi(b^2 - c*a^2, n) = +1 and jacobi(c, n) = -1."""

    a: int
    b: int
    c: int


@dataclass
class PhaseCounters:
    """Per-phase operation counters for one test run.

    squaring_steps
        the dominant exponentiation's squaring steps (and the trailing
        squarings that complete z^((n+1)/2));
    multiply_steps
        the ladder's multiply steps, one per set exponent bit;
    tail
        everything after step 3: the step-4 squaring and all step-5 work.

    Keeping the buckets separate lets the dominant-term cost contract be
    asserted on the squaring steps alone; ``total()`` aggregates all three.
    """

    squaring_steps: OpCounter
    multiply_steps: OpCounter
    tail: OpCounter

    @classmethod
    def fresh(cls) -> "PhaseCounters":
        return cls(OpCounter(), OpCounter(), OpCounter())

    def total(self) -> OpCounter:
        return self.squaring_steps + self.multiply_steps + self.tail


def initial_screen(n: int) -> Optional[Verdict]:
    """Steps 1-2: trial division to min(B, isqrt(n)), then the square check.

    Returns a composite verdict when either fires, else None.  A None
    return for n <= B^2 proves n prime, since every composite has a prime
    factor <= isqrt(n).
    """
    n = modulus_value(n)
    root = isqrt(n)
    p = trial_divide(n, min(TRIAL_DIVISION_BOUND, root))
    if p is not None:
        return Verdict.composite(CompositeReason.SMALL_FACTOR, p)
    if root * root == n:
        return Verdict.composite(CompositeReason.PERFECT_SQUARE, root)
    return None


def generate_qft_params(n: int, rng) -> QftParams:
    """Sample (b, c) uniformly until the general-form symbol conditions hold.

    b is drawn from [0, n-1] and c from [1, n-1]; requiring b >= 1 would
    leave n = 3 with no valid pair at all.  A zero Jacobi symbol raises
    FactorFound with the nontrivial gcd; b^2 + 4c = 0 mod n is resampled
    (its gcd is n, which proves nothing).  Gives up after RETRY_CAP draws.
    """
    n = modulus_value(n)
    for _ in range(RETRY_CAP):
        b = rng.randrange(n)
        c = rng.randrange(1, n)
        d = (b * b + 4 * c) % n
        if d == 0:
            continue
        jd = jacobi(d, n)
        if jd == 0:
            raise FactorFound(math.gcd(d, n))
        jc = jacobi(n - c, n)
        if jc == 0:
            raise FactorFound(math.gcd(c, n))
        if jd == -1 and jc == 1:
            return QftParams(b, c)
    raise ParamSearchExhausted(f"no valid (b, c) for n={n} in {RETRY_CAP} draws")


def generate_rqft_params(n: int, c: int, rng) -> RqftParams:
    """Sample (a, b) until jacobi(b^2 - c*a^2, n) = +1, keeping the given c.

    The caller supplies c with jacobi(c, n) = -1 (for example from the
    small-nonresidue search).  A zero symbol raises FactorFound; for prime
    n about half of all (a, b) pairs are accepted, so two draws are
    expected on average.
    """
    n = modulus_value(n)
    c %= n
    jc = jacobi(c, n)
    if jc == 0:
        raise FactorFound(math.gcd(c, n))
    if jc != -1:
        raise ValueError("c must be a nonresidue: jacobi(c, n) = -1 required")
    for _ in range(RETRY_CAP):
        a = rng.randrange(1, n)
        b = rng.randrange(n)
        e = (b * b - c * a * a) % n
        if e == 0:
            continue
        je = jacobi(e, n)
        if je == 0:
            raise FactorFound(math.gcd(e, n))
        if je == 1:
            return RqftParams(a, b, c)
    raise ParamSearchExhausted(f"no valid (a, b) for n={n}, c={c} in {RETRY_CAP} draws")


def sample_nonresidue(n: int, rng) -> int:
    """Sample c uniformly from [2, n-1] until jacobi(c, n) = -1.

    A zero symbol raises FactorFound.  Used by the plain pure-form test
    when no small c is wanted.
    """
    n = modulus_value(n)
    if n == 3:
        return 2
    for _ in range(RETRY_CAP):
        c = rng.randrange(2, n)
        j = jacobi(c, n)
        if j == -1:
            return c
        if j == 0:
            raise FactorFound(math.gcd(c, n))
    raise ParamSearchExhausted(f"no nonresidue found for n={n} in {RETRY_CAP} draws")


def _check_qft_params(n: int, params: QftParams) -> int:
    """Validate the symbol conditions; returns the step-4 target (-c mod n)."""
    b, c = params.b % n, params.c % n
    d = (b * b + 4 * c) % n
    if jacobi(d, n) != -1:
        raise ValueError("invalid parameters: jacobi(b^2 + 4c, n) must be -1")
    if jacobi(n - c, n) != 1:
        raise ValueError("invalid parameters: jacobi(-c, n) must be +1")
    return (n - c) % n


def _check_rqft_params(n: int, params: RqftParams) -> int:
    """Validate the symbol conditions; returns the step-4 target (b^2 - c*a^2 mod n)."""
    a, b, c = params.a % n, params.b % n, params.c % n
    if jacobi(c, n) != -1:
        raise ValueError("invalid parameters: jacobi(c, n) must be -1")
    e = (b * b - c * a * a) % n
    if jacobi(e, n) != 1:
        raise ValueError("invalid parameters: jacobi(b^2 - c*a^2, n) must be +1")
    return e


def _extension_steps(
    z: QuadExtElement,
    ring: ExtensionRing,
    step4_target: int,
    ph: PhaseCounters,
) -> Verdict:
    """Steps 3-5 on a prepared ring/element; assumes steps 1-2 already passed."""
    n = ring.n
    r2, s2 = two_adic_split(n + 1)
    # z^((n+1)/2) = (z^s2)^(2^(r2-1)): one odd-exponent ladder, then pure
    # squarings; identical squaring-step count to a direct (n+1)/2 ladder.
    # The chain runs branch-free (generic squares) so each squaring step
    # books the contractual per-iteration cost.
    y = ext_pow(z, s2, ring, ph.squaring_steps, ph.multiply_steps, generic_squares=True)
    w = y
    for _ in range(r2 - 1):
        w = ext_square(w, ring, ph.squaring_steps, generic=True)
    if w.v != 0:
        return Verdict.composite(CompositeReason.STEP3)
    q = ext_square(w, ring, ph.tail)  # z^(n+1), one scalar squaring
    if q.u != step4_target:
        return Verdict.composite(CompositeReason.STEP4)
    if not _step5_from_intermediates(y, w, r2, ring, ph.tail):
        return Verdict.composite(CompositeReason.STEP5)
    return Verdict.probable_prime()


def _step5_from_intermediates(
    y: QuadExtElement,
    w: QuadExtElement,
    r2: int,
    ring: ExtensionRing,
    counter: Optional[OpCounter],
) -> bool:
    """Step-5 chain given y = z^s2 and w = z^((n+1)/2) = y^(2^(r2-1)).

    With n - 1 = 2^r1 * s1 and n + 1 = 2^r2 * s2, the step-5 exponent splits
    as n^2 - 1 = 2^(r1+r2) * (s1*s2).  Let t = w^s1 = z^(2^(r2-1) * s).

    * If t != 1, then z^s = 1 is impossible and so is z^(2^j s) = -1 for any
      j < r2 - 1 (either would square up to t = 1); the test passes iff
      t^(2^i) = -1 for some 0 <= i <= r1 - 1, which covers exactly the
      levels j = r2 - 1 .. r1 + r2 - 2 of the original chain.
    * If t = 1, every level j >= r2 - 1 equals 1, so only z^s itself and the
      levels j <= r2 - 2 matter; z^s = y^s1 is recomputed directly.

    When steps 3-4 passed, w is a scalar, so the t-ladder and the usual
    (t != 1) chain run entirely in the base ring.
    """
    n = ring.n
    one = QuadExtElement(1, 0)
    minus_one = QuadExtElement(n - 1, 0)
    r1, s1 = two_adic_split(n - 1)
    t = ext_pow(w, s1, ring, counter)
    if t != one:
        x_ = t
        for _ in range(r1):
            if x_ == minus_one:
                return True
            if x_ == one:
                return False  # reached 1 without passing -1
            x_ = ext_square(x_, ring, counter)
        return False
    if r2 == 1:
        return True  # t = z^s = 1
    zeta = ext_pow(y, s1, ring, counter)
    if zeta == one:
        return True
    for _ in range(r2 - 1):
        if zeta == minus_one:
            return True
        if zeta == one:
            return False
        zeta = ext_square(zeta, ring, counter)
    return False


def step5_chain(z: QuadExtElement, ring: ExtensionRing, counter: Optional[OpCounter] = None) -> bool:
    """Step 5 via the optimized chain; value-equivalent to step5_naive for every z.

    Splits n^2 - 1 through the factors n - 1 and n + 1 and reuses the
    intermediates a full test run already has from step 3.
    """
    n = ring.n
    r2, s2 = two_adic_split(n + 1)
    y = ext_pow(z, s2, ring, counter)
    w = y
    for _ in range(r2 - 1):
        w = ext_square(w, ring, counter)
    return _step5_from_intermediates(y, w, r2, ring, counter)


def step5_naive(z: QuadExtElement, ring: ExtensionRing, counter: Optional[OpCounter] = None) -> bool:
    """Step 5 by direct exponentiation: the reference implementation.

    With n^2 - 1 = 2^r * s (s odd): passes iff z^s = 1 or z^(2^j * s) = -1
    for some 0 <= j <= r - 2.
    """
    n = ring.n
    r, s = two_adic_split(n * n - 1)
    one = QuadExtElement(1, 0)
    minus_one = QuadExtElement(n - 1, 0)
    zeta = ext_pow(z, s, ring, counter)
    if zeta == one:
        return True
    for _ in range(r - 1):
        if zeta == minus_one:
            return True
        zeta = ext_square(zeta, ring, counter)
    return False


def qft(
    n: int,
    params: QftParams,
    counter: Optional[OpCounter] = None,
    *,
    phases: Optional[PhaseCounters] = None,
    force_extension_steps: bool = False,
) -> Verdict:
    """The six-step test in the general ring Z[x]/(n, x^2 - b*x - c) with z = x.

    Steps 1-2 run first (they need no parameters and for composite n the
    symbol conditions may be unsatisfiable); the parameters are validated
    before any extension arithmetic.  ``counter`` receives the run's total
    operation counts; ``phases``, when given, receives the per-phase
    breakdown.
    """
    n = modulus_value(n)
    screen = initial_screen(n)
    if screen is not None:
        return screen
    if n <= TRIAL_DIVISION_BOUND ** 2 and not force_extension_steps:
        return Verdict.probable_prime()
    target = _check_qft_params(n, params)
    ph = phases if phases is not None else PhaseCounters.fresh()
    ring = ExtensionRing.general(n, params.b, params.c)
    verdict = _extension_steps(QuadExtElement(0, 1), ring, target, ph)
    if counter is not None:
        counter += ph.total()
    return verdict


def rqft(
    n: int,
    params: RqftParams,
    counter: Optional[OpCounter] = None,
    *,
    phases: Optional[PhaseCounters] = None,
    force_extension_steps: bool = False,
    small_c: bool = False,
) -> Verdict:
    """The six-step test in the pure ring Z[x]/(n, x^2 - c) with z = a*x + b.

    ``small_c=True`` books products by c as small multiplications of ratio
    bits(c)/bits(n); it changes accounting only, never values.
    """
    n = modulus_value(n)
    screen = initial_screen(n)
    if screen is not None:
        return screen
    if n <= TRIAL_DIVISION_BOUND ** 2 and not force_extension_steps:
        return Verdict.probable_prime()
    target = _check_rqft_params(n, params)
    ph = phases if phases is not None else PhaseCounters.fresh()
    ring = ExtensionRing.pure(n, params.c, small=small_c)
    z = QuadExtElement(params.b % n, params.a % n)
    verdict = _extension_steps(z, ring, target, ph)
    if counter is not None:
        counter += ph.total()
    return verdict


def rqft_with_small_c(
    n: int,
    rng,
    *,
    delta=None,
    counter: Optional[OpCounter] = None,
    phases: Optional[PhaseCounters] = None,
    force_extension_steps: bool = False,
):
    """Run the pure-form test with c from the small-nonresidue search.

    Returns (verdict, search_outcome, params_or_None).  A factor surfaced
    by the search or by parameter sampling short-circuits to a composite
    verdict.  If the search exhausts its candidate cap,
    NonresidueNotFound propagates (squares and prime powers can make the
    search fail; that failure is reported, never swallowed).
    """
    from .nonresidue import NonresidueNotFound, SearchConfig, find_small_nonresidue

    n = modulus_value(n)
    screen = initial_screen(n)
    if screen is not None:
        return screen, None, None
    outcome = find_small_nonresidue(n, SearchConfig.for_modulus(n, delta))
    if outcome.factor is not None:
        return (
            Verdict.composite(CompositeReason.JACOBI_ZERO_FACTOR, outcome.factor),
            outcome,
            None,
        )
    if outcome.c is None:
        raise NonresidueNotFound(n, outcome.examined)
    try:
        params = generate_rqft_params(n, outcome.c, rng)
    except FactorFound as found:
        return (
            Verdict.composite(CompositeReason.JACOBI_ZERO_FACTOR, found.factor),
            outcome,
            None,
        )
    verdict = rqft(
        n,
        params,
        counter,
        phases=phases,
        force_extension_steps=force_extension_steps,
        small_c=True,
    )
    return verdict, outcome, params


def pure_form_of(n: int, params: QftParams) -> RqftParams:
    """Map general-form (b, c) to the equivalent pure-form triple.

    Completing the square sends x to y + b/2 with y^2 = (b^2 + 4c)/4, so
    the same element is z = 1*y + b/2 over the pure ring; the symbol
    conditions transfer exactly, and both tests compute the same
    element powers, hence the same verdict.
    """
    n = modulus_value(n)
    inv2 = (n + 1) // 2
    inv4 = inv2 * inv2 % n
    b2 = params.b * inv2 % n
    c2 = (params.b * params.b + 4 * params.c) % n * inv4 % n
    return RqftParams(1, b2, c2)


def _coprime_base(n: int, base: int) -> "tuple[int, Optional[Verdict]]":
    base %= n
    if base == 0:
        raise ValueError("base is a multiple of n")
    g = math.gcd(base, n)
    if g > 1:
        return base, Verdict.composite(CompositeReason.SHARED_FACTOR, g)
    return base, None


def fermat_test(n: int, base: int, counter: Optional[OpCounter] = None) -> Verdict:
    """Composite iff base^(n-1) != 1 mod n.

    A base sharing a factor with n yields that factor as a composite
    verdict immediately.
    """
    n = modulus_value(n)
    base, shared = _coprime_base(n, base)
    if shared is not None:
        return shared
    if mod_pow(base, n - 1, n, counter) != 1:
        return Verdict.composite(CompositeReason.FERMAT)
    return Verdict.probable_prime()


def strong_test(n: int, base: int, counter: Optional[OpCounter] = None) -> Verdict:
    """With n - 1 = 2^r * s (s odd): probable prime iff base^s = 1 or
    base^(2^j * s) = -1 for some 0 <= j <= r - 1."""
    n = modulus_value(n)
    base, shared = _coprime_base(n, base)
    if shared is not None:
        return shared
    r, s = two_adic_split(n - 1)
    v = mod_pow(base, s, n, counter)
    if v == 1 or v == n - 1:
        return Verdict.probable_prime()
    for _ in range(r - 1):
        v = v * v % n
        if counter is not None:
            counter.squarings += 1
        if v == n - 1:
            return Verdict.probable_prime()
        if v == 1:
            break  # reached 1 without passing -1; later levels stay 1
    return Verdict.composite(CompositeReason.STRONG)


def lucas_uv(P: int, Q: int, k: int, n: int, counter: Optional[OpCounter] = None) -> "tuple[int, int]":
    """(U_k, V_k) mod n for the sequences U_0=0, U_1=1, V_0=2, V_1=P,
    W_j = P*W_(j-1) - Q*W_(j-2), by left-to-right binary doubling.

    Doubling: U_2j = U_j*V_j, V_2j = V_j^2 - 2*Q^j.  Stepping: U_(j+1) =
    (P*U_j + V_j)/2, V_(j+1) = (D*U_j + P*V_j)/2 with D = P^2 - 4Q (odd n
    makes /2 exact via the inverse of 2).
    """
    n = modulus_value(n)
    if k < 1:
        if k == 0:
            return 0, 2 % n
        raise ValueError("lucas_uv requires k >= 0")
    P %= n
    Q %= n
    D = (P * P - 4 * Q) % n
    inv2 = (n + 1) // 2
    U, V, Qk = 1, P, Q
    for bit in bin(k)[3:]:
        U, V, Qk = U * V % n, (V * V - 2 * Qk) % n, Qk * Qk % n
        if counter is not None:
            counter.full_mults += 1
            counter.squarings += 2
        if bit == "1":
            U, V, Qk = (
                (P * U + V) * inv2 % n,
                (D * U + P * V) * inv2 % n,
                Qk * Q % n,
            )
            if counter is not None:
                counter.full_mults += 6
    return U, V


def lucas_test(n: int, P: int, Q: int, counter: Optional[OpCounter] = None) -> Verdict:
    """Composite iff U_(n - (D/n)) != 0 mod n, with D = P^2 - 4Q.

    Requires gcd(n, 2*Q*D) = 1: a shared factor strictly between 1 and n is
    returned as a composite verdict, and degenerate parameters (n divides
    Q*D, or D = 0) are rejected.
    """
    n = modulus_value(n)
    D = P * P - 4 * Q
    if D == 0:
        raise ValueError("square discriminant: P^2 = 4Q degenerates the sequence")
    g = math.gcd(n, 2 * Q * D)
    if g == n:
        raise ValueError("parameters degenerate: n divides 2*Q*D")
    if g > 1:
        return Verdict.composite(CompositeReason.SHARED_FACTOR, g)
    jd = jacobi(D, n)
    m = n - jd
    U, _ = lucas_uv(P, Q, m, n, counter)
    if U != 0:
        return Verdict.composite(CompositeReason.LUCAS)
    return Verdict.probable_prime()
