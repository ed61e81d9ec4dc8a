"""The quadratic tests, their parameter generators, and the classical baselines."""

import random

import pytest

from frobprime.arith import TRIAL_DIVISION_BOUND, jacobi, primes_up_to
from frobprime.frobenius import (
    RETRY_CAP,
    CompositeReason,
    FactorFound,
    ParamSearchExhausted,
    PhaseCounters,
    QftParams,
    RqftParams,
    Verdict,
    fermat_test,
    generate_qft_params,
    generate_rqft_params,
    initial_screen,
    lucas_test,
    lucas_uv,
    pure_form_of,
    qft,
    rqft,
    rqft_with_small_c,
    sample_nonresidue,
    step5_chain,
    step5_naive,
    strong_test,
)
from frobprime.nonresidue import SearchOutcome
from frobprime.quadext import ExtensionRing, OpCounter, QuadExtElement


class StubRng:
    """Feeds a fixed value sequence to randrange-based samplers."""

    def __init__(self, values):
        self.values = list(values)

    def randrange(self, start, stop=None):
        return self.values.pop(0)


def test_verdict_construction_rules():
    v = Verdict.probable_prime()
    assert v.is_probable_prime and v.reason is None and v.factor is None
    assert str(v) == "probable prime"
    c = Verdict.composite(CompositeReason.SMALL_FACTOR, 11)
    assert str(c) == "composite (small-factor, factor 11)"
    assert str(Verdict.composite(CompositeReason.STEP3)) == "composite (step3)"
    with pytest.raises(ValueError):
        Verdict(True, CompositeReason.STEP3)
    with pytest.raises(ValueError):
        Verdict(False)


def test_initial_screen_decides_small_inputs():
    assert initial_screen(25) == Verdict.composite(CompositeReason.SMALL_FACTOR, 5)
    assert initial_screen(341) == Verdict.composite(CompositeReason.SMALL_FACTOR, 11)
    assert initial_screen(7) is None
    assert initial_screen(104729) is None
    with pytest.raises(ValueError):
        initial_screen(10)


def test_initial_screen_flags_large_squares():
    # a square of a prime beyond the division bound survives step 1
    n = 104729**2
    v = initial_screen(n)
    assert v == Verdict.composite(CompositeReason.PERFECT_SQUARE, 104729)


def test_qft_screen_runs_before_parameter_validation():
    # (b^2+4c/25) = -1 is unsatisfiable, yet composites are still reported
    v = qft(25, QftParams(1, 1))
    assert v == Verdict.composite(CompositeReason.SMALL_FACTOR, 5)
    v = qft(341, QftParams(1, 340))
    assert v == Verdict.composite(CompositeReason.SMALL_FACTOR, 11)


def test_qft_rejects_invalid_parameters_when_reached():
    # d = 4 is a square, so its symbol is +1, not -1
    with pytest.raises(ValueError):
        qft(101, QftParams(0, 1), force_extension_steps=True)
    # c = 5 is a residue mod 101, so -c has symbol -1
    with pytest.raises(ValueError):
        rqft(101, RqftParams(1, 0, 5), force_extension_steps=True)


def test_qft_trial_division_shortcut_for_small_inputs():
    # below the bound squared the screen is exhaustive, no ring work needed
    counter = OpCounter()
    v = qft(101, QftParams(0, 1), counter)  # params invalid, never consulted
    assert v.is_probable_prime
    assert counter == OpCounter()


def test_qft_exhaustive_parameters_on_a_small_prime():
    p = 13
    seen = 0
    for b in range(p):
        for c in range(1, p):
            d = (b * b + 4 * c) % p
            if d == 0 or jacobi(d, p) != -1 or jacobi(p - c, p) != 1:
                continue
            seen += 1
            v = qft(p, QftParams(b, c), force_extension_steps=True)
            assert v.is_probable_prime, (b, c, v)
    assert seen > 0


def test_qft_three_is_testable():
    # the only valid pair for n = 3 has b = 0
    assert qft(3, QftParams(0, 2), force_extension_steps=True).is_probable_prime
    params = generate_qft_params(3, random.Random(0))
    assert (params.b, params.c) == (0, 2)


def test_rqft_exhaustive_pairs_on_a_small_prime():
    p, c = 101, 2
    assert jacobi(c, p) == -1
    accepted = total = 0
    for a in range(1, p):
        for b in range(p):
            e = (b * b - c * a * a) % p
            if e == 0:
                continue
            total += 1
            if jacobi(e, p) != 1:
                continue
            accepted += 1
            v = rqft(p, RqftParams(a, b, c), force_extension_steps=True)
            assert v.is_probable_prime, (a, b, v)
    # valid pairs are about half of all pairs for a prime modulus
    assert 0.45 < accepted / total < 0.55


def test_generated_parameters_satisfy_their_conditions():
    rng = random.Random(20240821)
    for p in (101, 104729, 10**9 + 7):
        for _ in range(5):
            qp = generate_qft_params(p, rng)
            assert jacobi((qp.b**2 + 4 * qp.c) % p, p) == -1
            assert jacobi(p - qp.c, p) == 1
            c = sample_nonresidue(p, rng)
            assert jacobi(c, p) == -1
            rp = generate_rqft_params(p, c, rng)
            assert rp.c == c
            assert jacobi((rp.b**2 - c * rp.a**2) % p, p) == 1


def test_parameter_generation_is_deterministic_given_a_seed():
    a = generate_qft_params(10**9 + 7, random.Random(5))
    b = generate_qft_params(10**9 + 7, random.Random(5))
    assert a == b
    x = sample_nonresidue(10**9 + 7, random.Random(6))
    y = sample_nonresidue(10**9 + 7, random.Random(6))
    assert x == y


def test_parameter_search_surfaces_factors_via_zero_symbols():
    with pytest.raises(FactorFound) as info:
        generate_qft_params(15, StubRng([3, 5]))
    assert info.value.factor == 5


def test_parameter_search_exhausts_on_a_prime_square():
    n = 104729**2  # no d can have symbol -1 mod a square
    with pytest.raises(ParamSearchExhausted):
        generate_qft_params(n, random.Random(0))
    with pytest.raises(ParamSearchExhausted):
        sample_nonresidue(n, random.Random(0))


def test_rqft_param_generation_validates_c():
    with pytest.raises(ValueError):
        generate_rqft_params(101, 5, random.Random(0))  # 5 is a residue
    with pytest.raises(FactorFound) as info:
        generate_rqft_params(15, 3, random.Random(0))  # shared factor
    assert info.value.factor == 3
    assert sample_nonresidue(3, random.Random(0)) == 2


def test_small_c_wrapper_screens_first():
    rng = random.Random(1)
    verdict, outcome, params = rqft_with_small_c(15, rng)
    assert verdict == Verdict.composite(CompositeReason.SMALL_FACTOR, 3)
    assert outcome is None and params is None
    # a large prime square is caught by the square check, not the search
    verdict, outcome, params = rqft_with_small_c(104729**2, rng)
    assert verdict.reason is CompositeReason.PERFECT_SQUARE
    assert verdict.factor == 104729


def test_small_c_wrapper_on_primes():
    rng = random.Random(2)
    verdict, outcome, params = rqft_with_small_c(1000003, rng, force_extension_steps=True)
    assert verdict.is_probable_prime
    assert outcome.kind == "small-c"
    assert params.c == outcome.c
    assert jacobi(outcome.c, 1000003) == -1


def test_search_outcome_kinds():
    assert SearchOutcome(2, None, 1).kind == "small-c"
    assert SearchOutcome(None, 3, 2).kind == "factor"
    assert SearchOutcome(None, None, 3).kind == "not-found"


def test_step5_chain_matches_naive_on_random_rings():
    rng = random.Random(20240822)
    tried = 0
    while tried < 60:
        n = rng.randrange(3, 2000) | 1
        ring = ExtensionRing.pure(n, rng.randrange(1, n))
        for _ in range(20):
            z = QuadExtElement(rng.randrange(n), rng.randrange(n))
            assert step5_chain(z, ring) == step5_naive(z, ring), (n, ring.c, z)
        tried += 1


def test_step5_counters_favor_the_chain_for_test_elements():
    # for an element passing steps 3-4 of a real run the chain's extra
    # exponentiation happens in the base ring, so it stays cheap
    p = 2500000001 + 32  # 2500000033 is prime (verified below via the test itself)
    rng = random.Random(3)
    params = generate_qft_params(p, rng)
    assert qft(p, params).is_probable_prime
    ring = ExtensionRing.general(p, params.b, params.c)
    z = QuadExtElement(0, 1)
    chain_counter, naive_counter = OpCounter(), OpCounter()
    assert step5_chain(z, ring, chain_counter) == step5_naive(z, ring, naive_counter)
    chain_cost = chain_counter.squarings + chain_counter.full_mults
    naive_cost = naive_counter.squarings + naive_counter.full_mults
    assert chain_cost < naive_cost


def test_phase_counters_split_and_total():
    ph = PhaseCounters.fresh()
    ph.squaring_steps.squarings += 4
    ph.multiply_steps.param_mults += 2
    ph.tail.full_mults += 3
    total = ph.total()
    assert (total.squarings, total.full_mults, total.param_mults) == (4, 3, 2)


def test_qft_phases_cover_the_counter_total():
    p = 2500000033
    rng = random.Random(4)
    params = generate_qft_params(p, rng)
    counter = OpCounter()
    ph = PhaseCounters.fresh()
    assert qft(p, params, counter, phases=ph).is_probable_prime
    assert counter == ph.total()


def test_pure_form_mapping_preserves_conditions_and_verdicts():
    rng = random.Random(20240823)
    checked = 0
    while checked < 60:
        n = rng.randrange(5, 10**5) | 1
        try:
            params = generate_qft_params(n, rng)
        except (FactorFound, ParamSearchExhausted):
            continue
        mapped = pure_form_of(n, params)
        assert mapped.a == 1
        assert jacobi(mapped.c, n) == -1
        assert (mapped.b**2 - mapped.c) % n == (n - params.c) % n
        v1 = qft(n, params, force_extension_steps=True)
        v2 = rqft(n, mapped, force_extension_steps=True)
        assert v1 == v2, (n, params, mapped)
        checked += 1


def test_forcing_extension_steps_never_changes_the_answer():
    rng = random.Random(9)
    for p in primes_up_to(1000):
        if p == 2:
            continue
        params = generate_qft_params(p, rng)
        assert qft(p, params, force_extension_steps=True) == qft(p, params)


def test_boundary_window_above_the_division_bound():
    # all composites in (B^2, B^2 + 10^4) have a prime factor <= B, so the
    # sieve survivors are exactly the primes there; the quadratic tests
    # must accept every one of them with extension steps actually running
    lo = TRIAL_DIVISION_BOUND**2 + 1
    hi = TRIAL_DIVISION_BOUND**2 + 10**4
    width = hi - lo + 1
    flags = bytearray([1]) * width
    for p in primes_up_to(TRIAL_DIVISION_BOUND):
        start = (-lo) % p
        flags[start::p] = bytes(len(range(start, width, p)))
    survivors = [lo + i for i in range(width) if flags[i]]
    assert 350 < len(survivors) < 600  # prime density sanity
    rng = random.Random(20240824)

    def mr_is_prime(n):
        d, r = n - 1, 0
        while d % 2 == 0:
            d //= 2
            r += 1
        for a in (2, 3, 5, 7):  # deterministic below 3215031751
            x = pow(a, d, n)
            if x in (1, n - 1):
                continue
            for _ in range(r - 1):
                x = x * x % n
                if x == n - 1:
                    break
            else:
                return False
        return True

    for n in survivors:
        assert mr_is_prime(n)
        counter = OpCounter()
        params = generate_qft_params(n, rng)
        assert qft(n, params, counter).is_probable_prime, (n, params)
        assert counter.squarings > 0  # the extension steps really ran
        c = sample_nonresidue(n, rng)
        rp = generate_rqft_params(n, c, rng)
        assert rqft(n, rp).is_probable_prime, (n, rp)


def test_fermat_fixtures():
    assert fermat_test(341, 2).is_probable_prime  # the classical base-2 liar
    v = fermat_test(341, 3)
    assert v == Verdict.composite(CompositeReason.FERMAT)
    assert fermat_test(7, 5).is_probable_prime
    v = fermat_test(341, 33)
    assert v.reason is CompositeReason.SHARED_FACTOR and v.factor == 11
    with pytest.raises(ValueError):
        fermat_test(341, 682)


def test_strong_fixtures():
    assert strong_test(2047, 2).is_probable_prime  # strong liar base 2
    assert strong_test(341, 2) == Verdict.composite(CompositeReason.STRONG)
    assert strong_test(104729, 2).is_probable_prime
    v = strong_test(341, 33)
    assert v.reason is CompositeReason.SHARED_FACTOR and v.factor == 11


def test_strong_agrees_with_reference_on_odd_numbers():
    def reference(n, a):
        d, r = n - 1, 0
        while d % 2 == 0:
            d //= 2
            r += 1
        x = pow(a, d, n)
        if x in (1, n - 1):
            return True
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                return True
        return False

    rng = random.Random(12)
    for _ in range(300):
        n = rng.randrange(5, 10**6) | 1
        a = rng.randrange(2, n - 1)
        if a % n == 0 or __import__("math").gcd(a, n) > 1:
            continue
        assert strong_test(n, a).is_probable_prime == reference(n, a), (n, a)


def test_lucas_sequence_values():
    # U_0 = 0, U_1 = 1, U_2 = P; V_0 = 2, V_1 = P
    assert lucas_uv(3, 7, 0, 101) == (0, 2)
    assert lucas_uv(3, 7, 1, 101) == (1, 3)
    assert lucas_uv(3, 7, 2, 101) == (3, (9 - 14) % 101)


def test_lucas_uv_matches_naive_recurrence():
    def naive(P, Q, k, n):
        u0, u1, v0, v1 = 0, 1, 2 % n, P % n
        for _ in range(k):
            u0, u1 = u1, (P * u1 - Q * u0) % n
            v0, v1 = v1, (P * v1 - Q * v0) % n
        return u0, v0

    rng = random.Random(17)
    for _ in range(150):
        n = rng.randrange(3, 10**6) | 1
        P, Q = rng.randrange(n), rng.randrange(n)
        k = rng.randrange(500)
        assert lucas_uv(P, Q, k, n) == naive(P, Q, k, n), (P, Q, k, n)


def test_lucas_fixtures():
    assert lucas_test(11, 1, -1).is_probable_prime
    assert lucas_test(323, 1, -1).is_probable_prime  # smallest (1,-1) pseudoprime
    assert lucas_test(341, 1, -1) == Verdict.composite(CompositeReason.LUCAS)
    v = lucas_test(341, 1, 11)
    assert v.reason is CompositeReason.SHARED_FACTOR and v.factor == 11
    with pytest.raises(ValueError):
        lucas_test(11, 2, 1)  # D = 0
    with pytest.raises(ValueError):
        lucas_test(7, 1, 7)  # n divides 2QD


def test_lucas_accepts_primes_with_random_parameters():
    rng = random.Random(23)
    for p in (101, 10007, 104729):
        for _ in range(10):
            P = rng.randrange(1, p)
            Q = rng.randrange(1, p)
            if (P * P - 4 * Q) % p == 0:
                continue
            v = lucas_test(p, P, Q)
            assert v.is_probable_prime, (p, P, Q)


def test_composite_verdict_factors_are_nontrivial():
    rng = random.Random(29)
    for _ in range(200):
        n = rng.randrange(9, 10**6) | 1
        v = qft(n, QftParams(1, 1))
        if v.factor is not None:
            assert 1 < v.factor < n and n % v.factor == 0
