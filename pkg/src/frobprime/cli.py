"""Command-line interface.

Subcommands: ``test`` (run a primality test), ``find-c`` (small nonresidue
search), ``density`` / ``charsum`` (symbol statistics), ``bench`` (measure
the multiplication-to-squaring ratio), ``cost-table`` (per-iteration cost
model).  Exit status: 0 probable prime / success, 1 composite or factor
found, 2 usage error, 3 search or sampling exhausted.

Every randomized subcommand accepts ``--seed`` and echoes the seed it used,
so any run can be reproduced byte for byte.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional

from .arith import TRIAL_DIVISION_BOUND, as_fraction
from .cost_model import DELTA_STAR, cost_table, measure_m, render_cost_table
from .frobenius import (
    CompositeReason,
    FactorFound,
    ParamSearchExhausted,
    Verdict,
    fermat_test,
    generate_qft_params,
    generate_rqft_params,
    initial_screen,
    lucas_test,
    qft,
    rqft,
    rqft_with_small_c,
    sample_nonresidue,
    strong_test,
)
from .nonresidue import (
    NonresidueNotFound,
    SearchConfig,
    charsum_experiment,
    density_experiment,
    find_small_nonresidue,
)
from .quadext import OpCounter

EXIT_PROBABLE_PRIME = 0
EXIT_COMPOSITE = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3

_EXTENSION_METHODS = ("qft", "rqft", "rqft-smallc")
_METHODS = _EXTENSION_METHODS + ("fermat", "strong", "lucas")


def _emit(report: dict, output: str) -> None:
    if output == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        parts = []
        for key, value in report.items():
            if value is None:
                continue
            if isinstance(value, dict):
                parts.extend(f"{key}.{k}={v}" for k, v in value.items())
            else:
                parts.append(f"{key}={value}")
        print(" ".join(parts))


def _pick_base(n: int, rng: random.Random, fixed: Optional[int]) -> int:
    if fixed is not None:
        return fixed
    if n <= 4:
        return 2
    return rng.randrange(2, n - 1)


def _sample_lucas_params(n: int, rng: random.Random) -> "tuple[int, int]":
    from .frobenius import RETRY_CAP

    for _ in range(RETRY_CAP):
        P = rng.randrange(1, n)
        Q = rng.randrange(1, n)
        if (P * P - 4 * Q) % n == 0:
            continue
        return P, Q
    raise ParamSearchExhausted(f"no usable Lucas parameters for n={n}")


def _one_round(n: int, method: str, args, rng: random.Random, counter: OpCounter) -> Verdict:
    if method == "qft":
        try:
            params = generate_qft_params(n, rng)
        except FactorFound as found:
            return Verdict.composite(CompositeReason.JACOBI_ZERO_FACTOR, found.factor)
        return qft(n, params, counter)
    if method == "rqft":
        try:
            c = sample_nonresidue(n, rng)
            params = generate_rqft_params(n, c, rng)
        except FactorFound as found:
            return Verdict.composite(CompositeReason.JACOBI_ZERO_FACTOR, found.factor)
        return rqft(n, params, counter)
    if method == "rqft-smallc":
        delta = as_fraction(args.delta) if args.delta is not None else None
        verdict, _, _ = rqft_with_small_c(n, rng, delta=delta, counter=counter)
        return verdict
    if method == "fermat":
        return fermat_test(n, _pick_base(n, rng, args.base), counter)
    if method == "strong":
        return strong_test(n, _pick_base(n, rng, args.base), counter)
    P, Q = _sample_lucas_params(n, rng)
    return lucas_test(n, P, Q, counter)


def _test_one(n: int, args, rng: random.Random, seed: Optional[int]) -> "tuple[dict, int]":
    method = args.method
    counter = OpCounter()
    verdict: Optional[Verdict] = None
    rounds_run = 0
    if n == 2:
        verdict = Verdict.probable_prime()
    elif method in _EXTENSION_METHODS:
        verdict = initial_screen(n)
        if verdict is None:
            if n <= TRIAL_DIVISION_BOUND**2:
                # the screen is exhaustive up to B^2: surviving it proves n prime
                verdict = Verdict.probable_prime()
            else:
                for _ in range(args.rounds):
                    rounds_run += 1
                    verdict = _one_round(n, method, args, rng, counter)
                    if not verdict.is_probable_prime:
                        break
    else:
        for _ in range(args.rounds):
            rounds_run += 1
            verdict = _one_round(n, method, args, rng, counter)
            if not verdict.is_probable_prime:
                break
    report = {
        "n": n,
        "method": method,
        "verdict": "probable-prime" if verdict.is_probable_prime else "composite",
        "reason": verdict.reason.value if verdict.reason is not None else None,
        "factor": verdict.factor,
        "rounds_run": rounds_run,
        "seed": seed,
        "ops": counter.as_dict(),
    }
    code = EXIT_PROBABLE_PRIME if verdict.is_probable_prime else EXIT_COMPOSITE
    return report, code


def cmd_test(args) -> int:
    if args.stdin and args.n is not None:
        print("error: give n either as an argument or on stdin, not both", file=sys.stderr)
        return EXIT_USAGE
    if not args.stdin and args.n is None:
        print("error: no n given (pass it as an argument or use --stdin)", file=sys.stderr)
        return EXIT_USAGE
    if args.rounds < 1:
        print("error: --rounds must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    if args.stdin:
        try:
            numbers = [int(line) for line in sys.stdin.read().split()]
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        numbers = [args.n]
    seed = args.seed if args.seed is not None else random.SystemRandom().getrandbits(64)
    rng = random.Random(seed)
    worst = EXIT_PROBABLE_PRIME
    for n in numbers:
        if n < 2:
            print(f"error: n must be at least 2; got {n}", file=sys.stderr)
            return EXIT_USAGE
        if n > 2 and n % 2 == 0:
            print(f"error: n must be odd (or exactly 2); got {n}", file=sys.stderr)
            return EXIT_USAGE
        report, code = _test_one(n, args, rng, seed)
        _emit(report, args.output)
        worst = max(worst, code)
    return worst


def cmd_find_c(args) -> int:
    delta = as_fraction(args.delta) if args.delta is not None else None
    config = SearchConfig.for_modulus(args.n, delta)
    outcome = find_small_nonresidue(args.n, config)
    report = {
        "n": args.n,
        "outcome": outcome.kind,
        "c": outcome.c,
        "factor": outcome.factor,
        "examined": outcome.examined,
        "cap": config.cap,
        "delta": str(config.delta),
    }
    _emit(report, args.output)
    if outcome.c is not None:
        return EXIT_PROBABLE_PRIME
    if outcome.factor is not None:
        return EXIT_COMPOSITE
    return EXIT_EXHAUSTED


def cmd_density(args) -> int:
    delta = as_fraction(args.delta) if args.delta is not None else None
    seed = args.seed if args.seed is not None else random.SystemRandom().getrandbits(64)
    report = density_experiment(args.n, delta, seed=seed, sample_size=args.sample_size)
    _emit(report.as_dict(), args.output)
    return 0


def cmd_charsum(args) -> int:
    report = charsum_experiment(args.n, as_fraction(args.gamma))
    _emit(report.as_dict(), args.output)
    return 0


def cmd_bench(args) -> int:
    seed = args.seed if args.seed is not None else random.SystemRandom().getrandbits(64)
    measured = measure_m(args.bits, args.trials, seed=seed, reps=args.reps)
    _emit(measured.as_dict(), args.output)
    return 0


def cmd_cost_table(args) -> int:
    ms = args.m if args.m else None
    print(render_cost_table(cost_table(ms, args.delta)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobprime",
        description="Quadratic Frobenius primality testing and its cost model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_test = sub.add_parser("test", help="test one n (or many, with --stdin) for primality")
    p_test.add_argument("n", nargs="?", type=int, default=None, help="the number to test")
    p_test.add_argument("--stdin", action="store_true", help="read numbers from stdin, one per line")
    p_test.add_argument("--method", choices=_METHODS, default="qft")
    p_test.add_argument("--rounds", type=int, default=1, help="independent parameter draws per n")
    p_test.add_argument("--seed", type=int, default=None, help="seed for parameter sampling")
    p_test.add_argument("--base", type=int, default=None, help="fixed base for fermat/strong")
    p_test.add_argument("--delta", default=None, help="search exponent for rqft-smallc (exact, e.g. 0.2025)")
    p_test.add_argument("--output", choices=("plain", "json"), default="plain")
    p_test.set_defaults(func=cmd_test)

    p_findc = sub.add_parser("find-c", help="search for the least nonresidue below ceil(n^delta)")
    p_findc.add_argument("n", type=int)
    p_findc.add_argument("--delta", default=None, help="search exponent (exact, e.g. 0.2025)")
    p_findc.add_argument("--output", choices=("plain", "json"), default="plain")
    p_findc.set_defaults(func=cmd_find_c)

    p_density = sub.add_parser("density", help="measure the density of symbols != +1 below ceil(n^delta)")
    p_density.add_argument("--n", type=int, required=True)
    p_density.add_argument("--delta", default=None, help="window exponent (exact, e.g. 0.2025)")
    p_density.add_argument("--seed", type=int, default=None)
    p_density.add_argument("--sample-size", type=int, default=100_000)
    p_density.add_argument("--output", choices=("plain", "json"), default="plain")
    p_density.set_defaults(func=cmd_density)

    p_charsum = sub.add_parser("charsum", help="sum jacobi(k, n) for k below floor(n^gamma)")
    p_charsum.add_argument("--n", type=int, required=True)
    p_charsum.add_argument("--gamma", required=True, help="cutoff exponent in (0, 1] (exact, e.g. 1/2)")
    p_charsum.add_argument("--output", choices=("plain", "json"), default="plain")
    p_charsum.set_defaults(func=cmd_charsum)

    p_bench = sub.add_parser("bench", help="time modular products to estimate m on this machine")
    p_bench.add_argument("--bits", type=int, default=2048)
    p_bench.add_argument("--trials", type=int, default=9)
    p_bench.add_argument("--reps", type=int, default=None)
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.add_argument("--output", choices=("plain", "json"), default="plain")
    p_bench.set_defaults(func=cmd_bench)

    p_table = sub.add_parser("cost-table", help="print per-iteration costs for representative m")
    p_table.add_argument("--m", action="append", type=float, default=None, help="append one m value (repeatable)")
    p_table.add_argument("--delta", type=float, default=DELTA_STAR, help="small-operand size ratio")
    p_table.set_defaults(func=cmd_cost_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (NonresidueNotFound, ParamSearchExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
