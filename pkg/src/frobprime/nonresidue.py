"""Small quadratic nonresidue search and Jacobi-symbol statistics.

``find_small_nonresidue`` scans c = 2, 3, 5, 6, ... (perfect squares are
skipped: their symbol is never -1) for the first c with jacobi(c, n) = -1,
examining at most ceil(n^delta) candidates.  For every odd nonsquare n the
scan provably succeeds whenever delta exceeds 1/(3*sqrt(e)) = 0.2021...,
which is why the default exponent is the slightly larger 81/400 = 0.2025.
A zero symbol along the way yields a nontrivial factor instead.

``density_experiment`` and ``charsum_experiment`` measure the two facts the
guarantee rests on: non-residues are dense among small candidates, and
partial character sums over [1, n^gamma) cancel.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import as_fraction, ceil_frac_pow, floor_frac_pow, is_perfect_square, jacobi, modulus_value

__all__ = [
    "DEFAULT_DELTA",
    "DELTA_THRESHOLD",
    "CharSumReport",
    "DensityReport",
    "NonresidueNotFound",
    "SearchConfig",
    "SearchOutcome",
    "charsum_experiment",
    "density_experiment",
    "find_small_nonresidue",
]

#: Exponents strictly above this value make the search unconditional.
DELTA_THRESHOLD = 1.0 / (3.0 * math.sqrt(math.e))

#: Default search exponent: 81/400, the smallest round decimal above the threshold.
DEFAULT_DELTA = Fraction("0.2025")


class NonresidueNotFound(Exception):
    """The candidate cap was reached without a nonresidue or a factor.

    Happens for perfect squares (the symbol is never -1) and can happen
    for other prime powers; for odd nonsquare n with delta above
    DELTA_THRESHOLD it provably cannot.
    """

    def __init__(self, n: int, examined: int) -> None:
        super().__init__(f"no nonresidue below the cap for n={n} ({examined} candidates examined)")
        self.n = n
        self.examined = examined


@dataclass(frozen=True)
class SearchConfig:
    """Search budget: examine at most ``cap`` = ceil(n^delta) candidates."""

    delta: Fraction
    cap: int

    @classmethod
    def for_modulus(cls, n: int, delta=None) -> "SearchConfig":
        n = modulus_value(n)
        d = as_fraction(delta) if delta is not None else DEFAULT_DELTA
        if not DELTA_THRESHOLD < float(d) < 1:
            raise ValueError(
                f"delta must lie in (1/(3*sqrt(e)), 1) = ({DELTA_THRESHOLD:.10f}, 1); got {d}"
            )
        return cls(d, ceil_frac_pow(n, d))


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one search: exactly one of c / factor set, or neither.

    ``examined`` counts the candidates whose symbol was actually evaluated;
    skipped perfect squares are free and do not count against the cap.
    """

    c: Optional[int]
    factor: Optional[int]
    examined: int

    @property
    def kind(self) -> str:
        if self.c is not None:
            return "small-c"
        if self.factor is not None:
            return "factor"
        return "not-found"


def find_small_nonresidue(n: int, config: Optional[SearchConfig] = None, *, delta=None) -> SearchOutcome:
    """Scan upward from c = 2 for jacobi(c, n) = -1, skipping perfect squares.

    Returns the first hit as ``SearchOutcome(c=...)``; a zero symbol
    returns ``SearchOutcome(factor=gcd(c, n))``; hitting the cap returns a
    not-found outcome (callers that need a hard guarantee raise
    NonresidueNotFound from it).
    """
    n = modulus_value(n)
    if config is None:
        config = SearchConfig.for_modulus(n, delta)
    elif delta is not None:
        raise ValueError("pass either a config or a delta, not both")
    examined = 0
    c = 2
    next_root, next_square = 2, 4
    while examined < config.cap and c < n:
        if c == next_square:
            next_root += 1
            next_square = next_root * next_root
            c += 1
            continue
        examined += 1
        j = jacobi(c, n)
        if j == -1:
            return SearchOutcome(c=c, factor=None, examined=examined)
        if j == 0:
            return SearchOutcome(c=None, factor=math.gcd(c, n), examined=examined)
        c += 1
    return SearchOutcome(c=None, factor=None, examined=examined)


@dataclass(frozen=True)
class DensityReport:
    """Counts of Jacobi symbols over the candidate window [2, ceil(n^delta)]."""

    n: int
    delta: Fraction
    mode: str  # "exhaustive" or "sampled"
    seed: Optional[int]
    candidates_examined: int
    count_minus_one: int
    count_zero: int
    count_not_plus_one: int

    @property
    def proportion(self) -> float:
        """Fraction of examined candidates with symbol != +1."""
        return self.count_not_plus_one / self.candidates_examined

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": str(self.delta),
            "mode": self.mode,
            "seed": self.seed,
            "candidates_examined": self.candidates_examined,
            "count_minus_one": self.count_minus_one,
            "count_zero": self.count_zero,
            "count_not_plus_one": self.count_not_plus_one,
            "proportion": self.proportion,
        }


def density_experiment(
    n: int,
    delta=None,
    *,
    seed: Optional[int] = None,
    sample_size: int = 100_000,
    enumeration_limit: int = 10**6,
) -> DensityReport:
    """Measure how often jacobi(c, n) != +1 for c in [2, ceil(n^delta)].

    The window is enumerated exhaustively when it has at most
    ``enumeration_limit`` candidates, otherwise ``sample_size`` candidates
    are drawn uniformly with the seeded generator.  Perfect squares stay in
    the window here (the point is the raw density).  Square n is rejected:
    its symbol is never -1 and the density statement does not apply.
    """
    n = modulus_value(n)
    if is_perfect_square(n):
        raise ValueError("n must not be a perfect square")
    d = as_fraction(delta) if delta is not None else DEFAULT_DELTA
    if not 0 < float(d) < 1:
        raise ValueError("delta must lie in (0, 1)")
    cap = ceil_frac_pow(n, d)
    total = cap - 1  # candidates 2 .. cap inclusive
    if total <= 0:
        raise ValueError("window is empty; increase delta")
    minus_one = zero = 0
    if total <= enumeration_limit:
        mode = "exhaustive"
        examined = total
        used_seed = None
        for c in range(2, cap + 1):
            j = jacobi(c, n)
            if j == -1:
                minus_one += 1
            elif j == 0:
                zero += 1
    else:
        mode = "sampled"
        examined = sample_size
        used_seed = seed if seed is not None else random.SystemRandom().getrandbits(64)
        rng = random.Random(used_seed)
        for _ in range(sample_size):
            j = jacobi(rng.randint(2, cap), n)
            if j == -1:
                minus_one += 1
            elif j == 0:
                zero += 1
    return DensityReport(
        n=n,
        delta=d,
        mode=mode,
        seed=used_seed,
        candidates_examined=examined,
        count_minus_one=minus_one,
        count_zero=zero,
        count_not_plus_one=minus_one + zero,
    )


@dataclass(frozen=True)
class CharSumReport:
    """Partial character sum S = sum(jacobi(k, n) for 1 <= k < cutoff)."""

    n: int
    gamma: Fraction
    cutoff: int
    charsum: int

    @property
    def ratio(self) -> float:
        """Cancellation measure |S| / cutoff; near 0 means strong cancellation."""
        return abs(self.charsum) / self.cutoff

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "gamma": str(self.gamma),
            "cutoff": self.cutoff,
            "charsum": self.charsum,
            "ratio": self.ratio,
        }


def charsum_experiment(n: int, gamma, *, max_terms: int = 10**7) -> CharSumReport:
    """Sum jacobi(k, n) for k in [1, floor(n^gamma)) and report the total.

    gamma = 1 sums one step short of a full period; for odd nonsquare n
    the full-period sum is exactly 0 (and jacobi(n-1 + 1, n) would be the
    k = n term, which is 0), so the reported sum is 0 there.
    """
    n = modulus_value(n)
    g = as_fraction(gamma)
    if not 0 < g <= 1:
        raise ValueError("gamma must lie in (0, 1]")
    cutoff = floor_frac_pow(n, g)
    if cutoff > max_terms:
        raise ValueError(f"cutoff {cutoff} exceeds max_terms={max_terms}; lower gamma")
    total = 0
    for k in range(1, cutoff):
        total += jacobi(k, n)
    return CharSumReport(n=n, gamma=g, cutoff=cutoff, charsum=total)
