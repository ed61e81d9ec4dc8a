"""Instrumented arithmetic in quadratic extension rings mod n.

Two ring forms are supported: the general form Z[x]/(n, x^2 - b*x - c) and
the pure form Z[x]/(n, x^2 - c).  Elements are pairs (u, v) representing
u + v*x with coefficients held fully reduced in [0, n).

Operation counting follows the cost conventions used by the cost model:

* General form, squaring: computed as u^2, v^2, (u+v)^2 (the last standing
  in for the generic product 2uv = (u+v)^2 - u^2 - v^2) and booked as
  2 squarings + 1 full multiplication.  The additional products by the
  ring's fixed parameters b and c are tallied in a separate ``param_mults``
  bucket so cost summaries can include or exclude them explicitly.
* Pure form: each non-scalar multiplication or squaring is booked as
  3 full multiplications when c is a general residue, or as 2 full
  multiplications + 1 small multiplication when c is a designated small
  nonresidue (the small multiplication is weighted by
  bits(c)/bits(n) in cost summaries).
* Scalar fast paths: squaring a scalar (v == 0) books exactly 1 squaring;
  a scalar times a full element books 2 full multiplications; a scalar
  times a scalar books 1.  Chains whose per-step cost is contractual
  (``generic=True`` / ``generic_squares=True``) skip the scalar squaring
  shortcut and book every step at the full formula's cost.

The booked counts realize the per-operation cost model; the concrete
sequence of bignum products may differ by a squaring-versus-multiply
substitution, which never changes values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .arith import modulus_value

__all__ = [
    "ExtensionRing",
    "OpCounter",
    "QuadExtElement",
    "ext_add",
    "ext_mul",
    "ext_norm",
    "ext_pow",
    "ext_square",
    "frobenius_conjugate",
    "mul_by_x",
]


class OpCounter:
    """Mutable tally of modular products, by kind.

    squarings
        x*x products booked at squaring weight.
    full_mults
        generic x*y products (a squaring standing in for a generic product
        is booked here, at multiplication weight).
    small_mults
        products where one operand is the pure ring's designated small c;
        ``small_bits_ratio`` records that operand's size ratio
        bits(c)/bits(n) in (0, 1].
    param_mults
        products by the general ring's fixed parameters b and c, kept in
        their own bucket (excluded from MSQ totals, reported alongside
        them) so either accounting interpretation can be read off.
    """

    __slots__ = ("squarings", "full_mults", "small_mults", "param_mults", "small_bits_ratio")

    def __init__(
        self,
        squarings: int = 0,
        full_mults: int = 0,
        small_mults: int = 0,
        param_mults: int = 0,
        small_bits_ratio: float = 0.0,
    ) -> None:
        self.squarings = squarings
        self.full_mults = full_mults
        self.small_mults = small_mults
        self.param_mults = param_mults
        self.small_bits_ratio = small_bits_ratio

    def record_small(self, ratio: float) -> None:
        """Book one small multiplication with the given operand-size ratio."""
        self.small_mults += 1
        if ratio > self.small_bits_ratio:
            self.small_bits_ratio = ratio

    def copy(self) -> "OpCounter":
        return OpCounter(
            self.squarings,
            self.full_mults,
            self.small_mults,
            self.param_mults,
            self.small_bits_ratio,
        )

    def __iadd__(self, other: "OpCounter") -> "OpCounter":
        self.squarings += other.squarings
        self.full_mults += other.full_mults
        self.small_mults += other.small_mults
        self.param_mults += other.param_mults
        if other.small_bits_ratio > self.small_bits_ratio:
            self.small_bits_ratio = other.small_bits_ratio
        return self

    def __add__(self, other: "OpCounter") -> "OpCounter":
        out = self.copy()
        out += other
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OpCounter):
            return NotImplemented
        return (
            self.squarings == other.squarings
            and self.full_mults == other.full_mults
            and self.small_mults == other.small_mults
            and self.param_mults == other.param_mults
        )

    def as_dict(self) -> dict:
        return {
            "squarings": self.squarings,
            "full_mults": self.full_mults,
            "small_mults": self.small_mults,
            "param_mults": self.param_mults,
            "small_bits_ratio": self.small_bits_ratio,
        }

    def __repr__(self) -> str:
        return (
            f"OpCounter(squarings={self.squarings}, full_mults={self.full_mults}, "
            f"small_mults={self.small_mults}, param_mults={self.param_mults}, "
            f"small_bits_ratio={self.small_bits_ratio})"
        )


@dataclass(frozen=True)
class ExtensionRing:
    """A quadratic extension ring mod n.

    b is None for the pure form x^2 = c; otherwise x^2 = b*x + c.
    small_c_bits marks the pure form's c as a designated small nonresidue
    (it is then booked as a small multiplication of that bit size).
    """

    n: int
    b: Optional[int]
    c: int
    small_c_bits: Optional[int] = None

    def __post_init__(self) -> None:
        n = modulus_value(self.n)
        if not 0 <= self.c < n:
            raise ValueError("c must be reduced into [0, n)")
        if self.b is not None and not 0 <= self.b < n:
            raise ValueError("b must be reduced into [0, n)")
        if self.small_c_bits is not None and self.b is not None:
            raise ValueError("small_c_bits applies to the pure form only")

    @classmethod
    def general(cls, n: int, b: int, c: int) -> "ExtensionRing":
        """The ring Z[x]/(n, x^2 - b*x - c)."""
        n = modulus_value(n)
        return cls(n, b % n, c % n)

    @classmethod
    def pure(cls, n: int, c: int, *, small: bool = False) -> "ExtensionRing":
        """The ring Z[x]/(n, x^2 - c); small=True books c-products as small."""
        n = modulus_value(n)
        c %= n
        return cls(n, None, c, c.bit_length() if small else None)

    @property
    def is_pure(self) -> bool:
        return self.b is None

    @property
    def bits(self) -> int:
        return self.n.bit_length()

    @property
    def small_ratio(self) -> Optional[float]:
        """bits(c)/bits(n) when c is designated small, else None."""
        if self.small_c_bits is None:
            return None
        return self.small_c_bits / self.bits


class QuadExtElement(NamedTuple):
    """u + v*x with 0 <= u, v < n."""

    u: int
    v: int


def ext_add(e1: QuadExtElement, e2: QuadExtElement, ring: ExtensionRing) -> QuadExtElement:
    """Ring addition (additions are free in the cost model)."""
    n = ring.n
    return QuadExtElement((e1[0] + e2[0]) % n, (e1[1] + e2[1]) % n)


def _book_pure_op(ring: ExtensionRing, counter: Optional[OpCounter]) -> None:
    # One non-scalar pure-form extension operation.
    if counter is None:
        return
    if ring.small_c_bits is None:
        counter.full_mults += 3
    else:
        counter.full_mults += 2
        counter.record_small(ring.small_ratio)


def ext_square(
    e: QuadExtElement,
    ring: ExtensionRing,
    counter: Optional[OpCounter] = None,
    *,
    generic: bool = False,
) -> QuadExtElement:
    """e*e with the cheap squaring formula; equals ext_mul(e, e) in value.

    (u + v*x)^2 = (u^2 + c*v^2) + (2uv + b*v^2)*x, with 2uv recovered from
    (u+v)^2 - u^2 - v^2.  A scalar (v == 0) books exactly one squaring,
    unless ``generic=True``: a chain with a fixed per-step cost contract
    runs branch-free at the full formula's cost instead of testing each
    intermediate for scalarness (an intermediate power can land in the
    base ring even when the chain's input does not).
    """
    n = ring.n
    u, v = e
    if v == 0 and not generic:
        if counter is not None:
            counter.squarings += 1
        return QuadExtElement(u * u % n, 0)
    uu = u * u % n
    vv = v * v % n
    t = u + v
    two_uv = (t * t - uu - vv) % n
    if ring.b is None:
        _book_pure_op(ring, counter)
        return QuadExtElement((uu + ring.c * vv) % n, two_uv)
    if counter is not None:
        counter.squarings += 2
        counter.full_mults += 1
        counter.param_mults += 2
    return QuadExtElement((uu + ring.c * vv) % n, (two_uv + ring.b * vv) % n)


def ext_mul(
    e1: QuadExtElement,
    e2: QuadExtElement,
    ring: ExtensionRing,
    counter: Optional[OpCounter] = None,
) -> QuadExtElement:
    """Ring product with x^2 reduced by the ring's form.

    (u1 + v1*x)(u2 + v2*x) = (u1*u2 + c*v1*v2) + (u1*v2 + v1*u2 + b*v1*v2)*x,
    with the cross term recovered Karatsuba-style from (u1+v1)(u2+v2).
    """
    n = ring.n
    u1, v1 = e1
    u2, v2 = e2
    if v1 == 0 and v2 == 0:
        if counter is not None:
            counter.full_mults += 1
        return QuadExtElement(u1 * u2 % n, 0)
    if v1 == 0 or v2 == 0:
        if v1 == 0:
            s, u, v = u1, u2, v2
        else:
            s, u, v = u2, u1, v1
        if counter is not None:
            counter.full_mults += 2
        return QuadExtElement(s * u % n, s * v % n)
    p = u1 * u2 % n
    q = v1 * v2 % n
    cross = ((u1 + v1) * (u2 + v2) - p - q) % n
    if ring.b is None:
        _book_pure_op(ring, counter)
        return QuadExtElement((p + ring.c * q) % n, cross)
    if counter is not None:
        counter.full_mults += 3
        counter.param_mults += 2
    return QuadExtElement((p + ring.c * q) % n, (cross + ring.b * q) % n)


def mul_by_x(e: QuadExtElement, ring: ExtensionRing, counter: Optional[OpCounter] = None) -> QuadExtElement:
    """e * x, the cheap multiply step for an x-power ladder.

    Pure form: (u + v*x)*x = c*v + u*x, one product by c.  General form:
    (u + v*x)*x = c*v + (u + b*v)*x, two products by the fixed parameters.
    """
    n = ring.n
    u, v = e
    if ring.b is None:
        if counter is not None:
            if ring.small_c_bits is None:
                counter.full_mults += 1
            else:
                counter.record_small(ring.small_ratio)
        return QuadExtElement(ring.c * v % n, u)
    if counter is not None:
        counter.param_mults += 2
    return QuadExtElement(ring.c * v % n, (u + ring.b * v) % n)


def ext_pow(
    e: QuadExtElement,
    exp: int,
    ring: ExtensionRing,
    counter: Optional[OpCounter] = None,
    mult_counter: Optional[OpCounter] = None,
    *,
    generic_squares: bool = False,
) -> QuadExtElement:
    """e**exp by plain left-to-right binary exponentiation.

    Squaring-step operations are booked in ``counter``.  Multiply-step
    operations (one per set exponent bit after the leading bit) are booked
    in ``mult_counter`` when given, else in ``counter`` as well; keeping
    them separate lets the dominant-term contract be asserted on the
    squaring steps alone.  ``generic_squares=True`` makes every ladder
    squaring run branch-free at the full formula's cost (see ext_square).
    A base that is already scalar runs the whole ladder in the base ring
    regardless.
    """
    if exp < 0:
        raise ValueError("ext_pow requires a nonnegative exponent")
    n = ring.n
    if exp == 0:
        return QuadExtElement(1 % n, 0)
    u, v = e[0] % n, e[1] % n
    if mult_counter is None:
        mult_counter = counter
    if v == 0:
        r = u
        for bit in bin(exp)[3:]:
            r = r * r % n
            if counter is not None:
                counter.squarings += 1
            if bit == "1":
                r = r * u % n
                if mult_counter is not None:
                    mult_counter.full_mults += 1
        return QuadExtElement(r, 0)
    base = QuadExtElement(u, v)
    is_x = u == 0 and v == 1
    acc = base
    for bit in bin(exp)[3:]:
        acc = ext_square(acc, ring, counter, generic=generic_squares)
        if bit == "1":
            if is_x:
                acc = mul_by_x(acc, ring, mult_counter)
            else:
                acc = ext_mul(acc, base, ring, mult_counter)
    return acc


def frobenius_conjugate(e: QuadExtElement, ring: ExtensionRing) -> QuadExtElement:
    """The conjugate u - v*x (pure form only, where x -> -x is the conjugation)."""
    if ring.b is not None:
        raise ValueError("frobenius_conjugate is defined for the pure form only")
    return QuadExtElement(e[0], (-e[1]) % ring.n)


def ext_norm(e: QuadExtElement, ring: ExtensionRing) -> int:
    """The norm e * conjugate(e), a scalar.

    Pure form: u^2 - c*v^2.  General form: u^2 + b*u*v - c*v^2 (the roots of
    X^2 - b*X - c have sum b and product -c).
    """
    n = ring.n
    u, v = e
    if ring.b is None:
        return (u * u - ring.c * v * v) % n
    return (u * u + ring.b * u * v - ring.c * v * v) % n
