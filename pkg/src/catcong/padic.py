"""Scaled p-adic residues.

A nonzero rational x with p-adic valuation v is stored as the pair
``(v, u)`` where ``x = p**v * u`` and ``u`` is a unit reduced modulo
``p**prec``. Products and quotients of exact integers therefore keep full
relative precision, and no big rationals are ever built.

Addition is intentionally absent: terms are only combined after they have
been reduced to integer residues (see :func:`residue_sum`), so a sum that is
not p-integral fails loudly instead of silently losing digits.
"""

import math
from dataclasses import dataclass

from catcong.arith import mod_inv

ZERO_VAL = math.inf


class NotIntegralError(ArithmeticError):
    """A value with negative valuation was reduced as a p-adic integer."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PrecisionError(ArithmeticError):
    """The working precision is too small for the requested modulus."""


def working_precision(k, a):
    """Precision used by a check that targets the modulus p**k.

    The guard of a + 2 digits covers divisions by integers of valuation up
    to ``a``; exhausting it surfaces as an inversion error.
    """
    return k + a + 2


def split_valuation(x, p):
    """Return (v, x / p**v) for nonzero x."""
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v, x


@dataclass(frozen=True, slots=True)
class ScaledResidue:
    p: int
    prec: int
    val: int | float
    unit: int

    @classmethod
    def from_int(cls, x, p, prec):
        if x == 0:
            return cls.zero(p, prec)
        v, u = split_valuation(x, p)
        return cls(p, prec, v, u % p**prec)

    @classmethod
    def zero(cls, p, prec):
        return cls(p, prec, ZERO_VAL, 0)

    @classmethod
    def one(cls, p, prec):
        return cls(p, prec, 0, 1 % p**prec)

    @property
    def is_zero(self):
        return self.val == ZERO_VAL

    @property
    def modulus(self):
        return self.p**self.prec

    def _check(self, other):
        if (self.p, self.prec) != (other.p, other.prec):
            raise ValueError(
                f"mismatched scaled residues: p={self.p}, prec={self.prec} "
                f"vs p={other.p}, prec={other.prec}"
            )

    def __mul__(self, other):
        if isinstance(other, int):
            other = ScaledResidue.from_int(other, self.p, self.prec)
        self._check(other)
        if self.is_zero or other.is_zero:
            return ScaledResidue.zero(self.p, self.prec)
        m = self.modulus
        return ScaledResidue(self.p, self.prec, self.val + other.val, self.unit * other.unit % m)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = ScaledResidue.from_int(other, self.p, self.prec)
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by a zero scaled residue")
        if self.is_zero:
            return self
        m = self.modulus
        inv = mod_inv(other.unit, m)
        return ScaledResidue(self.p, self.prec, self.val - other.val, self.unit * inv % m)

    def __neg__(self):
        if self.is_zero:
            return self
        return ScaledResidue(self.p, self.prec, self.val, -self.unit % self.modulus)

    def reduce(self, k):
        """Canonical residue of this p-adic integer modulo p**k."""
        if k > self.prec:
            raise PrecisionError(f"cannot reduce modulo {self.p}**{k} at precision {self.prec}")
        if self.is_zero:
            return 0
        if self.val < 0:
            raise NotIntegralError(f"value with valuation {self.val} is not {self.p}-integral")
        if self.val >= k:
            return 0
        return self.unit * self.p**self.val % self.p**k


def from_int(x, p, prec):
    return ScaledResidue.from_int(x, p, prec)


def residue_sum(terms, k, p=None):
    """Sum of ``terms`` reduced modulo p**k.

    ``p`` is only needed to fix the modulus when ``terms`` may be empty.
    """
    total = 0
    for i, t in enumerate(terms):
        if p is None:
            p = t.p
        try:
            total += t.reduce(k)
        except NotIntegralError as exc:
            raise NotIntegralError(f"term {i}: {exc}", index=i) from None
    if p is None:
        return 0
    return total % p**k


def congruent_with_denominator(lhs_num, rhs, denom, k):
    """Decide lhs_num / denom == rhs modulo p**k as p-adic numbers.

    The test runs in multiplied-through form,
    lhs_num == denom * rhs modulo p**(k + ord_p(denom)).
    """
    p, prec = lhs_num.p, lhs_num.prec
    shift, _ = split_valuation(denom, p)
    target = k + shift
    if target > prec:
        raise PrecisionError(
            f"precision {prec} is insufficient for modulus {p}**{target}"
        )
    lhs = lhs_num.reduce(target)
    rhs_scaled = ScaledResidue.from_int(denom, p, prec) * rhs
    return lhs == rhs_scaled.reduce(target)
