"""Integer plumbing: the mod-3 symbol, Iverson brackets, sieving,
factorization and modular helpers."""

from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

DEFAULT_SIEVE_BOUND = 10**6
MAX_SIEVE_BOUND = 10**8


class NotInvertibleError(ArithmeticError):
    """Raised when inverting a residue that shares a factor with the modulus."""


def symbol3(a):
    """Return the element of {-1, 0, 1} congruent to ``a`` modulo 3."""
    r = a % 3
    return -1 if r == 2 else r


def iverson(condition):
    return 1 if condition else 0


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for q in range(3, isqrt(n) + 1, 2):
        if n % q == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimePower:
    p: int
    a: int
    pa: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.a < 1:
            raise ValueError(f"exponent must be positive, got {self.a}")
        object.__setattr__(self, "pa", self.p**self.a)


def prime_powers(primes, cap):
    """All PrimePower(p, a) with p in ``primes`` and p**a <= cap, sorted."""
    out = []
    for p in sorted(set(primes)):
        a = 1
        while p**a <= cap:
            out.append(PrimePower(p, a))
            a += 1
    return out


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple  # ((prime, exponent), ...) with primes increasing

    @property
    def primes(self):
        return tuple(q for q, _ in self.factors)

    def value(self):
        out = 1
        for q, e in self.factors:
            out *= q**e
        return out

    def is_prime(self):
        return len(self.factors) == 1 and self.factors[0][1] == 1


def sieve_spf(bound=DEFAULT_SIEVE_BOUND, cap=MAX_SIEVE_BOUND):
    """Smallest-prime-factor table for 0..bound.

    Entry ``spf[n]`` is the least prime dividing ``n`` for ``n >= 2``, so
    ``spf[n] == n`` exactly when ``n`` is prime. Entries 0 and 1 are unused.
    """
    if bound < 2:
        raise ValueError("sieve bound must be at least 2")
    if bound > cap:
        raise ValueError(f"sieve bound {bound} exceeds the memory cap {cap}")
    spf = np.arange(bound + 1, dtype=np.int64)
    for q in range(2, isqrt(bound) + 1):
        if spf[q] != q:
            continue
        block = spf[q * q :: q]
        # only overwrite entries no smaller prime has claimed yet
        mask = block == np.arange(q * q, bound + 1, q)
        block[mask] = q
    spf.setflags(write=False)
    return spf


def factorize(n, spf):
    if n < 2 or n >= len(spf):
        raise ValueError(f"{n} is outside the sieve range 2..{len(spf) - 1}")
    factors = []
    while n > 1:
        q = int(spf[n])
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        factors.append((q, e))
    return Factorization(n=_product(factors), factors=tuple(factors))


def _product(factors):
    out = 1
    for q, e in factors:
        out *= q**e
    return out


def mod_pow(base, exp, modulus):
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    return pow(base, exp, modulus)


def mod_inv(u, modulus):
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    if gcd(u, modulus) != 1:
        raise NotInvertibleError(f"{u} is not a unit modulo {modulus}")
    return pow(u, -1, modulus)


def fermat_quotient(b, p, prec=1):
    """(b**(p-1) - 1) / p reduced modulo p**prec, for an odd prime p not dividing b."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if b % p == 0:
        raise ValueError(f"{p} divides {b}")
    return (pow(b, p - 1, p ** (prec + 1)) - 1) // p % p**prec
