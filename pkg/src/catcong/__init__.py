"""Congruences for central binomial coefficients and Catalan numbers modulo
prime powers: exact verification grids and a composite-modulus search."""

from catcong.arith import (
    Factorization,
    NotInvertibleError,
    PrimePower,
    factorize,
    fermat_quotient,
    iverson,
    mod_inv,
    mod_pow,
    sieve_spf,
    symbol3,
)
from catcong.padic import NotIntegralError, PrecisionError, ScaledResidue

__version__ = "0.1.0"

__all__ = [
    "Factorization",
    "NotIntegralError",
    "NotInvertibleError",
    "PrecisionError",
    "PrimePower",
    "ScaledResidue",
    "factorize",
    "fermat_quotient",
    "iverson",
    "mod_inv",
    "mod_pow",
    "sieve_spf",
    "symbol3",
]
