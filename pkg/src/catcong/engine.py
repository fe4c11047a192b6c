"""Streaming binomial and Catalan sequences.

Every sequence is produced by a multiplicative recurrence, so each term costs
O(1) operations on top of the previous one. Prime-power sequences carry exact
valuations in :class:`ScaledResidue` form; the composite-modulus sequence keeps
a unit modulo n**2 next to an exponent vector over the primes of n.
"""

from catcong.arith import Factorization, mod_inv
from catcong.padic import ZERO_VAL, ScaledResidue, split_valuation


class _RatioCursor:
    """Holds a value p**val * unit that is updated by integer ratios."""

    def __init__(self, p, prec):
        self.p = p
        self.prec = prec
        self.mod = p**prec
        self.val = ZERO_VAL
        self.unit = 0

    def _set_one(self):
        self.val, self.unit = 0, 1 % self.mod

    def _set(self, value):
        self.val, self.unit = value.val, value.unit

    def _scale(self, num, den):
        p, m = self.p, self.mod
        vn, un = split_valuation(num, p)
        vd, ud = split_valuation(den, p)
        self.val += vn - vd
        self.unit = self.unit * un % m * mod_inv(ud % m, m) % m

    @property
    def value(self):
        return ScaledResidue(self.p, self.prec, self.val, self.unit if self.val != ZERO_VAL else 0)


class ShiftedCursor(_RatioCursor):
    """Walks k = 0, 1, 2, ... holding binom(2k, k + d)."""

    def __init__(self, pp, prec, d):
        if d < 0:
            raise ValueError("shift d must be nonnegative")
        super().__init__(pp.p, prec)
        self.pp = pp
        self.d = d
        self.k = 0
        if d == 0:
            self._set_one()

    def advance(self):
        k, d = self.k, self.d
        if k + 1 == d:
            self._set_one()
        elif k >= d:
            self._scale((2 * k + 1) * (2 * k + 2), (k + 1 + d) * (k + 1 - d))
        self.k = k + 1


class GeneralCursor(_RatioCursor):
    """Walks k holding binom(p**a * m + 2k, p**a * n + k + d)."""

    def __init__(self, pp, prec, m, n, d):
        if not m >= n >= 0:
            raise ValueError(f"need m >= n >= 0, got m={m}, n={n}")
        if d < 0:
            raise ValueError("shift d must be nonnegative")
        super().__init__(pp.p, prec)
        self.pp = pp
        self.M = pp.pa * m
        self.N = pp.pa * n
        self.d = d
        self.k = 0
        # the value vanishes until the top index catches up with the bottom one
        self.start = max(0, d - (self.M - self.N))
        if self.start == 0:
            self._set(binom_direct(self.M, self.N + d, self.p, prec))

    def advance(self):
        k, M, N, d = self.k, self.M, self.N, self.d
        if k + 1 == self.start:
            self._set_one()
        elif k >= self.start:
            self._scale(
                (M + 2 * k + 1) * (M + 2 * k + 2),
                (N + k + 1 + d) * (M - N + k + 1 - d),
            )
        self.k = k + 1


def _collect(cursor, count):
    out = []
    for _ in range(count):
        out.append(cursor.value)
        cursor.advance()
    return out


def shifted_seq(pp, prec, d, count):
    """binom(2k, k + d) for k = 0 .. count - 1 as scaled residues."""
    return _collect(ShiftedCursor(pp, prec, d), count)


def binom_direct(n, k, p, prec):
    """binom(n, k) as a scaled residue with its exact p-adic valuation."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    k = min(k, n - k)
    m = p**prec
    val, unit = 0, 1 % m
    den_unit = 1
    for i in range(1, k + 1):
        vn, un = split_valuation(n - k + i, p)
        vd, ud = split_valuation(i, p)
        val += vn - vd
        unit = unit * un % m
        den_unit = den_unit * ud % m
    return ScaledResidue(p, prec, val, unit * mod_inv(den_unit, m) % m)


def general_seq(pp, prec, m, n, d, count):
    """binom(p**a * m + 2k, p**a * n + k + d) for k = 0 .. count - 1."""
    if m == 0 and n == 0:
        return shifted_seq(pp, prec, d, count)
    return _collect(GeneralCursor(pp, prec, m, n, d), count)


def catalan_seq(pp, prec, n_offset, count):
    """Catalan numbers C_(p**a * n_offset + k) for k = 0 .. count - 1.

    Each term is the difference of the d = 0 and d = 1 binomial streams, so
    no division by the index + 1 takes place. The results are exact modulo
    p**prec only (absolute precision): multiply them by integers and reduce,
    but do not divide them.
    """
    if n_offset < 0:
        raise ValueError("n_offset must be nonnegative")
    p = pp.p
    mod = p**prec
    central = general_seq(pp, prec, 2 * n_offset, n_offset, 0, count)
    shifted = general_seq(pp, prec, 2 * n_offset, n_offset, 1, count)
    return [
        ScaledResidue.from_int((c.reduce(prec) - s.reduce(prec)) % mod, p, prec)
        for c, s in zip(central, shifted)
    ]


class CompositeCursor:
    """Walks k holding binom(2k, k) modulo n**2 for an arbitrary modulus n.

    The value is ``unit * prod(q**e for q, e in zip(primes, exps))`` with
    ``unit`` coprime to n, so dividing by multiples of the primes of n never
    needs an inverse that does not exist.
    """

    def __init__(self, n, fac: Factorization):
        if fac.n != n:
            raise ValueError(f"factorization is for {fac.n}, not {n}")
        self.n = n
        self.n2 = n * n
        self.fac = fac
        self.primes = fac.primes
        self.exps = [0] * len(self.primes)
        self.unit = 1
        self.k = 0

    def _strip(self, x, sign):
        for i, q in enumerate(self.primes):
            while x % q == 0:
                x //= q
                self.exps[i] += sign
        return x

    def advance(self):
        # binom(2k+2, k+1) = binom(2k, k) * 2(2k+1) / (k+1)
        k = self.k
        num = self._strip(2 * (2 * k + 1), 1)
        den = self._strip(k + 1, -1)
        assert min(self.exps) >= 0, "negative exponent in an integer binomial"
        self.unit = self.unit * num * mod_inv(den, self.n2) % self.n2
        self.k = k + 1

    def reduce(self):
        out = self.unit
        for q, e in zip(self.primes, self.exps):
            out = out * pow(q, e, self.n2) % self.n2
        return out


def composite_central_seq(n, fac, count):
    """binom(2k, k) mod n**2 for k = 0 .. count - 1."""
    cursor = CompositeCursor(n, fac)
    out = []
    for _ in range(count):
        out.append(cursor.reduce())
        cursor.advance()
    return out
