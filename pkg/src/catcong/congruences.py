"""Executable congruence checks.

Each check evaluates both sides of one claimed congruence independently and
returns a :class:`CongruenceReport` holding canonical residues. Rational
claims X / c == Y (mod p**k) with a small integer c are checked in
multiplied-through form X == c * Y (mod p**(k + ord_p(c))), which keeps every
comparison inside an integer residue ring. A modulus of 0 marks an exact
integer identity.

Notation used in names below:

* ``signed_harmonic(d)`` is sum over 0 < j < d of (-1)**(j-1) / j * (d-j | 3),
  where ``(x | 3)`` is :func:`symbol3`.
* ``defect(d)`` is half of (sum_{k < q} binom(2k, k+d) - (q-d | 3)) plus
  (-1)**p * q * signed_harmonic(d) minus p * [p = 3] * (d | 3), for q = p**a.
  The checks work with ``2 * defect(d)`` to stay integral at p = 2.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from catcong.arith import PrimePower, fermat_quotient, is_prime, iverson, mod_inv, symbol3
from catcong.engine import binom_direct, catalan_seq, general_seq, shifted_seq
from catcong.padic import ScaledResidue, residue_sum, split_valuation, working_precision

# Largest modulus exponent (p**4, reached at p = 2 after doubling) needed by
# the defect checks; their cached tables are built once at this precision.
DEFECT_K = 4


@dataclass(frozen=True)
class CongruenceReport:
    check_id: str
    params: dict
    modulus: int
    lhs: int
    rhs: int
    passed: bool
    note: str = ""

    def to_dict(self):
        return {
            "check_id": self.check_id,
            "params": dict(self.params),
            "modulus": str(self.modulus),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "pass": self.passed,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            check_id=data["check_id"],
            params=dict(data["params"]),
            modulus=int(data["modulus"]),
            lhs=int(data["lhs"]),
            rhs=int(data["rhs"]),
            passed=bool(data["pass"]),
            note=data.get("note", ""),
        )

    def sort_key(self):
        return (self.check_id, tuple(self.params.values()))


def make_report(check_id, params, modulus, lhs, rhs, note="", integral=True):
    if modulus:
        lhs %= modulus
        rhs %= modulus
    passed = lhs == rhs and integral
    if not integral:
        note = (note + "; " if note else "") + "quotient is not p-integral"
    return CongruenceReport(check_id, dict(params), modulus, lhs, rhs, passed, note)


def _ord(x, p):
    return split_valuation(x, p)[0]


def _pp_params(pp, **extra):
    return {"p": pp.p, "a": pp.a, **extra}


# --- the signed harmonic sum -------------------------------------------------


def signed_harmonic_exact(d):
    """Exact rational value of the signed harmonic sum for shift d."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return sum(
        (Fraction((-1) ** (j - 1), j) * symbol3(d - j) for j in range(1, d)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def scaled_harmonic_table(pp, k):
    """p**a times the signed harmonic sum, modulo p**k, for d = 0 .. p**a + 1.

    Terms are bucketed by j mod 3; the weight (d - j | 3) depends only on the
    bucket, so each entry is three prefix sums combined.
    """
    p, q = pp.p, pp.pa
    mod = p**k
    prec = working_precision(k, pp.a)
    scale = ScaledResidue.from_int(q, p, prec)
    buckets = [0, 0, 0]
    table = []
    for d in range(q + 2):
        table.append(sum(symbol3(d - r) * buckets[r] for r in range(3)) % mod)
        # after emitting d, the term j = d joins the buckets for larger shifts
        if d >= 1:
            term = scale / ScaledResidue.from_int(d, p, prec)
            buckets[d % 3] += (-1) ** (d - 1) * term.reduce(k)
    return tuple(table)


def scaled_signed_harmonic(pp, d, k):
    """p**a * signed_harmonic(d) reduced modulo p**k, for 0 <= d <= p**a."""
    if not 0 <= d <= pp.pa + 1:
        raise ValueError(f"d={d} outside 0..{pp.pa + 1}")
    return scaled_harmonic_table(pp, k)[d]


# --- the defect --------------------------------------------------------------


@lru_cache(maxsize=None)
def shifted_sums(pp, prec):
    """sum_{k < p**a} binom(2k, k + d) modulo p**prec for d = 0 .. p**a + 1."""
    q = pp.pa
    return tuple(residue_sum(shifted_seq(pp, prec, d, q), prec, pp.p) for d in range(q + 2))


def shifted_sum(pp, d, k):
    return shifted_sums(pp, working_precision(DEFECT_K, pp.a))[d] % pp.p**k


def doubled_defect(pp, d, k):
    """2 * defect(d) reduced modulo p**(k + ord_p(2))."""
    if k > DEFECT_K - 1:
        raise ValueError(f"k={k} exceeds the cached precision")
    if not 0 <= d <= pp.pa + 1:
        raise ValueError(f"d={d} outside 0..{pp.pa + 1}")
    p, q = pp.p, pp.pa
    kk = k + iverson(p == 2)
    total = (
        shifted_sum(pp, d, kk)
        - symbol3(q - d)
        + 2 * (-1) ** p * scaled_signed_harmonic(pp, d, kk)
        - 2 * p * iverson(p == 3) * symbol3(d)
    )
    return total % p**kk


# --- checks: the defect congruences ------------------------------------------


def check_defect(pp, d, clause):
    """Congruences satisfied by the defect: ``eq1.2`` (mod p**2), ``eq1.3``
    (symmetry d <-> p**a - d mod p**3), ``eq1.4`` (d in {0, 1}, mod p**3)."""
    p, a, q = pp.p, pp.a, pp.pa
    if not 0 <= d <= q:
        raise ValueError(f"d={d} outside 0..{q}")
    two = iverson(p == 2)
    note = "multiplied through by 2"
    params = _pp_params(pp, d=d)
    if clause == "eq1.2":
        mod = p ** (2 + two)
        lhs = doubled_defect(pp, d, 2)
        rhs = 2 * p * iverson(p == 2 and ((-1) ** a + d) % 3 != 0)
        return make_report("thm1.1/eq1.2", params, mod, lhs, rhs, note)
    if clause == "eq1.3":
        mod = p ** (3 + two)
        lhs = doubled_defect(pp, q - d, 3)
        rhs = doubled_defect(pp, d, 3)
        return make_report("thm1.1/eq1.3", params, mod, lhs, rhs, note)
    if clause == "eq1.4":
        if d not in (0, 1):
            raise ValueError("eq1.4 needs d in {0, 1}")
        k = 3 + two
        mod = p**k
        prec = working_precision(k, a)
        lhs = shifted_sum(pp, d, k) - symbol3(q - d)
        scale = ScaledResidue.from_int(q, p, prec)
        tail = residue_sum(
            (
                scale * ((-1) ** k_ * symbol3(q - d - k_)) / ScaledResidue.from_int(k_, p, prec)
                for k_ in range(1, q)
                if symbol3(q - d - k_)
            ),
            k,
            p,
        )
        rhs = 2 * (2 * d * p * iverson(p == 3) + (-1) ** (p - 1) * tail)
        return make_report("thm1.1/eq1.4", params, mod, lhs, rhs, note)
    raise ValueError(f"unknown clause {clause!r}")


def check_defect_triple(pp, d, clause):
    """Three consecutive defects: ``mod_p3`` closed form, ``mod_p2`` vanishing,
    and the exact ``telescoping`` binomial identity behind them."""
    p, a, q = pp.p, pp.a, pp.pa
    if not 1 <= d <= q - 1:
        raise ValueError(f"d={d} outside 1..{q - 1}")
    two = iverson(p == 2)
    params = _pp_params(pp, d=d)
    if clause == "telescoping":
        lhs = sum(
            comb(2 * k, k + d - 1) + comb(2 * k, k + d) + comb(2 * k, k + d + 1)
            for k in range(q)
        )
        return make_report("lemma3.1/telescoping", params, 0, lhs, comb(2 * q, q - d), "exact")
    if clause == "mod_p2":
        k = 2 + two
        lhs = sum(doubled_defect(pp, e, 2) for e in (d - 1, d, d + 1))
        return make_report("lemma3.1/mod_p2", params, p**k, lhs, 0, "multiplied through by 2")
    if clause == "mod_p3":
        k = 3 + two
        prec = working_precision(k, a)
        lhs = sum(doubled_defect(pp, e, 3) for e in (d - 1, d, d + 1))
        scale = ScaledResidue.from_int(q, p, prec)
        first = scale * (-1) ** (q - d) / ScaledResidue.from_int(d, p, prec)
        second = scale * ((-1) ** (q - 1) * (-1) ** d) / ScaledResidue.from_int(q - d, p, prec)
        rhs = 2 * (2 * binom_direct(q, d, p, prec).reduce(k) - first.reduce(k) - second.reduce(k))
        return make_report("lemma3.1/mod_p3", params, p**k, lhs, rhs, "multiplied through by 2")
    raise ValueError(f"unknown clause {clause!r}")


# --- checks: sums of central binomials and Catalan numbers -------------------


def _catalan_terms(pp, prec, n_offset):
    return catalan_seq(pp, prec, n_offset, pp.pa)


def check_central_sums(pp, clause, d=0):
    """Sums over one full block k < p**a, all modulo p**2."""
    p, a, q = pp.p, pp.a, pp.pa
    mod = p * p
    prec = working_precision(2, a)
    three = iverson(p == 3)
    params = _pp_params(pp)
    cid = f"cor1.1/{clause}"
    if clause == "eq1.5":
        if not 0 <= d <= q:
            raise ValueError(f"d={d} outside 0..{q}")
        params["d"] = d
        lhs = shifted_sum(pp, d, 2)
        rhs = symbol3(q - d) - p * three * symbol3(d) + 2 * scaled_signed_harmonic(pp, d, 2)
        return make_report(cid, params, mod, lhs, rhs)
    if clause in ("eq1.6", "eq1.6b"):
        total = residue_sum(_catalan_terms(pp, prec, 0), 3, p)
        if clause == "eq1.6":
            return make_report(cid, params, mod, total, 1 - 3 * symbol3(q - 1))
        mod2 = p ** (2 + iverson(p == 2))
        return make_report(cid, params, mod2, 2 * total, 3 * symbol3(q) - 1, "multiplied through by 2")
    if clause in ("eq1.7", "eq1.7b"):
        cats = _catalan_terms(pp, prec, 0)
        total = residue_sum((c * k for k, c in enumerate(cats)), 3, p)
        if clause == "eq1.7":
            return make_report(cid, params, mod, total, symbol3(q - 1) - p * three)
        mod2 = p ** (2 + iverson(p == 2))
        return make_report(cid, params, mod2, 2 * total, 1 - symbol3(q), "multiplied through by 2")
    if clause == "eq1.8":
        lhs = residue_sum(shifted_seq(pp, prec, 0, q), 2, p)
        return make_report(cid, params, mod, lhs, symbol3(q))
    if clause == "eq1.9":
        lhs = residue_sum(shifted_seq(pp, prec, 1, q)[1:], 2, p)
        return make_report(cid, params, mod, lhs, symbol3(q - 1) - p * three)
    if clause == "adamchuk":
        if p <= 3 or a != 1:
            raise ValueError("adamchuk needs p > 3 and a = 1")
        top = p + symbol3(p + 1)
        lhs = residue_sum(shifted_seq(pp, prec, 0, top + 1)[1:], 2, p)
        return make_report(cid, params, mod, lhs, 0, f"upper index {top}")
    raise ValueError(f"unknown clause {clause!r}")


def check_general_sums(pp, d, m, n, clause):
    """Block sums of binom(p**a m + 2k, p**a n + k + d).

    ``eq1.10`` divides by binom(m, n) and ``eq1.11`` (m = 2n) by C_n; both
    are multiplied through, so the modulus grows by the valuation t of that
    divisor, and t is recorded in the note.
    """
    p, a, q = pp.p, pp.a, pp.pa
    if m < n or n < 0:
        raise ValueError(f"need m >= n >= 0, got m={m}, n={n}")
    if not 0 <= d <= q:
        raise ValueError(f"d={d} outside 0..{q}")
    three = iverson(p == 3)
    params = _pp_params(pp, d=d, m=m, n=n)
    if clause == "eq1.10":
        b = comb(m, n)
        t = binom_direct(m, n, p, 1).val
        k = 2 + t
        prec = working_precision(k, a)
        total = residue_sum(general_seq(pp, prec, m, n, d, q), k, p)
        lhs = (n + 1) * total
        inner = (
            ((m - n) ** 2 + (m + 1) * (n + 2)) * scaled_signed_harmonic(pp, d, k)
            - three * symbol3(d) * p * (n + 1) * (m + n + 1)
            + iverson(p == 2 and (d - (-1) ** a) % 3 != 0) * p * m * (n + 1)
            + (n + 1) * symbol3(q - d)
            + (m - n) * symbol3(d)
        )
        note = f"multiplied through by binom(m,n); t={t}"
        return make_report("thm1.2/eq1.10", params, p**k, lhs, b * inner, note)
    if clause == "eq1.11":
        if m != 2 * n:
            raise ValueError("eq1.11 needs m = 2n")
        cn = comb(2 * n, n) // (n + 1)
        t = _ord(cn, p)
        k = 2 + t
        prec = working_precision(k, a)
        lhs = residue_sum(general_seq(pp, prec, m, n, d, q), k, p)
        inner = (
            (n + 1) * (3 * n + 2) * scaled_signed_harmonic(pp, d, k)
            - three * p * (n + 1) * symbol3(d)
            + n * symbol3(d)
            + (n + 1) * symbol3(q - d)
        )
        note = f"multiplied through by C_n; t={t}"
        return make_report("thm1.2/eq1.11", params, p**k, lhs, cn * inner, note)
    raise ValueError(f"unknown clause {clause!r}")


def check_catalan_blocks(pp, n, clause):
    """Sums of C_(p**a n + k) over k < p**a, divided by C_n (multiplied through).

    ``symbol_identity`` is the exact identity 2 (q-1 | 3) + (q | 3) = 1 - p [p = 3]
    used to simplify the weighted sum.
    """
    p, a, q = pp.p, pp.a, pp.pa
    if n < 0:
        raise ValueError("n must be nonnegative")
    if clause == "symbol_identity":
        lhs = 2 * symbol3(q - 1) + symbol3(q)
        return make_report("cor1.2/symbol_identity", _pp_params(pp), 0, lhs, 1 - p * iverson(p == 3), "exact")
    params = _pp_params(pp, n=n)
    cn = comb(2 * n, n) // (n + 1)
    t = _ord(cn, p)
    k = 2 + t
    prec = working_precision(k, a)
    cats = _catalan_terms(pp, prec, n)
    note = f"multiplied through by C_n; t={t}"
    if clause == "eq1.12":
        full = residue_sum(cats, prec, p)
        integral = full % p**t == 0
        rhs = cn * (1 - 3 * (n + 1) * symbol3(q - 1))
        return make_report("cor1.2/eq1.12", params, p**k, full, rhs, note, integral)
    if clause == "eq1.13":
        full = residue_sum((c * j for j, c in enumerate(cats)), prec, p)
        integral = full % p**t == 0
        rhs = cn * (
            (1 - q) * n + (3 * q * n + 1) * (n + 1) * symbol3(q - 1) - iverson(p == 3) * p * (n + 1)
        )
        return make_report("cor1.2/eq1.13", params, p**k, full, rhs, note, integral)
    raise ValueError(f"unknown clause {clause!r}")


# --- checks: auxiliary lemmas ------------------------------------------------


def _inverse_sum(p, k, denominators):
    prec = k + 1
    return residue_sum(
        (ScaledResidue.one(p, prec) / ScaledResidue.from_int(x, p, prec) for x in denominators),
        k,
        p,
    )


def check_auxiliary(clause, pp=None, p=None, m=None, n=None, d=None, r=None):
    """Supporting congruences and identities.

    ``lemma2.1`` binom(q m, q n) / binom(m, n) mod p**(2 + ord_p(n));
    ``lemma2.2`` binom(2q-1, q-1) - 1 mod p**3 and ``lemma2.2_sum`` its
    expression through block sums; ``lemma2.3`` and ``ternary`` are exact
    integer identities for binomial rows weighted by residues mod 3;
    ``lemma2.4`` an alternating harmonic sum mod p**3; ``wolstenholme``,
    ``wolstenholme_harmonic`` and the three ``lehmer_*`` harmonic sums use a
    prime p > 3 and Fermat quotients.
    """
    cid = f"sec2/{clause}"
    if clause == "lemma2.1":
        p_, a, q = pp.p, pp.a, pp.pa
        if m < n or n < 0:
            raise ValueError(f"need m >= n >= 0, got m={m}, n={n}")
        params = _pp_params(pp, m=m, n=n)
        b = comb(m, n)
        extra = iverson(p_ == 2) * p_ * n * (m - n)
        if n == 0:
            # ord_p(0) is infinite: the claim is an equality
            return make_report(cid, params, 0, comb(q * m, 0), b * (1 + extra), "exact")
        t = _ord(b, p_)
        k = 2 + _ord(n, p_) + t
        prec = working_precision(k, a)
        lhs = binom_direct(q * m, q * n, p_, prec).reduce(k)
        return make_report(cid, params, p_**k, lhs, b * (1 + extra), f"multiplied through by binom(m,n); t={t}")
    if clause == "lemma2.2":
        p_, q = pp.p, pp.pa
        prec = working_precision(3, pp.a)
        lhs = binom_direct(2 * q - 1, q - 1, p_, prec).reduce(3) - 1
        rhs = p_ * iverson(p_ == 2) + p_ * p_ * iverson(p_ == 3)
        return make_report(cid, _pp_params(pp), p_**3, lhs, rhs)
    if clause == "lemma2.2_sum":
        p_, q = pp.p, pp.pa
        prec = working_precision(3, pp.a)
        central = residue_sum(shifted_seq(pp, prec, 0, q)[1:], 3, p_)
        shifted = residue_sum(shifted_seq(pp, prec, 1, q)[1:], 3, p_)
        rhs = 2 * (binom_direct(2 * q - 1, q - 1, p_, prec).reduce(3) - 1)
        return make_report(cid, _pp_params(pp), p_**3, central + 2 * shifted, rhs, "doubled")
    if clause == "lemma2.3":
        if n is None or n <= 1:
            raise ValueError("lemma2.3 needs n > 1")
        lhs = sum(comb(n, k) * symbol3(d + k) for k in range(1, n))
        rhs = (1 + (-1) ** n - 3 * iverson(n % 3 == 0)) * symbol3(d - n)
        return make_report(cid, {"n": n, "d": d}, 0, lhs, rhs, "exact")
    if clause == "ternary":
        if n is None or n < 0 or r is None:
            raise ValueError("ternary needs n >= 0 and r")
        lhs = 3 * sum(comb(n, k) for k in range(n + 1) if (k - r) % 3 == 0)
        sign = (-1) ** n
        rhs = 2**n + 2 * sign if (n + r) % 3 == 0 else 2**n - sign
        return make_report(cid, {"n": n, "r": r}, 0, lhs, rhs, f"exact; r={r}")
    if clause == "lemma2.4":
        p_, a, q = pp.p, pp.a, pp.pa
        k = 3 + iverson(p_ == 2)
        prec = working_precision(k, a)
        scale = ScaledResidue.from_int(q, p_, prec)
        terms = (
            scale * ((3 * iverson((j - q) % 3 == 0) - 1) * (-1) ** j) / ScaledResidue.from_int(j, p_, prec)
            for j in range(1, q)
        )
        lhs = 2 * residue_sum(terms, k, p_)
        rhs = 2 * p_ * iverson(p_ == 2) + p_ * iverson(p_ == 3)
        return make_report(cid, _pp_params(pp), p_**k, lhs, rhs, "multiplied through by 2")

    # prime-only clauses
    if p is None or p <= 3 or not is_prime(p):
        raise ValueError(f"{clause} needs a prime p > 3")
    params = {"p": p}
    mod = p * p
    if clause == "wolstenholme":
        lhs = binom_direct(2 * p - 1, p - 1, p, 4).reduce(3)
        return make_report(cid, params, p**3, lhs, 1)
    if clause == "wolstenholme_harmonic":
        return make_report(cid, params, mod, _inverse_sum(p, 2, range(1, p)), 0)
    q2 = fermat_quotient(2, p, 2)
    q3 = fermat_quotient(3, p, 2)
    if clause == "lehmer_half":
        lhs = _inverse_sum(p, 2, range(1, (p - 1) // 2 + 1))
        return make_report(cid, params, mod, lhs, -2 * q2 + p * q2 * q2)
    if clause == "lehmer_third":
        lhs = _inverse_sum(p, 2, (p - 3 * j for j in range(1, p // 3 + 1)))
        rhs = q3 * mod_inv(2, mod) - p * q3 * q3 * mod_inv(4, mod)
        return make_report(cid, params, mod, lhs, rhs)
    if clause == "lehmer_sixth":
        lhs = _inverse_sum(p, 2, (p - 6 * j for j in range(1, p // 6 + 1)))
        rhs = (
            q2 * mod_inv(3, mod)
            + q3 * mod_inv(4, mod)
            - p * q2 * q2 * mod_inv(6, mod)
            - p * q3 * q3 * mod_inv(8, mod)
        )
        return make_report(cid, params, mod, lhs, rhs)
    raise ValueError(f"unknown clause {clause!r}")


# --- registry and grids ------------------------------------------------------

DEFECT_CLAUSES = ("eq1.2", "eq1.3", "eq1.4")
CENTRAL_CLAUSES = ("eq1.5", "eq1.6", "eq1.6b", "eq1.7", "eq1.7b", "eq1.8", "eq1.9", "adamchuk")
GENERAL_CLAUSES = ("eq1.10", "eq1.11")
CATALAN_CLAUSES = ("eq1.12", "eq1.13", "symbol_identity")
AUX_CLAUSES = (
    "lemma2.1",
    "lemma2.2",
    "lemma2.2_sum",
    "lemma2.3",
    "lemma2.4",
    "wolstenholme",
    "wolstenholme_harmonic",
    "lehmer_half",
    "lehmer_third",
    "lehmer_sixth",
    "ternary",
)
TRIPLE_CLAUSES = ("mod_p3", "mod_p2", "telescoping")

CHECK_IDS = (
    [f"thm1.1/{c}" for c in DEFECT_CLAUSES]
    + [f"cor1.1/{c}" for c in CENTRAL_CLAUSES]
    + [f"thm1.2/{c}" for c in GENERAL_CLAUSES]
    + [f"cor1.2/{c}" for c in CATALAN_CLAUSES]
    + [f"sec2/{c}" for c in AUX_CLAUSES]
    + [f"lemma3.1/{c}" for c in TRIPLE_CLAUSES]
)


def run_task(task):
    """Run one ``(check_id, kwargs)`` task and return its report."""
    check_id, kwargs = task
    family, clause = check_id.split("/", 1)
    kwargs = dict(kwargs)
    if family == "thm1.1":
        return check_defect(kwargs["pp"], kwargs["d"], clause)
    if family == "cor1.1":
        return check_central_sums(kwargs["pp"], clause, kwargs.get("d", 0))
    if family == "thm1.2":
        return check_general_sums(kwargs["pp"], kwargs["d"], kwargs["m"], kwargs["n"], clause)
    if family == "cor1.2":
        return check_catalan_blocks(kwargs["pp"], kwargs.get("n", 0), clause)
    if family == "sec2":
        return check_auxiliary(clause, **kwargs)
    if family == "lemma3.1":
        return check_defect_triple(kwargs["pp"], kwargs["d"], clause)
    raise ValueError(f"unknown check id {check_id!r}")


def _task(check_id, **kwargs):
    return (check_id, tuple(kwargs.items()))


def sample_shifts(pp, extra=5):
    """Shifts 0, 1, 2, q-1, q plus ``extra`` seeded interior values."""
    q = pp.pa
    fixed = {d for d in (0, 1, 2, q - 1, q) if 0 <= d <= q}
    interior = [d for d in range(1, q) if d not in fixed]
    rng = random.Random(f"{pp.p}^{pp.a}")
    chosen = rng.sample(interior, min(extra, len(interior)))
    return sorted(fixed | set(chosen))


@dataclass
class Grid:
    """Parameter ranges for a verification run."""

    pps: list
    general_pps: list = None
    m_max: int = 4
    catalan_n_max: int = 6
    general_extra_shifts: int = 5
    telescoping_cap: int = 125
    aux_primes: list = field(default_factory=lambda: [p for p in range(5, 98) if is_prime(p)])
    lemma23_n: range = range(2, 61)
    lemma23_d: range = range(-10, 11)
    ternary_n: range = range(0, 31)

    def __post_init__(self):
        if self.general_pps is None:
            self.general_pps = list(self.pps)


def build_tasks(grid, check_ids=CHECK_IDS):
    """Expand ``grid`` into tasks for the selected check ids."""
    wanted = set(check_ids)
    tasks = []

    def add(cid, **kw):
        if cid in wanted:
            tasks.append(_task(cid, **kw))

    for pp in grid.pps:
        q = pp.pa
        for d in range(q + 1):
            add("thm1.1/eq1.2", pp=pp, d=d)
            add("thm1.1/eq1.3", pp=pp, d=d)
            add("cor1.1/eq1.5", pp=pp, d=d)
        for d in (0, 1):
            add("thm1.1/eq1.4", pp=pp, d=d)
        for c in CENTRAL_CLAUSES[1:]:
            if c == "adamchuk" and (pp.p <= 3 or pp.a != 1):
                continue
            add(f"cor1.1/{c}", pp=pp)
        for d in range(1, q):
            add("lemma3.1/mod_p3", pp=pp, d=d)
            add("lemma3.1/mod_p2", pp=pp, d=d)
            if q <= grid.telescoping_cap:
                add("lemma3.1/telescoping", pp=pp, d=d)
        add("sec2/lemma2.2", pp=pp)
        add("sec2/lemma2.2_sum", pp=pp)
        add("sec2/lemma2.4", pp=pp)
        add("cor1.2/symbol_identity", pp=pp)
    for pp in grid.general_pps:
        shifts = sample_shifts(pp, grid.general_extra_shifts)
        for m in range(grid.m_max + 1):
            for n in range(m + 1):
                add("sec2/lemma2.1", pp=pp, m=m, n=n)
                for d in shifts:
                    add("thm1.2/eq1.10", pp=pp, d=d, m=m, n=n)
        for n in range(grid.m_max // 2 + 1):
            for d in shifts:
                add("thm1.2/eq1.11", pp=pp, d=d, m=2 * n, n=n)
        for n in range(grid.catalan_n_max + 1):
            add("cor1.2/eq1.12", pp=pp, n=n)
            add("cor1.2/eq1.13", pp=pp, n=n)
    for p in grid.aux_primes:
        for c in ("wolstenholme", "wolstenholme_harmonic", "lehmer_half", "lehmer_third", "lehmer_sixth"):
            add(f"sec2/{c}", p=p)
    for n in grid.lemma23_n:
        for d in grid.lemma23_d:
            add("sec2/lemma2.3", n=n, d=d)
    for n in grid.ternary_n:
        for r in range(3):
            add("sec2/ternary", n=n, r=r)
    return tasks


def _run_chunk(chunk):
    return [run_task(t) for t in chunk]


def run_tasks(tasks, jobs=1):
    """Run tasks (in parallel when ``jobs > 1``) and return reports sorted by
    check id and parameters."""
    if jobs <= 1 or len(tasks) < 2:
        reports = _run_chunk(tasks)
    else:
        from concurrent.futures import ProcessPoolExecutor

        # stripe by parameter tuple so each worker sees a mix of cheap and costly tasks
        chunks = [tasks[i::jobs * 4] for i in range(jobs * 4)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = [r for part in pool.map(_run_chunk, chunks) for r in part]
    return sorted(reports, key=CongruenceReport.sort_key)


def default_grid():
    from catcong.arith import prime_powers

    return Grid(pps=prime_powers([2, 3, 5, 7, 11, 13], 400))
