"""Exhaustive search for composite moduli satisfying the prime-power sum
congruences.

For a composite n with 3 not dividing n the search asks whether

    sum_{k<n} binom(2k, k) == (n | 3)            (mod n**2)   [central]
    sum_{k<n} C_k          == 1 - 3 (n-1 | 3)    (mod n**2)   [catalan]

A *hit* is a composite n for which a congruence HOLDS, i.e. a counterexample
to the expectation that only primes satisfy them.
"""

import logging
import os
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from catcong.arith import factorize, sieve_spf, symbol3

log = logging.getLogger(__name__)

PREDICATES = ("central", "catalan", "both")
BLOCK_SIZE = 500


@dataclass(frozen=True, order=True)
class Hit:
    n: int
    predicate: str
    lhs: int
    rhs: int


@dataclass
class SearchSummary:
    bound: int
    predicate: str
    tested_count: int
    hits: list = field(default_factory=list)
    elapsed: float = 0.0
    checkpoint: int = 0

    def to_dict(self, timing=True):
        out = {
            "bound": self.bound,
            "predicate": self.predicate,
            "polarity": "a hit is a composite n that SATISFIES the congruence",
            "tested_count": self.tested_count,
            "hits": [asdict(h) for h in self.hits],
            "checkpoint": self.checkpoint,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _smooth_split(n, primes, length):
    """For v < length: the part of v built from ``primes`` and its cofactor."""
    smooth = np.ones(length, dtype=np.int64)
    for q in primes:
        qe = q
        while qe < length:
            smooth[qe::qe] *= q
            qe *= q
    cof = np.arange(length, dtype=np.int64) // smooth
    return smooth.tolist(), cof.tolist()


def block_sums(n, primes):
    """Return (sum binom(2k,k), sum C_k) over k < n, both modulo n**2.

    ``primes`` must be the primes dividing n. The running binomial is kept as
    num / den * g, where g is the exact product of powers of ``primes`` in
    binom(2k, k), and num, den are coprime to n. The sums carry the running
    denominator so only one inverse per sum is taken at the end.
    """
    n2 = n * n
    smooth, cof = _smooth_split(n, primes, 4 * n + 2)
    num, den, g = 1, 1, 1
    central = 1  # den_k * sum_{j<=k} binom(2j, j)
    catalan = 1  # den_{k+1} * sum_{j<=k} C_j, C_j = binom(2j,j) - binom(2j,j+1)
    for k in range(n - 1):
        # binom(2k+2, k+1) = binom(2k, k) * (4k+2) / (k+1)
        x, y, z = 4 * k + 2, k + 1, k + 2
        g = g * smooth[x] // smooth[y]
        num = num * cof[x] % n2
        cy = cof[y]
        den = den * cy % n2
        central = (central * cy + num * g) % n2
        # den_{k+2} * C_{k+1}: the companion binom(2k+2, k+2) is binom(2k+2, k+1) * (k+1)/(k+2)
        cz = cof[z]
        companion = cy * (g * smooth[y] // smooth[z])
        catalan = (catalan * cz + num * (g * cz - companion)) % n2
    den_last = den * cof[n] % n2
    return (
        central * pow(den, -1, n2) % n2,
        catalan * pow(den_last, -1, n2) % n2,
    )


def central_rhs(n):
    return symbol3(n) % (n * n)


def catalan_rhs(n):
    return (1 - 3 * symbol3(n - 1)) % (n * n)


def test_modulus(n, fac, predicate="both"):
    """Hits for one composite modulus (an empty list when none)."""
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    if n % 3 == 0:
        raise ValueError(f"{n} is divisible by 3")
    if fac.is_prime():
        raise ValueError(f"{n} is prime")
    central, catalan = block_sums(n, fac.primes)
    hits = []
    if predicate in ("central", "both") and central == central_rhs(n):
        hits.append(Hit(n, "central", central, central_rhs(n)))
    if predicate in ("catalan", "both") and catalan == catalan_rhs(n):
        hits.append(Hit(n, "catalan", catalan, catalan_rhs(n)))
    return hits


test_modulus.__test__ = False  # not a pytest test


def candidates(lo, hi, spf):
    """Composite n in [lo, hi] with 3 not dividing n."""
    return [n for n in range(max(lo, 4), hi + 1) if n % 3 and spf[n] != n]


def _search_block(args):
    lo, hi, predicate, spf = args
    hits = []
    for n in candidates(lo, hi, spf):
        hits.extend(test_modulus(n, factorize(n, spf), predicate))
    return lo, hi, hits


def read_checkpoint(path):
    """Return (verified_up_to, predicate, hits) or None when absent."""
    if not path or not os.path.exists(path):
        return None
    verified, predicate, hits = 0, None, []
    with open(path) as fh:
        for line in fh:
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "verified_up_to":
                verified = int(parts[1])
            elif parts[0] == "predicate":
                predicate = parts[1]
            elif parts[0] == "hit":
                hits.append(Hit(int(parts[2]), parts[1], int(parts[3]), int(parts[4])))
    return verified, predicate, hits


def write_checkpoint(path, verified, predicate, hits):
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(f"verified_up_to {verified}\n")
        fh.write(f"predicate {predicate}\n")
        for h in hits:
            fh.write(f"hit {h.predicate} {h.n} {h.lhs} {h.rhs}\n")
    os.replace(tmp, path)


def search(bound, predicate="both", jobs=1, checkpoint_path=None, block_size=BLOCK_SIZE):
    """Test every composite n <= bound with 3 not dividing n."""
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    started = time.perf_counter()
    spf = sieve_spf(max(bound, 2))
    tested = len(candidates(4, bound, spf))

    start, hits = 4, []
    state = read_checkpoint(checkpoint_path)
    if state is not None:
        verified, saved_pred, saved_hits = state
        if saved_pred != predicate:
            raise ValueError(
                f"checkpoint is for predicate {saved_pred!r}, not {predicate!r}"
            )
        # the last completed block is verified again
        start = max(4, verified - block_size + 1)
        hits = [h for h in saved_hits if h.n < start]
        log.info("resuming from n=%d", start)

    blocks = [(lo, min(lo + block_size - 1, bound), predicate, spf) for lo in range(start, bound + 1, block_size)]
    if jobs > 1 and len(blocks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_search_block, blocks)
            for lo, hi, found in results:
                hits.extend(found)
                verified = hi
                if checkpoint_path:
                    write_checkpoint(checkpoint_path, verified, predicate, hits)
    else:
        for block in blocks:
            lo, hi, found = _search_block(block)
            hits.extend(found)
            verified = hi
            if checkpoint_path:
                write_checkpoint(checkpoint_path, verified, predicate, hits)

    return SearchSummary(
        bound=bound,
        predicate=predicate,
        tested_count=tested,
        hits=sorted(set(hits)),
        elapsed=time.perf_counter() - started,
        checkpoint=bound,
    )
