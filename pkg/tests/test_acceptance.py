"""Acceptance criteria, one test per criterion.

Every test appends a "[PASS]/[FAIL] criterion N: ..." line that is printed in
the terminal summary, then asserts. Tolerance is exact throughout: a
congruence either holds or it does not.
"""

import time
from math import comb

import pytest

import conftest
from catcong import cli, congruences
from catcong.arith import PrimePower, factorize, prime_powers, sieve_spf
from catcong.engine import catalan_seq, composite_central_seq, general_seq, shifted_seq
from catcong.search import search
from oracles import catalan

CRIT1_PPS = prime_powers([2, 3, 5, 7, 11, 13], 400)
CRIT3_PPS = prime_powers([2, 3, 5, 7], 128)


def record(number, ok, detail):
    conftest.ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    return ok


def failures(reports):
    return [r for r in reports if not r.passed]


def clear_caches():
    congruences.shifted_sums.cache_clear()
    congruences.scaled_harmonic_table.cache_clear()


def run_family(grid, prefix):
    ids = [c for c in congruences.CHECK_IDS if c.startswith(prefix)]
    return congruences.run_tasks(congruences.build_tasks(grid, ids), jobs=1)


def test_criterion_1_defect_grid():
    clear_caches()
    t0 = time.perf_counter()
    reports = run_family(congruences.Grid(pps=CRIT1_PPS), "thm1.1/")
    elapsed = time.perf_counter() - t0
    bad = failures(reports)
    expected = sum(2 * (pp.pa + 1) + 2 for pp in CRIT1_PPS)
    ok = not bad and len(reports) == expected and elapsed < 30
    record(1, ok, f"{len(reports)} defect reports, {len(bad)} failures, {elapsed:.1f}s (limit 30s)")
    assert ok, bad[:5]


def test_criterion_2_central_sums():
    reports = run_family(congruences.Grid(pps=CRIT1_PPS), "cor1.1/")
    bad = failures(reports)
    adamchuk = [r for r in reports if r.check_id == "cor1.1/adamchuk"]
    five = PrimePower(5, 1)
    spot_central = congruences.check_central_sums(five, "eq1.8")
    spot_catalan = congruences.check_central_sums(five, "eq1.6")
    spots = spot_central.lhs == 24 and spot_catalan.lhs == 23
    ok = not bad and len(adamchuk) == 4 and spots
    record(
        2,
        ok,
        f"{len(reports)} central-sum reports, {len(bad)} failures, "
        f"spot values {spot_central.lhs} and {spot_catalan.lhs} mod 25 (want 24, 23)",
    )
    assert ok, bad[:5]


def test_criterion_3_general_and_catalan_blocks():
    grid = congruences.Grid(pps=[], general_pps=CRIT3_PPS)
    t0 = time.perf_counter()
    reports = run_family(grid, "thm1.2/") + run_family(grid, "cor1.2/")
    elapsed = time.perf_counter() - t0
    bad = failures(reports)
    scaled = [r for r in reports if r.check_id.split("/")[1] in ("eq1.10", "eq1.11", "eq1.12", "eq1.13")]
    notes_ok = all("t=" in r.note for r in scaled)
    ok = not bad and notes_ok and elapsed < 60 and len(scaled) > 0
    record(3, ok, f"{len(reports)} reports, {len(bad)} failures, t recorded: {notes_ok}, {elapsed:.1f}s (limit 60s)")
    assert ok, bad[:5]


def test_criterion_4_auxiliary_lemmas():
    grid = congruences.Grid(pps=CRIT1_PPS, general_pps=CRIT3_PPS)
    reports = run_family(grid, "sec2/")
    bad = failures(reports)
    counts = {}
    for r in reports:
        counts[r.check_id] = counts.get(r.check_id, 0) + 1
    ok = (
        not bad
        and counts["sec2/lemma2.3"] == 59 * 21
        and counts["sec2/ternary"] == 31 * 3
        and counts["sec2/lehmer_sixth"] == 23
        and counts["sec2/lemma2.4"] == len(CRIT1_PPS)
    )
    record(4, ok, f"{len(reports)} auxiliary reports over {len(counts)} check ids, {len(bad)} failures")
    assert ok, bad[:5]


def test_criterion_5_triple_sums():
    reports = run_family(congruences.Grid(pps=CRIT1_PPS), "lemma3.1/")
    bad = failures(reports)
    tele = [r for r in reports if r.check_id == "lemma3.1/telescoping"]
    want_tele = sum(pp.pa - 1 for pp in CRIT1_PPS if pp.pa <= 125)
    ok = not bad and len(tele) == want_tele and all(r.modulus == 0 for r in tele)
    record(5, ok, f"{len(reports)} reports ({len(tele)} exact telescoping identities), {len(bad)} failures")
    assert ok, bad[:5]


def _engine_mismatches():
    bad = []
    # shifted sequences
    exact = {d: [comb(2 * k, k + d) for k in range(301)] for d in range(13)}
    for p in (2, 3, 5, 7, 11, 13):
        pp = PrimePower(p, 1)
        for prec in range(1, 5):
            mod = p**prec
            for d in range(13):
                got = [x.reduce(prec) for x in shifted_seq(pp, prec, d, 301)]
                if got != [v % mod for v in exact[d]]:
                    bad.append(("shifted", p, prec, d))
    # general sequences
    small = prime_powers([2, 3, 5, 7, 11, 13, 17, 19, 23], 27)
    for pp in small:
        q, prec = pp.pa, 4
        mod = pp.p**prec
        for m in range(5):
            for n in range(m + 1):
                for d in range(q + 1):
                    got = [x.reduce(prec) for x in general_seq(pp, prec, m, n, d, q)]
                    want = [comb(q * m + 2 * k, q * n + k + d) % mod for k in range(q)]
                    if got != want:
                        bad.append(("general", pp, m, n, d))
    # Catalan blocks
    for pp in small:
        q, prec = pp.pa, 4
        for off in range(7):
            got = [x.reduce(prec) for x in catalan_seq(pp, prec, off, q)]
            if got != [catalan(q * off + k) % pp.p**prec for k in range(q)]:
                bad.append(("catalan", pp, off))
    # composite moduli
    spf = sieve_spf(200)
    for n in range(4, 201):
        if spf[n] == n:
            continue
        got = composite_central_seq(n, factorize(n, spf), n)
        if got != [comb(2 * k, k) % (n * n) for k in range(n)]:
            bad.append(("composite", n))
    # Chu-Vandermonde convolution
    for pp in prime_powers([2, 3, 5, 7], 9):
        q = pp.pa
        for m in range(4):
            for n in range(m + 1):
                for k in range(7):
                    for d in range(q + 1):
                        lhs = comb(q * m + 2 * k, q * n + k + d)
                        rhs = sum(
                            comb(q * m, q * n - j) * comb(2 * k, k + j + d)
                            for j in range(-(k + d), q * n + 1)
                            if 0 <= k + j + d <= 2 * k
                        )
                        if lhs != rhs:
                            bad.append(("vandermonde", pp, m, n, k, d))
    # Catalan recurrence
    for n in range(21):
        if catalan(n + 1) != sum(catalan(k) * catalan(n - k) for k in range(n + 1)):
            bad.append(("recurrence", n))
    return bad


def test_criterion_6_engine_oracles():
    bad = _engine_mismatches()
    record(6, not bad, f"engine sequences against big-integer oracles, {len(bad)} mismatches")
    assert not bad, bad[:5]


@pytest.mark.slow
def test_criterion_7_composite_search():
    serial = search(10_000, "both", jobs=1)
    parallel = search(10_000, "both", jobs=4)
    same = serial.to_dict(timing=False) == parallel.to_dict(timing=False)
    ok = not serial.hits and same and serial.elapsed < 300 and parallel.elapsed < 120
    record(
        7,
        ok,
        f"{serial.tested_count} composite moduli up to 10^4, {len(serial.hits)} hits, "
        f"1 worker {serial.elapsed:.1f}s (limit 300s), 4 workers {parallel.elapsed:.1f}s (limit 120s), "
        f"identical summaries: {same}",
    )
    assert ok


def test_criterion_8_deterministic_json(tmp_path, capsys):
    outputs = []
    for i in range(2):
        target = tmp_path / f"run{i}.json"
        code = cli.main(["verify", "--format", "json", "-o", str(target)])
        assert code == 0
        outputs.append(target.read_bytes())
    capsys.readouterr()
    ok = outputs[0] == outputs[1] and len(outputs[0]) > 0
    record(8, ok, f"two default verify runs, {len(outputs[0])} bytes each, byte-identical: {ok}")
    assert ok
