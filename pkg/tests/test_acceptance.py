"""Acceptance criteria 1-9.  Each test prints one PASS/FAIL line; all
comparisons are exact."""

import time
from math import gcd

import pytest

from oracles import EXAMPLE_POLY, WORKED_EXAMPLES
from tocodes.codecheck import analyze, direct_min_distance, dual_weight_enumerator, macwilliams_transform
from tocodes.conjectures import verify
from tocodes.cosets import closed_form_size_violations, ell_e, gcd2_size_violations, in_C1
from tocodes.gf3m import build_field
from tocodes.monomials import differential_uniformity, known_apn_exponents, known_planar_exponents
from tocodes.theorems import cross_validate, disagreements, t7_params

RESULTS = []


def report(label, ok, elapsed, limit, detail=""):
    ok = ok and elapsed < limit
    line = f"{'PASS' if ok else 'FAIL'} criterion {label} ({elapsed:.2f}s < {limit}s){': ' + detail if detail else ''}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_generator_polynomials():
    t = time.perf_counter()
    got = {k: analyze(build_field(k[0], EXAMPLE_POLY[k[0]]), k[1]).generator_poly.pretty() for k in WORKED_EXAMPLES}
    bad = [k for k in WORKED_EXAMPLES if got[k] != WORKED_EXAMPLES[k][0]]
    report("1 generator polynomials", not bad, time.perf_counter() - t, 1, f"mismatch {bad}" if bad else "")


def test_criterion_2_parameters():
    t = time.perf_counter()
    bad = []
    for (m, e), (_, params, _) in WORKED_EXAMPLES.items():
        rep = analyze(build_field(m, EXAMPLE_POLY[m]), e)
        if rep.params != params or not rep.optimal:
            bad.append((m, e, rep.params))
    report("2 parameters", not bad, time.perf_counter() - t, 1, f"mismatch {bad}" if bad else "")


def test_criterion_3_dual_enumerators():
    t = time.perf_counter()
    bad = []
    for (m, e), (_, _, counts) in WORKED_EXAMPLES.items():
        we = dual_weight_enumerator(build_field(m, EXAMPLE_POLY[m]), e)
        if we.counts != counts or we.total() != 3 ** (2 * m):
            bad.append((m, e))
    report("3 dual weight enumerators", not bad, time.perf_counter() - t, 30, f"mismatch {bad}" if bad else "")


def test_criterion_4_iff_cross_validation():
    t = time.perf_counter()
    counts = {tid: len(disagreements(cross_validate(tid, range(2, 7)))) for tid in ("t3", "t4", "t6", "t8")}
    report("4 iff predicates vs brute force, 2 <= m <= 6", not any(counts.values()), time.perf_counter() - t, 60,
           f"disagreements {counts}")


def test_criterion_5_planar_apn_oracles():
    t = time.perf_counter()
    bad = []
    for m in range(2, 7):
        f = build_field(m)
        bad += [("planar", m, x.e) for x in known_planar_exponents(m) if differential_uniformity(f, x.e) != 1]
    for m in (3, 5):
        f = build_field(m)
        bad += [("apn", m, x.e) for x in known_apn_exponents(m) if differential_uniformity(f, x.e) != 2]
    report("5 planar (m <= 6) and APN (odd m <= 5) uniformity", not bad, time.perf_counter() - t, 120,
           f"wrong {bad}" if bad else "")


def test_criterion_6a_gcd_two_full_cosets():
    t = time.perf_counter()
    bad = {m: v for m in range(2, 8) if (v := gcd2_size_violations(m))}
    report("6a gcd(e, n) = 2 => |C_e| = m, m <= 7", not bad, time.perf_counter() - t, 60, str(bad) if bad else "")


def test_criterion_6b_low_uniformity_profile():
    t = time.perf_counter()
    bad = []
    for m in range(2, 8):
        f = build_field(m)
        n = f.n
        for e in range(1, n):
            if differential_uniformity(f, e, all_shifts=False) > 2:
                continue
            if not (e % 2 == 0 and gcd(e, n) == 2 and ell_e(n, e) == m and not in_C1(n, e)):
                bad.append((m, e))
    report("6b uniformity <= 2 => e even, gcd 2, |C_e| = m, e not in C_1 (m <= 7)", not bad,
           time.perf_counter() - t, 60, str(bad[:5]) if bad else "")


def test_criterion_6c_size_of_3h_plus_1():
    t = time.perf_counter()
    bad = {m: v for m in range(2, 11) if (v := closed_form_size_violations(m, 1))}
    report("6c |C_e| closed form for e = 3^h + 1, m <= 10", not bad, time.perf_counter() - t, 60,
           str(bad) if bad else "")


def test_criterion_6d_size_of_twice_3h_plus_1():
    t = time.perf_counter()
    bad = {m: v for m in range(2, 11) if (v := closed_form_size_violations(m, 2))}
    report("6d |C_e| closed form for e = 2(3^h + 1), m <= 10", not bad, time.perf_counter() - t, 60,
           f"(h, e, |C_e|, predicted) violations {bad}" if bad else "")


CONJECTURE_CASES = [
    ("7a", 1, [3, 5, 7, 9, 11, 13]),
    ("7b", 2, [5, 7, 11, 13]),
    ("7c", 3, [5, 7, 11, 13]),
    ("7d", 4, [5, 7, 11, 13]),
    ("7e", 6, [6, 10]),
    ("7f", 7, [3, 5, 7, 11, 13]),
]


@pytest.mark.parametrize("label,cid,ms", CONJECTURE_CASES, ids=[c[0] for c in CONJECTURE_CASES])
def test_criterion_7_conjecture_campaigns(label, cid, ms):
    t = time.perf_counter()
    rep = verify(cid, 13, m_values=ms)
    cells = [c for c in rep.cells if c.m in ms]
    covered = sorted({c.m for c in rep.tested})
    bad = [(c.m, c.h, c.e, c.status) for c in cells if c.status != "optimal"]
    detail = f"conjecture {cid}, m {covered}" + (f"; not optimal {bad}" if bad else "")
    report(f"{label} conjecture {cid} positive for m in {ms}", not bad and covered == ms,
           time.perf_counter() - t, 600, detail)


def test_criterion_8_oracle_equivalence():
    t = time.perf_counter()
    bad = []
    for m in (2, 3, 4):
        f = build_field(m)
        for e in range(0, f.n, 2):
            if not in_C1(f.n, e) and direct_min_distance(f, e) != analyze(f, e).d:
                bad.append(("direct", m, e))
    for m in (2, 3, 4, 5):
        f = build_field(m)
        for e in range(0, f.n, 2):
            if in_C1(f.n, e):
                continue
            code = macwilliams_transform(dual_weight_enumerator(f, e))
            low_zero = code[1] == code[2] == code[3] == 0
            if low_zero != (analyze(f, e).d == 4):
                bad.append(("macwilliams", m, e))
    report("8 direct search and MacWilliams agree with the conditions", not bad, time.perf_counter() - t, 120,
           str(bad[:5]) if bad else "")


def test_criterion_9_two_times_3h_plus_1_parameters():
    t = time.perf_counter()
    bad = []
    for m in (2, 4, 6):
        n = 3**m - 1
        for h in range(m):
            e = 2 * (1 + 3**h) % n
            got = analyze(build_field(m), e).params
            want = (n,) + t7_params(m, h)
            if got != want:
                bad.append((m, h, e, got, want))
    report("9 e = 2(1+3^h) parameters for m in {2, 4, 6}", not bad, time.perf_counter() - t, 30,
           f"(m, h, e, observed, predicted) {bad}" if bad else "")
