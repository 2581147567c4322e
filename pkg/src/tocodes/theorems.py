"""Closed-form optimality predicates for the exponent families, and a driver
that checks each predicate against :func:`codecheck.analyze`.

Exponents built from (m, h) are reduced mod n before analysis.  A cell whose
reduced exponent lies in C_1 is reported as inapplicable, never dropped.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from math import gcd
from typing import Callable, Iterable

from .codecheck import analyze
from .cosets import in_C1
from .errors import BudgetExceeded, InvalidInput
from .gf3m import build_field
from .monomials import differential_uniformity, known_apn_exponents, known_planar_exponents

THEOREM_IDS = ("t2", "t3", "t4", "t5", "t6", "t7", "t8")
THEOREM_NAMES = {
    "t2": "T2_planar",
    "t3": "T3_half31",
    "t4": "T4_31",
    "t5": "T5_apn",
    "t6": "T6_half3m1",
    "t7": "T7_two31",
    "t8": "T8_3m1",
}
BRUTE_FORCE_MAX_M = 7
# (m, h) pairs singled out in the literature as optimal for the e = 2(1+3^h) family
T7_REMARK_OPTIMAL = frozenset({(2, 1), (4, 2)})


def t3_predicate(m: int, h: int) -> bool:
    """e = (3^h+1)/2: optimal iff h odd and gcd(m, h) = 1."""
    return h % 2 == 1 and gcd(m, h) == 1


def t4_predicate(m: int, h: int) -> bool:
    """e = 3^h+1: optimal iff m/gcd(m, h) is odd."""
    return (m // gcd(m, h)) % 2 == 1


def t6_predicate(m: int, h: int) -> bool:
    """e = (3^h-1)/2: optimal iff m odd, h even, gcd(h, m) = gcd(h-1, m) = 1."""
    return m % 2 == 1 and h % 2 == 0 and gcd(h, m) == 1 and gcd(h - 1, m) == 1


def t7_params(m: int, h: int) -> tuple[int, int]:
    """(k, d) of C_(1,e) for e = 2(1+3^h), m even."""
    if m % 2:
        raise InvalidInput("t7 needs m even")
    n = 3**m - 1
    k = n - 3 * m // 2 if 2 * h == m else n - 2 * m
    return k, 3


def t8_predicate(m: int, h: int) -> bool:
    """e = 3^h-1: optimal iff gcd(h, m) = 1 and gcd(3^h-2, 3^m-1) = 1."""
    return gcd(h, m) == 1 and gcd(3**h - 2, 3**m - 1) == 1


@dataclass(frozen=True)
class Family:
    exponent: Callable[[int, int], int]
    h_range: Callable[[int], range]
    m_ok: Callable[[int], bool]
    predicate: Callable[[int, int], bool] | None = None


FAMILIES: dict[str, Family] = {
    "t3": Family(lambda m, h: (3**h + 1) // 2, lambda m: range(1, m), lambda m: True, t3_predicate),
    "t4": Family(lambda m, h: 3**h + 1, lambda m: range(0, m), lambda m: True, t4_predicate),
    "t6": Family(lambda m, h: (3**h - 1) // 2, lambda m: range(2, m), lambda m: True, t6_predicate),
    "t7": Family(lambda m, h: 2 * (1 + 3**h), lambda m: range(0, m), lambda m: m % 2 == 0),
    "t8": Family(lambda m, h: 3**h - 1, lambda m: range(1, m), lambda m: True, t8_predicate),
}


@dataclass(frozen=True)
class FamilyVerdict:
    theorem_id: str
    m: int
    h: int | None
    e: int
    predicted_optimal: bool | None
    predicted_params: tuple[int, int, int] | None
    brute_force_params: tuple[int, int, int] | None
    observed_optimal: bool | None
    agree: bool
    status: str = "ok"  # or "inapplicable"
    note: str = ""

    def row(self) -> dict:
        d = asdict(self)
        d["theorem"] = THEOREM_NAMES[self.theorem_id]
        return d


def _verdict_for_cell(tid: str, m: int, h: int, backend: str | None = None) -> FamilyVerdict:
    fam = FAMILIES[tid]
    n = 3**m - 1
    e = fam.exponent(m, h) % n
    if in_C1(n, e):
        return FamilyVerdict(tid, m, h, e, None, None, None, None, True, "inapplicable", "reduced e lies in C_1")
    rep = analyze(build_field(m), e, backend=backend)
    observed = rep.params
    if tid == "t7":
        k, d = t7_params(m, h)
        predicted = (n, k, d)
        note = "remarked optimal for this (m, h)" if (m, h) in T7_REMARK_OPTIMAL else ""
        return FamilyVerdict(tid, m, h, e, False, predicted, observed, rep.optimal, predicted == observed, note=note)
    pred = fam.predicate(m, h)
    predicted = (n, n - 2 * m, 4) if pred else None
    return FamilyVerdict(tid, m, h, e, pred, predicted, observed, rep.optimal, pred == rep.optimal)


def planar_implies_optimal_check(m: int, backend: str | None = None) -> list[FamilyVerdict]:
    """Every registered planar exponent is planar by brute force and optimal."""
    if m > BRUTE_FORCE_MAX_M:
        raise BudgetExceeded(f"brute-force planarity limited to m <= {BRUTE_FORCE_MAX_M}")
    f = build_field(m)
    n = f.n
    out = []
    for fe in known_planar_exponents(m):
        rep = analyze(f, fe.e, backend=backend)
        unif = differential_uniformity(f, fe.e, backend=backend)
        ok = unif == 1 and rep.optimal
        out.append(
            FamilyVerdict("t2", m, fe.h, fe.e, True, (n, n - 2 * m, 4), rep.params, rep.optimal, ok,
                          note=f"{fe.tag}; uniformity {unif}")
        )
    return out


def apn_implies_optimal_check(m: int, backend: str | None = None) -> list[FamilyVerdict]:
    """Every registered APN exponent is APN by brute force and optimal."""
    if m > BRUTE_FORCE_MAX_M:
        raise BudgetExceeded(f"brute-force APN check limited to m <= {BRUTE_FORCE_MAX_M}")
    f = build_field(m)
    n = f.n
    out = []
    for fe in known_apn_exponents(m):
        rep = analyze(f, fe.e, backend=backend)
        unif = differential_uniformity(f, fe.e, backend=backend)
        ok = unif == 2 and rep.optimal
        out.append(
            FamilyVerdict("t5", m, None, fe.e, True, (n, n - 2 * m, 4), rep.params, rep.optimal, ok,
                          note=f"{fe.tag}; uniformity {unif}")
        )
    return out


def cross_validate(
    theorem_id: str,
    m_range: Iterable[int],
    h_range: Iterable[int] | None = None,
    backend: str | None = None,
) -> list[FamilyVerdict]:
    """Predicate versus brute-force verdict on every valid (m, h), ordered by (m, h)."""
    tid = theorem_id.lower()
    if tid not in THEOREM_IDS:
        raise InvalidInput(f"unknown theorem {theorem_id!r}; expected one of {THEOREM_IDS}")
    ms = sorted(set(m_range))
    if ms and ms[-1] > 13:
        raise BudgetExceeded("cross-validation limited to m <= 13")
    out: list[FamilyVerdict] = []
    if tid in ("t2", "t5"):
        check = planar_implies_optimal_check if tid == "t2" else apn_implies_optimal_check
        for m in ms:
            if tid == "t5" and (m % 2 == 0 or m < 3):
                continue
            out.extend(check(m, backend))
        return out
    fam = FAMILIES[tid]
    hs = None if h_range is None else set(h_range)
    for m in ms:
        if m < 2 or not fam.m_ok(m):
            continue
        for h in fam.h_range(m):
            if hs is None or h in hs:
                out.append(_verdict_for_cell(tid, m, h, backend))
    return out


def disagreements(verdicts: Iterable[FamilyVerdict]) -> list[FamilyVerdict]:
    return [v for v in verdicts if not v.agree]


CSV_FIELDS = ("theorem", "m", "h", "e", "predicted", "observed", "agree", "status", "note")


def _fmt_params(p) -> str:
    return "" if p is None else "[{}, {}, {}]".format(*p)


def verdicts_to_csv(verdicts: Iterable[FamilyVerdict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for v in verdicts:
        pred = _fmt_params(v.predicted_params) if v.predicted_params else ("not optimal" if v.predicted_optimal is False else "")
        w.writerow([THEOREM_NAMES[v.theorem_id], v.m, "" if v.h is None else v.h, v.e, pred,
                    _fmt_params(v.brute_force_params), int(v.agree), v.status, v.note])
    return buf.getvalue()


def verdicts_to_json(verdicts: Iterable[FamilyVerdict]) -> str:
    rows = []
    for v in verdicts:
        r = v.row()
        r["predicted_params"] = list(v.predicted_params) if v.predicted_params else None
        r["brute_force_params"] = list(v.brute_force_params) if v.brute_force_params else None
        rows.append(r)
    return json.dumps(rows, indent=1)
