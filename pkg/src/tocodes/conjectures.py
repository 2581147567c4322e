"""Verification campaigns for the nine open problems on C_(1,e), and the
exhaustive exponent scan.

Yes/no conjectures (1, 2, 3, 4, 6, 7) get a per-cell optimal / not-optimal
verdict and an aggregate flag.  Conjectures 5, 8 and 9 only ask for the
conditions, so their campaigns emit the raw data table with no verdict.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import gcd
from pathlib import Path
from typing import Callable, Iterable

from .codecheck import analyze
from .cosets import all_cosets, ell_e, in_C1
from .errors import BudgetExceeded, InvalidInput
from .gf3m import MAX_DEFAULT_M, MAX_M, build_field
from .monomials import differential_uniformity

log = logging.getLogger(__name__)

SMALL_PRIMES = (2, 5, 7, 11, 13)
SCAN_MAX_M = 9


def is_prime(m: int) -> bool:
    return m >= 2 and all(m % p for p in range(2, int(m**0.5) + 1))


@dataclass(frozen=True)
class ConjectureSpec:
    id: int
    statement: str
    formula: str
    exponent: Callable[[int, int | None], int]
    h_range: Callable[[int], Iterable[int | None]]
    m_filter: Callable[[int], bool]
    h_filter: Callable[[int, int | None], bool]
    kind: str  # "yes_no" or "condition_discovery"
    confirmed_m: tuple[int, ...] = ()

    def domain(self, m: int) -> list[int | None]:
        if not self.m_filter(m):
            return []
        return [h for h in self.h_range(m) if self.h_filter(m, h)]


def _always(m, h=None):
    return True


def _c6_filter(m: int, h) -> bool:
    return (m % 4 == 0 and m >= 4 and 2 * h == m) or (m % 4 == 2 and m >= 6 and 2 * h == m + 2)


_CATALOG = (
    ConjectureSpec(
        1, "m odd: is C_(1,e) [3^m-1, 3^m-1-2m, 4]?", "2(1+3^h), 0 <= h <= m-1",
        lambda m, h: 2 * (1 + 3**h), lambda m: range(0, m),
        lambda m: m % 2 == 1, _always, "yes_no", tuple(range(3, 14, 2)),
    ),
    ConjectureSpec(
        2, "m >= 5 prime: optimal?", "2(3^(m-1)-1)",
        lambda m, h: 2 * (3 ** (m - 1) - 1), lambda m: [None],
        lambda m: m >= 5 and is_prime(m), _always, "yes_no", (5, 7, 11, 13),
    ),
    ConjectureSpec(
        3, "m odd, m != 0 mod 3, h odd, gcd(h, m) = 1: optimal?", "(3^h+5)/2, 1 <= h <= m-1",
        lambda m, h: (3**h + 5) // 2, lambda m: range(1, m),
        lambda m: m % 2 == 1 and m % 3 != 0, lambda m, h: h % 2 == 1 and gcd(h, m) == 1,
        "yes_no", (5, 7, 11, 13),  # qualifying m in the confirmed 5..15
    ),
    ConjectureSpec(
        4, "m odd, m != 0 mod 3, h even: optimal?", "(3^h-5)/2, 2 <= h <= m-1",
        lambda m, h: (3**h - 5) // 2, lambda m: range(2, m),
        lambda m: m % 2 == 1 and m % 3 != 0, lambda m, h: h % 2 == 0,
        "yes_no", (5, 7, 11, 13),  # qualifying m in the confirmed 3..15
    ),
    ConjectureSpec(
        5, "m even: which (m, h) give optimal codes?", "(3^h-5)/2, 2 <= h <= m-1",
        lambda m, h: (3**h - 5) // 2, lambda m: range(2, m),
        lambda m: m % 2 == 0, _always, "condition_discovery",
    ),
    ConjectureSpec(
        6, "m = 0 mod 4, h = m/2, or m = 2 mod 4, m >= 6, h = (m+2)/2: optimal?", "3^h+5, 2 <= h <= m-1",
        lambda m, h: 3**h + 5, lambda m: range(2, m),
        lambda m: m % 2 == 0, _c6_filter, "yes_no", (6, 10, 14, 18),
    ),
    ConjectureSpec(
        7, "m >= 5 prime: optimal for every h?", "3^h+5, 0 <= h <= m-1",
        lambda m, h: 3**h + 5, lambda m: range(0, m),
        lambda m: m >= 5 and is_prime(m), _always, "yes_no", (3, 5, 7, 11, 13, 17),
    ),
    ConjectureSpec(
        8, "m odd prime: which h give optimal codes?", "3^h+13, 3 <= h <= m-1",
        lambda m, h: 3**h + 13, lambda m: range(3, m),
        lambda m: m % 2 == 1 and is_prime(m), _always, "condition_discovery",
    ),
    ConjectureSpec(
        9, "which (m, h) give optimal codes?", "(3^(m-1)-1)/2+3^h+1, 0 <= h <= m-1",
        lambda m, h: (3 ** (m - 1) - 1) // 2 + 3**h + 1, lambda m: range(0, m),
        lambda m: True, _always, "condition_discovery",
    ),
)


def conjecture_catalog() -> list[ConjectureSpec]:
    return list(_CATALOG)


def get_conjecture(cid: int) -> ConjectureSpec:
    if not 1 <= cid <= 9:
        raise InvalidInput(f"conjecture id must be in 1..9, got {cid}")
    return _CATALOG[cid - 1]


@dataclass(frozen=True)
class Cell:
    conjecture: int
    m: int
    h: int | None
    e_raw: int | None
    e: int | None
    status: str  # optimal, not optimal, inapplicable, not run (budget)
    in_hypothesis: bool = True
    ell_e: int | None = None
    gcd_e_n: int | None = None
    c1: bool | None = None
    c2: bool | None = None
    c3: bool | None = None
    k: int | None = None
    d: int | None = None
    e_mod: dict[int, int] = field(default_factory=dict)


def _cell(cid: int, m: int, h, in_hyp: bool, backend: str | None, allow_large: bool) -> Cell:
    spec = get_conjecture(cid)
    n = 3**m - 1
    raw = spec.exponent(m, h)
    e = raw % n
    mods = {p: e % p for p in SMALL_PRIMES}
    if e <= 1 or in_C1(n, e):
        return Cell(cid, m, h, raw, e, "inapplicable", in_hyp, ell_e(n, e), gcd(e, n), e_mod=mods)
    rep = analyze(build_field(m, allow_large=allow_large), e, backend=backend)
    c = rep.conditions
    return Cell(
        cid, m, h, raw, e, "optimal" if rep.optimal else "not optimal", in_hyp,
        rep.ell_e, gcd(e, n), c.c1_even, c.c2_holds, c.c3_holds, rep.k, rep.d, mods,
    )


def _cell_star(args):
    return _cell(*args)


@dataclass
class CampaignReport:
    conjecture: int
    kind: str
    m_max: int
    cells: list[Cell]

    @property
    def tested(self) -> list[Cell]:
        return [c for c in self.cells if c.status in ("optimal", "not optimal")]

    @property
    def holds(self) -> bool | None:
        """Every run, in-hypothesis cell is optimal; None for condition-discovery campaigns."""
        if self.kind != "yes_no":
            return None
        return all(c.status == "optimal" for c in self.tested if c.in_hypothesis)

    def optimal_m(self, *, in_hypothesis_only: bool = False) -> list[int]:
        """m values where every run cell is optimal."""
        by_m: dict[int, list[Cell]] = {}
        for c in self.tested:
            if c.in_hypothesis or not in_hypothesis_only:
                by_m.setdefault(c.m, []).append(c)
        return sorted(m for m, cs in by_m.items() if all(c.status == "optimal" for c in cs))

    def failures(self) -> list[Cell]:
        return [c for c in self.tested if c.status != "optimal"]

    def not_run(self) -> list[int]:
        return sorted({c.m for c in self.cells if c.status == "not run (budget)"})

    def summary(self) -> str:
        cid = self.conjecture
        if self.kind != "yes_no":
            return f"conjecture {cid}: {len(self.tested)} cells tabulated (condition discovery, no verdict)"
        inside = [c for c in self.failures() if c.in_hypothesis]
        outside = [c for c in self.failures() if not c.in_hypothesis]
        tested_m = sorted({c.m for c in self.tested})
        if inside:
            head = f"conjecture {cid}: FAILS on {len(inside)} cell(s)"
        else:
            head = f"conjecture {cid}: holds on all tested cells"
        text = f"{head}; m tested {tested_m}"
        if outside:
            cells = ", ".join(f"(m={c.m}, h={c.h}, e={c.e})" for c in outside)
            text += f"; not optimal outside the hypothesis: {cells}"
        if self.not_run():
            text += f"; not run (budget): m in {self.not_run()}"
        return text


def verify(
    cid: int,
    m_max: int = MAX_DEFAULT_M,
    *,
    m_values: Iterable[int] | None = None,
    allow_large: bool = False,
    workers: int = 1,
    backend: str | None = None,
    cache_dir: str | Path | None = None,
) -> CampaignReport:
    """Run conjecture ``cid`` on every in-hypothesis (m, h) with m <= m_max.

    The published confirmation range is included even where it lies outside
    the stated hypothesis (conjecture 7 lists m = 3); such cells carry
    ``in_hypothesis=False``.  Confirmed m values beyond the budget appear as
    "not run (budget)" rows.
    """
    spec = get_conjecture(cid)
    limit = MAX_M if allow_large else MAX_DEFAULT_M
    if m_max > limit:
        raise BudgetExceeded(f"m_max={m_max} exceeds budget {limit}; pass allow_large for up to {MAX_M}")
    ms = sorted(set(m_values)) if m_values is not None else list(range(2, m_max + 1))
    jobs, cells_pre = [], []
    for m in ms:
        if m > m_max:
            continue
        hyp = spec.m_filter(m)
        if hyp:
            hs = spec.domain(m)
            jobs.extend((cid, m, h, True, backend, allow_large) for h in hs)
        elif m in spec.confirmed_m:
            jobs.extend((cid, m, h, False, backend, allow_large) for h in spec.h_range(m) if spec.h_filter(m, h))
    for m in spec.confirmed_m:
        if m > m_max and (m_values is None or m in set(m_values)):
            cells_pre.append(Cell(cid, m, None, None, None, "not run (budget)"))
    cache = _load_cache(cache_dir, cid)
    todo = [j for j in jobs if (j[1], j[2]) not in cache]
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            done = list(ex.map(_cell_star, todo))
    else:
        done = [_cell_star(j) for j in todo]
    for c in done:
        cache[(c.m, c.h)] = c
    _save_cache(cache_dir, cid, cache)
    cells = [cache[(j[1], j[2])] for j in jobs] + cells_pre
    cells.sort(key=lambda c: (c.m, -1 if c.h is None else c.h))
    return CampaignReport(cid, spec.kind, m_max, cells)


def _cache_file(cache_dir, cid: int) -> Path:
    return Path(cache_dir) / f"conjecture_{cid}_cells.jsonl"


def _load_cache(cache_dir, cid: int) -> dict:
    if cache_dir is None:
        return {}
    path = _cache_file(cache_dir, cid)
    out = {}
    if path.exists():
        for line in path.read_text().splitlines():
            d = json.loads(line)
            d["e_mod"] = {int(k): v for k, v in d["e_mod"].items()}
            c = Cell(**d)
            out[(c.m, c.h)] = c
    return out


def _save_cache(cache_dir, cid: int, cache: dict) -> None:
    if cache_dir is None:
        return
    path = _cache_file(cache_dir, cid)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = sorted(cache.values(), key=lambda c: (c.m, -1 if c.h is None else c.h))
    path.write_text("".join(json.dumps(asdict(c)) + "\n" for c in rows))


CELL_FIELDS = ("conjecture", "m", "h", "e_raw", "e", "status", "in_hypothesis", "ell_e", "gcd_e_n",
               "c1", "c2", "c3", "k", "d") + tuple(f"e_mod_{p}" for p in SMALL_PRIMES)


def _flat(c: Cell) -> dict:
    d = asdict(c)
    mods = d.pop("e_mod")
    for p in SMALL_PRIMES:
        d[f"e_mod_{p}"] = mods.get(p)
    return d


def report_to_csv(rep: CampaignReport) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CELL_FIELDS, lineterminator="\n")
    w.writeheader()
    for c in rep.cells:
        w.writerow({k: ("" if v is None else (int(v) if isinstance(v, bool) else v)) for k, v in _flat(c).items()})
    return buf.getvalue()


def report_to_json(rep: CampaignReport) -> str:
    return json.dumps(
        {
            "conjecture": rep.conjecture,
            "kind": rep.kind,
            "m_max": rep.m_max,
            "holds": rep.holds,
            "cells": [_flat(c) for c in rep.cells],
        },
        indent=1,
    )


# -- exhaustive exponent scan ------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    e: int
    leader: int
    uniformity: int
    planar: bool
    apn: bool
    ell_e: int
    c1: bool
    c2: bool
    c3: bool
    k: int
    d: int
    optimal: bool


def _scan_leader(m: int, lead: int, backend: str | None) -> tuple:
    f = build_field(m)
    rep = analyze(f, lead, backend=backend)
    u = differential_uniformity(f, lead, all_shifts=False, backend=backend)
    c = rep.conditions
    return u, rep.ell_e, c.c1_even, c.c2_holds, c.c3_holds, rep.k, rep.d, rep.optimal


def _scan_leader_star(args):
    return _scan_leader(*args)


def scan_exponents(
    m: int,
    predicate: Callable[[ScanRow], bool] | None = None,
    *,
    workers: int = 1,
    backend: str | None = None,
) -> list[ScanRow]:
    """Classify every even e in (1, n), e not in C_1.

    Work is done once per cyclotomic coset; analyze and the differential
    uniformity are both invariant under e -> 3e mod n.
    """
    if m > SCAN_MAX_M:
        raise BudgetExceeded(f"full exponent scans limited to m <= {SCAN_MAX_M}")
    if m < 2:
        raise InvalidInput(f"m must be at least 2, got {m}")
    n = 3**m - 1
    cosets = [c for c in all_cosets(n) if c.leader % 2 == 0 and c.leader != 0 and not in_C1(n, c.leader)]
    jobs = [(m, c.leader, backend) for c in cosets]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_scan_leader_star, jobs, chunksize=16))
    else:
        results = [_scan_leader_star(j) for j in jobs]
    rows = []
    for cos, (u, ell, c1, c2, c3, k, d, opt) in zip(cosets, results):
        for e in cos.members:
            rows.append(ScanRow(e, cos.leader, u, u == 1, u == 2, ell, c1, c2, c3, k, d, opt))
    rows.sort(key=lambda r: r.e)
    if predicate is not None:
        rows = [r for r in rows if predicate(r)]
    return rows


def scan_to_csv(rows: Iterable[ScanRow]) -> str:
    buf = io.StringIO()
    names = list(ScanRow.__dataclass_fields__)
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(names)
    for r in rows:
        w.writerow([int(v) if isinstance(v, bool) else v for v in asdict(r).values()])
    return buf.getvalue()
