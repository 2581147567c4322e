"""3-cyclotomic cosets modulo n = 3^m - 1."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


@dataclass(frozen=True)
class Coset:
    leader: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, j: int) -> bool:
        return j in self.members


def cyclotomic_coset(n: int, j: int) -> Coset:
    """Orbit {j, 3j, 9j, ...} of j under multiplication by 3 modulo n."""
    j %= n
    members = [j]
    x = (3 * j) % n
    while x != j:
        members.append(x)
        x = (3 * x) % n
    return Coset(min(members), tuple(members))


def ell_e(n: int, e: int) -> int:
    """Size of the coset containing e."""
    e %= n
    x = (3 * e) % n
    ell = 1
    while x != e:
        x = (3 * x) % n
        ell += 1
    return ell


def in_C1(n: int, e: int) -> bool:
    """True iff e = 3^i mod n for some i."""
    e %= n
    x = 1 % n
    while True:
        if x == e:
            return True
        x = (3 * x) % n
        if x == 1 % n:
            return False


@lru_cache(maxsize=16)
def _leaders(n: int) -> tuple[int, ...]:
    seen = np.zeros(n, dtype=bool)
    leaders = []
    for j in range(n):
        if seen[j]:
            continue
        leaders.append(j)
        x = j
        while not seen[x]:
            seen[x] = True
            x = (3 * x) % n
    return tuple(leaders)


def coset_leaders(n: int) -> list[int]:
    """Sorted coset leaders of Z_n (visited-bitmap sweep)."""
    return list(_leaders(n))


def all_cosets(n: int) -> list[Coset]:
    return [cyclotomic_coset(n, j) for j in _leaders(n)]


# -- closed-form coset sizes -------------------------------------------------


def expected_ell_3h1(m: int, h: int) -> int:
    """Predicted |C_e| for e = 3^h + 1 and for e = 2(3^h + 1): m/2 iff m even and h = m/2, else m."""
    return m // 2 if m % 2 == 0 and 2 * h == m else m


def gcd2_size_violations(m: int) -> list[tuple[int, int]]:
    """(e, |C_e|) for every e with gcd(e, n) = 2 whose coset is not of full size m."""
    n = 3**m - 1
    return [(e, ell_e(n, e)) for e in range(2, n, 2) if np.gcd(e, n) == 2 and ell_e(n, e) != m]


def closed_form_size_violations(m: int, scale: int) -> list[tuple[int, int, int, int]]:
    """(h, e, |C_e|, predicted) where e = scale*(3^h + 1) mod n disagrees with the closed form."""
    n = 3**m - 1
    out = []
    for h in range(m):
        e = scale * (3**h + 1) % n
        ell, want = ell_e(n, e), expected_ell_3h1(m, h)
        if ell != want:
            out.append((h, e, ell, want))
    return out
