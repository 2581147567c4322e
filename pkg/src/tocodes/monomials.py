"""Planar / APN testing of power maps x -> x^e and the registries of known
planar and APN exponents over GF(3^m)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ._kernels import get_backend
from .cosets import cyclotomic_coset, ell_e, in_C1
from .gf3m import FieldSpec


def differential_uniformity(
    f: FieldSpec,
    e: int,
    *,
    cap: int | None = None,
    all_shifts: bool = True,
    backend: str | None = None,
) -> int:
    """max over a != 0 and b of #{x : (x+a)^e - x^e = b}.

    With ``all_shifts=True`` every shift a is bucketed (O(q^2)).  For a
    monomial the substitution x = a*y maps the equation for shift a onto the
    one for shift 1 with b scaled by a^-e, so ``all_shifts=False`` returns the
    same number in O(q).  ``cap`` allows an early exit once the running
    maximum exceeds it; the returned value is then only a lower bound.
    """
    k = get_backend(backend)
    powtab = f.power_table(e)
    if not all_shifts:
        return int(k.uniformity_unit_shift(powtab, f.m))
    return int(k.uniformity_all_shifts(powtab, f.m, -1 if cap is None else cap))


def is_planar(f: FieldSpec, e: int, **kw) -> bool:
    return differential_uniformity(f, e, cap=1, **kw) == 1


def is_apn(f: FieldSpec, e: int, **kw) -> bool:
    return differential_uniformity(f, e, cap=2, **kw) == 2


@dataclass(frozen=True)
class MonomialProfile:
    m: int
    e: int
    is_even: bool
    gcd_e_n: int
    ell_e: int
    in_C1: bool
    differential_uniformity: int

    @property
    def planar(self) -> bool:
        return self.differential_uniformity == 1

    @property
    def apn(self) -> bool:
        return self.differential_uniformity == 2

    def low_uniformity_profile_holds(self) -> bool:
        """Planar/APN forces e even, gcd(e, n) = 2, |C_e| = m and e not in C_1."""
        if not (self.planar or self.apn):
            return True
        return self.is_even and self.gcd_e_n == 2 and self.ell_e == self.m and not self.in_C1


def profile(f: FieldSpec, e: int, *, all_shifts: bool = False) -> MonomialProfile:
    n = f.n
    e %= n
    ell = ell_e(n, e)
    p = MonomialProfile(
        m=f.m,
        e=e,
        is_even=e % 2 == 0,
        gcd_e_n=gcd(e, n),
        ell_e=ell,
        in_C1=in_C1(n, e),
        differential_uniformity=differential_uniformity(f, e, all_shifts=all_shifts),
    )
    if not p.low_uniformity_profile_holds():
        raise AssertionError(f"planar/APN exponent violates the coset/gcd profile: {p}")
    return p


@dataclass(frozen=True)
class FamilyExponent:
    """One exponent emitted by a family registry.

    ``raw`` is the formula value before reduction mod n; ``aliases`` lists
    other family instances that landed in the same cyclotomic coset.
    """

    e: int
    raw: int
    family: str
    h: int | None = None
    aliases: tuple[str, ...] = ()

    @property
    def tag(self) -> str:
        return self.family if self.h is None else f"{self.family} (h={self.h})"


def _dedupe(m: int, cands: list[tuple[int, str, int | None]]) -> list[FamilyExponent]:
    n = 3**m - 1
    out: dict[int, FamilyExponent] = {}
    for raw, fam, h in cands:
        e = raw % n
        if e <= 1 or in_C1(n, e):
            continue
        key = cyclotomic_coset(n, e).leader
        if key in out:
            prev = out[key]
            tag = fam if h is None else f"{fam} (h={h})"
            out[key] = FamilyExponent(prev.e, prev.raw, prev.family, prev.h, prev.aliases + (tag,))
        else:
            out[key] = FamilyExponent(e, raw, fam, h)
    return list(out.values())


def known_planar_exponents(m: int) -> list[FamilyExponent]:
    """x^2; x^(3^h+1) with m/gcd(m,h) odd; x^((3^h+1)/2) with h odd, gcd(m,h) = 1."""
    cands: list[tuple[int, str, int | None]] = [(2, "x^2", None)]
    for h in range(m):
        if (m // gcd(m, h)) % 2 == 1:
            cands.append((3**h + 1, "3^h+1", h))
    for h in range(1, m, 2):
        if gcd(m, h) == 1:
            cands.append(((3**h + 1) // 2, "(3^h+1)/2", h))
    return _dedupe(m, cands)


def known_apn_exponents(m: int) -> list[FamilyExponent]:
    """The seven APN monomial families over GF(3^m); all need m odd.

    Instances whose coset is already a registered planar exponent are left
    out (a planar map is never APN); see :func:`degenerate_apn_instances`.
    At m = 3 this drops e = 4 from the two families split by m mod 4.
    """
    planar = {cyclotomic_coset(3**m - 1, p.e).leader for p in known_planar_exponents(m)}
    return [x for x in apn_family_instances(m) if cyclotomic_coset(3**m - 1, x.e).leader not in planar]


def degenerate_apn_instances(m: int) -> list[FamilyExponent]:
    """APN-family instances that coincide with a known planar exponent."""
    planar = {cyclotomic_coset(3**m - 1, p.e).leader for p in known_planar_exponents(m)}
    return [x for x in apn_family_instances(m) if cyclotomic_coset(3**m - 1, x.e).leader in planar]


def apn_family_instances(m: int) -> list[FamilyExponent]:
    """Every family formula instantiated at m, reduced mod n, deduplicated by coset."""
    if m % 2 == 0 or m < 3:
        return []
    q = 3**m
    half = (q - 1) // 2
    cands: list[tuple[int, str, int | None]] = [
        (3 ** (m - 1) - 1, "3^(m-1)-1", None),
        (3 ** ((m + 1) // 2) - 1, "3^((m+1)/2)-1", None),
    ]
    if m >= 5:
        cands.append(((q - 3) // 2, "(3^m-3)/2", None))
    cands.append(((q + 1) // 4 + half, "(3^m+1)/4+(3^m-1)/2", None))
    if m % 4 == 3:
        cands.append(((3 ** ((m + 1) // 4) - 1) * (3 ** ((m + 1) // 2) + 1), "(3^((m+1)/4)-1)(3^((m+1)/2)+1)", None))
        cands.append(((3 ** ((m + 1) // 2) - 1) // 2, "(3^((m+1)/2)-1)/2", None))
        cands.append(((3 ** (m + 1) - 1) // 8, "(3^(m+1)-1)/8", None))
    else:
        cands.append(((3 ** ((m + 1) // 2) - 1) // 2 + half, "(3^((m+1)/2)-1)/2+(3^m-1)/2", None))
        cands.append(((3 ** (m + 1) - 1) // 8 + half, "(3^(m+1)-1)/8+(3^m-1)/2", None))
    return _dedupe(m, cands)
