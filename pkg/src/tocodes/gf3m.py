"""Arithmetic in GF(3^m) through exp/log tables.

Elements are plain ints: the encoding sum(d_i * 3^i) of the polynomial-basis
digits d_0..d_{m-1}.  0 is the additive and 1 the multiplicative identity,
and 2 encodes -1.  alpha is always the class of x modulo the defining
primitive polynomial, so exp_table[1] == 3.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path

import numpy as np

from ._kernels import kernels
from .errors import BudgetExceeded, DegreeMismatch, DivisionByZero, InvalidInput, NotIrreducible, NotPrimitive
from .poly3 import Poly3, as_poly, is_irreducible, poly_powmod

log = logging.getLogger(__name__)

TABLE_DTYPE = np.int32
_CHUNK = 1 << 22

MAX_DEFAULT_M = 13

MAX_M = 19  # encodings must fit in int32

# Defining polynomials, coefficients low-to-high.  m = 3, 4, 5 are the
# generators of the worked examples (alpha^3 + 2alpha + 1 = 0,
# alpha^4 + 2alpha^3 + 2 = 0, alpha^5 + 2alpha + 1 = 0).  Elsewhere: the first
# primitive trinomial x^m + a x^k + b by increasing (k, a, b); for m in
# {10, 12, 18} no primitive trinomial exists and the entry is the first
# primitive polynomial when the low coefficients are read as a base-3 number
# (c_0 least significant) in increasing order.
DEFAULT_PRIMITIVE = {
    2: (2, 1, 1),
    3: (1, 2, 0, 1),
    4: (2, 0, 0, 2, 1),
    5: (1, 2, 0, 0, 0, 1),
    6: (2, 1, 0, 0, 0, 0, 1),
    7: (1, 0, 2, 0, 0, 0, 0, 1),
    8: (2, 0, 0, 1, 0, 0, 0, 0, 1),
    9: (1, 0, 0, 0, 2, 0, 0, 0, 0, 1),
    10: (2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    11: (1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    12: (2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1),
    13: (1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    14: (2, 1) + (0,) * 12 + (1,),
    15: (1, 0, 2) + (0,) * 12 + (1,),
    16: (2,) + (0,) * 6 + (1,) + (0,) * 8 + (1,),
    17: (1, 2) + (0,) * 15 + (1,),
    18: (2, 2, 2, 0, 0, 1) + (0,) * 12 + (1,),
    19: (1, 0, 2) + (0,) * 16 + (1,),
}


def to_digits(x: int, m: int) -> list[int]:
    return [(x // 3**i) % 3 for i in range(m)]


def from_digits(digits) -> int:
    return sum(int(d) % 3 * 3**i for i, d in enumerate(digits))


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(3^m) with a fixed primitive element alpha.

    exp_table[i] is the encoding of alpha^i for 0 <= i < n; log_table is
    indexed by encoding with log_table[0] = -1.
    """

    m: int
    prim_poly: Poly3
    exp_table: np.ndarray
    log_table: np.ndarray

    @property
    def n(self) -> int:
        return 3**self.m - 1

    @property
    def q(self) -> int:
        return 3**self.m

    @property
    def alpha(self) -> int:
        return int(self.exp_table[1])

    def element(self, k: int) -> int:
        """alpha^k."""
        return int(self.exp_table[k % self.n])

    @cached_property
    def neg_table(self) -> np.ndarray:
        t = np.zeros(self.q, dtype=TABLE_DTYPE)
        t[self.exp_table] = np.roll(self.exp_table, -(self.n // 2))
        t.flags.writeable = False
        return t

    def power_table(self, e: int) -> np.ndarray:
        """x^e for every encoding x (0^0 = 1)."""
        if e < 0:
            raise InvalidInput("exponent must be nonnegative")
        n = self.n
        e %= n
        t = np.empty(self.q, dtype=TABLE_DTYPE)
        t[0] = 1 if e == 0 else 0
        for lo in range(1, self.q, _CHUNK):
            logs = self.log_table[lo : lo + _CHUNK].astype(np.int64)
            t[lo : lo + _CHUNK] = self.exp_table[(logs * e) % n]
        return t

    def __repr__(self) -> str:
        return f"FieldSpec(m={self.m}, prim_poly={self.prim_poly.pretty()!r})"


def _cache_path(m: int, poly: Poly3) -> Path | None:
    root = os.environ.get("TOC_CACHE_DIR")
    if not root:
        return None
    return Path(root) / f"gf3_{m}_{poly.to_text().replace(',', '')}.npy"


def _exp_sequence(m: int, poly: Poly3) -> np.ndarray:
    n = 3**m - 1
    path = _cache_path(m, poly)
    if path is not None and path.exists():
        seq = np.load(path)
        if seq.shape == (n,):
            return seq
    seq = kernels.exp_sequence(m, np.array(poly.coeffs, dtype=np.int64), n)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        np.save(path, seq)
    return seq


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _root_is_primitive(poly: Poly3, m: int) -> bool:
    """x^(n/p) != 1 mod poly for every prime p | n; cheap pre-check before the tables."""
    n = 3**m - 1
    x = Poly3.x_pow(1)
    one = Poly3((1,))
    return all(poly_powmod(x, n // p, poly) != one for p in _prime_factors(n))


def _root_order(poly: Poly3, m: int) -> int:
    order = 3**m - 1
    one, x = Poly3((1,)), Poly3.x_pow(1)
    for p in _prime_factors(order):
        while order % p == 0 and poly_powmod(x, order // p, poly) == one:
            order //= p
    return order


@lru_cache(maxsize=4)
def _build(m: int, coeffs: tuple[int, ...]) -> FieldSpec:
    poly = Poly3(coeffs)
    if not is_irreducible(poly):
        raise NotIrreducible(f"{poly.pretty()} is reducible over GF(3)")
    n = 3**m - 1
    if not _root_is_primitive(poly, m):
        raise NotPrimitive(f"root of {poly.pretty()} has order {_root_order(poly, m)}, not {n}")
    exp = np.asarray(_exp_sequence(m, poly), dtype=TABLE_DTYPE)
    ones = np.flatnonzero(exp[1:] == 1)
    if ones.size:
        order = int(ones[0]) + 1
        raise NotPrimitive(f"root of {poly.pretty()} has order {order}, not {n}")
    logt = np.full(3**m, -1, dtype=TABLE_DTYPE)
    logt[exp] = np.arange(n, dtype=TABLE_DTYPE)
    if (logt[1:] < 0).any():
        raise NotPrimitive(f"powers of the root of {poly.pretty()} miss some elements")
    exp.flags.writeable = False
    logt.flags.writeable = False
    return FieldSpec(m, poly, exp, logt)


def build_field(m: int, prim_poly: "Poly3 | str | None" = None, *, allow_large: bool = False) -> FieldSpec:
    """Construct GF(3^m), validating that ``prim_poly`` is primitive.

    Without ``prim_poly`` the built-in default for m is used.  Fields beyond
    m = 13 need ``allow_large=True``.
    """
    if m < 2:
        raise InvalidInput(f"m must be at least 2, got {m}")
    limit = MAX_M if allow_large else MAX_DEFAULT_M
    if m > limit:
        raise BudgetExceeded(f"m={m} exceeds the table budget m <= {limit}")
    if prim_poly is None:
        if m not in DEFAULT_PRIMITIVE:
            raise InvalidInput(f"no default primitive polynomial for m={m}")
        poly = Poly3(DEFAULT_PRIMITIVE[m])
    else:
        poly = as_poly(prim_poly)
    if poly.degree != m or not poly.is_monic():
        raise DegreeMismatch(f"{poly.pretty()} is not monic of degree {m}")
    return _build(m, poly.coeffs)


def add(f: FieldSpec, a: int, b: int) -> int:
    out, p = 0, 1
    for _ in range(f.m):
        out += ((a % 3 + b % 3) % 3) * p
        a //= 3
        b //= 3
        p *= 3
    return out


def neg(f: FieldSpec, a: int) -> int:
    out, p = 0, 1
    for _ in range(f.m):
        out += ((3 - a % 3) % 3) * p
        a //= 3
        p *= 3
    return out


def sub(f: FieldSpec, a: int, b: int) -> int:
    return add(f, a, neg(f, b))


def mul(f: FieldSpec, a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return int(f.exp_table[(int(f.log_table[a]) + int(f.log_table[b])) % f.n])


def inv(f: FieldSpec, a: int) -> int:
    if a == 0:
        raise DivisionByZero("0 has no inverse")
    return int(f.exp_table[(-int(f.log_table[a])) % f.n])


def pow(f: FieldSpec, x: int, e: int) -> int:  # noqa: A001 - mirrors the math name
    if e < 0:
        raise InvalidInput("exponent must be nonnegative")
    if x == 0:
        return 1 if e == 0 else 0
    return int(f.exp_table[(int(f.log_table[x]) * e) % f.n])


def trace(f: FieldSpec, x: int) -> int:
    """Absolute trace x + x^3 + ... + x^(3^(m-1)), returned as 0, 1 or 2."""
    acc = 0
    y = x
    for _ in range(f.m):
        acc = add(f, acc, y)
        y = pow(f, y, 3)
    if acc not in (0, 1, 2):
        raise ArithmeticError(f"trace of {x} left the prime field: {acc}")
    return acc


def trace_table(f: FieldSpec) -> np.ndarray:
    """Tr(x) for every encoding, via linearity over the polynomial basis."""
    basis = np.array([trace(f, 3**i) for i in range(f.m)], dtype=np.int64)
    digits = (np.arange(f.q, dtype=np.int64)[:, None] // 3 ** np.arange(f.m)) % 3
    return (digits @ basis) % 3


def coordinates(f: FieldSpec, x: int) -> list[int]:
    return to_digits(x, f.m)
