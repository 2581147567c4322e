"""Parameters of the ternary cyclic code C_(1,e).

C_(1,e) has length n = 3^m - 1 and generator m_alpha(x) m_{alpha^e}(x), so a
word c is a codeword iff sum c_i alpha^i = 0 and sum c_i alpha^(e i) = 0.  Its
minimum distance is decided by three conditions:

* C1: e is even (otherwise x and -x give a weight-2 word);
* C2: (x+1)^e + x^e + 1 = 0 has no root in GF(q)* other than x = 1;
* C3: (x+1)^e - x^e - 1 = 0 has no root other than x = 0.

C2 and C3 fail exactly when a weight-3 codeword exists.  With all three
holding d >= 4, and the sphere-packing bound caps d at 4.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from . import gf3m
from ._kernels import get_backend
from .cosets import ell_e, in_C1
from .errors import BudgetExceeded, ExponentInC1, InconsistentEnumerator, InvalidInput
from .gf3m import FieldSpec
from .poly3 import Poly3, generator_polynomial

DUAL_ENUM_BUDGET = 12  # max m + ell_e, i.e. 3^12 codewords
DIRECT_SEARCH_MAX_N = 3**6 - 1


@dataclass(frozen=True)
class ConditionReport:
    c1_even: bool
    c2_holds: bool
    c2_witness: int | None
    c3_holds: bool
    c3_witness: int | None

    @property
    def all_hold(self) -> bool:
        return self.c1_even and self.c2_holds and self.c3_holds


def c2_value(f: FieldSpec, e: int, x: int) -> int:
    """(x+1)^e + x^e + 1."""
    x1 = gf3m.add(f, x, 1)
    return gf3m.add(f, gf3m.add(f, gf3m.pow(f, x1, e), gf3m.pow(f, x, e)), 1)


def c3_value(f: FieldSpec, e: int, x: int) -> int:
    """(x+1)^e - x^e - 1."""
    x1 = gf3m.add(f, x, 1)
    return gf3m.sub(f, gf3m.sub(f, gf3m.pow(f, x1, e), gf3m.pow(f, x, e)), 1)


def check_c1(e: int) -> bool:
    return e % 2 == 0


def _witnesses(f: FieldSpec, e: int, backend: str | None = None) -> tuple[int | None, int | None]:
    powtab = f.power_table(e % f.n)
    w2, w3 = get_backend(backend).condition_witnesses(powtab, f.neg_table)
    return (None if w2 < 0 else int(w2)), (None if w3 < 0 else int(w3))


def check_c2(f: FieldSpec, e: int, backend: str | None = None) -> tuple[bool, int | None]:
    """Scan x in GF(q)* minus {1}; return (holds, least root by encoding)."""
    w2, _ = _witnesses(f, e, backend)
    return w2 is None, w2


def check_c3(f: FieldSpec, e: int, backend: str | None = None) -> tuple[bool, int | None]:
    """Scan x in GF(q)*; return (holds, least root by encoding)."""
    _, w3 = _witnesses(f, e, backend)
    return w3 is None, w3


def check_conditions(f: FieldSpec, e: int, backend: str | None = None) -> ConditionReport:
    w2, w3 = _witnesses(f, e, backend)
    rep = ConditionReport(check_c1(e), w2 is None, w2, w3 is None, w3)
    if w2 is not None and c2_value(f, e, w2) != 0:
        raise ArithmeticError(f"C2 witness {w2} does not re-verify for e={e}")
    if w3 is not None and c3_value(f, e, w3) != 0:
        raise ArithmeticError(f"C3 witness {w3} does not re-verify for e={e}")
    return rep


def sphere_packing_max_d(n: int, k: int) -> int:
    """Largest d allowed for a ternary (n, 3^k, d) code by the sphere-packing
    bound, further capped by the Singleton bound d <= n - k + 1."""
    if not 0 < k <= n:
        raise InvalidInput(f"need 0 < k <= n, got n={n}, k={k}")
    room = 3 ** (n - k)
    d = 1
    while d < n - k + 1:
        t = d // 2  # radius for distance d + 1
        if sum(comb(n, i) * 2**i for i in range(t + 1)) > room:
            break
        d += 1
    return d


@dataclass(frozen=True)
class CodeReport:
    m: int
    e: int
    n: int
    k: int
    d: int
    d_exact: bool
    d_derivation: str
    generator_poly: Poly3
    conditions: ConditionReport
    ell_e: int

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)

    @property
    def optimal(self) -> bool:
        return self.d_exact and self.k == self.n - 2 * self.m and self.d == 4

    def params_text(self) -> str:
        d = str(self.d) if self.d_exact else f">={self.d}"
        return f"[{self.n}, {self.k}, {d}]"

    def to_dict(self) -> dict:
        c = self.conditions
        return {
            "m": self.m,
            "e": self.e,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_exact": self.d_exact,
            "d_derivation": self.d_derivation,
            "ell_e": self.ell_e,
            "generator_poly": self.generator_poly.to_text(),
            "generator_poly_pretty": self.generator_poly.pretty(),
            "c1": c.c1_even,
            "c2": c.c2_holds,
            "c2_witness": c.c2_witness,
            "c3": c.c3_holds,
            "c3_witness": c.c3_witness,
            "optimal": self.optimal,
        }


def _check_exponent(f: FieldSpec, e: int) -> int:
    if not 0 <= e < f.n:
        raise InvalidInput(f"e must satisfy 0 <= e < {f.n}, got {e}")
    if in_C1(f.n, e):
        raise ExponentInC1(f"e={e} is in C_1 modulo {f.n}")
    return e


def analyze(f: FieldSpec, e: int, *, resolve: bool = False, backend: str | None = None) -> CodeReport:
    """Dimension, minimum distance and optimality of C_(1,e).

    ``e = 0`` is accepted (generator m_alpha(x)(x - 1)); e = 2(1+3^h)
    reduces to it at m = 2, h = 1.  ``resolve`` runs the direct codeword
    search when the bounds leave d >= 4 undecided, which cannot happen for
    these lengths but is kept for completeness.
    """
    n, m = f.n, f.m
    e = _check_exponent(f, e)
    ell = ell_e(n, e)
    k = n - m - ell
    cond = check_conditions(f, e, backend)
    d_exact = True
    if not cond.c1_even:
        d, how = 2, "C1 fails: weight-2 word on x, -x"
    elif not (cond.c2_holds and cond.c3_holds):
        d, how = 3, "C2/C3 root gives a weight-3 word"
    else:
        bound = sphere_packing_max_d(n, k)
        if bound <= 4:
            d = 4
            how = "C1-C3 hold; sphere-packing bound d <= 4"
            if k != n - 2 * m:
                how += f" (evaluated at k={k})"
        else:
            d, how, d_exact = 4, "C1-C3 hold; d >= 4 unresolved by bounds", False
            if resolve:
                found = direct_min_distance(f, e, 4)
                if found == 4:
                    d_exact, how = True, "C1-C3 hold; weight-4 word found by direct search"
    return CodeReport(m, e, n, k, d, d_exact, how, generator_polynomial(f, e), cond, ell)


# -- dual code -------------------------------------------------------------


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    dim: int
    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(w): int(c) for w, c in sorted(self.counts.items()) if c}
        object.__setattr__(self, "counts", clean)

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def validate(self) -> None:
        if self[0] != 1 or self.total() != 3**self.dim:
            raise InconsistentEnumerator(f"A_0={self[0]}, sum={self.total()} for dim {self.dim}")

    def min_weight(self) -> int | None:
        return next((w for w in self.counts if w > 0), None)

    def pretty(self) -> str:
        return "+".join("1" if w == 0 and c == 1 else f"{c}x^{w}" for w, c in self.counts.items())

    def to_lines(self) -> str:
        return "".join(f"{w}:{c}\n" for w, c in self.counts.items())

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "dim": self.dim, "counts": {str(w): c for w, c in self.counts.items()}})

    @classmethod
    def from_json(cls, text: str) -> "WeightEnumerator":
        obj = json.loads(text)
        return cls(obj["n"], obj["dim"], {int(w): c for w, c in obj["counts"].items()})

    @classmethod
    def from_lines(cls, text: str, n: int, dim: int) -> "WeightEnumerator":
        counts = {}
        for line in text.splitlines():
            if line.strip():
                w, c = line.split(":")
                counts[int(w)] = int(c)
        return cls(n, dim, counts)


def _subfield_coordinates(f: FieldSpec, ell: int) -> dict[int, tuple[int, ...]]:
    """Coordinates of each GF(3^ell) element in the basis beta^0..beta^(ell-1),
    beta = alpha^(n / (3^ell - 1))."""
    beta_log = f.n // (3**ell - 1)
    basis = [f.element(beta_log * j) for j in range(ell)]
    coords = {}
    for idx in range(3**ell):
        c = tuple((idx // 3**j) % 3 for j in range(ell))
        v = 0
        for cj, b in zip(c, basis):
            if cj:
                v = gf3m.add(f, v, b if cj == 1 else gf3m.neg(f, b))
        coords[v] = c
    if len(coords) != 3**ell:
        raise ArithmeticError("subfield basis is not linearly independent")
    return coords


def dual_generator_matrix(f: FieldSpec, e: int) -> np.ndarray:
    """(m + ell_e) x n matrix over GF(3) whose row space is the dual of C_(1,e)."""
    n, m = f.n, f.m
    e = _check_exponent(f, e)
    ell = ell_e(n, e)
    exp = f.exp_table.astype(np.int64)
    top = (exp[None, :] // 3 ** np.arange(m)[:, None]) % 3
    coords = _subfield_coordinates(f, ell)
    col = exp[(np.arange(n, dtype=np.int64) * e) % n]
    try:
        bottom = np.array([coords[int(v)] for v in col], dtype=np.int64).T
    except KeyError as exc:
        raise ArithmeticError(f"alpha^(e i) left the subfield of order 3^{ell}") from exc
    return np.vstack((top, bottom)).astype(np.int8)


def dual_weight_enumerator(
    f: FieldSpec, e: int, *, budget: int = DUAL_ENUM_BUDGET, backend: str | None = None
) -> WeightEnumerator:
    """Exact weight enumerator of the dual of C_(1,e), by full enumeration."""
    ell = ell_e(f.n, e % f.n)
    dim = f.m + ell
    if dim > budget:
        raise BudgetExceeded(f"dual has 3^{dim} codewords; budget is 3^{budget}")
    gen = dual_generator_matrix(f, e)
    counts = get_backend(backend).weight_distribution(gen)
    we = WeightEnumerator(f.n, dim, {w: int(c) for w, c in enumerate(counts)})
    we.validate()
    return we


def krawtchouk(n: int, j: int, w: int, q: int = 3) -> int:
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(w, s) * comb(n - w, j - s) for s in range(j + 1))


def krawtchouk_column(n: int, w: int, q: int = 3) -> list[int]:
    """[K_0(w), ..., K_n(w)] by the three-term recurrence in j (exact integer division)."""
    col = [1, (q - 1) * (n - w) - w]
    for j in range(1, n):
        num = (j + (q - 1) * (n - j) - q * w) * col[j] - (q - 1) * (n - j + 1) * col[j - 1]
        col.append(num // (j + 1))
    return col[: n + 1]


def macwilliams_transform(we: WeightEnumerator, n: int | None = None, dim: int | None = None) -> WeightEnumerator:
    """Enumerator of the dual code: B_j = 3^-dim * sum_w A_w K_j(w)."""
    n = we.n if n is None else n
    dim = we.dim if dim is None else dim
    size = 3**dim
    sums = [0] * (n + 1)
    for w, a in we.counts.items():
        for j, k in enumerate(krawtchouk_column(n, w)):
            sums[j] += a * k
    out = {}
    for j, s in enumerate(sums):
        b = Fraction(s, size)
        if b.denominator != 1 or b < 0:
            raise InconsistentEnumerator(f"B_{j} = {b} is not a nonnegative integer")
        if b:
            out[j] = int(b)
    return WeightEnumerator(n, n - dim, out)


# -- direct codeword search --------------------------------------------------


def _pack_add(a: np.ndarray, b: np.ndarray, digits: int) -> np.ndarray:
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    p = 1
    for _ in range(digits):
        out += ((a // p + b // p) % 3) * p
        p *= 3
    return out


def _pack_neg(a: np.ndarray, digits: int) -> np.ndarray:
    out = np.zeros_like(a)
    p = 1
    for _ in range(digits):
        out += ((3 - (a // p) % 3) % 3) * p
        p *= 3
    return out


def direct_min_distance(f: FieldSpec, e: int, w_max: int = 4, *, max_n: int = DIRECT_SEARCH_MAX_N) -> int | None:
    """Least weight <= w_max of a nonzero codeword of C_(1,e), found by
    exhaustive search over supports; None if every nonzero word is heavier.

    Column i of the parity check is (alpha^i, alpha^(e i)), packed as one
    2m-digit ternary integer.  Weights 3 and 4 are found by matching single
    columns and pairs against pairs (meet in the middle).
    """
    n, m = f.n, f.m
    if n > max_n:
        raise BudgetExceeded(f"direct search limited to n <= {max_n}, got {n}")
    if not 1 <= w_max <= 4:
        raise InvalidInput("w_max must be in 1..4")
    e %= n
    digits = 2 * m
    exp = f.exp_table.astype(np.int64)
    idx = np.arange(n, dtype=np.int64)
    h = exp + f.q * exp[(idx * e) % n]
    scaled = {1: h, 2: _pack_neg(h, digits)}
    # weight 1 is impossible: columns are nonzero
    if w_max < 2:
        return None
    single: dict[int, list[int]] = {}
    for c in (1, 2):
        for i, key in enumerate(scaled[c].tolist()):
            single.setdefault(key, []).append(i)
    neg_h = _pack_neg(h, digits).tolist()
    for i in range(n):
        if any(j != i for j in single.get(neg_h[i], ())):
            return 2
    if w_max < 3:
        return None
    ii, jj = np.triu_indices(n, 1)
    pair_keys = []
    for a in (1, 2):
        for b in (1, 2):
            pair_keys.append(_pack_add(scaled[a][ii], scaled[b][jj], digits))
    keys = np.concatenate(pair_keys)
    pi = np.tile(ii, 4)
    pj = np.tile(jj, 4)
    table: dict[int, list[int]] = {}
    for t, key in enumerate(keys.tolist()):
        table.setdefault(key, []).append(t)
    # weight 3: c_i h_i + (pair) = 0; scale so c_i = 1
    for i in range(n):
        for t in table.get(neg_h[i], ()):
            if pi[t] != i and pj[t] != i:
                return 3
    if w_max < 4:
        return None
    neg_keys = _pack_neg(keys, digits).tolist()
    for t in range(2 * len(ii)):  # blocks (1,1), (1,2): first coefficient 1 up to scaling
        a, b = pi[t], pj[t]
        for u in table.get(neg_keys[t], ()):
            c, d = pi[u], pj[u]
            if c != a and c != b and d != a and d != b:
                return 4
    return None
