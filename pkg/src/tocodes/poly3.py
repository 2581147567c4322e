"""Polynomials over GF(3), minimal polynomials and generator polynomials.

A polynomial is stored low-to-high: ``Poly3((1, 2, 0, 1))`` is x^3 + 2x + 1.
The text format used everywhere on the command line is the same list joined
by commas (``"1,2,0,1"``); :meth:`Poly3.pretty` renders the descending form
``x^3 + 2x + 1`` used in reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import CoefficientNotInBaseField, DivisionByZero, ExponentInC1, InvalidInput

if TYPE_CHECKING:
    from .gf3m import FieldSpec

# inverse of 1 and 2 in GF(3)
_INV3 = (0, 1, 2)


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(v) % 3 for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly3:
    """Polynomial over GF(3) in canonical form (no trailing zero coefficients).

    The zero polynomial has ``coeffs == ()`` and ``degree is None``; callers
    must test for it instead of doing arithmetic on a -1 degree.
    """

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def parse(cls, text: str) -> "Poly3":
        """Parse the comma format, e.g. ``"2,0,0,2,1"`` for x^4 + 2x^3 + 2."""
        parts = [p.strip() for p in text.split(",") if p.strip() != ""]
        if not parts:
            raise InvalidInput(f"empty polynomial text {text!r}")
        try:
            vals = [int(p) for p in parts]
        except ValueError as exc:
            raise InvalidInput(f"bad polynomial text {text!r}") from exc
        if any(v not in (0, 1, 2) for v in vals):
            raise InvalidInput(f"coefficients must be in {{0,1,2}}: {text!r}")
        return cls(vals)

    @classmethod
    def x_pow(cls, k: int) -> "Poly3":
        return cls((0,) * k + (1,))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def monic(self) -> "Poly3":
        if not self.coeffs:
            return self
        s = _INV3[self.coeffs[-1]]
        return Poly3(c * s for c in self.coeffs)

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def pretty(self) -> str:
        """Descending-power rendering, e.g. ``x^8 + 2x^5 + x^3 + 2x^2 + 2``."""
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "x" if k == 1 else f"x^{k}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.pretty()

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % 3
        return acc

    def __add__(self, other: "Poly3") -> "Poly3":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly3([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "Poly3":
        return Poly3(-c for c in self.coeffs)

    def __sub__(self, other: "Poly3") -> "Poly3":
        return self + (-other)

    def __mul__(self, other: "Poly3 | int") -> "Poly3":
        if isinstance(other, int):
            return Poly3(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly3()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly3(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly3") -> tuple["Poly3", "Poly3"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly3") -> "Poly3":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly3") -> "Poly3":
        return poly_divmod(self, other)[1]


def poly_add(a: Poly3, b: Poly3) -> Poly3:
    return a + b


def poly_mul(a: Poly3, b: Poly3) -> Poly3:
    return a * b


def poly_divmod(a: Poly3, b: Poly3) -> tuple[Poly3, Poly3]:
    """Return ``(q, r)`` with ``a = q*b + r`` and ``deg r < deg b``."""
    if b.is_zero():
        raise DivisionByZero("polynomial division by zero")
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    inv_lead = _INV3[b.coeffs[-1]]
    if len(r) <= db:
        return Poly3(), a
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = (r[k + db] * inv_lead) % 3
        q[k] = c
        if c:
            for j, bj in enumerate(b.coeffs):
                r[k + j] = (r[k + j] - c * bj) % 3
    return Poly3(q), Poly3(r[:db])


def poly_gcd(a: Poly3, b: Poly3) -> Poly3:
    """Monic gcd (the zero polynomial when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_powmod(base: Poly3, k: int, mod: Poly3) -> Poly3:
    result = Poly3((1,)) % mod
    base = base % mod
    while k:
        if k & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        k >>= 1
    return result


def is_irreducible(f: Poly3) -> bool:
    """Ben-Or test: no factor of degree <= deg(f)/2."""
    d = f.degree
    if d is None or d < 1:
        return False
    if d == 1:
        return True
    x = Poly3.x_pow(1)
    t = x
    for _ in range(d // 2):
        t = poly_powmod(t, 3, f)
        if poly_gcd(t - x, f).degree != 0:
            return False
    return True


def minimal_polynomial(f: "FieldSpec", j: int) -> Poly3:
    """Minimal polynomial of alpha^j over GF(3), as the product over its coset.

    Raises :class:`CoefficientNotInBaseField` if the expanded product has a
    coefficient outside {0, 1, 2}, which can only come from an arithmetic bug.
    """
    from .cosets import cyclotomic_coset
    from . import gf3m

    n = f.n
    coset = cyclotomic_coset(n, j % n)
    # coefficients as field encodings, low-to-high
    prod = [1]
    for i in coset.members:
        root = int(f.exp_table[i])
        minus_root = gf3m.neg(f, root)
        nxt = [0] * (len(prod) + 1)
        for k, c in enumerate(prod):
            nxt[k + 1] = gf3m.add(f, nxt[k + 1], c)
            nxt[k] = gf3m.add(f, nxt[k], gf3m.mul(f, c, minus_root))
        prod = nxt
    if any(c not in (0, 1, 2) for c in prod):
        raise CoefficientNotInBaseField(
            f"minimal polynomial of alpha^{j} has coefficients {prod} outside GF(3)"
        )
    return Poly3(prod)


def generator_polynomial(f: "FieldSpec", e: int) -> Poly3:
    """m_alpha(x) * m_{alpha^e}(x), the generator of C_(1,e)."""
    from .cosets import in_C1

    e %= f.n
    if in_C1(f.n, e):
        raise ExponentInC1(f"e={e} is in C_1 modulo {f.n}")
    return minimal_polynomial(f, 1) * minimal_polynomial(f, e)


def parity_check_polynomial(f: "FieldSpec", e: int) -> Poly3:
    g = generator_polynomial(f, e)
    xn1 = Poly3.x_pow(f.n) - Poly3((1,))
    h, r = poly_divmod(xn1, g)
    assert r.is_zero()
    return h


def as_poly(p: "Poly3 | str | Sequence[int]") -> Poly3:
    if isinstance(p, Poly3):
        return p
    if isinstance(p, str):
        return Poly3.parse(p)
    return Poly3(p)
