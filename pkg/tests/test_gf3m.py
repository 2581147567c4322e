import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tocodes import gf3m
from tocodes.errors import BudgetExceeded, DegreeMismatch, DivisionByZero, InvalidInput, NotIrreducible, NotPrimitive
from tocodes.gf3m import build_field, from_digits, to_digits
from tocodes.poly3 import Poly3

from oracles import EXAMPLE_POLY


def _poly_of(x, m):
    return Poly3(to_digits(x, m))


def _encode(p, m):
    return from_digits(list(p.coeffs) + [0] * (m - len(p.coeffs)))


@pytest.mark.parametrize("m", range(2, 10))
def test_default_tables_are_consistent(m):
    f = build_field(m)
    assert f.exp_table[0] == 1 and f.alpha == 3
    assert sorted(f.exp_table.tolist()) == list(range(1, f.q))
    assert f.log_table[0] == -1
    assert (f.exp_table[f.log_table[1:]] == np.arange(1, f.q)).all()


@pytest.mark.parametrize("m", [3, 4, 5])
def test_exp_table_matches_polynomial_powers(m):
    # oracle: alpha^i computed as x^i mod the defining polynomial
    f = build_field(m, EXAMPLE_POLY[m])
    x, p = Poly3.x_pow(1), Poly3((1,))
    for i in range(f.n):
        assert f.exp_table[i] == _encode(p, m)
        p = (p * x) % f.prim_poly


def test_example_polynomials_are_defaults():
    for m, text in EXAMPLE_POLY.items():
        assert gf3m.DEFAULT_PRIMITIVE[m] == Poly3.parse(text).coeffs


@pytest.mark.parametrize("m", [10, 12])
def test_defaults_without_trinomial_build(m):
    assert build_field(m).n == 3**m - 1


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 3**5 - 1), st.integers(0, 3**5 - 1))
def test_mul_matches_polynomial_product(a, b):
    f = build_field(5)
    want = _encode((_poly_of(a, 5) * _poly_of(b, 5)) % f.prim_poly, 5)
    assert gf3m.mul(f, a, b) == want


@given(st.integers(1, 3**4 - 1))
def test_inverse(a):
    f = build_field(4)
    assert gf3m.mul(f, a, gf3m.inv(f, a)) == 1


@given(st.integers(0, 3**4 - 1), st.integers(0, 3**4 - 1))
def test_add_sub_neg(a, b):
    f = build_field(4)
    assert gf3m.sub(f, gf3m.add(f, a, b), b) == a
    assert gf3m.add(f, a, gf3m.neg(f, a)) == 0
    assert f.neg_table[a] == gf3m.neg(f, a)


def test_minus_one_is_two():
    f = build_field(3)
    assert gf3m.neg(f, 1) == 2
    assert gf3m.pow(f, 2, 13) == 2  # -1 = alpha^(n/2)


def test_zero_to_the_zero_is_one():
    f = build_field(3)
    assert gf3m.pow(f, 0, 0) == 1
    assert f.power_table(0)[0] == 1
    assert f.power_table(5)[0] == 0


def test_power_table_matches_scalar_pow():
    f = build_field(4)
    t = f.power_table(14)
    assert all(t[x] == gf3m.pow(f, x, 14) for x in range(f.q))


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        gf3m.inv(build_field(3), 0)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_trace_lands_in_prime_field_and_is_balanced(m):
    f = build_field(m)
    tr = gf3m.trace_table(f)
    assert sorted(set(tr.tolist())) == [0, 1, 2]
    assert np.bincount(tr).tolist() == [3 ** (m - 1)] * 3
    assert all(tr[x] == gf3m.trace(f, x) for x in range(0, f.q, 7))


def test_rejects_bad_polynomials():
    with pytest.raises(DegreeMismatch):
        build_field(3, "1,2,1")
    with pytest.raises(NotIrreducible):
        build_field(3, "2,1,0,1")  # x = 1 is a root
    with pytest.raises(NotPrimitive, match="order 4"):
        build_field(2, "1,0,1")  # x^2 + 1: root has order 4
    with pytest.raises(DegreeMismatch):
        build_field(3, "1,2,0,2")  # not monic


def test_budget_and_domain():
    with pytest.raises(InvalidInput):
        build_field(1)
    with pytest.raises(BudgetExceeded):
        build_field(14)


def test_table_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("TOC_CACHE_DIR", str(tmp_path))
    poly = Poly3.parse("2,1,0,0,0,0,1")
    seq = gf3m._exp_sequence(6, poly)
    assert list(tmp_path.glob("*.npy"))
    assert (gf3m._exp_sequence(6, poly) == seq).all()
