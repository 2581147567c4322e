from math import gcd

import pytest

from tocodes.cosets import (
    all_cosets,
    closed_form_size_violations,
    coset_leaders,
    cyclotomic_coset,
    ell_e,
    gcd2_size_violations,
    in_C1,
)


def test_small_cosets():
    assert cyclotomic_coset(80, 14).members == (14, 42, 46, 58)
    assert cyclotomic_coset(26, 1).members == (1, 3, 9)
    assert cyclotomic_coset(26, 0).members == (0,)


def test_partition_n26():
    cos = all_cosets(26)
    assert sorted(c.size for c in cos) == [1, 1] + [3] * 8
    assert sum(c.size for c in cos) == 26
    assert {0, 1, 13} <= set(coset_leaders(26))


@pytest.mark.parametrize("m", range(2, 8))
def test_partition_and_sizes(m):
    n = 3**m - 1
    seen = set()
    for c in all_cosets(n):
        assert c.leader == min(c.members)
        assert (3 * c.members[-1]) % n == c.members[0]
        assert m % c.size == 0
        assert not seen & set(c.members)
        seen |= set(c.members)
    assert seen == set(range(n))


def test_in_c1():
    assert in_C1(26, 3) and in_C1(26, 9) and not in_C1(26, 2)
    for m in range(2, 7):
        n = 3**m - 1
        assert not any(in_C1(n, e) for e in range(0, n, 2))
        assert all(not in_C1(n, (3**h - 1) // 2) for h in range(2, m, 2))


@pytest.mark.parametrize("m", range(2, 8))
def test_gcd_two_gives_full_coset(m):
    assert gcd2_size_violations(m) == []


@pytest.mark.parametrize("m", range(2, 11))
def test_size_of_3h_plus_1(m):
    assert closed_form_size_violations(m, 1) == []


@pytest.mark.parametrize("m", range(3, 11))
def test_size_of_twice_3h_plus_1(m):
    assert closed_form_size_violations(m, 2) == []


def test_twice_3h_plus_1_exception_at_m2():
    # 2(3^0 + 1) = 4 is fixed by multiplication by 3 mod 8
    assert closed_form_size_violations(2, 2) == [(0, 4, 1, 2)]
    assert ell_e(8, 4) == 1


def test_ell_divides_m_for_odd_gcd():
    n = 3**5 - 1
    assert all(5 % ell_e(n, e) == 0 for e in range(n))
    assert gcd(4, n) == 2 and ell_e(n, 4) == 5
