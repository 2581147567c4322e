from math import gcd

import pytest

from oracles import naive_uniformity
from tocodes.cosets import cyclotomic_coset
from tocodes.gf3m import build_field
from tocodes.monomials import (
    apn_family_instances,
    degenerate_apn_instances,
    differential_uniformity,
    is_apn,
    is_planar,
    known_apn_exponents,
    known_planar_exponents,
    profile,
)


@pytest.mark.parametrize("m", [2, 3])
def test_uniformity_matches_naive_count(m, backend):
    f = build_field(m)
    for e in range(f.n):
        want = naive_uniformity(f, e)
        assert differential_uniformity(f, e, backend=backend) == want
        assert differential_uniformity(f, e, all_shifts=False, backend=backend) == want


@pytest.mark.parametrize("m", [4, 5])
def test_unit_shift_shortcut_agrees(m, backend):
    f = build_field(m)
    for e in range(0, f.n, 3):
        assert differential_uniformity(f, e, all_shifts=False, backend=backend) == differential_uniformity(
            f, e, backend=backend
        )


def test_cap_is_a_lower_bound():
    f = build_field(3)
    u = differential_uniformity(f, 14)
    assert u > 2
    assert 2 < differential_uniformity(f, 14, cap=2) <= u


def test_square_is_planar_and_linear_maps_are_not():
    f = build_field(4)
    assert is_planar(f, 2)
    assert differential_uniformity(f, 3) == f.q  # x^3 is additive
    assert not is_apn(f, 2)


@pytest.mark.parametrize("m", range(2, 7))
def test_registered_planar_exponents_are_planar(m):
    f = build_field(m)
    for fe in known_planar_exponents(m):
        assert differential_uniformity(f, fe.e) == 1, fe.tag


@pytest.mark.parametrize("m", [3, 5])
def test_registered_apn_exponents_are_apn(m):
    f = build_field(m)
    exps = known_apn_exponents(m)
    assert exps
    for fe in exps:
        assert differential_uniformity(f, fe.e) == 2, fe.tag


@pytest.mark.slow
def test_registered_apn_exponents_m7():
    f = build_field(7)
    exps = known_apn_exponents(7)
    assert len(exps) == 7
    for fe in exps:
        assert differential_uniformity(f, fe.e) == 2, fe.tag


def test_apn_instances_m7_unit_shift():
    f = build_field(7)
    assert sorted(fe.e for fe in known_apn_exponents(7)) == [40, 80, 656, 728, 820, 1092, 1640]
    assert all(differential_uniformity(f, fe.e, all_shifts=False) == 2 for fe in known_apn_exponents(7))


def test_degenerate_apn_family_members_at_m3_are_planar():
    f = build_field(3)
    degen = degenerate_apn_instances(3)
    assert [fe.e for fe in degen] == [4]
    assert differential_uniformity(f, 4) == 1
    assert {fe.e for fe in apn_family_instances(3)} == {4, 8}


def test_no_apn_families_for_even_m():
    assert known_apn_exponents(4) == [] and apn_family_instances(6) == []


def test_registry_is_deduplicated_by_coset():
    for m in range(2, 8):
        n = 3**m - 1
        leaders = [cyclotomic_coset(n, fe.e).leader for fe in known_planar_exponents(m) + known_apn_exponents(m)]
        assert len(leaders) == len(set(leaders))


@pytest.mark.parametrize("m", range(2, 8))
def test_profile_of_low_uniformity_exponents(m):
    # planar or APN => e even, gcd(e, n) = 2, full coset, e not in C_1
    f = build_field(m)
    n = f.n
    for e in range(2, n):
        p = profile(f, e)
        if p.planar or p.apn:
            assert e % 2 == 0 and gcd(e, n) == 2 and p.ell_e == m and not p.in_C1
