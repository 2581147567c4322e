import json

import pytest

from tocodes.conjectures import (
    conjecture_catalog,
    get_conjecture,
    report_to_csv,
    report_to_json,
    scan_exponents,
    scan_to_csv,
    verify,
)
from tocodes.errors import BudgetExceeded, InvalidInput


def test_catalog_shape():
    cat = conjecture_catalog()
    assert [c.id for c in cat] == list(range(1, 10))
    assert {c.id for c in cat if c.kind == "condition_discovery"} == {5, 8, 9}


def test_domains():
    assert get_conjecture(2).domain(4) == [] and get_conjecture(2).domain(5) == [None]
    assert get_conjecture(3).domain(7) == [1, 3, 5]
    assert get_conjecture(4).domain(9) == []
    assert get_conjecture(6).domain(8) == [4] and get_conjecture(6).domain(6) == [4]
    assert get_conjecture(6).domain(2) == []
    assert get_conjecture(8).domain(7) == [3, 4, 5, 6]
    with pytest.raises(InvalidInput):
        get_conjecture(10)


@pytest.mark.parametrize("cid", [1, 2, 3, 4, 6])
def test_yes_no_campaigns_hold(cid):
    rep = verify(cid, 9)
    assert rep.holds is True
    assert rep.tested and all(c.status == "optimal" for c in rep.tested)


def test_conjecture_one_cells_have_full_cosets():
    rep = verify(1, 9)
    assert all(c.ell_e == c.m for c in rep.tested)


def test_conjecture_seven_at_m3():
    # m = 3 lies outside the m >= 5 prime hypothesis; 3^2 + 5 = 14 = (3^3 + 1)/2 fails C2 and C3
    rep = verify(7, 7)
    assert rep.holds is True
    (bad,) = rep.failures()
    assert (bad.m, bad.h, bad.e, bad.d, bad.in_hypothesis) == (3, 2, 14, 3, False)
    assert not bad.c2 and not bad.c3


def test_discovery_campaigns_have_no_verdict():
    rep = verify(5, 8)
    assert rep.holds is None
    assert "no verdict" in rep.summary()
    assert {c.m for c in rep.cells} == {4, 6, 8}


def test_inapplicable_cells_are_reported():
    rep = verify(9, 3)
    (cell,) = [c for c in rep.cells if c.status == "inapplicable"]
    assert (cell.m, cell.h, cell.e) == (2, 0, 3)


def test_budget_rows():
    rep = verify(2, 7)
    assert rep.not_run() == [11, 13]
    with pytest.raises(BudgetExceeded):
        verify(1, 14)


def test_workers_do_not_change_output():
    a = report_to_csv(verify(3, 7, workers=1))
    b = report_to_csv(verify(3, 7, workers=2))
    assert a == b


def test_resume_cache(tmp_path):
    first = verify(4, 7, cache_dir=tmp_path)
    assert list(tmp_path.iterdir())
    again = verify(4, 7, cache_dir=tmp_path)
    assert report_to_json(first) == report_to_json(again)


def test_json_report():
    obj = json.loads(report_to_json(verify(2, 7)))
    assert obj["holds"] is True and obj["kind"] == "yes_no"
    assert obj["cells"][0]["e"] == 2 * (3**4 - 1)


def test_scan_classification():
    rows = scan_exponents(3)
    assert [r.e for r in rows if r.optimal] == [2, 4, 6, 8, 10, 12, 18, 20, 24]
    assert all(r.optimal for r in rows if r.planar or r.apn)
    assert scan_to_csv(rows).startswith("e,leader,uniformity,planar,apn")


@pytest.mark.parametrize("m", [4, 5, 6])
def test_scan_planar_and_apn_are_optimal(m):
    rows = scan_exponents(m)
    assert all(r.optimal for r in rows if r.uniformity <= 2)


def test_scan_budget():
    with pytest.raises(BudgetExceeded):
        scan_exponents(10)


@pytest.mark.slow
@pytest.mark.parametrize("cid,m", [(1, 15), (6, 14), (7, 17)])
def test_large_field_campaigns(cid, m):
    rep = verify(cid, m, m_values=[m], allow_large=True)
    assert rep.tested and rep.holds is True
