import pytest

from rootadj.basis import BasisTable, table_diff
from rootadj.errors import InputNotWeightZero
from rootadj.splitting import (
    assemble_thh_table,
    frobenius_orbits,
    tc_k_summand_report,
    thh_after_root_check,
)
from rootadj.hkr import hh, log_hh
from rootadj.roots import preset


def test_orbits():
    assert frobenius_orbits(4, 5).as_sets() == {frozenset({w}) for w in range(4)}
    assert frobenius_orbits(4, 3).as_sets() == {frozenset({0}), frozenset({2}), frozenset({1, 3})}
    assert frobenius_orbits(6, 3).as_sets() == {frozenset({0}), frozenset({1, 2, 3, 4, 5})}
    assert frobenius_orbits(1, 5).blocks == ((0,),)
    with pytest.raises(ValueError):
        frobenius_orbits(0, 5)


@pytest.mark.parametrize("m,p", [(4, 3), (24, 5), (10, 7), (12, 5), (9, 3)])
def test_orbit_blocks_partition_and_closed(m, p):
    blocks = frobenius_orbits(m, p).blocks
    flat = sorted(w for b in blocks for w in b)
    assert flat == list(range(m))
    for b in blocks:
        assert {w * p % m for w in b} <= set(b) or p % m == 0 or m % p == 0


def test_summand_reports():
    r = tc_k_summand_report(4, 5, True, True)
    assert r["summands"] == 4 and r["kSummandInclusion"] and r["tcSplits"]
    r = tc_k_summand_report(3, 3, True, True)
    assert r["summands"] == 1 and not r["tcSplits"] and not r["kSummandInclusion"]
    r = tc_k_summand_report(24, 5, True, False)
    assert r["summands"] == 2 and r["tLocalOnly"]
    r = tc_k_summand_report(4, 5, False, True)
    assert r["tcSplits"] and not r["kSummandInclusion"]


def test_assemble_trivial():
    one = BasisTable.from_mapping((0, 10), 0, {(0, 0): ["1"]})
    t = assemble_thh_table(one, one, 2, 2)
    assert t.ranks() == {(0, 0): 1, (2, 1): 1}
    assert assemble_thh_table(one, one, 1, 2).entries == one.entries
    ku, _ = preset("ku(5)")
    from rootadj.basis import enumerate_basis
    with pytest.raises(InputNotWeightZero):
        assemble_thh_table(enumerate_basis(ku, (0, 10)), one, 2, 2)


def test_assemble_rank_formula():
    ell, _ = preset("ell(5)")
    window, m, k = (0, 50), 4, 2
    a = hh(ell).table(window)
    b = log_hh(ell, "v1").table((window[0] - (m - 1) * k, window[1]))
    t = assemble_thh_table(a, b, m, k, window)
    for d in range(51):
        expected = a.degree_ranks().get(d, 0) + sum(
            b.degree_ranks().get(d - i * k, 0) for i in range(1, m))
        assert t.degree_ranks().get(d, 0) == expected


def test_assembled_matches_direct_hh():
    ell, _ = preset("ell(5)")
    report, assembled, direct = thh_after_root_check(ell, "v1", 4, (0, 80))
    assert report.passed
    assert table_diff(assembled, direct) == []
