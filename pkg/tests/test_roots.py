import pytest

from rootadj.algebra import LAURENT, make_algebra
from rootadj.basis import enumerate_basis, table_diff
from rootadj.errors import HypothesisFailed, UnknownPreset, UnsupportedDivisor
from rootadj.regrading import include_weight_zero, weight_slice
from rootadj.roots import (
    RootAdjunctionRequest,
    adjoin_root,
    check_hypothesis,
    plain_presentation,
    preset,
    quotient_by,
)


def test_hypothesis_reports():
    ell5, v1 = preset("ell(5)")
    r = check_hypothesis(RootAdjunctionRequest(ell5, v1, 4, 2))
    assert r.accepted and r.tame and r.positive_degree and r.k == 2
    r = check_hypothesis(RootAdjunctionRequest(ell5, v1, 5))
    assert not r.accepted
    assert "not divisible" in r.reasons[0]
    # |v1| = 4 at p = 3; its cube has degree 12 = 3 * 4
    ell3, w = preset("ell(3)")
    r = check_hypothesis(RootAdjunctionRequest(ell3, ell3.power(w, 3), 3))
    assert r.accepted and not r.tame and r.k == 4
    r = check_hypothesis(RootAdjunctionRequest(ell5, v1, 2, 4))
    assert r.accepted
    r = check_hypothesis(RootAdjunctionRequest(ell5, v1, 8))
    assert not r.accepted  # k = 1 is odd
    with pytest.raises(HypothesisFailed):
        adjoin_root(RootAdjunctionRequest(ell5, v1, 5))


@pytest.mark.parametrize("p", [5, 7, 11])
def test_weight_slices_are_shifted_base(p):
    ell, v1 = preset(f"ell({p})")
    m, k = p - 1, 2
    window = (0, 3 * m * k + 10)
    adj = adjoin_root(RootAdjunctionRequest(ell, v1, m))
    assert adj.modulus == m and adj.gen_spec("z").deg == k and adj.gen_spec("z").wt == 1
    table = enumerate_basis(adj, window)
    base = enumerate_basis(ell, window)
    for i in range(m):
        assert table_diff(weight_slice(table, i), base.shifted(i * k)) == []


def test_ring_law():
    ku, u = preset("ku(7)")
    v1 = ku.gen("v1")
    assert ku.power(u, 6) == v1
    for j in range(1, 6):
        assert ku.mul(ku.power(u, j), ku.power(u, 6 - j)) == v1


def test_trivial_root():
    ell, v1 = preset("ell(5)")
    adj = adjoin_root(RootAdjunctionRequest(ell, v1, 1))
    assert adj.gen("z") == adj.gen("v1")
    assert table_diff(weight_slice(enumerate_basis(adj, (0, 40)), 0),
                      enumerate_basis(ell, (0, 40))) == []


def test_presets():
    ku, u = preset("ku", 5)
    assert ku.modulus == 4 and ku.gen_spec("u").deg == 2 and ku.power(u, 4) == ku.gen("v1")
    ko, alpha = preset("ko(5)")
    assert ko.modulus == 2 and ko.gen_spec("alpha").deg == 4 and ko.gen_spec("alpha").wt == 1
    assert ko.power(alpha, 2) == ko.gen("v1")
    K, v1 = preset("Kn(1,5)")
    assert K.gen_spec("v1").kind == LAURENT and K.gen_spec("v1").deg == 8
    assert K.meta["rank_multiplier"] == 1
    assert preset("Kn(2,5)")[0].meta["rank_multiplier"] == 2
    two, u = preset("two_periodic_K(1,5)")
    assert two.power(u, 4) == two.gen("v1")
    assert "-2" in two.meta["degree_convention"]
    flat = plain_presentation(two)
    assert flat.names == ("u",) and flat.gen_spec("u").kind == LAURENT
    t = enumerate_basis(flat, (-4, 4))
    assert t.degree_ranks() == {-4: 1, -2: 1, 0: 1, 2: 1, 4: 1}
    E, v2 = preset("En_hat(2,5,3)")
    assert E.names == ("u1", "v2") and E.gen_spec("v2").deg == 48
    Eg, u = preset("En_hGal(2,5,3)")
    assert Eg.modulus == 24 and Eg.power(u, 24) == Eg.gen("v2")
    kn, v2 = preset("kn", 5, n=2)
    assert kn.gen_spec("v2").deg == 48
    with pytest.raises(UnknownPreset):
        preset("tmf(5)")


def test_quotients():
    ell, v1 = preset("ell(5)")
    q = quotient_by(ell, v1)
    assert enumerate_basis(q, (0, 40)).as_dict() == {(0, 0): ("1",)}
    ku, u = preset("ku(5)")
    qk = quotient_by(ku, u)
    t = enumerate_basis(qk, (0, 40))
    assert t.as_dict() == {(0, 0): ("1",)} and t.modulus == 4
    assert t == include_weight_zero(enumerate_basis(q, (0, 40)), 4)
    K, v = preset("Kn(1,5)")
    with pytest.raises(UnsupportedDivisor):
        quotient_by(K, v)
    with pytest.raises(UnsupportedDivisor):
        quotient_by(ku, ku.gen("v1"))  # v1 = u^4 appears in the root relation
    with pytest.raises(UnsupportedDivisor):
        quotient_by(ell, ell.power(v1, 2))


def test_quotient_two_generators():
    alg = make_algebra({"coeffs": {"kind": "ZpLocal", "p": 5},
                        "gens": [{"name": "v1", "deg": 8}, {"name": "s4", "deg": 4}]})
    q = quotient_by(alg, alg.parse("3*v1"))
    assert q.names == ("s4",)


def test_plain_presentation_same_ranks():
    for name in ("ku(5)", "ko(7)", "two_periodic_K(1,5)", "En_hGal(1,5,2)"):
        alg, _ = preset(name)
        lo = -30 if alg.meta["preset"].startswith(("two", "En")) else 0
        a = enumerate_basis(alg, (lo, 60))
        b = enumerate_basis(plain_presentation(alg), (lo, 60))
        assert table_diff(a, b) == [], name
