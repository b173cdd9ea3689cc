import pytest

from rootadj.algebra import make_algebra
from rootadj.errors import DegreeMismatch, UnknownGenerator
from rootadj.maps import AlgebraMap, apply_map, identity_map
from rootadj.roots import preset


def one_gen(name, deg, wt=0, m=0, kind="polynomial"):
    return make_algebra({"coeffs": {"kind": "ZpLocal", "p": 3}, "m": m,
                         "gens": [{"name": name, "deg": deg, "wt": wt, "kind": kind}]})


def test_identity():
    ku, _ = preset("ku(5)")
    x = ku.parse("3*v1*u^2 + u")
    assert apply_map(identity_map(ku), x) == x


def test_sigma4_to_sigma2_squared():
    S, T = one_gen("s4", 4), one_gen("s2", 2)
    f = AlgebraMap(S, T, {"s4": "s2^2"})
    assert apply_map(f, S.parse("s4^3")) == T.parse("s2^6")
    assert apply_map(f, S.parse("2*s4 + 1")) == T.parse("2*s2^2 + 1")


def test_weighted_version():
    S = one_gen("s4", 4, 0, m=2)
    T = one_gen("s2", 2, 1, m=2)
    f = AlgebraMap(S, T, {"s4": "s2^2"})
    assert f(S.gen("s4")) == T.monomial({"s2": 2})


def test_bidegree_checked_at_construction():
    S, T = one_gen("s4", 4), one_gen("s2", 2)
    with pytest.raises(DegreeMismatch):
        AlgebraMap(S, T, {"s4": "s2^3"})
    with pytest.raises(UnknownGenerator):
        AlgebraMap(S, T, {})
    with pytest.raises(DegreeMismatch):
        AlgebraMap(one_gen("s4", 4, 1, m=0), T, {"s4": "s2^2"})


def test_laurent_image_must_be_unit():
    S = one_gen("v", 4, kind="laurent")
    T = one_gen("w", 2, kind="laurent")
    f = AlgebraMap(S, T, {"v": "w^2"})
    assert f(S.parse("v^-1")) == T.parse("w^-2")
    with pytest.raises(DegreeMismatch):
        AlgebraMap(S, one_gen("w", 2), {"v": "w^2"})


def test_root_relation_respected():
    ku, _ = preset("ku(5)")
    # u -> -u respects u^4 = v1, u -> 2u does not
    AlgebraMap(ku, ku, {"v1": "v1", "u": "-1*u"})
    with pytest.raises(DegreeMismatch):
        AlgebraMap(ku, ku, {"v1": "v1", "u": "2*u"})
