import pytest

import homfly_skein as hs


def test_scalar_arithmetic():
    z = hs.Scalar.z()
    assert (hs.qint(2) * z) == hs.Scalar.monomial(1, 0, 2) - hs.Scalar.monomial(1, 0, -2)
    assert hs.delta().bar() == hs.delta()
    assert str(hs.Scalar(3)) == "3*v^0*s^0"


def test_inexact_division_is_not_silent():
    with pytest.raises(ZeroDivisionError):
        hs.Scalar(1) / hs.Scalar(0)


def test_hecke_quadratic_relation():
    s1 = hs.HeckeElem.generator(2, 1)
    assert s1 * s1 == s1 * hs.Scalar.z() + hs.HeckeElem.identity(2)
    assert hs.eval_word([1, 2, 1]).terms() == [([3, 2, 1], hs.Scalar(1))]


def test_power_sum_rendering():
    assert str(hs.power_sum(3)) == "3*h3 - 3*h2*h1 + 1*h1^3"
    p2 = hs.h(2) * hs.Scalar(2) - hs.h(1) * hs.h(1)
    assert hs.power_sum(2) == p2
    assert hs.power_sum(2).mirror() == p2


def test_braidsum_identity():
    for m in range(1, 6):
        assert hs.power_sum(m) * hs.qint(m) == hs.pi_sum(m)


def test_trace_of_unknot_and_kinks():
    d = hs.delta()
    assert hs.markov_trace(hs.HeckeElem.identity(1)) == d
    assert hs.markov_trace(hs.eval_word([1])) == hs.Scalar.monomial(1, -1, 0) * d


def test_threading_is_central():
    x = hs.thread(hs.power_sum(2), 3)
    assert x.strands == 3
    assert x.commutes_with_generators()
    assert hs.thread_braid([1], 1) == hs.thread(hs.braid_A(2), 1)


def test_verify_reports():
    reports = hs.verify("murphy", 4)
    statuses = {r["status"] for r in reports}
    assert "fail" not in statuses
    assert "skipped" in statuses
    assert all(r["lhs"] == r["rhs"] for r in reports if r["status"] == "pass")
    with pytest.raises(ValueError):
        hs.verify("nonsense", 1)
