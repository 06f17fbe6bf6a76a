from fractions import Fraction

import pytest

import glcover


def test_census_values():
    assert glcover.a_polynomial(2) == [1, 1, 1]
    assert glcover.a_value(2, 3) == 13
    assert [glcover.phi_count(n) for n in range(6)] == [1, 1, 3, 5, 11, 17]
    assert glcover.b_coefficient(1) == ([1], [-1, 1])
    assert glcover.b_value(1, 3) == Fraction(1, 2)
    assert isinstance(glcover.b_value(2, Fraction(5, 2)), Fraction)
    assert glcover.omega_closed(3, 4) == 6091


def test_limit_enclosure():
    lo, hi = glcover.l_of_q(2)
    assert isinstance(lo, Fraction)
    assert Fraction(27898, 100) < lo < hi < Fraction(3950005, 10000)
    assert glcover.check_estimates(5)["c"] == "holds"


def test_oracle_and_clique():
    assert glcover.cyclic_proportion(2, 2) == Fraction(5, 6)
    assert glcover.count_cyclic_centralizers(2, 4) == 21
    r = glcover.clique_number(2, 3)
    assert r["omega"] == 13 and r["optimal"]
    assert glcover.oracle_report(2, 3, "regular-unipotent")["pass"]


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        glcover.omega_closed(2, 6)
    with pytest.raises(glcover.UnsupportedRegime):
        glcover.omega_closed(3, 2)
    with pytest.raises(glcover.BudgetExceeded):
        glcover.count_cyclic_centralizers(3, 4)
    with pytest.raises(glcover.Error):
        glcover.omega_closed(3, 2)


def test_verify_fast():
    rep = glcover.verify("fast")
    assert all(c["status"] == "pass" for c in rep["checks"])
