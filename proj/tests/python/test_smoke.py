"""Smoke tests for the _dedsym extension module."""

from fractions import Fraction

import pytest

import _dedsym as m


def test_bernoulli_numbers():
    assert m.bernoulli_number(0) == Fraction(1)
    assert m.bernoulli_number(1) == Fraction(-1, 2)
    assert m.bernoulli_number(12) == Fraction(-691, 2730)
    assert m.bernoulli_number(13) == 0


def test_bernoulli_poly_accepts_fractions_and_strings():
    assert m.bernoulli_poly(3, Fraction(1, 3)) == Fraction(1, 27)
    assert m.bernoulli_poly(3, "1/3") == Fraction(1, 27)
    assert m.bernoulli_poly(2, 0) == Fraction(1, 6)
    assert m.periodic_bernoulli(2, "5/2") == Fraction(-1, 12)


def test_sigma_and_apostol():
    assert m.sigma(11, 2) == 2049
    assert m.sigma(1, 6) == 12
    assert m.apostol_sum(3, 1, 3) == Fraction(-1, 81)
    assert m.apostol_sum(3, 1, 1) == 0


def test_symbol_evaluation():
    assert m.eval_symbol("E:10:5", 1, 0) == Fraction(-6, 691)
    assert m.eval_symbol("F:10", 2, 1) == 1024
    assert m.eval_symbol("G:2", 4, 6) == 4
    assert m.eval_symbol("Eis:2", 3, 1) == Fraction(1, 54)
    assert m.symbol_parity("E:10:5") == "even"
    assert m.symbol_parity("E:10:4") == "odd"


def test_symbol_errors():
    with pytest.raises(ValueError):
        m.eval_symbol("E:10:12", 1, 0)
    with pytest.raises(Exception):
        m.eval_symbol("bogus", 1, 0)


def test_orbit_sum_slack_invariance():
    assert m.orbit_sum(10, 5, 1, 0) == 0
    assert m.orbit_sum(10, 5, 2, 1) == 2
    assert m.orbit_sum(10, 5, 2, 1, slack=3) == 2


def test_enumeration_stream():
    assert m.solve_bezout(2, 4) is None
    b0, d0 = m.solve_bezout(3, 2)
    assert 3 * d0 - b0 * 2 == 1
    terms = m.enumerate_terms(10, 5, 2, 1)
    assert sum(t for _, t in terms) == 2
    for (a, b, c, d), _ in terms:
        assert a > 0 and c != 0 and a * d - b * c == 1
    assert m.hecke_origin_closed_form(10, 5, 2) == Fraction(144, 691)


def test_reciprocity_polynomial():
    coeffs = dict(m.reciprocity_polynomial(10, 5))
    assert coeffs[10] == Fraction(-6, 691)
    assert coeffs[8] == Fraction(1, 6)
    assert coeffs[0] == Fraction(6, 691)
    exponents = [i for i, _ in m.reciprocity_polynomial(10, 5)]
    assert exponents == sorted(exponents, reverse=True)


def test_tau_routes_and_oracle():
    delta = m.qexp_eigenform(10, 13)
    assert delta[:4] == [0, 1, -24, 252]
    for prime in (2, 3, 5, 7, 11, 13):
        assert m.tau(10, prime) == delta[prime]
    assert m.tau(10, 2) == m.tau_closed_form(10, 2) == m.tau_box_form(2) == -24
    assert m.tau(16, 2) == -528
    assert m.tau(10, 6) == m.tau(10, 2) * m.tau(10, 3)


def test_hecke_apply_and_eigen_report():
    assert m.hecke_apply("F:10", 2, 1, 1) == 2049
    report = m.eigen_report("E:10:5", 2, extra_checks=3)
    assert report["base_point"] == (1, 0)
    assert report["eigenvalue"] == -24
    assert report["consistent"] is True
    assert len(report["checked_points"]) == 4


def test_qexpansions():
    e4 = m.qexp_e4(2)
    assert e4 == [1, 240, 2160]
    e6 = m.qexp_e6(1)
    assert e6 == [1, -504]
    for ell in (10, 14, 16, 18, 20, 24):
        coeffs = m.qexp_eigenform(ell, 6)
        assert coeffs[0] == 0 and coeffs[1] == 1
        assert coeffs[2] * coeffs[3] == coeffs[6]


def test_run_verify_subset():
    results = m.run_verify("cocycle")
    assert results, "cocycle checks should exist"
    assert all(r["passed"] for r in results)
    assert all("witness" not in r for r in results)
    assert m.run_verify("nonexistent") == []


def test_threaded_results_identical():
    assert m.tau(24, 7, threads=4) == m.tau(24, 7, threads=1)
