import math
from fractions import Fraction

import pytest

import bmeas


def test_moments_lebesgue_exact():
    assert bmeas.moments(Fraction(1, 2), 6) == [Fraction(1, k + 1) for k in range(7)]


def test_moments_float_matches_exact():
    exact = bmeas.moments(Fraction(3, 10), 10)
    approx = bmeas.moments(0.3, 10)
    assert max(abs(a - float(e)) for a, e in zip(approx, exact)) < 1e-14


def test_integrate_routes_agree():
    for method in ("moments", "det3", "det104"):
        assert bmeas.integrate(Fraction(1, 3), [0, -1, 3], method) == Fraction(8, 9)


def test_det3_rejects_point_mass():
    with pytest.raises(ValueError):
        bmeas.integrate(1, [1, 1], "det3")


def test_ip_routes_agree():
    assert abs(bmeas.ip(0, 1) - math.e) < 1e-12
    a = bmeas.ip(1 / 3, 2 + 1j, "product")
    for method in ("taylor", "reduce"):
        assert abs(bmeas.ip(1 / 3, 2 + 1j, method) - a) < 1e-10
    assert abs(bmeas.ip(1 / 3, 0.5, "logseries") - bmeas.ip(1 / 3, 0.5)) < 1e-10


def test_verify_all_passes():
    rows = bmeas.verify("all")
    assert len(rows) >= 30
    assert all(r["pass"] for r in rows)


def test_qpoly_and_certificate():
    assert bmeas.qpoly(3) == [0, -1, 3, -2]
    assert bmeas.qpoly_certificate(6) == (6, True)


def test_legendre():
    assert bmeas.legendre_coefficients(2) == [1, -6, 6]
    assert bmeas.legendre_exact(Fraction(1, 3), 2) == Fraction(1, 9)
    assert abs(bmeas.legendre_normalizer(2) - 1 / math.sqrt(5)) < 1e-15


def test_corollary_exact():
    assert bmeas.corollary("pow", Fraction(1, 2), Fraction(1, 2), alpha=1, terms=5) == Fraction(5, 4)
    assert bmeas.corollary("log", Fraction(1, 2), 0, terms=5) == 0
    with pytest.raises(ValueError):
        bmeas.corollary("pow", Fraction(1, 2), Fraction(1, 2))


def test_oracles():
    value, bound, estimated = bmeas.dyadic_integrate("exp", 0.5, 18)
    assert abs(value - (math.e - 1)) < 1e-4
    assert bound > 0 and not estimated
    mean, se = bmeas.mc_integrate("x^1", 0.5, 200000, seed=11)
    assert se > 0
    assert abs(mean - 0.5) < 4 * se


def test_fourier_dilation():
    assert abs(bmeas.fourier(1 / 3, 1) - bmeas.fourier(1 / 3, 2)) < 1e-11
