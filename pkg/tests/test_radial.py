"""Radial profiles of the ball eigenfields.

Four kinds: TOROIDAL rides A_1 alone; SOLENOIDAL and COMPRESSIVE ride
(A_2, A_3); MATCHED is the combination of the last two whose radial
component vanishes on the boundary.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from steklov_ball import (
    DomainError,
    InvalidMode,
    RadialKind,
    bessel_operator,
    divergence_coeffs,
    radial_profiles,
    sph_bessel_j,
    sph_bessel_j_deriv,
)

RS = [0.15, 0.4, 0.75, 1.0]


def test_toroidal_is_plain_bessel():
    pair = radial_profiles(RadialKind.TOROIDAL, 2, 7.3)
    k = math.sqrt(7.3)
    for r in RS:
        assert pair.e1(r) == pytest.approx(sph_bessel_j(2, k * r), rel=1e-13)
        assert pair.e2(r) == 0.0
        assert pair.e3(r) == 0.0


def test_solenoidal_closed_form():
    l, k2 = 3, 4.0
    pair = radial_profiles(RadialKind.SOLENOIDAL, l, k2)
    k, L = 2.0, l * (l + 1)
    for r in RS:
        want2 = math.sqrt(L) * (k * sph_bessel_j_deriv(l, k * r) + sph_bessel_j(l, k * r) / r)
        want3 = L * sph_bessel_j(l, k * r) / r
        assert pair.e2(r) == pytest.approx(want2, rel=1e-12)
        assert pair.e3(r) == pytest.approx(want3, rel=1e-12)


def test_compressive_closed_form():
    l, k2, theta = 1, 2.25, 0.25
    pair = radial_profiles(RadialKind.COMPRESSIVE, l, k2, theta)
    q = math.sqrt(k2 / theta)
    for r in RS:
        assert pair.e2(r) == pytest.approx(
            math.sqrt(2.0) * sph_bessel_j(l, q * r) / r, rel=1e-12
        )
        assert pair.e3(r) == pytest.approx(q * sph_bessel_j_deriv(l, q * r), rel=1e-12)


def test_compressive_is_a_gradient():
    # E = grad(j_l(q r) Y): the gradient structure fixes
    # e2 = sqrt(L) f / r and e3 = f' for the potential f = j_l(q r).
    l, k2, theta = 2, 3.0, 1.5
    pair = radial_profiles(RadialKind.COMPRESSIVE, l, k2, theta)
    q = math.sqrt(k2 / theta)
    h = 1e-6
    for r in (0.3, 0.8):
        num = (sph_bessel_j(l, q * (r + h)) - sph_bessel_j(l, q * (r - h))) / (2 * h)
        assert pair.e3(r) == pytest.approx(num, rel=1e-8)


@pytest.mark.parametrize(
    "l,k2,theta",
    [(1, 1.0, 1.0), (2, 9.0, 0.5), (4, -6.0, 2.0), (3, 30.0, 1.0), (5, -0.7, 0.3)],
)
def test_matched_radial_trace_vanishes(l, k2, theta):
    pair = radial_profiles(RadialKind.MATCHED, l, k2, theta)
    # boundary condition E . nu = 0 is exactly e3(1) = 0
    scale = max(abs(pair.e2(1.0)), abs(pair.e3(0.5)), 1e-30)
    assert abs(pair.e3(1.0)) <= 1e-12 * scale


def test_matched_combination_weights():
    # MATCHED = a SOLENOIDAL + COMPRESSIVE with a chosen to cancel e3(1).
    l, k2, theta = 2, 5.0, 0.7
    sol = radial_profiles(RadialKind.SOLENOIDAL, l, k2, theta)
    com = radial_profiles(RadialKind.COMPRESSIVE, l, k2, theta)
    mat = radial_profiles(RadialKind.MATCHED, l, k2, theta)
    a = -com.e3(1.0) / sol.e3(1.0)
    for r in (0.2, 0.6, 1.0):
        assert mat.e2(r) == pytest.approx(a * sol.e2(r) + com.e2(r), rel=1e-11)
        assert mat.e3(r) == pytest.approx(a * sol.e3(r) + com.e3(r), rel=1e-11, abs=1e-13)


def test_bessel_operator_annihilates_bessel():
    # B_{k,l} applied to j_l(kr) is identically zero.
    for l, k2 in [(1, 1.0), (3, 12.5), (2, -4.0)]:
        pair = radial_profiles(RadialKind.TOROIDAL, l, k2)
        bf = bessel_operator(pair.e1, k2)
        for r in RS:
            assert abs(bf(r)) < 1e-11 * max(1.0, abs(pair.e1(r)))


def test_bessel_operator_nests():
    # B^2 on j_l(kr) is zero too (iterating the operator is legal).
    pair = radial_profiles(RadialKind.TOROIDAL, 2, 3.0)
    b2 = bessel_operator(bessel_operator(pair.e1, 3.0), 3.0)
    assert abs(b2(0.7)) < 1e-9


def test_divergence_coeffs_closed_forms():
    # solenoidal fields are divergence-free; compressive divergence is
    # -(k^2/theta) j_l(q r).
    l, k2, theta = 1, 4.0, 2.0
    q = math.sqrt(k2 / theta)
    sol = radial_profiles(RadialKind.SOLENOIDAL, l, k2, theta)
    com = radial_profiles(RadialKind.COMPRESSIVE, l, k2, theta)
    for r in (0.3, 0.7, 1.0):
        dsol = divergence_coeffs(sol.e2(r), sol.e3(r), sol.e3.deriv()(r), l, r)
        assert abs(dsol) < 1e-12 * max(1.0, abs(sol.e3(r)))
        dcom = divergence_coeffs(com.e2(r), com.e3(r), com.e3.deriv()(r), l, r)
        want = -(k2 / theta) * sph_bessel_j(l, q * r)
        assert dcom == pytest.approx(want, rel=1e-11)


def test_radial_function_calculus():
    pair = radial_profiles(RadialKind.TOROIDAL, 1, 1.0)
    f = pair.e1
    h = 1e-6
    for r in (0.4, 0.9):
        num = (f(r + h) - f(r - h)) / (2 * h)
        assert f.deriv()(r) == pytest.approx(num, rel=1e-9)
    g = f.scaled(2.5)
    assert g(0.5) == pytest.approx(2.5 * f(0.5), rel=1e-14)
    tp = f.times_power(3.0, -1)
    assert tp(0.5) == pytest.approx(3.0 * f(0.5) / 0.5, rel=1e-14)


def test_negative_k2_profiles_are_real():
    # modes at k^2 < 0 are normalized to real radial data
    for kind in (RadialKind.SOLENOIDAL, RadialKind.COMPRESSIVE, RadialKind.MATCHED):
        pair = radial_profiles(kind, 2, -9.0, 0.5)
        vals = [pair.e2(r) for r in RS] + [pair.e3(r) for r in RS]
        mags = [abs(v) for v in vals]
        assert max(mags) > 0.0
        # values are complex numbers but either purely real or purely
        # imaginary as a set; the mode constructor handles the phase.
        re = max(abs(v.real) for v in vals)
        im = max(abs(v.imag) for v in vals)
        assert min(re, im) < 1e-13 * max(re, im)


def test_radial_profiles_validation():
    with pytest.raises(InvalidMode):
        radial_profiles(RadialKind.SOLENOIDAL, 0, 1.0)
    with pytest.raises(InvalidMode):
        radial_profiles(RadialKind.TOROIDAL, 1, 0.0)
    with pytest.raises(DomainError):
        radial_profiles(RadialKind.COMPRESSIVE, 1, 1.0, -2.0)
