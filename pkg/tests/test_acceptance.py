"""End-to-end acceptance gate.

Eleven numbered criteria, each asserted at its stated tolerance and
wall-clock budget.  Each criterion reports exactly one line of the form

    [C 07] PASS  resonance correspondence ...

in the pytest terminal summary (see conftest.py).  The criteria
deliberately rebuild their sampling grids here instead of importing the
library's own verification suites, so a bookkeeping bug in one cannot
hide in the other.
"""

from __future__ import annotations

import math
import subprocess
import sys

import numpy as np
import pytest

import steklov_ball as sb
from steklov_ball import (
    BallPoint,
    DirichletResonance,
    ModeIndex,
    RadialKind,
    SurfacePoint,
)
from steklov_ball import fd

SURFACE_POINTS = [
    SurfacePoint(0.7, 1.1),
    SurfacePoint(1.9, 3.4),
    SurfacePoint(2.6, 5.7),
]


def test_c01_closed_form_spot_values(criterion):
    with criterion(1, "closed-form spot values", 1.0):
        # j_1(1) = sin 1 - cos 1 and (x j_1)' = x j_0, so the family-2
        # eigenvalue at l = 1, k^2 = 1 is -cos(1)/(sin(1) - cos(1)).
        want = -math.cos(1.0) / (math.sin(1.0) - math.cos(1.0))
        assert abs(sb.lambda2(1, 1.0) - want) <= 1e-10
        a = sb.lambda1(1, 1.0, 1.0)
        b = sb.lambda1_theta1_alt(1, 1.0)
        assert abs(a - b) <= 1e-10 * abs(b)


def test_c02_alternative_form_equivalence(criterion):
    with criterion(2, "product form equals quotient form at theta = 1", 5.0):
        worst = 0.0
        evaluated = 0
        for l in range(1, 11):
            for k2 in np.linspace(-50.0, 50.0, 101):
                if k2 == 0.0:
                    continue
                try:
                    a = sb.lambda1(l, float(k2), 1.0)
                    b = sb.lambda1_theta1_alt(l, float(k2))
                except DirichletResonance:
                    continue  # on-resonance points are excluded by contract
                worst = max(worst, abs(a - b) / max(abs(a), abs(b), 1e-300))
                evaluated += 1
        assert evaluated > 900  # the grid is essentially all off-resonance
        assert worst <= 1e-10


def test_c03_asymptotic_divergence(criterion):
    with criterion(3, "both eigenvalue branches diverge like -l", 1.0):
        r1 = sb.lambda1(40, 1.0, 1.0) / (-40.0)
        r2 = sb.lambda2(40, 1.0) / (-40.0)
        assert 0.9 < r1 < 1.1
        assert 0.9 < r2 < 1.1


def _mode_grid():
    ls = [1, 2, 5, 8]
    k2s = [1.0, -1.0, 10.0, -10.0, 30.0]
    thetas = [0.5, 1.0, 2.0]
    grid = []
    i = 0
    for family in (1, 2):
        for l in ls:
            for k2 in k2s:
                theta = thetas[i % 3]
                m = i % (l + 1)
                parity = "odd" if (i % 2 == 1 and m >= 1) else "even"
                grid.append((family, ModeIndex(parity, m, l), k2, theta))
                i += 1
    return grid


def test_c04_eigen_residual_suite(criterion):
    with criterion(4, "strong-form residuals on 40 modes", 10.0):
        grid = _mode_grid()
        assert len(grid) == 40
        for family, n, k2, theta in grid:
            mode = sb.steklov_mode(family, n, k2, theta)
            bc = max(sb.verify_steklov_bc(mode, p) for p in SURFACE_POINTS)
            assert bc <= 1e-9, (family, n, k2, theta, bc)
            for r in (0.25, 0.6, 0.95):
                r2, r3 = sb.residual_system(mode.radial, r)
                assert max(r2, r3) <= 1e-9, (family, n, k2, theta, r)
            if family == 1 and theta == 1.0:
                for r in (0.4, 0.9):
                    res = sb.residual_fourth_order(n.l, k2, r, mode.radial.e3)
                    assert res <= 1e-8, (n, k2, r, res)


def test_c05_weak_identity(criterion):
    with criterion(5, "weak-form identity under quadrature", 30.0):
        cases = [
            (1, 1, 1.0, 1.0),
            (1, 2, -3.0, 2.0),
            (1, 3, 30.0, 0.5),
            (1, 4, -10.0, 1.0),
            (1, 5, 12.0, 0.7),
            (1, 2, 5.0, 1.0),
            (2, 1, 1.0, 1.0),
            (2, 2, -3.0, 1.0),
            (2, 3, 30.0, 1.0),
            (2, 4, -10.0, 1.0),
            (2, 5, 12.0, 1.0),
            (2, 1, -25.0, 1.0),
        ]
        assert len(cases) == 12
        for family, l, k2, theta in cases:
            mode = sb.steklov_mode(family, ModeIndex("even", min(1, l), l), k2, theta)
            assert sb.verify_weak_identity(mode) <= 1e-8, (family, l, k2, theta)


def test_c06_divergence_dichotomy(criterion):
    with criterion(6, "divergence-free family vs compressive family", 30.0):
        rng = np.random.default_rng(20240817)
        pts = [
            BallPoint(float(r), SurfacePoint(float(t), float(ph)))
            for r, t, ph in zip(
                rng.uniform(0.05, 1.0, 100),
                rng.uniform(0.01, math.pi - 0.01, 100),
                rng.uniform(0.0, 2 * math.pi, 100),
            )
        ]
        n = ModeIndex("even", 1, 2)
        k2, theta = 7.0, 2.0
        q = math.sqrt(k2 / theta)
        m2 = sb.steklov_mode(2, n, k2, theta)
        m1 = sb.steklov_mode(1, n, k2, theta)
        for p in pts:
            assert abs(sb.divergence_field(m2, p)) <= 1e-11
            want = -(k2 / theta) * sb.sph_bessel_j(n.l, q * p.r).real * sb.scalar_Y(
                n, p.direction
            )
            got = sb.divergence_field(m1, p)
            assert abs(got - want) <= 1e-10 * max(abs(want), 1e-2)

        # Cartesian finite differences converge to the modal value at
        # second order.
        field = sb.eigenfield_cartesian(m1)
        p = pts[3]
        xyz = p.r * np.array(
            [
                math.sin(p.direction.theta) * math.cos(p.direction.phi),
                math.sin(p.direction.theta) * math.sin(p.direction.phi),
                math.cos(p.direction.theta),
            ]
        )
        want = sb.divergence_field(m1, p)
        e1 = abs(fd.divergence(field, xyz, 2e-3) - want)
        e2 = abs(fd.divergence(field, xyz, 1e-3) - want)
        assert math.log2(e1 / max(e2, 1e-300)) >= 1.9


def test_c07_resonance_correspondence(criterion):
    with criterion(7, "family-1 poles carry Dirichlet eigenfields", 30.0):
        for l in range(1, 6):
            roots = sb.family1_resonances(l, 1.0, 4).roots
            for root in roots:
                k2 = root * root
                sol = sb.radial_profiles(RadialKind.SOLENOIDAL, l, k2, 1.0)
                com = sb.radial_profiles(RadialKind.COMPRESSIVE, l, k2, 1.0)
                mat = sb.radial_profiles(RadialKind.MATCHED, l, k2, 1.0)
                scale = abs(com.e3(1.0) / sol.e3(1.0) * sol.e2(1.0)) + abs(com.e2(1.0))
                # tangential trace vanishes too: full Dirichlet data
                assert abs(mat.e2(1.0)) <= 1e-9 * scale, (l, root)
                assert abs(mat.e3(1.0)) <= 1e-9 * scale
            for root in sb.bessel_zeros(l, 3).roots:
                with pytest.raises(DirichletResonance):
                    sb.lambda2(l, root * root)


def test_c08_zero_in_spectrum(criterion):
    with criterion(8, "zero eigenvalue witnesses at both families", 30.0):
        for l in range(1, 6):
            for theta in (1.0, 2.0):
                for z in sb.neumann_zeros(l, 3).roots:
                    assert abs(sb.lambda1(l, theta * z * z, theta)) <= 1e-9
            for x in sb.magnetic_zeros(l, 3).roots:
                assert abs(sb.lambda2(l, x * x)) <= 1e-9


def test_c09_harmonic_calculus(criterion):
    with criterion(9, "vector harmonic orthonormality and calculus", 60.0):
        labels, g = sb.gram_matrix(6)
        assert np.max(np.abs(g - np.eye(len(labels)))) <= 1e-10
        p = BallPoint(0.6, SurfacePoint(1.0, 0.8))
        for tau, n in (
            (1, ModeIndex("even", 1, 2)),
            (2, ModeIndex("odd", 1, 3)),
            (3, ModeIndex("even", 0, 2)),
        ):
            r1 = sb.check_vector_laplacian(tau, n, p, 2e-3)
            r2 = sb.check_vector_laplacian(tau, n, p, 1e-3)
            assert math.log2(r1 / max(r2, 1e-300)) >= 1.9, (tau, n)


def test_c10_classical_spectrum(criterion):
    with criterion(10, "scalar spectrum of the n-ball", 5.0):
        head = sb.ball_steklov_spectrum(3, count=20).flattened(16)
        assert head == [0.0] + [1.0] * 3 + [2.0] * 5 + [3.0] * 7
        for n in range(2, 7):
            for j in range(0, 51):
                assert sb.multiplicity(n, j) == sb.harmonic_polynomial_dimension(n, j)
        assert abs(sb.weyl_exponent_fit(3, 10_000) - 0.5) <= 0.02


def test_c11_figure_sweep(criterion):
    with criterion(11, "eigenvalue sweep reproduction", 60.0):
        args = [
            sys.executable, "-m", "steklov_ball.cli",
            "sweep", "--family", "1", "--l", "1:10",
            "--k2", "-100:100", "--samples", "2001", "--theta", "1",
        ]
        r1 = subprocess.run(args + ["--threads", "1"], capture_output=True, text=True)
        r8 = subprocess.run(args + ["--threads", "8"], capture_output=True, text=True)
        assert r1.returncode == 0 and r8.returncode == 0
        assert r1.stdout == r8.stdout  # byte-identical across thread counts

        lines = r1.stdout.strip().splitlines()
        assert lines[0] == "family,l,theta,k2,lambda,status"
        table: dict[int, dict[float, tuple[float | None, str]]] = {}
        for line in lines[1:]:
            fam, l, theta, k2, lam, status = line.split(",")
            assert status in ("OK", "RES")
            value = None
            if status == "OK":
                value = float(lam)
                assert math.isfinite(value)
            table.setdefault(int(l), {})[float(k2)] = (value, status)
        assert len(table) == 10
        assert all(len(v) == 2001 for v in table.values())

        # Poles sit exactly at the family-1 resonance squares: the two
        # grid samples bracketing each square show a large-magnitude
        # sign flip, and no such flip occurs anywhere else.
        for l in range(1, 11):
            squares = sorted(
                r * r for r in sb.family1_resonances(l, 1.0, 12).roots if r * r <= 100.0
            )
            flips = []
            ks = sorted(table[l])
            for ka, kb in zip(ks[:-1], ks[1:]):
                va, status_a = table[l][ka]
                vb, status_b = table[l][kb]
                if status_a != "OK" or status_b != "OK":
                    continue
                if va * vb < 0.0 and min(abs(va), abs(vb)) > 10.0:
                    flips.append((ka, kb))
            assert len(flips) == len(squares), (l, flips, squares)
            for (ka, kb), s in zip(flips, squares):
                assert ka < s < kb, (l, ka, s, kb)
