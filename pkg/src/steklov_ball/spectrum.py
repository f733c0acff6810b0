"""Steklov eigenvalues and eigenfields of the penalized curl-curl
operator on the unit ball, with independent residual verification.

The boundary condition is nu x curl E = lambda E_T on the unit sphere
with E . nu = 0, for the interior equation

    curl curl E - k^2 E - theta grad div E = 0,   k^2 != 0, theta > 0.

Two explicit eigenvalue families exist for every degree l >= 1:

* family 1 polarizes along the gradient-type/radial harmonics (A_2, A_3)
  and has nonzero interior divergence;
* family 2 polarizes along the curl-type harmonic (A_1) and is
  divergence-free.

Everything here is evaluated in complex arithmetic with k the principal
square root of k^2, so negative k^2 needs no separate code path; results
that must be real are asserted real and truncated.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DirichletResonance,
    DomainError,
    InvalidMode,
    NonRealEigenvalue,
    QuadratureTooCoarse,
    ZeroEigenvalue,
)
from .harmonics import (
    BallPoint,
    ModeIndex,
    SurfacePoint,
    Vec3,
    scalar_Y,
    surface_direction,
    surface_quadrature,
    vector_A,
)
from .radial import RadialFunction, RadialKind, RadialPair, bessel_operator, radial_profiles
from .resonances import magnetic_zeros, neumann_zeros
from .specfun import gauss_legendre, sph_bessel_j_all

__all__ = [
    "lambda1",
    "lambda2",
    "lambda1_theta1_alt",
    "SteklovMode",
    "steklov_mode",
    "residual_system",
    "residual_fourth_order",
    "divergence_field",
    "residual_div_helmholtz",
    "verify_steklov_bc",
    "verify_weak_identity",
    "eigenfield",
    "eigenfield_cartesian",
    "ModalBoundaryData",
    "solve_boundary_modal",
    "zero_in_spectrum",
    "SpectrumWitness",
]


def _validate_eig_args(l: int, k2: float) -> float:
    if not isinstance(l, int) or isinstance(l, bool) or l < 1:
        raise InvalidMode(f"degree l must be an integer >= 1, got {l!r}")
    if isinstance(k2, complex):
        raise InvalidMode(f"k2 must be real, got {k2!r}")
    k2 = float(k2)
    if not math.isfinite(k2) or k2 == 0.0:
        raise InvalidMode(f"k2 must be finite and nonzero, got {k2!r}")
    return k2


def _as_real(value: complex, what: str) -> float:
    if abs(value.imag) > 1e-10 * (1.0 + abs(value.real)):
        raise NonRealEigenvalue(
            f"{what} = {value!r} has a non-negligible imaginary part"
        )
    return value.real


def _bessel_pair(l: int, z: complex) -> tuple[complex, complex]:
    tab = sph_bessel_j_all(l + 1, z)
    return tab[l], tab[l - 1] - (l + 1) / z * tab[l]


def _lambda1_raw(l: int, k2: float, theta: float) -> complex:
    """Family-1 eigenvalue in complex arithmetic, before the reality
    truncation.  Raises DirichletResonance at denominator zeros."""
    k2 = _validate_eig_args(l, k2)
    if isinstance(theta, complex) or not (float(theta) > 0.0):
        raise DomainError(f"theta must be positive, got {theta!r}")
    theta = float(theta)
    sq = math.sqrt(theta)
    k = cmath.sqrt(complex(k2, 0.0))
    q = k / sq
    jk, jk_p = _bessel_pair(l, k)
    if theta == 1.0:
        jq, jq_p = jk, jk_p
    else:
        jq, jq_p = _bessel_pair(l, q)
    big_l = l * (l + 1)
    t1 = jq * jk * big_l
    t2 = -jq_p * jk_p * k * k / sq
    t3 = -jq_p * jk * k / sq
    den = t1 + t2 + t3
    scale = max(abs(t1), abs(t2), abs(t3))
    if abs(den) < 1e-10 * scale:
        raise DirichletResonance(
            f"family-1 denominator vanishes at l = {l}, k2 = {k2}, theta = {theta}"
        )
    num = -jq_p * jk * q * k * k
    return num / den


def lambda1(l: int, k2: float, theta: float = 1.0) -> float:
    """Family-1 Steklov eigenvalue.

    lambda = -[j_l'(q) j_l(k) q k^2] /
             [j_l(q) j_l(k) l(l+1) - j_l'(q) j_l'(k) k^2/sqrt(theta)
              - j_l'(q) j_l(k) k/sqrt(theta)],  q = k/sqrt(theta).

    Raises DirichletResonance when the denominator is below 1e-10 times
    the magnitude of its largest term (the poles sit at Dirichlet
    eigenvalues of the interior problem) and InvalidMode for l = 0 or
    k2 = 0.
    """
    return _as_real(_lambda1_raw(l, k2, theta), "lambda1")


def _lambda2_raw(l: int, k2: float) -> complex:
    k2 = _validate_eig_args(l, k2)
    k = cmath.sqrt(complex(k2, 0.0))
    jk, jk_p = _bessel_pair(l, k)
    if jk == 0.0 and jk_p == 0.0:
        raise DomainError(
            f"j_{l} underflows at k2 = {k2}; eigenvalue not representable"
        )
    # Newton-step scale: |j/j'| estimates the distance to the nearest
    # zero, so this fires only near actual zeros and stays quiet in
    # the small-argument regime where j and j' are tiny together.
    if abs(jk) < 1e-12 * abs(k * jk_p):
        raise DirichletResonance(
            f"j_{l}(k) vanishes at k2 = {k2}; family-2 eigenvalue undefined"
        )
    return -(jk + k * jk_p) / jk


def lambda2(l: int, k2: float) -> float:
    """Family-2 Steklov eigenvalue -(j_l(k) + k j_l'(k)) / j_l(k).

    Independent of the penalty parameter.  Raises DirichletResonance
    when j_l(k) vanishes (within 1e-12 of the k j_l'(k) scale).
    """
    return _as_real(_lambda2_raw(l, k2), "lambda2")


def lambda1_theta1_alt(l: int, k2: float) -> float:
    """Family-1 eigenvalue at theta = 1 in product form:
    -k j_l(k) j_l'(k) / (j_{l+1}(k) j_{l-1}(k)).

    Agrees with lambda1(l, k2, 1) to 1e-10 relative off resonance; the
    two expressions are rearrangements of each other through the
    three-term recurrence.
    """
    k2 = _validate_eig_args(l, k2)
    k = cmath.sqrt(complex(k2, 0.0))
    tab = sph_bessel_j_all(l + 1, k)
    jl = tab[l]
    jl_p = tab[l - 1] - (l + 1) / k * tab[l]
    num = -k * jl * jl_p
    den = tab[l + 1] * tab[l - 1]
    # Per-factor Newton-step guards, as in the direct form: each factor
    # is near one of its zeros iff |j_m| is small against |k j_m'|.
    up_p = tab[l] - (l + 2) / k * tab[l + 1]
    down_p = -tab[1] if l == 1 else tab[l - 2] - l / k * tab[l - 1]
    for jm, jm_p, m in ((tab[l + 1], up_p, l + 1), (tab[l - 1], down_p, l - 1)):
        if jm == 0.0 and jm_p == 0.0:
            raise DomainError(
                f"j_{m} underflows at k2 = {k2}; eigenvalue not representable"
            )
        if abs(jm) < 1e-12 * abs(k * jm_p):
            raise DirichletResonance(
                f"j_{l + 1}(k) j_{l - 1}(k) vanishes at k2 = {k2}"
            )
    return _as_real(num / den, "lambda1_theta1_alt")


# ----------------------------------------------------------------------
# Eigenmodes
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SteklovMode:
    """One explicit Steklov eigenpair on the unit ball.

    ``radial`` carries the closed-form radial profiles, already phase
    normalized so that all field values are real (for k^2 < 0 the raw
    profiles carry a common factor i^l which is divided out).
    """

    family: int
    n: ModeIndex
    k2: float
    theta: float
    eigenvalue: float
    radial: RadialPair

    def __post_init__(self) -> None:
        if self.family not in (1, 2):
            raise InvalidMode(f"family must be 1 or 2, got {self.family!r}")
        if self.n.l < 1:
            raise InvalidMode("Steklov modes require l >= 1")


def _phase(l: int, k2: float) -> complex:
    # For k2 < 0 the radial profiles are i^l times a real function;
    # dividing by i^l makes every field value exactly real.
    return (-1j) ** l if k2 < 0 else 1.0 + 0.0j


def steklov_mode(family: int, n: ModeIndex, k2: float, theta: float = 1.0) -> SteklovMode:
    """Construct the explicit eigenmode of one family at one harmonic
    mode: eigenvalue plus phase-normalized radial profiles."""
    if family == 1:
        lam = lambda1(n.l, k2, theta)
        pair = radial_profiles(RadialKind.MATCHED, n.l, k2, theta)
    elif family == 2:
        lam = lambda2(n.l, k2)
        pair = radial_profiles(RadialKind.TOROIDAL, n.l, k2, theta)
    else:
        raise InvalidMode(f"family must be 1 or 2, got {family!r}")
    return SteklovMode(
        family=family,
        n=n,
        k2=float(k2),
        theta=float(theta),
        eigenvalue=lam,
        radial=pair.scaled(_phase(n.l, float(k2))),
    )


def _field_real(value: complex, scale: float, what: str) -> float:
    if abs(value.imag) > 1e-9 * (abs(value.real) + scale):
        raise NonRealEigenvalue(f"{what} = {value!r} is not real")
    return value.real


# ----------------------------------------------------------------------
# Interior residuals
# ----------------------------------------------------------------------


def _scaled_sum(terms: list[complex]) -> float:
    scale = max((abs(t) for t in terms), default=0.0)
    if scale == 0.0:
        return 0.0
    return abs(sum(terms)) / scale


def _phi_function(pair: RadialPair) -> RadialFunction:
    # Modal divergence coefficient Phi = e3' + 2 e3 / r - sqrt(l(l+1)) e2 / r
    root = math.sqrt(pair.l * (pair.l + 1))
    return (
        pair.e3.deriv()
        + pair.e3.times_power(2.0, -1)
        + pair.e2.times_power(-root, -1)
    )


def residual_system(pair: RadialPair, r: float) -> tuple[float, float]:
    """Scaled residuals of the coupled radial ODE system at radius r.

    For an (e2, e3) pair the interior equation splits into two coupled
    second-order ODEs (the gradient-type and radial components of
    -Delta E + (1 - theta) grad div E - k^2 E = 0); for TOROIDAL the
    single curl-type ODE is evaluated and returned as the first slot.
    Residuals are normalized by the largest constituent term, so a
    solution yields values near machine epsilon regardless of scale.
    """
    r = float(r)
    if not (r > 0.0):
        raise DomainError(f"r must be positive, got {r!r}")
    k2 = pair.k2
    big_l = pair.l * (pair.l + 1)
    root = math.sqrt(big_l)

    if pair.kind is RadialKind.TOROIDAL:
        e1 = pair.e1
        terms = [
            -e1.deriv().deriv()(r),
            -2.0 * e1.deriv()(r) / r,
            big_l * e1(r) / (r * r),
            -k2 * e1(r),
        ]
        return (_scaled_sum(terms), 0.0)

    e2, e3 = pair.e2, pair.e3
    phi = _phi_function(pair)
    penalty = 1.0 - pair.theta
    terms2 = [
        -e2.deriv().deriv()(r),
        -2.0 * e2.deriv()(r) / r,
        big_l * e2(r) / (r * r),
        -2.0 * root * e3(r) / (r * r),
        penalty * root * phi(r) / r,
        -k2 * e2(r),
    ]
    terms3 = [
        -e3.deriv().deriv()(r),
        -2.0 * e3.deriv()(r) / r,
        (2.0 + big_l) * e3(r) / (r * r),
        -2.0 * root * e2(r) / (r * r),
        penalty * phi.deriv()(r),
        -k2 * e3(r),
    ]
    return (_scaled_sum(terms2), _scaled_sum(terms3))


def residual_fourth_order(l: int, k2: float, r: float, e3: RadialFunction) -> float:
    """Scaled residual of the decoupled fourth-order radial equation
    (B^2 - 2B - 4 l(l+1)) e3 = 0 at radius r, where B is the spherical
    Bessel operator r^2 d^2 + 2 r d + (k^2 r^2 - l(l+1)).

    Valid for the theta = 1 families; all four derivative orders are
    taken analytically through the radial algebra.
    """
    if e3.l != l:
        raise InvalidMode(f"radial function has degree {e3.l}, expected {l}")
    big_l = l * (l + 1)
    first = bessel_operator(e3, k2)
    second = bessel_operator(first, k2)
    terms = [second(r), -2.0 * first(r), -4.0 * big_l * e3(r)]
    return _scaled_sum(terms)


def divergence_field(mode: SteklovMode, p: BallPoint) -> float:
    """Pointwise divergence of the eigenfield.

    Family 2 is divergence-free by construction and returns exactly 0;
    family 1 returns Phi(r) Y_n(xi), the modal divergence coefficient
    times the scalar harmonic.
    """
    if mode.family == 2:
        return 0.0
    phi = _phi_function(mode.radial)
    value = phi(p.r)
    scale = max(
        abs(mode.radial.e3.deriv()(p.r)),
        abs(mode.radial.e3(p.r) / p.r),
        abs(mode.radial.e2(p.r) / p.r),
    )
    return _field_real(value, scale * 1e-3, "divergence") * scalar_Y(mode.n, p.direction)


def residual_div_helmholtz(mode: SteklovMode, p: BallPoint) -> float:
    """Scaled residual of -Delta(div E) - (k^2/theta) div E at p.

    The divergence of a family-1 eigenfield is Phi(r) Y_n(xi) with
    Phi proportional to j_l(k r / sqrt(theta)), so it solves a scalar
    Helmholtz equation; the scalar Laplacian is applied in modal form
    (the angular factor Y_n cancels in the scaled residual).  Family 2
    has vanishing divergence and returns 0.
    """
    if mode.family == 2:
        return 0.0
    phi = _phi_function(mode.radial)
    r = p.r
    big_l = mode.n.l * (mode.n.l + 1)
    terms = [
        -phi.deriv().deriv()(r),
        -2.0 * phi.deriv()(r) / r,
        big_l * phi(r) / (r * r),
        -(mode.k2 / mode.theta) * phi(r),
    ]
    return _scaled_sum(terms)


# ----------------------------------------------------------------------
# Boundary condition and weak form
# ----------------------------------------------------------------------


def _trace_data(mode: SteklovMode) -> tuple[float, float]:
    """Tangential trace coefficient and boundary curl coefficient.

    Returns (t, c) with E_T = t * A_tau and nu x curl E = c * A_tau on
    the unit sphere, where A_tau is A_1 for family 2 and A_2 for
    family 1.
    """
    pair = mode.radial
    root = math.sqrt(mode.n.l * (mode.n.l + 1))
    if mode.family == 2:
        e1, de1 = pair.e1(1.0), pair.e1.deriv()(1.0)
        scale = max(abs(e1), abs(de1))
        trace = _field_real(e1, scale, "boundary trace")
        curl_coef = _field_real(-(e1 + de1), scale, "boundary curl trace")
        return trace, curl_coef
    e2, de2 = pair.e2(1.0), pair.e2.deriv()(1.0)
    e3 = pair.e3(1.0)
    scale = max(abs(e2), abs(de2), abs(e3))
    trace = _field_real(e2, scale, "boundary trace")
    curl_coef = _field_real(-(e2 + de2) + root * e3, scale, "boundary curl trace")
    return trace, curl_coef


def verify_steklov_bc(mode: SteklovMode, p: SurfacePoint) -> float:
    """Pointwise residual |nu x curl E - lambda E_T| at a surface point.

    Both sides live on a single tangential harmonic, so the residual is
    the modal mismatch times that harmonic's magnitude at p.
    """
    trace, curl_coef = _trace_data(mode)
    tau = 1 if mode.family == 2 else 2
    magnitude = vector_A(tau, mode.n, p).norm()
    return abs(curl_coef - mode.eigenvalue * trace) * magnitude


def _real_samples(f: RadialFunction, radii: np.ndarray, what: str) -> np.ndarray:
    values = np.array([f(float(r)) for r in radii])
    scale = float(np.max(np.abs(values))) if values.size else 0.0
    if np.any(np.abs(values.imag) > 1e-9 * (np.abs(values.real) + scale + 1e-300)):
        raise NonRealEigenvalue(f"{what} is not real on the radial grid")
    return values.real


def _weak_identity_terms(
    mode: SteklovMode, radial_order: int, surface_order: int
) -> tuple[float, float, float, float]:
    l = mode.n.l
    root = math.sqrt(l * (l + 1))
    rule = gauss_legendre(radial_order)
    radii = 0.5 * (rule.nodes + 1.0)
    rweights = 0.5 * rule.weights * radii**2
    surf = surface_quadrature(surface_order)
    a1 = np.zeros(surf.theta.shape[0])
    a2 = np.zeros_like(a1)
    a3 = np.zeros_like(a1)
    for i, point in enumerate(surf.points()):
        if l >= 1:
            a1[i] = vector_A(1, mode.n, point).norm() ** 2
            a2[i] = vector_A(2, mode.n, point).norm() ** 2
        a3[i] = vector_A(3, mode.n, point).norm() ** 2
    s1 = float(np.sum(surf.weights * a1))
    s2 = float(np.sum(surf.weights * a2))
    s3 = float(np.sum(surf.weights * a3))

    pair = mode.radial
    if mode.family == 2:
        e1 = _real_samples(pair.e1, radii, "e1")
        de1 = _real_samples(pair.e1.deriv(), radii, "e1'")
        curl_sq = (root * e1 / radii) ** 2 * s3 + (de1 + e1 / radii) ** 2 * s2
        field_sq = e1**2 * s1
        div_sq = np.zeros_like(e1)
        e1_b = _real_samples(pair.e1, np.array([1.0]), "e1")[0]
        boundary = e1_b**2 * s1
    else:
        e2 = _real_samples(pair.e2, radii, "e2")
        de2 = _real_samples(pair.e2.deriv(), radii, "e2'")
        e3 = _real_samples(pair.e3, radii, "e3")
        phi = _real_samples(_phi_function(pair), radii, "div")
        curl_sq = (-(de2 + e2 / radii) + root * e3 / radii) ** 2 * s1
        field_sq = e2**2 * s2 + e3**2 * s3
        # div E = Phi(r) Y_n and |A_3|^2 = Y_n^2, so reuse the s3 table.
        div_sq = phi**2 * s3
        e2_b = _real_samples(pair.e2, np.array([1.0]), "e2")[0]
        e3_b = _real_samples(pair.e3, np.array([1.0]), "e3")[0]
        boundary = e2_b**2 * s2 + e3_b**2 * s3

    t_curl = float(np.sum(rweights * curl_sq))
    t_field = mode.k2 * float(np.sum(rweights * field_sq))
    t_div = mode.theta * float(np.sum(rweights * div_sq))
    t_boundary = mode.eigenvalue * boundary
    return t_curl, t_field, t_div, t_boundary


def verify_weak_identity(
    mode: SteklovMode,
    radial_order: int | None = None,
    surface_order: int | None = None,
) -> float:
    """Relative defect of the weak-form identity

        int_B(|curl E|^2 - k^2 |E|^2 + theta |div E|^2)
                                    + lambda int_Gamma |E|^2 = 0

    under product Gauss quadrature (radial rule with r^2 weight times a
    surface rule), normalized by the largest of the four terms.  Raises
    QuadratureTooCoarse when refining both orders by 4 moves the defect
    by more than 10% of that scale.
    """
    l = mode.n.l
    if radial_order is None:
        radial_order = 2 * l + 12
    if surface_order is None:
        surface_order = 2 * l + 4
    if radial_order < 2 * l + 4 or surface_order < 2 * l + 4:
        raise DomainError(
            f"quadrature orders must be >= 2l + 4 = {2 * l + 4}"
        )
    base = _weak_identity_terms(mode, radial_order, surface_order)
    refined = _weak_identity_terms(mode, radial_order + 4, surface_order + 4)
    scale = max(abs(t) for t in refined)
    if scale == 0.0:
        return 0.0
    base_value = base[0] - base[1] + base[2] + base[3]
    refined_value = refined[0] - refined[1] + refined[2] + refined[3]
    if abs(base_value - refined_value) > 0.1 * scale:
        raise QuadratureTooCoarse(
            f"weak-form defect moved from {base_value:.3e} to {refined_value:.3e} "
            f"under refinement (scale {scale:.3e})"
        )
    return abs(refined_value) / scale


# ----------------------------------------------------------------------
# Field evaluation
# ----------------------------------------------------------------------


def eigenfield(mode: SteklovMode, p: BallPoint) -> Vec3:
    """Eigenfield value in the local spherical frame at a ball point.

    Family 1: E = e2(r) A_2 + e3(r) A_3 (tangential trace only at r = 1
    since e3(1) = 0); family 2: E = e1(r) A_1.
    """
    pair = mode.radial
    if mode.family == 2:
        value = pair.e1(p.r)
        scale = abs(value)
        coef = _field_real(value, scale, "e1")
        return vector_A(1, mode.n, p.direction) * coef
    v2, v3 = pair.e2(p.r), pair.e3(p.r)
    scale = max(abs(v2), abs(v3))
    c2 = _field_real(v2, scale, "e2")
    c3 = _field_real(v3, scale, "e3")
    return vector_A(2, mode.n, p.direction) * c2 + vector_A(3, mode.n, p.direction) * c3


def eigenfield_cartesian(mode: SteklovMode):
    """Eigenfield as a plain Cartesian field function (for stencils)."""

    def field(xyz) -> np.ndarray:
        xyz = np.asarray(xyz, dtype=float)
        r = float(np.linalg.norm(xyz))
        direction = surface_direction(xyz)
        return eigenfield(mode, BallPoint(r=r, direction=direction)).to_cartesian(
            direction
        )

    return field


# ----------------------------------------------------------------------
# Modal boundary-value solver
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ModalBoundaryData:
    """Finitely supported tangential boundary datum

        f = sum c_{tau n} A_{tau n},   tau in {1, 2},  l >= 1.

    Only tangential components are allowed: a radial (A_3) part cannot
    appear in nu x curl E data.
    """

    coefficients: tuple[tuple[tuple[int, ModeIndex], float], ...]

    def __post_init__(self) -> None:
        seen = set()
        for (tau, n), c in self.coefficients:
            if tau not in (1, 2):
                raise InvalidMode(f"boundary data must be tangential, got tau = {tau!r}")
            if n.l < 1:
                raise InvalidMode("boundary data requires l >= 1")
            if isinstance(c, complex) or not math.isfinite(float(c)):
                raise DomainError(f"coefficient must be finite real, got {c!r}")
            if (tau, n) in seen:
                raise InvalidMode(f"duplicate boundary label ({tau}, {n})")
            seen.add((tau, n))

    @classmethod
    def from_dict(cls, data: dict) -> "ModalBoundaryData":
        return cls(coefficients=tuple(sorted(data.items(), key=lambda kv: (kv[0][0], str(kv[0][1])))))

    def items(self):
        return self.coefficients


def solve_boundary_modal(
    data: ModalBoundaryData, k2: float, theta: float = 1.0
) -> list[tuple[float, SteklovMode]]:
    """Solve nu x curl U = f on the unit sphere for the interior
    equation, mode by mode.

    A datum component on A_1 couples to the family-2 eigenfield of the
    same harmonic mode; a component on A_2 couples to family 1.  The
    returned modes are rescaled to unit tangential trace on the sphere
    (the harmonics are orthonormal, so that means trace coefficient 1)
    and each weight is then c / lambda.

    Raises ZeroEigenvalue if any required eigenvalue vanishes (the datum
    is then outside the solvable range; see zero_in_spectrum) and
    propagates DirichletResonance from the eigenvalue formulas.
    """
    solution = []
    for (tau, n), c in data.items():
        if c == 0.0:
            continue
        family = 2 if tau == 1 else 1
        mode = steklov_mode(family, n, k2, theta)
        if abs(mode.eigenvalue) < 1e-10:
            raise ZeroEigenvalue(
                f"eigenvalue vanishes for family {family}, l = {n.l}, k2 = {k2}"
            )
        trace, _ = _trace_data(mode)
        normalized = SteklovMode(
            family=mode.family,
            n=mode.n,
            k2=mode.k2,
            theta=mode.theta,
            eigenvalue=mode.eigenvalue,
            radial=mode.radial.scaled(1.0 / trace),
        )
        solution.append((c / mode.eigenvalue, normalized))
    return solution


# ----------------------------------------------------------------------
# Zero-in-spectrum criterion
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumWitness:
    """Auxiliary eigenvalue certifying that 0 is a Steklov eigenvalue:
    kind 'neumann' means k^2 = theta * root^2 with j_l'(root) = 0,
    kind 'magnetic' means k^2 = root^2 with j_l(root) + root j_l'(root) = 0.
    """

    kind: str
    l: int
    root: float


def zero_in_spectrum(
    k2: float, theta: float, l_max: int
) -> tuple[bool, list[SpectrumWitness]]:
    """Whether 0 belongs to the Steklov spectrum at these parameters.

    This happens exactly when k^2 matches theta times a Neumann
    eigenvalue of the ball Laplacian (squared zero of j_l') or a
    magnetic-type eigenvalue (squared zero of j_l(x) + x j_l'(x)), for
    some degree l <= l_max.  Matching tolerance: 1e-8 on k^2.  For
    k^2 <= 0 the answer is False (both auxiliary spectra are positive).
    """
    if isinstance(theta, complex) or not (float(theta) > 0.0):
        raise DomainError(f"theta must be positive, got {theta!r}")
    theta = float(theta)
    k2 = float(k2)
    witnesses: list[SpectrumWitness] = []
    if k2 <= 0.0:
        return False, witnesses
    tol = 1e-8
    # Any relevant auxiliary root z satisfies z^2 ~ k2 (or k2/theta), and
    # the first positive zero of either function exceeds l, so higher
    # degrees cannot contribute; the count keeps the scan window ahead
    # of both the target and the first zero.
    target_n = math.sqrt(k2 / theta)
    target_m = math.sqrt(k2)
    for l in range(1, l_max + 1):
        if l * l <= k2 / theta + 1.0:
            count = min(100, max(int(target_n / math.pi) + 2, int(l / math.pi) + 1))
            for root in neumann_zeros(l, count).roots:
                if abs(theta * root * root - k2) <= tol:
                    witnesses.append(SpectrumWitness("neumann", l, root))
        if l * l <= k2 + 1.0:
            count = min(100, max(int(target_m / math.pi) + 2, int(l / math.pi) + 1))
            for root in magnetic_zeros(l, count).roots:
                if abs(root * root - k2) <= tol:
                    witnesses.append(SpectrumWitness("magnetic", l, root))
    return bool(witnesses), witnesses
