"""Real scalar and vector spherical harmonics on the unit sphere and ball.

Conventions
-----------
Modes are indexed by (parity, m, l) with parity selecting cos(m phi) or
sin(m phi).  Harmonics are L^2(S^2)-orthonormal,

    Y = C_lm P_l^m(cos theta) * {cos, sin}(m phi),
    C_lm = sqrt(eps_m / (2 pi)) * sqrt((2l+1)(l-m)! / (2 (l+m)!)),

with eps_0 = 1 and eps_m = 2 otherwise, and no Condon-Shortley phase.
The three vector harmonics attached to a scalar mode Y with l >= 1 are

    A_1 = (grad_S Y x xi) / sqrt(l(l+1))   (tangential, curl-type),
    A_2 = grad_S Y / sqrt(l(l+1))          (tangential, gradient-type),
    A_3 = Y xi                             (radial),

where grad_S is the surface gradient and xi the outward unit normal.
A_3 is defined for every l >= 0.  Components are carried in the local
orthonormal frame (e_r, e_theta, e_phi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fd
from .errors import DomainError, InvalidMode, StepTooLarge
from .specfun import assoc_legendre_tower, gauss_legendre

__all__ = [
    "ModeIndex",
    "SurfacePoint",
    "BallPoint",
    "Vec3",
    "enumerate_modes",
    "scalar_Y",
    "vector_A",
    "vector_A_ball",
    "check_vector_laplacian",
    "divergence_coeffs",
    "curl_radial",
    "SurfaceRule",
    "surface_quadrature",
    "gram_matrix",
    "expand_field",
    "surface_direction",
]

_PARITIES = ("even", "odd")


@dataclass(frozen=True)
class ModeIndex:
    """Index (parity, m, l) of a real spherical harmonic mode.

    The (odd, 0, l) combination is excluded: sin(0 phi) vanishes
    identically and would only contribute zero vectors to bases.
    """

    parity: str
    m: int
    l: int

    def __post_init__(self) -> None:
        if self.parity not in _PARITIES:
            raise InvalidMode(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if not isinstance(self.m, (int, np.integer)) or isinstance(self.m, bool):
            raise InvalidMode(f"m must be an integer, got {self.m!r}")
        if not isinstance(self.l, (int, np.integer)) or isinstance(self.l, bool):
            raise InvalidMode(f"l must be an integer, got {self.l!r}")
        if not (0 <= self.m <= self.l):
            raise InvalidMode(f"need 0 <= m <= l, got m = {self.m}, l = {self.l}")
        if self.parity == "odd" and self.m == 0:
            raise InvalidMode("(odd, 0, l) modes vanish identically")


@dataclass(frozen=True)
class SurfacePoint:
    """Point on the unit sphere: colatitude theta in [0, pi], azimuth
    phi in [0, 2 pi)."""

    theta: float
    phi: float

    def __post_init__(self) -> None:
        theta = float(self.theta)
        phi = float(self.phi)
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise DomainError("angles must be finite")
        if not (0.0 <= theta <= math.pi):
            raise DomainError(f"theta must lie in [0, pi], got {theta!r}")
        if not (0.0 <= phi < 2.0 * math.pi):
            raise DomainError(f"phi must lie in [0, 2 pi), got {phi!r}")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    def to_xyz(self) -> np.ndarray:
        s = math.sin(self.theta)
        return np.array(
            [s * math.cos(self.phi), s * math.sin(self.phi), math.cos(self.theta)]
        )


@dataclass(frozen=True)
class BallPoint:
    """Point in the punctured closed unit ball: radius r in (0, 1]."""

    r: float
    direction: SurfacePoint

    def __post_init__(self) -> None:
        r = float(self.r)
        if not (0.0 < r <= 1.0):
            raise DomainError(f"r must lie in (0, 1], got {r!r}")
        object.__setattr__(self, "r", r)

    def to_xyz(self) -> np.ndarray:
        return self.r * self.direction.to_xyz()


def surface_direction(xyz) -> SurfacePoint:
    """Direction of a nonzero Cartesian vector as a SurfacePoint."""
    x, y, z = (float(c) for c in xyz)
    rho = math.hypot(x, y)
    if rho == 0.0 and z == 0.0:
        raise DomainError("zero vector has no direction")
    theta = math.atan2(rho, z)
    phi = math.atan2(y, x) % (2.0 * math.pi)
    if phi >= 2.0 * math.pi:  # guard the wrap at negative zero
        phi = 0.0
    return SurfacePoint(theta=theta, phi=phi)


def _frame(p: SurfacePoint) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    st, ct = math.sin(p.theta), math.cos(p.theta)
    sp, cp = math.sin(p.phi), math.cos(p.phi)
    e_r = np.array([st * cp, st * sp, ct])
    e_t = np.array([ct * cp, ct * sp, -st])
    e_p = np.array([-sp, cp, 0.0])
    return e_r, e_t, e_p


@dataclass(frozen=True)
class Vec3:
    """Vector in the local spherical frame (e_r, e_theta, e_phi)."""

    er: float
    etheta: float
    ephi: float

    def __post_init__(self) -> None:
        for name in ("er", "etheta", "ephi"):
            v = getattr(self, name)
            if isinstance(v, complex):
                raise DomainError(f"{name} must be real, got {v!r}")
            v = float(v)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)

    def as_array(self) -> np.ndarray:
        return np.array([self.er, self.etheta, self.ephi])

    def to_cartesian(self, direction: SurfacePoint) -> np.ndarray:
        e_r, e_t, e_p = _frame(direction)
        return self.er * e_r + self.etheta * e_t + self.ephi * e_p

    @classmethod
    def from_cartesian(cls, vec, direction: SurfacePoint) -> "Vec3":
        vec = np.asarray(vec, dtype=float)
        e_r, e_t, e_p = _frame(direction)
        return cls(
            er=float(vec @ e_r), etheta=float(vec @ e_t), ephi=float(vec @ e_p)
        )

    def norm(self) -> float:
        return math.hypot(self.er, self.etheta, self.ephi)

    def dot(self, other: "Vec3") -> float:
        return (
            self.er * other.er
            + self.etheta * other.etheta
            + self.ephi * other.ephi
        )

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.er + other.er,
            self.etheta + other.etheta,
            self.ephi + other.ephi,
        )

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.er - other.er,
            self.etheta - other.etheta,
            self.ephi - other.ephi,
        )

    def __mul__(self, scalar: float) -> "Vec3":
        return Vec3(self.er * scalar, self.etheta * scalar, self.ephi * scalar)

    __rmul__ = __mul__


def enumerate_modes(l_max: int) -> list[ModeIndex]:
    """All modes with degree at most l_max: (l_max + 1)^2 of them.

    Ordered by degree, then parity (even before odd), then m.
    """
    if l_max < 0:
        raise InvalidMode(f"l_max must be >= 0, got {l_max}")
    modes = []
    for l in range(l_max + 1):
        for m in range(l + 1):
            modes.append(ModeIndex("even", m, l))
        for m in range(1, l + 1):
            modes.append(ModeIndex("odd", m, l))
    return modes


def _norm_const(l: int, m: int) -> float:
    # sqrt(eps_m/(2 pi) * (2l+1)(l-m)!/(2(l+m)!)) via lgamma so that
    # large (l, m) do not overflow the factorial ratio.
    eps = 1.0 if m == 0 else 2.0
    log_ratio = math.lgamma(l - m + 1) - math.lgamma(l + m + 1)
    return math.sqrt(eps / (2.0 * math.pi)) * math.exp(
        0.5 * (math.log(2 * l + 1) - math.log(2.0) + log_ratio)
    )


def _azimuth(n: ModeIndex, phi: float) -> tuple[float, float]:
    # Returns (F(m phi), F'(m phi) including the chain-rule factor m).
    if n.parity == "even":
        return math.cos(n.m * phi), -n.m * math.sin(n.m * phi)
    return math.sin(n.m * phi), n.m * math.cos(n.m * phi)


def scalar_Y(n: ModeIndex, p: SurfacePoint) -> float:
    """Orthonormal real spherical harmonic Y_n at a surface point."""
    values, _, _ = assoc_legendre_tower(n.m, n.l, math.cos(p.theta))
    trig, _ = _azimuth(n, p.phi)
    return _norm_const(n.l, n.m) * values[n.l] * trig


def _angular_derivatives(n: ModeIndex, p: SurfacePoint) -> tuple[float, float, float]:
    # (Y, dY/dtheta, (1/sin theta) dY/dphi); the last stays finite at
    # the poles because P_l^m / sin(theta) is regular for m >= 1 and the
    # m = 0 azimuthal derivative vanishes identically.
    values, dtheta, over_sin = assoc_legendre_tower(n.m, n.l, math.cos(p.theta))
    c = _norm_const(n.l, n.m)
    trig, dtrig = _azimuth(n, p.phi)
    y = c * values[n.l] * trig
    a = c * dtheta[n.l] * trig
    b = c * over_sin[n.l] * dtrig if n.m >= 1 else 0.0
    return y, a, b


def _validate_tau(tau: int, n: ModeIndex) -> None:
    if tau not in (1, 2, 3):
        raise InvalidMode(f"tau must be 1, 2 or 3, got {tau!r}")
    if tau in (1, 2) and n.l == 0:
        raise InvalidMode("tangential harmonics vanish for l = 0")


def vector_A(tau: int, n: ModeIndex, p: SurfacePoint) -> Vec3:
    """Vector spherical harmonic A_{tau n} at a surface point."""
    _validate_tau(tau, n)
    y, a, b = _angular_derivatives(n, p)
    if tau == 3:
        return Vec3(y, 0.0, 0.0)
    root = math.sqrt(n.l * (n.l + 1))
    if tau == 2:
        return Vec3(0.0, a / root, b / root)
    return Vec3(0.0, b / root, -a / root)


def vector_A_ball(tau: int, n: ModeIndex, p: BallPoint) -> Vec3:
    """Extension of A_{tau n} into the punctured ball.

    The tangential harmonics A_1, A_2 scale linearly with |x| = r; the
    radial harmonic A_3 is independent of r.
    """
    surface = vector_A(tau, n, p.direction)
    if tau == 3:
        return surface
    return surface * p.r


def divergence_coeffs(E2, E3, dE3_dr, l: int, r: float):
    """Modal divergence coefficient Phi(r) of E2 A_2 + E3 A_3.

    div(E2(r) A_2 + E3(r) A_3) = Phi(r) Y with
    Phi = dE3/dr + (2/r) E3 - (sqrt(l(l+1))/r) E2.
    """
    if not (r > 0.0):
        raise DomainError(f"r must be positive, got {r!r}")
    return dE3_dr + 2.0 * E3 / r - math.sqrt(l * (l + 1)) * E2 / r


def curl_radial(tau: int, n: ModeIndex, f, rf_prime_over_r, r: float):
    """Modal coefficients of curl(f(r) A_{tau n}) on (A_1, A_2, A_3).

    Inputs are the radial profile value f(r) and the combination
    (1/r) d(r f)/dr at the same radius.  The three curls are

        curl(f A_1) = (1/r)(r f)' A_2 + sqrt(l(l+1)) (f/r) A_3,
        curl(f A_2) = -(1/r)(r f)' A_1,
        curl(f A_3) = sqrt(l(l+1)) (f/r) A_1.
    """
    _validate_tau(tau, n)
    if not (r > 0.0):
        raise DomainError(f"r must be positive, got {r!r}")
    root = math.sqrt(n.l * (n.l + 1))
    if tau == 1:
        return (0.0, rf_prime_over_r, root * f / r)
    if tau == 2:
        return (-rf_prime_over_r, 0.0, 0.0)
    return (root * f / r, 0.0, 0.0)


def _laplacian_coeffs(tau: int, l: int, f, df, d2f, r: float):
    # Modal coefficients of the vector Laplacian of f(r) A_{tau}:
    #   Delta(f A_1) = (f'' + 2f'/r - l(l+1) f/r^2) A_1
    #   Delta(f A_2) = (f'' + 2f'/r - l(l+1) f/r^2) A_2 + 2 sqrt(l(l+1)) f/r^2 A_3
    #   Delta(f A_3) = (f'' + 2f'/r - (2 + l(l+1)) f/r^2) A_3 + 2 sqrt(l(l+1)) f/r^2 A_2
    lap = d2f + 2.0 * df / r
    big_l = l * (l + 1)
    root = math.sqrt(big_l)
    if tau == 1:
        return (lap - big_l * f / (r * r), 0.0, 0.0)
    if tau == 2:
        return (0.0, lap - big_l * f / (r * r), 2.0 * root * f / (r * r))
    return (0.0, 2.0 * root * f / (r * r), lap - (2.0 + big_l) * f / (r * r))


def check_vector_laplacian(
    tau: int,
    n: ModeIndex,
    p: BallPoint,
    h: float,
    f=None,
    df=None,
    d2f=None,
) -> float:
    """Max-norm residual between the finite-difference vector Laplacian
    of f(r) A_{tau n} and its modal closed form, at one ball point.

    ``f`` is a radial profile callable; when omitted it defaults to the
    standard ball extension (f(r) = r for tau in {1, 2}, f = 1 for
    tau = 3).  Missing derivatives are filled in by Richardson-refined
    central differences.  The Cartesian Laplacian itself uses plain
    second-order stencils, so the residual decreases like h^2.
    """
    _validate_tau(tau, n)
    h = float(h)
    if not (h > 0.0):
        raise DomainError(f"h must be positive, got {h!r}")
    if h > p.r / 4.0:
        raise StepTooLarge(f"h = {h!r} exceeds r/4 = {p.r / 4.0!r}")

    if f is None:
        if tau == 3:
            f, df, d2f = (lambda r: 1.0), (lambda r: 0.0), (lambda r: 0.0)
        else:
            f, df, d2f = (lambda r: r), (lambda r: 1.0), (lambda r: 0.0)
    if df is None:
        df = lambda r, _f=f: fd.derivative(_f, r, 1e-5, order=1, richardson=True)
    if d2f is None:
        d2f = lambda r, _f=f: fd.derivative(_f, r, 1e-4, order=2, richardson=True)

    def field(xyz: np.ndarray):
        r = float(np.linalg.norm(xyz))
        direction = surface_direction(xyz)
        return (vector_A(tau, n, direction) * f(r)).to_cartesian(direction)

    numeric = fd.vector_laplacian(field, p.to_xyz(), h)
    r = p.r
    coeffs = _laplacian_coeffs(tau, n.l, f(r), df(r), d2f(r), r)
    parts = [
        vector_A(t, n, p.direction) * c
        for t, c in zip((1, 2, 3), coeffs)
        if c != 0.0 and not (t in (1, 2) and n.l == 0)
    ]
    exact = np.zeros(3)
    for part in parts:
        exact = exact + part.to_cartesian(p.direction)
    return float(np.max(np.abs(np.asarray(numeric, dtype=float) - exact)))


# ----------------------------------------------------------------------
# Surface quadrature and projections
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceRule:
    """Product quadrature on the unit sphere: Gauss-Legendre in
    cos(theta) times a uniform trapezoid in phi.  Nodes avoid the poles."""

    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray

    def points(self) -> list[SurfacePoint]:
        return [
            SurfacePoint(t, p) for t, p in zip(self.theta.tolist(), self.phi.tolist())
        ]


def surface_quadrature(l_max: int) -> SurfaceRule:
    """Surface rule integrating products of harmonics up to degree l_max
    each (polynomial degree 2 l_max + 1 in cos theta) exactly."""
    if l_max < 0:
        raise InvalidMode(f"l_max must be >= 0, got {l_max}")
    n_theta = l_max + 4
    n_phi = max(4, 2 * l_max + 2)
    gauss = gauss_legendre(n_theta)
    theta_1d = np.arccos(gauss.nodes)
    phi_1d = 2.0 * math.pi * np.arange(n_phi) / n_phi
    theta = np.repeat(theta_1d, n_phi)
    phi = np.tile(phi_1d, n_theta)
    weights = np.repeat(gauss.weights * (2.0 * math.pi / n_phi), n_phi)
    return SurfaceRule(theta=theta, phi=phi, weights=weights)


def _angular_tables(
    modes: list[ModeIndex], rule: SurfaceRule
) -> dict[ModeIndex, tuple[np.ndarray, np.ndarray, np.ndarray]]:
    # Per-mode arrays (Y, dY/dtheta, (1/sin) dY/dphi) over rule nodes.
    # Towers are built once per (m, node) and shared by all degrees.
    l_max = max(n.l for n in modes)
    m_set = sorted({n.m for n in modes})
    x = np.cos(rule.theta)
    n_pts = x.shape[0]
    towers = {}
    for m in m_set:
        val = np.empty((l_max + 1, n_pts))
        dth = np.empty((l_max + 1, n_pts))
        osin = np.empty((l_max + 1, n_pts))
        for j in range(n_pts):
            v, d, o = assoc_legendre_tower(m, l_max, float(x[j]))
            val[:, j] = v
            dth[:, j] = d
            osin[:, j] = o
        towers[m] = (val, dth, osin)
    out = {}
    for n in modes:
        val, dth, osin = towers[n.m]
        c = _norm_const(n.l, n.m)
        if n.parity == "even":
            trig = np.cos(n.m * rule.phi)
            dtrig = -n.m * np.sin(n.m * rule.phi)
        else:
            trig = np.sin(n.m * rule.phi)
            dtrig = n.m * np.cos(n.m * rule.phi)
        y = c * val[n.l] * trig
        a = c * dth[n.l] * trig
        b = c * osin[n.l] * dtrig if n.m >= 1 else np.zeros(n_pts)
        out[n] = (y, a, b)
    return out


def _basis_labels(l_max: int) -> list[tuple[int, ModeIndex]]:
    labels = []
    for n in enumerate_modes(l_max):
        for tau in (1, 2, 3):
            if tau in (1, 2) and n.l == 0:
                continue
            labels.append((tau, n))
    return labels


def _basis_components(
    labels: list[tuple[int, ModeIndex]], rule: SurfaceRule
) -> np.ndarray:
    # Array of shape (len(labels), 3, n_nodes) holding the local-frame
    # components of each basis vector field at each node.
    tables = _angular_tables(list(dict.fromkeys(n for _, n in labels)), rule)
    comp = np.zeros((len(labels), 3, rule.theta.shape[0]))
    for i, (tau, n) in enumerate(labels):
        y, a, b = tables[n]
        if tau == 3:
            comp[i, 0] = y
        else:
            root = math.sqrt(n.l * (n.l + 1))
            if tau == 2:
                comp[i, 1] = a / root
                comp[i, 2] = b / root
            else:
                comp[i, 1] = b / root
                comp[i, 2] = -a / root
    return comp


def gram_matrix(
    l_max: int, rule: SurfaceRule | None = None
) -> tuple[list[tuple[int, ModeIndex]], np.ndarray]:
    """Gram matrix of all vector harmonics with degree <= l_max under
    the surface quadrature.  Returns (labels, matrix); orthonormality
    means the matrix is the identity."""
    if rule is None:
        rule = surface_quadrature(l_max)
    labels = _basis_labels(l_max)
    comp = _basis_components(labels, rule)
    weighted = comp * rule.weights
    gram = np.einsum("ick,jck->ij", weighted, comp)
    return labels, gram


def expand_field(
    sampler,
    l_max: int,
    radial_nodes,
    rule: SurfaceRule | None = None,
) -> dict[tuple[int, ModeIndex], np.ndarray]:
    """Project a ball field onto the vector harmonic basis.

    ``sampler`` maps a BallPoint to a Vec3 (local-frame components).
    Returns, for every basis label (tau, mode), the array of projection
    coefficients over ``radial_nodes``.  For band-limited fields the
    reconstruction from these coefficients is exact up to quadrature
    roundoff.
    """
    if rule is None:
        rule = surface_quadrature(l_max)
    radial_nodes = [float(r) for r in radial_nodes]
    labels = _basis_labels(l_max)
    comp = _basis_components(labels, rule)
    weighted = comp * rule.weights
    points = rule.points()
    coeffs = {label: np.zeros(len(radial_nodes)) for label in labels}
    for j, r in enumerate(radial_nodes):
        samples = np.empty((3, len(points)))
        for k, direction in enumerate(points):
            vec = sampler(BallPoint(r=r, direction=direction))
            samples[0, k] = vec.er
            samples[1, k] = vec.etheta
            samples[2, k] = vec.ephi
        projections = np.einsum("ick,ck->i", weighted, samples)
        for i, label in enumerate(labels):
            coeffs[label][j] = projections[i]
    return coeffs
