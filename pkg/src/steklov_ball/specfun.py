"""Special functions: spherical Bessel, associated Legendre, Gauss-Legendre.

All routines here are self-contained (numpy for containers only) so that
the rest of the package does not depend on any external special-function
implementation.  Accuracy targets are near machine precision for
0 <= l <= 200 and |z| <= 100, which comfortably covers every parameter
range the eigenvalue routines ever request.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, LengthMismatch

__all__ = [
    "sph_bessel_j_all",
    "sph_bessel_j",
    "sph_bessel_j_deriv",
    "assoc_legendre",
    "assoc_legendre_tower",
    "gauss_legendre",
    "QuadratureRule",
]

_L_MAX = 200

# sin/cos overflow on the imaginary axis around |Im z| ~ 709; refuse a
# little earlier so the seeds j_0, j_1 are always finite.
_IM_MAX = 700.0


def _validate_order(l: int) -> None:
    if not isinstance(l, (int, np.integer)) or isinstance(l, bool):
        raise DomainError(f"order must be an integer, got {l!r}")
    if l < 0 or l > _L_MAX:
        raise DomainError(f"order must satisfy 0 <= l <= {_L_MAX}, got {l}")


def _j0_j1(z: complex) -> tuple[complex, complex]:
    # j_0 = sin z / z, j_1 = sin z / z^2 - cos z / z, for z != 0
    s = np.sin(z)
    c = np.cos(z)
    return s / z, s / (z * z) - c / z


def _series_all(l: int, z: complex) -> np.ndarray:
    # Ascending series around z = 0, used only for |z| < 1e-2 where a
    # handful of terms reach machine precision.  The z^n / (2n+1)!!
    # prefactor is built as a running product so it never overflows on
    # its own for the orders supported here.
    out = np.empty(l + 1, dtype=complex)
    q = -0.25 * z * z
    pref = 1.0 + 0.0j
    for n in range(l + 1):
        if n > 0:
            pref *= z / (2 * n + 1)
        term = 1.0 + 0.0j
        total = term
        for k in range(1, 60):
            term *= q / (k * (n + k + 0.5))
            total += term
            if abs(term) <= 1e-18 * abs(total):
                break
        out[n] = pref * total
    return out


def _upward_all(l: int, z: complex) -> np.ndarray:
    # Stable on the real axis as long as l does not exceed |z|.
    out = np.empty(l + 1, dtype=complex)
    j0, j1 = _j0_j1(z)
    out[0] = j0
    if l >= 1:
        out[1] = j1
    for n in range(2, l + 1):
        out[n] = (2 * n - 1) / z * out[n - 1] - out[n - 2]
    return out


def _downward_all(l: int, z: complex) -> np.ndarray:
    # Miller's algorithm: run the recurrence downward from a start order
    # well above l with arbitrary seeds, then normalize against j_0 or
    # j_1 computed in closed form.  Off the real axis the downward
    # contraction is slower, so the start order grows with sqrt(|z|).
    az = abs(z)
    start = l + 32
    if z.imag != 0.0:
        start += int(math.sqrt(40.0 * az)) + 8
    out = np.zeros(l + 1, dtype=complex)
    p_next = 0.0 + 0.0j  # p_{n+1}
    p_cur = 1e-30 + 0.0j  # p_n
    for n in range(start, -1, -1):
        p_prev = (2 * n + 3) / z * p_cur - p_next
        p_next = p_cur
        p_cur = p_prev
        # p_cur now approximates c * j_n(z)
        if n <= l:
            out[n] = p_cur
        if abs(p_cur.real) > 1e250 or abs(p_cur.imag) > 1e250:
            p_cur *= 1e-250
            p_next *= 1e-250
            if n <= l:
                out[n:] *= 1e-250
    # Normalize against whichever closed-form seed is larger, so a near
    # zero of j_0 or j_1 never poisons the scale.
    j0, j1 = _j0_j1(z)
    if l >= 1 and abs(j1) > abs(j0) and out[1] != 0:
        scale = j1 / out[1]
    else:
        scale = j0 / p_cur
    return out * scale


def sph_bessel_j_all(l: int, z: complex) -> np.ndarray:
    """Spherical Bessel functions j_0(z) .. j_l(z) of the first kind.

    Parameters
    ----------
    l : int
        Highest order, 0 <= l <= 200.
    z : complex
        Argument.  Real and purely imaginary arguments are the common
        cases; any complex argument with |Im z| <= 700 is accepted.

    Returns
    -------
    numpy.ndarray
        Complex array of length l + 1 with entry n equal to j_n(z).

    Raises
    ------
    DomainError
        If the order is out of range or z is not finite.
    OverflowError
        If |Im z| is large enough that j_0(z) is not representable.
    """
    _validate_order(l)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"argument must be finite, got {z!r}")
    if abs(z.imag) > _IM_MAX:
        raise OverflowError(
            f"|Im z| = {abs(z.imag):.3g} exceeds {_IM_MAX:g}; "
            "j_0(z) overflows double precision"
        )
    if z == 0:
        out = np.zeros(l + 1, dtype=complex)
        out[0] = 1.0
        return out
    az = abs(z)
    if az < 1e-2:
        return _series_all(l, z)
    if z.imag == 0.0 and l <= az:
        return _upward_all(l, z)
    return _downward_all(l, z)


def sph_bessel_j(l: int, z: complex) -> complex:
    """Spherical Bessel function j_l(z) of the first kind."""
    return complex(sph_bessel_j_all(l, z)[l])


def sph_bessel_j_deriv(l: int, z: complex) -> complex:
    """Derivative j_l'(z) of the spherical Bessel function.

    Uses j_l' = j_{l-1} - (l+1)/z j_l (and j_0' = -j_1), which keeps
    the evaluation on the same stable table as the values themselves.
    """
    _validate_order(l)
    z = complex(z)
    if z == 0:
        # j_l ~ z^l / (2l+1)!!, so only l = 1 has a nonzero slope at 0.
        return complex(1.0 / 3.0) if l == 1 else complex(0.0)
    tab = sph_bessel_j_all(max(l, 1), z)
    if l == 0:
        return complex(-tab[1])
    return complex(tab[l - 1] - (l + 1) / z * tab[l])


# ----------------------------------------------------------------------
# Associated Legendre functions
# ----------------------------------------------------------------------


def _validate_degree_order(l: int, m: int) -> None:
    if not isinstance(l, (int, np.integer)) or isinstance(l, bool):
        raise DomainError(f"degree must be an integer, got {l!r}")
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool):
        raise DomainError(f"order must be an integer, got {m!r}")
    if not (0 <= m <= l <= _L_MAX):
        raise DomainError(
            f"need 0 <= m <= l <= {_L_MAX}, got l = {l}, m = {m}"
        )


def assoc_legendre_tower(
    m: int, l_max: int, x: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Associated Legendre functions of fixed order m, degrees up to l_max.

    No Condon-Shortley phase.  Written in terms of x = cos(theta) with
    theta in [0, pi], so sin(theta) = sqrt(1 - x^2) >= 0 throughout.

    Parameters
    ----------
    m : int
        Order, 0 <= m <= l_max.
    l_max : int
        Highest degree, l_max <= 200.
    x : float
        Point in [-1, 1].

    Returns
    -------
    values, dtheta, over_sin : numpy.ndarray
        Arrays of length l_max + 1 indexed by degree.  ``values[l]`` is
        P_l^m(x); ``dtheta[l]`` is d/dtheta P_l^m(cos theta); and
        ``over_sin[l]`` is P_l^m(x) / sin(theta), which stays finite at
        the poles for m >= 1.  For m = 0 the third array is returned as
        zeros because the quotient is then pole-singular and is never
        needed (it only ever appears multiplied by m).

    Entries with degree below m are zero.
    """
    _validate_degree_order(l_max, m)
    if isinstance(x, complex):
        raise DomainError(f"argument must be real, got {x!r}")
    x = float(x)
    if not (-1.0 <= x <= 1.0):
        raise DomainError(f"argument must lie in [-1, 1], got {x!r}")
    s = math.sqrt(max(0.0, 1.0 - x * x))  # sin(theta)

    values = np.zeros(l_max + 1)
    dtheta = np.zeros(l_max + 1)
    over_sin = np.zeros(l_max + 1)

    # Seeds at degree m: P_m^m = (2m-1)!! sin^m(theta).
    dfact = 1.0
    for i in range(1, 2 * m, 2):
        dfact *= i
    sin_pow = s**m
    values[m] = dfact * sin_pow
    # d/dtheta sin^m = m sin^{m-1} cos; safe for m = 0 (slope is 0).
    if m >= 1:
        sin_pow_m1 = s ** (m - 1)
        dtheta[m] = dfact * m * sin_pow_m1 * x
        over_sin[m] = dfact * sin_pow_m1
    if l_max == m:
        _check_legendre_finite(values, dtheta)
        return values, dtheta, over_sin

    # Degree m+1 from the two-term start of the ascending recurrence.
    values[m + 1] = (2 * m + 1) * x * values[m]
    dtheta[m + 1] = (2 * m + 1) * (x * dtheta[m] - s * values[m])
    if m >= 1:
        over_sin[m + 1] = (2 * m + 1) * x * over_sin[m]

    for n in range(m + 2, l_max + 1):
        values[n] = (
            (2 * n - 1) * x * values[n - 1] - (n + m - 1) * values[n - 2]
        ) / (n - m)
        dtheta[n] = (
            (2 * n - 1) * (x * dtheta[n - 1] - s * values[n - 1])
            - (n + m - 1) * dtheta[n - 2]
        ) / (n - m)
        if m >= 1:
            over_sin[n] = (
                (2 * n - 1) * x * over_sin[n - 1]
                - (n + m - 1) * over_sin[n - 2]
            ) / (n - m)

    _check_legendre_finite(values, dtheta)
    return values, dtheta, over_sin


def _check_legendre_finite(values: np.ndarray, dtheta: np.ndarray) -> None:
    # Unnormalized P_l^m grows like (2m-1)!!, which leaves double range
    # for m beyond roughly 150; fail loudly instead of returning inf.
    if not (np.all(np.isfinite(values)) and np.all(np.isfinite(dtheta))):
        raise OverflowError(
            "associated Legendre values overflowed double precision; "
            "the unnormalized convention cannot represent this (l, m)"
        )


def assoc_legendre(l: int, m: int, x: float) -> tuple[float, float]:
    """Associated Legendre function P_l^m(x) and its theta-derivative.

    Returns the pair (P_l^m(x), d/dtheta P_l^m(cos theta)) evaluated at
    x = cos(theta).  No Condon-Shortley phase.
    """
    _validate_degree_order(l, m)
    values, dtheta, _ = assoc_legendre_tower(m, l, x)
    return float(values[l]), float(dtheta[l])


# ----------------------------------------------------------------------
# Gauss-Legendre quadrature
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights of a quadrature rule on [-1, 1]."""

    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        if self.nodes.shape != self.weights.shape or self.nodes.ndim != 1:
            raise DomainError("nodes and weights must be 1-d and equal length")

    def integrate(self, values: np.ndarray) -> float | complex:
        """Apply the rule to function values sampled at the nodes."""
        values = np.asarray(values)
        if values.shape != self.nodes.shape:
            raise LengthMismatch(
                f"expected {self.nodes.shape[0]} samples, got {values.shape}"
            )
        if np.iscomplexobj(values):
            re = math.fsum((self.weights * values.real).tolist())
            im = math.fsum((self.weights * values.imag).tolist())
            return complex(re, im)
        return float(math.fsum((self.weights * values).tolist()))


def _legendre_pair(n: int, x: float) -> tuple[float, float]:
    # P_n(x) and P_{n-1}(x) by the three-term recurrence.
    p_prev, p_cur = 1.0, x
    for k in range(1, n):
        p_prev, p_cur = p_cur, ((2 * k + 1) * x * p_cur - k * p_prev) / (k + 1)
    return p_cur, p_prev


def gauss_legendre(count: int) -> QuadratureRule:
    """Gauss-Legendre rule with ``count`` nodes on [-1, 1].

    Newton iteration is carried out in the variable theta = arccos(x),
    which keeps the iteration well-conditioned near the endpoints.  The
    node set is sorted ascending and symmetrized so that x and -x are
    exact negatives and paired weights are exactly equal.

    The rule is deterministic: repeated calls return identical arrays.
    """
    if not isinstance(count, (int, np.integer)) or isinstance(count, bool):
        raise DomainError(f"count must be an integer, got {count!r}")
    if not (1 <= count <= 4096):
        raise DomainError(f"count must be in [1, 4096], got {count}")
    n = int(count)
    nodes = np.empty(n)
    weights = np.empty(n)
    for i in range(n):
        theta = math.pi * (i + 0.75) / (n + 0.5)
        for _ in range(100):
            x = math.cos(theta)
            s = math.sin(theta)
            pn, pnm1 = _legendre_pair(n, x)
            # d/dtheta P_n(cos theta) = n (P_{n-1} - x P_n) / sin(theta) * (-1)
            # The derivative used below is with respect to theta directly.
            dp_dtheta = -n * (pnm1 - x * pn) / s
            step = pn / dp_dtheta
            theta -= step
            if abs(step) < 1e-15:
                break
        x = math.cos(theta)
        s = math.sin(theta)
        pn, pnm1 = _legendre_pair(n, x)
        q = n * (pnm1 - x * pn) / s
        nodes[i] = x
        weights[i] = 2.0 / (q * q)
    order = np.argsort(nodes)
    nodes = nodes[order]
    weights = weights[order]
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    return QuadratureRule(nodes=nodes, weights=weights)
