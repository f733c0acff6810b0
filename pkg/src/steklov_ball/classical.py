"""Classical (scalar) Steklov spectrum of the n-dimensional ball.

The harmonic extension of a degree-j spherical harmonic is homogeneous
of degree j, so the full spectrum of the Dirichlet-to-Neumann map on
the ball of radius R is j/R, j = 0, 1, 2, ..., each with the dimension
of the degree-j harmonic space as multiplicity.  That makes every
derived quantity (counting function, Weyl exponent, weighted trace
norms) exactly computable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidMode, LengthMismatch

__all__ = [
    "ScalarSpectrum",
    "ball_steklov_spectrum",
    "multiplicity",
    "harmonic_polynomial_dimension",
    "laplace_beltrami_eig",
    "weyl_exponent_fit",
    "h_half_norm",
]

_MAX_FLATTENED = 10**6


def _validate_dim_radius(n: int, radius: float) -> float:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidMode(f"dimension must be an integer >= 2, got {n!r}")
    radius = float(radius)
    if not (radius > 0.0) or not math.isfinite(radius):
        raise DomainError(f"radius must be positive and finite, got {radius!r}")
    return radius


def multiplicity(n: int, j: int) -> int:
    """Multiplicity of the eigenvalue j/R on the n-ball, in exact
    integer arithmetic: (2j + n - 2) (j + n - 3)! / (j! (n - 2)!) for
    j >= 1, and 1 for the simple bottom eigenvalue j = 0.

    The factorial quotient is evaluated as (2j + n - 2) * (j+1) ... (j+n-3)
    divided by (n-2)!, so nothing overflows before the final exact
    division even at j = 10^4, n = 6.
    """
    if not isinstance(j, int) or isinstance(j, bool) or j < 0:
        raise InvalidMode(f"index j must be an integer >= 0, got {j!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidMode(f"dimension must be an integer >= 2, got {n!r}")
    if j == 0:
        return 1
    if n == 2:
        return 2
    product = 2 * j + n - 2
    for i in range(1, n - 2):
        product *= j + i
    return product // math.factorial(n - 2)


def harmonic_polynomial_dimension(n: int, j: int) -> int:
    """Dimension of the space of harmonic homogeneous polynomials of
    degree j in n variables: C(n+j-1, j) - C(n+j-3, j-2)."""
    if not isinstance(j, int) or isinstance(j, bool) or j < 0:
        raise InvalidMode(f"degree j must be an integer >= 0, got {j!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidMode(f"dimension must be an integer >= 2, got {n!r}")
    first = math.comb(n + j - 1, j)
    second = math.comb(n + j - 3, j - 2) if j >= 2 else 0
    return first - second


@dataclass(frozen=True)
class ScalarSpectrum:
    """Steklov spectrum of the ball: entries (j, j/R, multiplicity),
    sorted by eigenvalue, first entry (0, 0, 1)."""

    dim: int
    radius: float
    entries: tuple[tuple[int, float, int], ...]

    def __post_init__(self) -> None:
        previous = -1.0
        for _, eigenvalue, mult in self.entries:
            if eigenvalue < previous or mult < 1:
                raise DomainError("spectrum entries out of order")
            previous = eigenvalue

    def flattened(self, limit: int | None = None) -> list[float]:
        """Eigenvalues repeated by multiplicity, ascending."""
        out: list[float] = []
        for _, eigenvalue, mult in self.entries:
            remaining = None if limit is None else limit - len(out)
            if remaining is not None and remaining <= 0:
                break
            take = mult if remaining is None else min(mult, remaining)
            out.extend([eigenvalue] * take)
        return out


def ball_steklov_spectrum(n: int, radius: float = 1.0, count: int = 100) -> ScalarSpectrum:
    """First `count` (flattened) Steklov eigenvalues of the n-ball of
    the given radius, grouped by degree with multiplicities."""
    radius = _validate_dim_radius(n, radius)
    if not isinstance(count, int) or isinstance(count, bool) or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    if count > _MAX_FLATTENED:
        raise DomainError(f"count must be <= {_MAX_FLATTENED}, got {count}")
    entries = []
    total = 0
    j = 0
    while total < count:
        mult = multiplicity(n, j)
        entries.append((j, j / radius, mult))
        total += mult
        j += 1
    return ScalarSpectrum(dim=n, radius=radius, entries=tuple(entries))


def laplace_beltrami_eig(n: int, radius: float, l: int) -> float:
    """Laplace-Beltrami eigenvalue l(l + n - 2)/R^2 on the radius-R
    sphere bounding the n-ball.  For n = 2 these are exactly the squares
    of the Steklov eigenvalues l/R."""
    radius = _validate_dim_radius(n, radius)
    if not isinstance(l, int) or isinstance(l, bool) or l < 0:
        raise InvalidMode(f"degree l must be an integer >= 0, got {l!r}")
    return l * (l + n - 2) / (radius * radius)


def weyl_exponent_fit(n: int, count: int) -> float:
    """Least-squares slope of log(eigenvalue) against log(rank) over the
    upper half of the unit-ball spectrum; the counting asymptotics make
    it approach 1/(n - 1) as count grows."""
    if not isinstance(count, int) or isinstance(count, bool) or count < 1000:
        raise DomainError(f"count must be an integer >= 1000, got {count!r}")
    values = ball_steklov_spectrum(n, 1.0, count).flattened(count)
    ranks = np.arange(1, len(values) + 1, dtype=float)
    half = len(values) // 2
    x = np.log(ranks[half:])
    y = np.log(np.asarray(values[half:], dtype=float))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def h_half_norm(coefficients, eigenvalues) -> float:
    """Weighted trace norm (sum (lambda_j + 1) |c_j|^2)^(1/2) of a modal
    coefficient sequence against a flattened spectrum."""
    c = np.asarray(coefficients, dtype=float)
    lam = np.asarray(eigenvalues, dtype=float)
    if c.shape != lam.shape or c.ndim != 1:
        raise LengthMismatch(
            f"coefficients and eigenvalues must be equal-length 1-d, got {c.shape} and {lam.shape}"
        )
    return float(math.sqrt(float(np.sum((lam + 1.0) * c * c))))
