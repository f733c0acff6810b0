"""Root finding for the resonance sets of the ball Steklov problem.

Four families of positive roots matter:

* zeros of j_l           -- poles of the family-2 eigenvalue,
* zeros of j_l'          -- zeros of the family-1 numerator,
* zeros of j_l + x j_l'  -- zeros of the family-2 eigenvalue,
* zeros of the family-1 denominator D(k) -- its poles.

The squared roots of the first and last sets are Dirichlet eigenvalues
of the interior operator, where the Steklov eigenvalue formulas break
down; the middle two certify 0 as a Steklov eigenvalue.

Everything is scan-and-bisect: a fixed scan step of pi/8 cannot jump
over two consecutive zeros of these Bessel-type functions (their zero
spacing exceeds pi asymptotically and never falls below ~pi/2 in the
ranges used), and bisection needs no derivatives.  Only simple zeros
are found; an even-order zero would be invisible to sign changes, but
the targeted functions have none.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, InvalidMode, ScanExhausted
from .specfun import sph_bessel_j_all

__all__ = [
    "RootList",
    "bessel_zeros",
    "neumann_zeros",
    "magnetic_zeros",
    "family1_resonances",
    "exclusion_check",
]

_STEP = math.pi / 8.0


@dataclass(frozen=True)
class RootList:
    """Sorted positive roots of one tagged function, with the residual
    |f(root)| recorded for each root."""

    tag: str
    l: int
    theta: float | None
    roots: tuple[float, ...]
    residuals: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.roots) != len(self.residuals):
            raise DomainError("roots and residuals must have equal length")
        previous = 0.0
        for root in self.roots:
            if not (root > previous):
                raise DomainError("roots must be positive and strictly increasing")
            if root - previous <= 1e-6:
                raise DomainError(f"roots {previous} and {root} are too close")
            previous = root


def _bisect(f: Callable[[float], float], lo: float, hi: float, flo: float, fhi: float) -> float:
    """Bisection of a bracketed sign change, to width 1e-15 * max(1, hi)
    or one ulp, whichever is reached first; returns the endpoint with
    the smaller |f|."""
    width = 1e-15 * max(1.0, hi)
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if (flo < 0.0) == (fmid < 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return lo if abs(flo) <= abs(fhi) else hi


def _scan_roots(
    f: Callable[[float], float],
    count: int,
    step: float = _STEP,
    noise_floor: float = 0.0,
    keep: Callable[[float], bool] | None = None,
) -> tuple[list[float], list[float]]:
    """First `count` positive roots of f by sign-change scan from `step`.

    Brackets where both endpoint values are below `noise_floor` in
    magnitude are skipped (guards scaled functions whose leading order
    cancels as x -> 0).  Roots rejected by `keep` are discarded without
    counting.  Raises ScanExhausted when the window (0, count*pi + 20]
    runs out first.
    """
    ceiling = count * math.pi + 20.0
    roots: list[float] = []
    residuals: list[float] = []
    index = 1
    a = step
    fa = f(a)
    while len(roots) < count:
        index += 1
        b = index * step
        if b > ceiling:
            raise ScanExhausted(
                f"found {len(roots)} of {count} roots below {ceiling:.3f}"
            )
        fb = f(b)
        skip = noise_floor > 0.0 and abs(fa) < noise_floor and abs(fb) < noise_floor
        if not skip and (fa == 0.0 or (fa < 0.0) != (fb < 0.0)):
            root = a if fa == 0.0 else _bisect(f, a, b, fa, fb)
            if keep is None or keep(root):
                roots.append(root)
                residuals.append(abs(f(root)))
        a, fa = b, fb
    return roots, residuals


def _jl_pair(l: int, x: float) -> tuple[float, float]:
    tab = sph_bessel_j_all(l + 1, complex(x))
    jl = tab[l].real
    jlp = (-tab[1] if l == 0 else tab[l - 1] - (l + 1) / complex(x) * tab[l]).real
    return jl, jlp


def _validate_counts(l: int, count: int, l_min: int) -> None:
    if not isinstance(l, int) or isinstance(l, bool) or l < l_min:
        raise InvalidMode(f"degree l must be an integer >= {l_min}, got {l!r}")
    if not isinstance(count, int) or isinstance(count, bool) or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    if count > 100:
        raise DomainError(f"count must be <= 100, got {count}")


def bessel_zeros(l: int, count: int) -> RootList:
    """First `count` positive zeros of j_l."""
    _validate_counts(l, count, l_min=0)
    roots, residuals = _scan_roots(lambda x: _jl_pair(l, x)[0], count)
    return RootList("bessel", l, None, tuple(roots), tuple(residuals))


def neumann_zeros(l: int, count: int) -> RootList:
    """First `count` positive zeros of j_l'.  Their squares are Neumann
    eigenvalues of the ball Laplacian at this degree."""
    _validate_counts(l, count, l_min=1)
    roots, residuals = _scan_roots(lambda x: _jl_pair(l, x)[1], count)
    return RootList("neumann", l, None, tuple(roots), tuple(residuals))


def magnetic_zeros(l: int, count: int) -> RootList:
    """First `count` positive zeros of x -> j_l(x) + x j_l'(x), the
    boundary combination whose vanishing makes the family-2 eigenvalue
    zero.  Near 0 the function behaves like (l+1) x^l / (2l+1)!!, so it
    is positive before its first root and the scan start loses nothing."""
    _validate_counts(l, count, l_min=1)

    def f(x: float) -> float:
        jl, jlp = _jl_pair(l, x)
        return jl + x * jlp

    roots, residuals = _scan_roots(f, count)
    return RootList("magnetic", l, None, tuple(roots), tuple(residuals))


def family1_resonances(l: int, theta: float, count: int) -> RootList:
    """First `count` positive zeros in k of the family-1 denominator

        D(k) = j_l(q) j_l(k) l(l+1) - j_l'(q) j_l'(k) k^2/sqrt(theta)
                                    - j_l'(q) j_l(k) k/sqrt(theta),

    q = k/sqrt(theta), scanned on the term-scaled form D/(|t1|+|t2|+|t3|).
    The leading orders of the three terms cancel exactly as k -> 0, so
    brackets where the scaled value sits below 1e-9 at both ends are
    treated as noise, not sign changes.  Roots at which j_l(k) itself
    vanishes are deflated away: there the eigenfield combination is
    undefined (and the eigenvalue has a removable zero, not a pole).

    Unlike the single-Bessel root sets, D mixes two oscillation scales
    (periods pi and pi*sqrt(theta) in k) whose zeros pair up ever more
    tightly as k grows: at theta = 1 the gap inside a pair shrinks like
    (2l+1)/k, already below pi/8 around k = 9 for l = 1.  The scan step
    is therefore tied to the window so no pair can hide in one bracket.
    """
    _validate_counts(l, count, l_min=1)
    if isinstance(theta, complex) or not (float(theta) > 0.0):
        raise DomainError(f"theta must be positive, got {theta!r}")
    theta = float(theta)
    sq = math.sqrt(theta)
    big_l = l * (l + 1)
    ceiling = count * math.pi + 20.0
    step = min(_STEP, math.pi * sq / 8.0, (2 * l + 1) / (2.0 * ceiling))

    def scaled_den(k: float) -> float:
        jk, jkp = _jl_pair(l, k)
        if theta == 1.0:
            jq, jqp = jk, jkp
        else:
            jq, jqp = _jl_pair(l, k / sq)
        t1 = jq * jk * big_l
        t2 = -jqp * jkp * k * k / sq
        t3 = -jqp * jk * k / sq
        scale = abs(t1) + abs(t2) + abs(t3)
        if scale == 0.0:
            return 0.0
        return (t1 + t2 + t3) / scale

    def off_bessel_zero(k: float) -> bool:
        jk, jkp = _jl_pair(l, k)
        return abs(jk) >= 1e-12 * max(1.0, abs(k * jkp))

    roots, residuals = _scan_roots(
        scaled_den, count, step=step, noise_floor=1e-9, keep=off_bessel_zero
    )
    return RootList("family1", l, theta, tuple(roots), tuple(residuals))


def _roots_below(
    f: Callable[[float], float],
    ceiling: float,
    step: float = _STEP,
    noise_floor: float = 0.0,
    keep: Callable[[float], bool] | None = None,
) -> list[float]:
    """All roots of f in (0, ceiling], by the same scan-and-bisect used
    for the counted lists but with an explicit ceiling and no shortfall
    error; for neighborhood queries rather than enumeration."""
    roots: list[float] = []
    index = 1
    a = step
    fa = f(a)
    while a < ceiling:
        index += 1
        b = index * step
        fb = f(b)
        skip = noise_floor > 0.0 and abs(fa) < noise_floor and abs(fb) < noise_floor
        if not skip and (fa == 0.0 or (fa < 0.0) != (fb < 0.0)):
            root = a if fa == 0.0 else _bisect(f, a, b, fa, fb)
            if root <= ceiling and (keep is None or keep(root)):
                roots.append(root)
        a, fa = b, fb
    return roots


def exclusion_check(k2: float, theta: float, l_max: int) -> tuple[bool, float]:
    """Whether k^2 stays clear of every resonance square (both families,
    degrees 1..l_max) by more than 1e-6; also returns the nearest
    resonance square.

    Roots are gathered only in a neighborhood of |k2| (up to
    sqrt(max(k2, 0)) + pi + 1): any root beyond that ceiling has its
    square further from k2 than (pi + 1)^2, so it can neither spoil
    clearance nor beat an in-neighborhood candidate; degrees whose
    first root provably exceeds the ceiling are skipped outright.
    Both vector families start at l = 1, so l_max < 1 means there is
    nothing to collide with and the result is (True, inf).
    """
    k2 = float(k2)
    if k2 == 0.0:
        raise InvalidMode("k2 must be nonzero")
    if isinstance(theta, complex) or not (float(theta) > 0.0):
        raise DomainError(f"theta must be positive, got {theta!r}")
    theta = float(theta)
    if l_max < 1:
        return True, math.inf

    sq = math.sqrt(theta)
    big_ratio = min(1.0, sq)
    reach = math.sqrt(max(k2, 0.0))
    ceiling = reach + math.pi + 1.0
    fine = min(_STEP, math.pi * sq / 8.0, (2 * l_max + 1) / (2.0 * ceiling))
    big_l_cache: dict[int, tuple[Callable[[float], float], Callable[[float], bool]]] = {}

    def make_den(l: int) -> tuple[Callable[[float], float], Callable[[float], bool]]:
        if l not in big_l_cache:
            big_l = l * (l + 1)

            def scaled_den(k: float, l: int = l, big_l: int = big_l) -> float:
                jk, jkp = _jl_pair(l, k)
                if theta == 1.0:
                    jq, jqp = jk, jkp
                else:
                    jq, jqp = _jl_pair(l, k / sq)
                t1 = jq * jk * big_l
                t2 = -jqp * jkp * k * k / sq
                t3 = -jqp * jk * k / sq
                scale = abs(t1) + abs(t2) + abs(t3)
                return (t1 + t2 + t3) / scale if scale else 0.0

            def off_bessel(k: float, l: int = l) -> bool:
                jk, jkp = _jl_pair(l, k)
                return abs(jk) >= 1e-12 * max(1.0, abs(k * jkp))

            big_l_cache[l] = (scaled_den, off_bessel)
        return big_l_cache[l]

    nearest = math.inf
    best = math.inf
    for l in range(1, l_max + 1):
        squares: list[float] = []
        # First zero of j_l exceeds l; first family-1 root exceeds
        # (l - 1) times min(1, sqrt(theta)) (an argument must pass its
        # turning point before D can oscillate).
        if (l - 1) * big_ratio <= ceiling:
            den, off = make_den(l)
            squares += [
                r * r
                for r in _roots_below(den, ceiling, step=fine, noise_floor=1e-9, keep=off)
            ]
        if l <= ceiling:
            squares += [r * r for r in _roots_below(lambda x: _jl_pair(l, x)[0], ceiling)]
        for square in squares:
            distance = abs(k2 - square)
            if distance < best:
                best = distance
                nearest = square
    return best > 1e-6, nearest
