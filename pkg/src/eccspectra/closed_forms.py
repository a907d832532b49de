"""Closed-form spectral data for double brooms and the H_{p,q} spiders.

Quadratics are solved in the cancellation-free form: the larger-magnitude
root first, the other from the product of the roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EvenDiameter, ParameterMismatch, ParameterOutOfRange

SQRT13 = math.sqrt(13.0)
H_THRESHOLD = -2.0 - SQRT13


def solve_quadratic(b: float, c: float) -> tuple[float, float]:
    """Real roots of ``x^2 + b x + c``, ascending.  Raises on a negative discriminant."""
    disc = b * b - 4.0 * c
    if disc < 0.0:
        if disc > -1e-12 * max(1.0, b * b):
            disc = 0.0
        else:
            raise ValueError(f"complex roots: discriminant {disc}")
    if b == 0.0 and c == 0.0:
        return 0.0, 0.0
    big = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    small = c / big if big != 0.0 else 0.0
    return (small, big) if small <= big else (big, small)


@dataclass(frozen=True)
class Quartic:
    """Even monic quartic ``x^4 + c2 x^2 + c0``."""

    c2: int
    c0: int
    c4: int = 1

    def __call__(self, lam: float) -> float:
        x = lam * lam
        return x * x + self.c2 * x + self.c0

    def roots(self) -> list[float]:
        """All four real roots, descending."""
        lo, hi = solve_quadratic(float(self.c2), float(self.c0))
        if lo < 0.0:
            raise ValueError(f"quadratic in x^2 has a negative root {lo}")
        r1, r2 = math.sqrt(hi), math.sqrt(lo)
        return [r1, r2, -r2, -r1]

    def largest_root(self) -> float:
        return self.roots()[0]


def f_a_quartic(n: int, a: int) -> Quartic:
    """Quartic whose largest root is the spectral radius of ε(D_{n,3}^{a,n-4-a})."""
    if n < 4 or not 0 <= a <= n - 4:
        raise ParameterOutOfRange(f"need n >= 4 and 0 <= a <= n-4, got n={n}, a={a}")
    c2 = 9 * a * a + 36 * a - 9 * n * a - 13 * n + 35
    c0 = -16 * a * a - 64 * a + 16 * n * a + 16 * n - 48
    return Quartic(c2=c2, c0=c0)


def _require_odd(d: int, lowest: int) -> None:
    if d % 2 == 0:
        raise EvenDiameter(f"diameter must be odd, got {d}")
    if d < lowest:
        raise ParameterOutOfRange(f"diameter must be >= {lowest}, got {d}")


def gamma_d(d: int) -> int:
    """Sum of k^2 for k from (d+1)/2 to d-1, in closed form d(d-1)(7d-5)/24."""
    _require_odd(d, 3)
    return d * (d - 1) * (7 * d - 5) // 24


@dataclass(frozen=True)
class BroomSpectralData:
    gamma: int
    x: int
    base: int
    delta: int
    rho_squared: float

    @property
    def rho(self) -> float:
        return math.sqrt(self.rho_squared)


def _broom_data(n: int, d: int, x: int) -> BroomSpectralData:
    g = gamma_d(d)
    base = g * (n - d + 1) + x * d * d
    delta = base * base - 4 * x * g * g
    return BroomSpectralData(g, x, base, delta, 0.5 * base + 0.5 * math.sqrt(delta))


def rho_squared_broom(n: int, d: int, a: int, b: int) -> BroomSpectralData:
    """Squared ε-spectral radius of D_{n,d}^{a,b} for odd d >= 3."""
    _require_odd(d, 3)
    if a < 0 or b < 0:
        raise ParameterOutOfRange(f"pendant counts must be non-negative, got a={a}, b={b}")
    if a + b != n - d - 1:
        raise ParameterMismatch(f"a + b must equal n - d - 1 = {n - d - 1}, got {a + b}")
    return _broom_data(n, d, (a + 1) * (b + 1))


@dataclass(frozen=True)
class BroomCandidates:
    """ε-spectral radius at both ends of the feasible range of x = (a+1)(b+1)."""

    x_low: int
    rho_low: float
    x_high: int
    rho_high: float

    @property
    def best(self) -> float:
        return max(self.rho_low, self.rho_high)

    @property
    def single(self) -> bool:
        return self.x_low == self.x_high


def broom_argmax_candidates(n: int, d: int) -> BroomCandidates:
    _require_odd(d, 5)
    if n < d + 1:
        raise ParameterOutOfRange(f"need n >= d + 1, got n={n}, d={d}")
    k = n - d - 1
    x_low = n - d
    x_high = (k // 2 + 1) * ((k + 1) // 2 + 1)
    return BroomCandidates(x_low, _broom_data(n, d, x_low).rho, x_high, _broom_data(n, d, x_high).rho)


def balanced_split(k: int) -> tuple[int, int]:
    return k // 2, (k + 1) // 2


@dataclass(frozen=True)
class FactoredPoly:
    """``x^z (x^2 + 4x - 9)^r (x^2 + b x + c)`` with z = p+1, r = q-1."""

    zero_multiplicity: int
    repeated_quadratic: tuple[int, int, int]
    repeated_multiplicity: int
    main_quadratic: tuple[int, int, int]

    @property
    def degree(self) -> int:
        return self.zero_multiplicity + 2 * self.repeated_multiplicity + 2

    def coefficients(self) -> np.ndarray:
        """Expanded coefficients, highest degree first."""
        poly = np.zeros(self.zero_multiplicity + 1)
        poly[0] = 1.0
        for _ in range(self.repeated_multiplicity):
            poly = np.polymul(poly, self.repeated_quadratic)
        return np.polymul(poly, self.main_quadratic)

    def __call__(self, lam: float) -> float:
        _, b4, c9 = self.repeated_quadratic
        _, b, c = self.main_quadratic
        return lam ** self.zero_multiplicity * (lam * lam + b4 * lam + c9) ** self.repeated_multiplicity * (
            lam * lam + b * lam + c
        )

    def roots(self) -> list[float]:
        """Roots with multiplicity, descending."""
        out = [0.0] * self.zero_multiplicity
        out += list(solve_quadratic(*map(float, self.repeated_quadratic[1:]))) * self.repeated_multiplicity
        out += list(solve_quadratic(*map(float, self.main_quadratic[1:])))
        return sorted(out, reverse=True)


def _check_pq(p: int, q: int) -> None:
    if p < 0 or q < 2:
        raise ParameterOutOfRange(f"need p >= 0 and q >= 2, got p={p}, q={q}")


def h_eps_poly(p: int, q: int) -> FactoredPoly:
    """Characteristic polynomial of ε(H_{p,q}) in factored form."""
    _check_pq(p, q)
    return FactoredPoly(
        zero_multiplicity=p + 1,
        repeated_quadratic=(1, 4, -9),
        repeated_multiplicity=q - 1,
        main_quadratic=(1, 4 - 4 * q, -(9 * p * q + 9 * q * q + 9 - 14 * q)),
    )


def h_least_eigenvalue(p: int, q: int) -> float:
    _, b, c = h_eps_poly(p, q).main_quadratic
    return min(H_THRESHOLD, solve_quadratic(float(b), float(c))[0])


def h_equality_condition(p: int, q: int) -> bool:
    """True iff the least ε-eigenvalue of H_{p,q} is exactly -2-sqrt(13)."""
    _check_pq(p, q)
    return 9 * p + 9 * q - 4 * SQRT13 - 22 <= 0


def fa_monotone(n_max: int = 30) -> list[tuple[int, int, float, float]]:
    """Violations of strict growth of the largest f_a root in a (b >= a >= 1).

    Returns ``(n, a, root(a-1), root(a))`` for every failing pair; empty when
    the monotonicity holds on the whole range.
    """
    bad = []
    for n in range(6, n_max + 1):
        for a in range(1, (n - 4) // 2 + 1):
            lo = f_a_quartic(n, a - 1).largest_root()
            hi = f_a_quartic(n, a).largest_root()
            if not lo < hi:
                bad.append((n, a, lo, hi))
    return bad
