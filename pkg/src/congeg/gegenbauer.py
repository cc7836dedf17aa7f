"""Conformable Gegenbauer (ultraspherical) polynomials in the x^(k*a) basis.

Three construction routes are provided: the explicit series, the three-term
recurrence, and the Rodrigues product form.  They produce the same exact
coefficient sequence, and that sequence does not depend on the order a: the
factor a^n contributed by n conformable derivatives in the Rodrigues route
cancels symbolically against the a^(-n) in its prefactor.

Special cases: weight 1/2 gives the Legendre family, weight 1 the Chebyshev
second-kind family, and the first-kind family (the weight -> 0 limit) is
provided directly through its classical coefficients.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .alphapoly import (
    AlphaPoly,
    AlphaScalar,
    GammaRatio,
    ParameterError,
    RationalLike,
    _as_fraction,
    _as_order,
    pochhammer,
)

__all__ = [
    "GegenbauerSpec",
    "UltrasphericalSpec",
    "chebyshev_t",
    "chebyshev_t_rodrigues",
    "classical_oracle",
    "from_recurrence",
    "from_rodrigues",
    "from_series",
    "legendre",
    "ultraspherical",
    "ultraspherical_rodrigues",
]

_HALF = Fraction(1, 2)


def _check_degree(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParameterError(f"degree must be a nonnegative integer, got {n!r}")
    return n


@dataclass(frozen=True)
class GegenbauerSpec:
    """Parameter triple: degree n >= 0, weight lam > 0, order alpha in (0, 1]."""

    n: int
    lam: Fraction
    alpha: Union[Fraction, float]

    def __post_init__(self) -> None:
        _check_degree(self.n)
        lam = _as_fraction(self.lam)
        if lam <= 0:
            raise ParameterError(f"weight parameter must be positive, got {lam}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "alpha", _as_order(self.alpha))


@dataclass(frozen=True)
class UltrasphericalSpec:
    """Parameter triple for the shifted-weight family: beta > -1/2."""

    n: int
    beta: Fraction
    alpha: Union[Fraction, float]

    def __post_init__(self) -> None:
        _check_degree(self.n)
        beta = _as_fraction(self.beta)
        if beta <= Fraction(-1, 2):
            raise ParameterError(f"shifted weight must exceed -1/2, got {beta}")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "alpha", _as_order(self.alpha))

    @property
    def lam(self) -> Fraction:
        return self.beta + _HALF


# ---------------------------------------------------------------------------
# construction routes


def from_series(spec: GegenbauerSpec) -> AlphaPoly:
    """Explicit series: coefficient of x^((n-2s)*a) is
    (-1)^s (lam)_(n-s) 2^(n-2s) / (s! (n-2s)!)."""
    n, lam = spec.n, spec.lam
    coeffs = [Fraction(0)] * (n + 1)
    for s in range(n // 2 + 1):
        k = n - 2 * s
        coeffs[k] = (
            Fraction(-1) ** s
            * pochhammer(lam, n - s)
            * Fraction(2) ** k
            / (math.factorial(s) * math.factorial(k))
        )
    return AlphaPoly(spec.alpha, tuple(coeffs))


def from_recurrence(spec: GegenbauerSpec) -> AlphaPoly:
    """Three-term recurrence (m+1) C_(m+1) = 2(m+lam) x^a C_m - (m+2lam-1) C_(m-1),
    seeded with C_0 = 1 and C_1 = 2 lam x^a."""
    lam, alpha = spec.lam, spec.alpha
    prev = AlphaPoly.constant(alpha, 1)
    if spec.n == 0:
        return prev
    cur = AlphaPoly(alpha, (0, 2 * lam))
    for m in range(1, spec.n):
        nxt = (cur.shift(1).scale(2 * (m + lam)) - prev.scale(m + 2 * lam - 1)) / (m + 1)
        prev, cur = cur, nxt
    return cur


def _rodrigues_kernel(alpha: Union[Fraction, float], n: int, c: Fraction) -> AlphaPoly:
    """Leibniz expansion of the n-fold conformable derivative of
    (1 - x^(2a))^(n+c), divided by (1 - x^(2a))^c and by the sign (-1)^n:

        sum_k binom(n,k) G(n+c+1)^2 / (G(c+k+1) G(n+c-k+1))
              * a^n * (x^a + 1)^k * (x^a - 1)^(n-k)

    The a^n from the n derivatives is carried symbolically.
    """
    plus = AlphaPoly(alpha, (1, 1))
    minus = AlphaPoly(alpha, (-1, 1))
    total = AlphaPoly.zero(alpha)
    top = n + c + 1
    for k in range(n + 1):
        factor = math.comb(n, k) * GammaRatio.of(
            (top, top), (c + k + 1, top - k)).to_fraction()
        total = total + (plus ** k) * (minus ** (n - k)) * AlphaScalar.of(factor, 0)
    return total.scale(AlphaScalar.of(1, n))


def from_rodrigues(spec: GegenbauerSpec) -> AlphaPoly:
    """Rodrigues product form.  The prefactor

        G(2 lam + n) G(lam + 1/2) / ((-2a)^n G(2 lam) n! G(n + lam + 1/2))

    carries a^(-n), which cancels the kernel's a^n exactly; the (-1)^n of
    (-2a)^n cancels the kernel's extracted sign."""
    n, lam, alpha = spec.n, spec.lam, spec.alpha
    magnitude = GammaRatio.of(
        (2 * lam + n, lam + _HALF), (2 * lam, n + lam + _HALF)
    ).to_fraction() / (Fraction(2) ** n * math.factorial(n))
    prefactor = AlphaScalar.of(magnitude, -n)
    return _rodrigues_kernel(alpha, n, lam - _HALF).scale(prefactor)


# ---------------------------------------------------------------------------
# shifted-weight (ultraspherical) surface


def ultraspherical(spec: UltrasphericalSpec) -> AlphaPoly:
    """Shifted-weight family T_n^(beta) = C_n^(beta + 1/2)."""
    return from_series(GegenbauerSpec(spec.n, spec.lam, spec.alpha))


def ultraspherical_rodrigues(spec: UltrasphericalSpec) -> tuple[float, ...]:
    """Alternate Rodrigues route for the shifted-weight family, with the
    prefactor G(n + 2 beta + 1) / (2^(n+beta) a^n n! G(n + beta + 1)).

    The 2^beta and the gamma quotient are irrational for non-integer beta, so
    this route returns float coefficients.  It reproduces `ultraspherical`
    only up to a constant factor; the verification audit measures and records
    that factor rather than rescaling here.
    """
    n, beta, alpha = spec.n, spec.beta, spec.alpha
    kernel = _rodrigues_kernel(alpha, n, beta)
    b = float(beta)
    prefactor = math.gamma(n + 2 * b + 1) / (
        2.0 ** (n + b) * math.factorial(n) * math.gamma(n + b + 1))
    out = []
    for coeff in kernel.coeffs:
        if coeff.is_zero:
            out.append(0.0)
            continue
        (power, rational), = coeff.terms  # kernel coefficients are r * a^n
        if power != n:
            raise AssertionError("kernel coefficient lost its order power")
        out.append(float(rational) * prefactor)
    return tuple(out)


# ---------------------------------------------------------------------------
# special cases


def legendre(n: int, alpha: Union[Fraction, float]) -> AlphaPoly:
    """Weight 1/2: the conformable Legendre polynomial."""
    return from_series(GegenbauerSpec(_check_degree(n), _HALF, alpha))


def chebyshev_t(n: int, alpha: Union[Fraction, float]) -> AlphaPoly:
    """First-kind Chebyshev coefficients on the x^(k*a) basis.

    The weight -> 0 limit of the family is degenerate (every polynomial's
    limit is 0 for n >= 1), so the first kind is pinned by convention to the
    classical T_n coefficients."""
    _check_degree(n)
    alpha = _as_order(alpha)
    prev = AlphaPoly.constant(alpha, 1)
    if n == 0:
        return prev
    cur = AlphaPoly(alpha, (0, 1))
    for _ in range(n - 1):
        prev, cur = cur, cur.shift(1).scale(2) - prev
    return cur


def chebyshev_t_rodrigues(n: int, alpha: Union[Fraction, float]) -> AlphaPoly:
    """First-kind polynomials through the Rodrigues route at the weight -> 0
    boundary (exponent n - 1/2), prefactor 2^n n! / (a^n (2n)!).

    Exact; agrees with `chebyshev_t` identically, which the verification
    audit records."""
    _check_degree(n)
    magnitude = Fraction(2 ** n * math.factorial(n), math.factorial(2 * n))
    prefactor = AlphaScalar.of(magnitude, -n)
    return _rodrigues_kernel(_as_order(alpha), n, -_HALF).scale(prefactor)


def classical_oracle(n: int, lam: RationalLike) -> list[Fraction]:
    """Classical Gegenbauer coefficients (ascending powers of the plain
    variable) by the standard three-term recurrence on coefficient lists.

    Independent oracle for tests; the constructors never call it.
    """
    _check_degree(n)
    lam = _as_fraction(lam)
    if lam <= 0:
        raise ParameterError(f"weight parameter must be positive, got {lam}")
    prev = [Fraction(1)]
    if n == 0:
        return prev
    cur = [Fraction(0), 2 * lam]
    for m in range(2, n + 1):
        nxt = [Fraction(0)] * (m + 1)
        for j, coeff in enumerate(cur):
            nxt[j + 1] += 2 * (m - 1 + lam) / m * coeff
        for j, coeff in enumerate(prev):
            nxt[j] -= (m + 2 * lam - 2) / m * coeff
        prev, cur = cur, nxt
    return cur
