"""Exact arithmetic in the fractional power basis x^(k*a).

An AlphaPoly is a finite combination sum_k c_k * x^(k*a) with order
0 < a <= 1.  Coefficients are exact: each c_k is a rational number times
integer powers of the order symbol a (an AlphaScalar), so identity checks
can assert exact zero instead of a small float residual.  The order enters
coefficients only through differentiation: the conformable derivative acts
on the basis as

    d_alpha : x^(k*a)  ->  a * k * x^((k-1)*a),

so each application contributes exactly one power of a per coefficient,
and prefactors carrying a^(-n) cancel symbolically against n derivatives.

Fractional powers of negative arguments are evaluated under the
signed-power convention

    x^a := sign(x) * |x|^a,

which extends the basis to [-1, 1], preserves parity (even/odd index
support gives even/odd functions of x) and reduces to the ordinary power
at a = 1.

The zero polynomial is the empty coefficient tuple; trailing zero
coefficients are trimmed on construction.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

__all__ = [
    "AlphaPoly",
    "AlphaScalar",
    "DomainError",
    "GammaRatio",
    "ParameterError",
    "conformable_gamma",
    "gamma_quotient",
    "pochhammer",
]

RationalLike = Union[int, str, Fraction]
ScalarLike = Union[int, Fraction, "AlphaScalar"]


class ParameterError(ValueError):
    """An argument lies outside an operation's domain of definition."""


class DomainError(ValueError):
    """A formula was evaluated at a pole or an undefined point."""


def _as_fraction(value: RationalLike) -> Fraction:
    # Floats are admitted because every float is exactly a dyadic rational;
    # the conversion itself loses nothing.
    if isinstance(value, Fraction):
        return value
    try:
        return Fraction(value)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"expected an exact rational, got {value!r}") from exc


def _as_order(value: Union[int, str, Fraction, float]) -> Union[Fraction, float]:
    """Validate a derivative order: a real in (0, 1], exact when rational."""
    if isinstance(value, (int, str)):
        value = Fraction(value)
    if not isinstance(value, (Fraction, float)):
        raise ParameterError(f"order must be a real number, got {value!r}")
    if not 0 < value <= 1:
        raise ParameterError(f"order must lie in (0, 1], got {value}")
    return value


# ---------------------------------------------------------------------------
# scalars: Laurent polynomials in the order symbol


@dataclass(frozen=True, eq=False)
class AlphaScalar:
    """Exact scalar of the form sum_i c_i * a^(p_i).

    A Laurent polynomial in the order symbol a over the rationals.  `terms`
    holds (power, coefficient) pairs, ascending in power, no zero
    coefficients.  Use the factories (`of`, arithmetic operators) rather
    than the raw constructor.
    """

    terms: tuple[tuple[int, Fraction], ...] = ()

    @staticmethod
    def of(value: RationalLike, power: int = 0) -> AlphaScalar:
        c = _as_fraction(value)
        if not c:
            return AlphaScalar()
        return AlphaScalar(((int(power), c),))

    @staticmethod
    def _from_map(powers: dict[int, Fraction]) -> AlphaScalar:
        return AlphaScalar(tuple(sorted((p, c) for p, c in powers.items() if c)))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _coerced(self, other: ScalarLike) -> AlphaScalar | None:
        if isinstance(other, AlphaScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return AlphaScalar.of(other)
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlphaScalar):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == AlphaScalar.of(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        # A pure rational must hash like the rational it equals.
        if not self.terms:
            return hash(Fraction(0))
        if len(self.terms) == 1 and self.terms[0][0] == 0:
            return hash(self.terms[0][1])
        return hash(self.terms)

    def __add__(self, other: ScalarLike) -> AlphaScalar:
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self.terms)
        for p, c in rhs.terms:
            acc[p] = acc.get(p, Fraction(0)) + c
        return AlphaScalar._from_map(acc)

    __radd__ = __add__

    def __neg__(self) -> AlphaScalar:
        return AlphaScalar(tuple((p, -c) for p, c in self.terms))

    def __sub__(self, other: ScalarLike) -> AlphaScalar:
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: ScalarLike) -> AlphaScalar:
        return -(self - other)

    def __mul__(self, other: ScalarLike) -> AlphaScalar:
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for p, c in self.terms:
            for q, d in rhs.terms:
                acc[p + q] = acc.get(p + q, Fraction(0)) + c * d
        return AlphaScalar._from_map(acc)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalLike) -> AlphaScalar:
        d = _as_fraction(other)
        if not d:
            raise ZeroDivisionError("division of AlphaScalar by zero")
        return AlphaScalar(tuple((p, c / d) for p, c in self.terms))

    def shift(self, power: int) -> AlphaScalar:
        """Multiply by a**power (exact)."""
        return AlphaScalar(tuple((p + power, c) for p, c in self.terms))

    def eval(self, alpha: float) -> float:
        """Numeric value once the order is fixed."""
        a = float(alpha)
        return math.fsum(float(c) * a ** p for p, c in self.terms)

    def subs(self, alpha: RationalLike) -> Fraction:
        """Exact value at a rational order."""
        a = _as_fraction(alpha)
        if not a and any(p < 0 for p, _ in self.terms):
            raise DomainError("negative power of a zero order")
        return sum((c * a ** p for p, c in self.terms), Fraction(0))

    def as_fraction(self) -> Fraction:
        """The value as a plain rational; rejects order-dependent scalars."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and self.terms[0][0] == 0:
            return self.terms[0][1]
        raise ParameterError(f"scalar {self} carries powers of the order symbol")

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p, c in self.terms:
            if p == 0:
                parts.append(f"{c}")
                continue
            base = "a" if p == 1 else f"a^{p}"
            if c == 1:
                parts.append(base)
            elif c == -1:
                parts.append(f"-{base}")
            else:
                parts.append(f"{c}*{base}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"AlphaScalar({self})"


# ---------------------------------------------------------------------------
# polynomials in x^(k*a)


@dataclass(frozen=True, eq=False)
class AlphaPoly:
    """Polynomial sum_k coeffs[k] * x^(k*a) with exact coefficients.

    `alpha` is the order, in (0, 1], kept exact when given as a rational.
    Coefficient entries may be ints, Fractions or AlphaScalars; they are
    normalized to AlphaScalar and trailing zeros are trimmed.
    """

    alpha: Union[Fraction, float]
    coeffs: tuple[AlphaScalar, ...] = ()

    def __post_init__(self) -> None:
        a = _as_order(self.alpha)
        normalized = []
        for c in self.coeffs:
            if isinstance(c, AlphaScalar):
                normalized.append(c)
            elif isinstance(c, (int, Fraction)):
                normalized.append(AlphaScalar.of(c))
            else:
                raise ParameterError(f"coefficient {c!r} is not exact")
        while normalized and normalized[-1].is_zero:
            normalized.pop()
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "coeffs", tuple(normalized))

    # -- constructors

    @staticmethod
    def zero(alpha: Union[Fraction, float]) -> AlphaPoly:
        return AlphaPoly(alpha, ())

    @staticmethod
    def constant(alpha: Union[Fraction, float], value: ScalarLike) -> AlphaPoly:
        return AlphaPoly(alpha, (value,))

    @staticmethod
    def monomial(alpha: Union[Fraction, float], k: int, coeff: ScalarLike = 1) -> AlphaPoly:
        if k < 0:
            raise ParameterError("basis index must be nonnegative")
        return AlphaPoly(alpha, (0,) * k + (coeff,))

    # -- structure

    @property
    def degree(self) -> int:
        """Highest basis index with a nonzero coefficient; -1 for zero."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        return self.alpha == other.alpha and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.alpha, self.coeffs))

    def _require_same_order(self, other: AlphaPoly) -> None:
        if self.alpha != other.alpha:
            raise ParameterError(
                f"mismatched orders {self.alpha} and {other.alpha}")

    # -- arithmetic

    def __add__(self, other: AlphaPoly) -> AlphaPoly:
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        self._require_same_order(other)
        n = max(len(self.coeffs), len(other.coeffs))
        zero = AlphaScalar()
        mine = self.coeffs + (zero,) * (n - len(self.coeffs))
        theirs = other.coeffs + (zero,) * (n - len(other.coeffs))
        return AlphaPoly(self.alpha, tuple(a + b for a, b in zip(mine, theirs)))

    def __neg__(self) -> AlphaPoly:
        return AlphaPoly(self.alpha, tuple(-c for c in self.coeffs))

    def __sub__(self, other: AlphaPoly) -> AlphaPoly:
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union[AlphaPoly, ScalarLike]) -> AlphaPoly:
        if isinstance(other, AlphaPoly):
            self._require_same_order(other)
            if self.is_zero or other.is_zero:
                return AlphaPoly.zero(self.alpha)
            out = [AlphaScalar() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
            for i, a in enumerate(self.coeffs):
                if a.is_zero:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return AlphaPoly(self.alpha, tuple(out))
        if isinstance(other, (int, Fraction, AlphaScalar)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: ScalarLike) -> AlphaPoly:
        if isinstance(other, (int, Fraction, AlphaScalar)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other: RationalLike) -> AlphaPoly:
        d = _as_fraction(other)
        return self.scale(Fraction(1) / d)

    def __pow__(self, exponent: int) -> AlphaPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ParameterError("polynomial powers must be nonnegative integers")
        out = AlphaPoly.constant(self.alpha, 1)
        for _ in range(exponent):
            out = out * self
        return out

    def scale(self, factor: ScalarLike) -> AlphaPoly:
        if not isinstance(factor, AlphaScalar):
            factor = AlphaScalar.of(factor)
        return AlphaPoly(self.alpha, tuple(c * factor for c in self.coeffs))

    def shift(self, k: int = 1) -> AlphaPoly:
        """Multiply by x^(k*a), shifting every basis index up by k."""
        if k < 0:
            raise ParameterError("basis shift must be nonnegative")
        if self.is_zero:
            return self
        return AlphaPoly(self.alpha, (0,) * k + self.coeffs)

    # -- calculus and evaluation

    def d_alpha(self) -> AlphaPoly:
        """Conformable derivative: x^(k*a) -> a*k*x^((k-1)*a), exactly."""
        return AlphaPoly(
            self.alpha,
            tuple(c * AlphaScalar.of(k, 1) for k, c in enumerate(self.coeffs) if k)
            if len(self.coeffs) > 1 else (),
        )

    def evaluate(self, x: float) -> float:
        """Value at x under the signed-power convention."""
        if not self.coeffs:
            return 0.0
        a = float(self.alpha)
        xf = float(x)
        u = math.copysign(abs(xf) ** a, xf)
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * u + c.eval(a)
        return acc

    def __call__(self, x: float) -> float:
        return self.evaluate(x)

    def coefficient_sum(self) -> AlphaScalar:
        """Exact value at x = 1 (all basis monomials are 1 there)."""
        total = AlphaScalar()
        for c in self.coeffs:
            total = total + c
        return total

    def rational_coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients as plain rationals; rejects order-dependent ones."""
        return tuple(c.as_fraction() for c in self.coeffs)

    # -- display

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero:
                continue
            basis = "" if k == 0 else ("x^a" if k == 1 else f"x^{k}a")
            try:
                r = c.as_fraction()
                negative = r < 0
                mag = abs(r)
                if not basis:
                    body = f"{mag}"
                elif mag == 1:
                    body = basis
                else:
                    body = f"{mag} {basis}"
            except ParameterError:
                negative = False
                body = f"({c}) {basis}".rstrip()
            if not out:
                out.append(("-" if negative else "") + body)
            else:
                out.append(("- " if negative else "+ ") + body)
        return " ".join(out) if out else "0"

    def __repr__(self) -> str:
        return f"AlphaPoly(alpha={self.alpha}, {self})"


# ---------------------------------------------------------------------------
# exact gamma-function helpers


def pochhammer(base: RationalLike, m: int) -> Fraction:
    """Rising factorial (base)_m = base*(base+1)*...*(base+m-1), exactly."""
    if not isinstance(m, int) or m < 0:
        raise ParameterError(f"rising factorial needs a nonnegative integer, got {m!r}")
    b = _as_fraction(base)
    out = Fraction(1)
    for i in range(m):
        out *= b + i
    return out


def gamma_quotient(num: RationalLike, den: RationalLike) -> Fraction:
    """Gamma(num)/Gamma(den) for arguments an integer apart, reduced exactly.

    Reduction is through rising factorials, which also gives the correct
    analytic-continuation value when both arguments sit at poles.  A pole
    in the numerator alone has no finite value and raises DomainError.
    """
    a = _as_fraction(num)
    b = _as_fraction(den)
    offset = a - b
    if offset.denominator != 1:
        raise ParameterError(
            f"gamma quotient needs integer-offset arguments, got {a} and {b}")
    k = offset.numerator
    if k >= 0:
        return pochhammer(b, k)
    p = pochhammer(a, -k)
    if not p:
        raise DomainError(f"gamma pole at argument {a}")
    return 1 / p


@dataclass(frozen=True)
class GammaRatio:
    """Exact ratio prod Gamma(num_i) / prod Gamma(den_j).

    Arguments are bucketed by fractional part; within a bucket numerator and
    denominator counts must balance (every numerator argument is an integer
    away from a denominator argument), and each pair reduces to a rising
    factorial.  Substituting rational arguments therefore evaluates exactly.
    """

    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...]

    @staticmethod
    def of(num: Iterable[RationalLike], den: Iterable[RationalLike]) -> GammaRatio:
        return GammaRatio(
            tuple(sorted(_as_fraction(v) for v in num)),
            tuple(sorted(_as_fraction(v) for v in den)),
        )

    def _buckets(self, args: Iterable[Fraction]) -> dict[Fraction, list[Fraction]]:
        out: dict[Fraction, list[Fraction]] = {}
        for v in args:
            out.setdefault(v - math.floor(v), []).append(v)
        return out

    def to_fraction(self) -> Fraction:
        tops = self._buckets(self.num)
        bottoms = self._buckets(self.den)
        if set(tops) != set(bottoms) or any(
                len(tops[k]) != len(bottoms[k]) for k in tops):
            raise ParameterError(
                "gamma arguments do not pair up an integer apart")
        out = Fraction(1)
        for key, top in tops.items():
            for a, b in zip(sorted(top), sorted(bottoms[key])):
                out *= gamma_quotient(a, b)
        return out

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter((self.num, self.den))


def conformable_gamma(p: float, alpha: float) -> float:
    """Order-alpha gamma value a^((p+a-1)/a) * Gamma((p+a-1)/a)."""
    a = float(alpha)
    if not 0 < a <= 1:
        raise ParameterError(f"order must lie in (0, 1], got {alpha}")
    arg = (float(p) + a - 1.0) / a
    if arg <= 0 and float(arg).is_integer():
        raise DomainError(f"gamma pole at argument {arg}")
    return a ** arg * math.gamma(arg)
