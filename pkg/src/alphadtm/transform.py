"""Endpoint Taylor jets and the alpha-parameterized transform.

A function f on [a, b] is carried as two truncated sequences of scaled
Taylor coefficients, f^(k)(a)/k! and f^(k)(b)/k!.  Sum, scaling, product and
differentiation act on each endpoint sequence independently.  Only at the end
are the two sequences blended with a weight alpha into

    D(f, alpha; k) = alpha * D_a(f; k) + (1 - alpha) * D_b(f; k)

which is expanded about x_alpha = alpha * a + (1 - alpha) * b.  Keeping the
endpoint sequences apart is what makes the product rule expressible: the
blended sequence of g*h is not a function of the blended sequences of g and h.

All coefficient arithmetic is exact (``fractions.Fraction``).
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import comb, isfinite, perm
from numbers import Rational as _RationalABC
from typing import Literal, Sequence, Union

from .errors import InsufficientOrderError, ShapeMismatchError

Endpoint = Literal["left", "right"]
RationalLike = Union[Fraction, int, str, Decimal, float]


def as_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to an exact ``Fraction``.

    Strings may be ``"p/q"``, integers or finite decimals ("0.125", "1e-3").
    Floats are read through their shortest repr, so ``0.1`` becomes 1/10.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(value)
    if isinstance(value, float):
        if not isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in {"nan", "inf", "+inf", "-inf", "infinity", "-infinity"}:
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as a rational")


@dataclass(frozen=True)
class Interval:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = as_rational(self.a), as_rational(self.b)
        if not a < b:
            raise ValueError(f"interval needs a < b, got [{a}, {b}]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def length(self) -> Fraction:
        return self.b - self.a


UNIT = Interval(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class AlphaParam:
    value: Fraction

    def __post_init__(self):
        v = as_rational(self.value)
        if not 0 <= v <= 1:
            raise ValueError(f"alpha must lie in [0, 1], got {v}")
        object.__setattr__(self, "value", v)

    def center(self, interval: Interval) -> Fraction:
        return self.value * interval.a + (1 - self.value) * interval.b


def as_alpha(alpha: AlphaParam | RationalLike) -> AlphaParam:
    return alpha if isinstance(alpha, AlphaParam) else AlphaParam(alpha)


@dataclass(frozen=True)
class EndpointJet:
    """Truncated Taylor coefficients of one function at both endpoints."""

    interval: Interval
    coeffs_a: tuple[Fraction, ...]
    coeffs_b: tuple[Fraction, ...]

    def __post_init__(self):
        ca = tuple(as_rational(c) for c in self.coeffs_a)
        cb = tuple(as_rational(c) for c in self.coeffs_b)
        if len(ca) != len(cb) or not ca:
            raise ShapeMismatchError(
                f"endpoint sequences must be non-empty and equally long, got {len(ca)} and {len(cb)}"
            )
        object.__setattr__(self, "coeffs_a", ca)
        object.__setattr__(self, "coeffs_b", cb)

    @property
    def order(self) -> int:
        return len(self.coeffs_a) - 1


@dataclass(frozen=True)
class AlphaSeries:
    """Blended coefficient sequence, expanded about ``center``.

    Coefficients are normally ``Fraction``; eigenfunctions recovered at a
    floating-point eigenvalue carry float coefficients.
    """

    alpha: AlphaParam
    center: Fraction
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def _check_same_shape(f: EndpointJet, g: EndpointJet) -> None:
    if f.interval != g.interval:
        raise ShapeMismatchError(f"interval mismatch: {f.interval} vs {g.interval}")
    if f.order != g.order:
        raise ShapeMismatchError(f"order mismatch: {f.order} vs {g.order}")


def _shifted_monomial(m: int, x0: Fraction, order: int) -> tuple[Fraction, ...]:
    # Taylor coefficients of x**m about x0: C(m, k) x0**(m - k)
    return tuple(
        Fraction(comb(m, k)) * x0 ** (m - k) if k <= m else Fraction(0)
        for k in range(order + 1)
    )


def monomial_jet(m: int, interval: Interval, order: int) -> EndpointJet:
    if m < 0 or order < 0:
        raise ValueError("monomial degree and order must be non-negative")
    return EndpointJet(
        interval,
        _shifted_monomial(m, interval.a, order),
        _shifted_monomial(m, interval.b, order),
    )


def zero_jet(interval: Interval, order: int) -> EndpointJet:
    zeros = (Fraction(0),) * (order + 1)
    return EndpointJet(interval, zeros, zeros)


def constant_jet(c: RationalLike, interval: Interval, order: int) -> EndpointJet:
    return jet_scale(c, monomial_jet(0, interval, order))


def polynomial_jet(coeffs: Sequence[RationalLike], interval: Interval, order: int) -> EndpointJet:
    """Jet of ``sum(coeffs[j] * x**j)``, truncated at ``order``."""
    result = zero_jet(interval, order)
    for j, c in enumerate(coeffs):
        c = as_rational(c)
        if c:
            result = jet_add(result, jet_scale(c, monomial_jet(j, interval, order)))
    return result


def jet_add(f: EndpointJet, g: EndpointJet) -> EndpointJet:
    _check_same_shape(f, g)
    return EndpointJet(
        f.interval,
        tuple(x + y for x, y in zip(f.coeffs_a, g.coeffs_a)),
        tuple(x + y for x, y in zip(f.coeffs_b, g.coeffs_b)),
    )


def jet_scale(c: RationalLike, f: EndpointJet) -> EndpointJet:
    c = as_rational(c)
    return EndpointJet(
        f.interval,
        tuple(c * x for x in f.coeffs_a),
        tuple(c * x for x in f.coeffs_b),
    )


def _cauchy(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(p)
    return tuple(sum((p[m] * q[k - m] for m in range(k + 1)), Fraction(0)) for k in range(n))


def jet_multiply(f: EndpointJet, g: EndpointJet) -> EndpointJet:
    """Truncated Cauchy product, taken separately at each endpoint."""
    _check_same_shape(f, g)
    return EndpointJet(
        f.interval,
        _cauchy(f.coeffs_a, g.coeffs_a),
        _cauchy(f.coeffs_b, g.coeffs_b),
    )


def jet_differentiate(f: EndpointJet, m: int = 1) -> EndpointJet:
    """m-th derivative; the order drops by exactly ``m``."""
    if m < 1:
        raise ValueError(f"derivative order must be positive, got {m}")
    if m > f.order:
        raise InsufficientOrderError(f"cannot take {m} derivatives of an order-{f.order} jet")

    def shift(seq):
        # (k+m)!/k! = perm(k+m, m)
        return tuple(perm(k + m, m) * seq[k + m] for k in range(f.order - m + 1))

    return EndpointJet(f.interval, shift(f.coeffs_a), shift(f.coeffs_b))


def alpha_combine(f: EndpointJet, alpha: AlphaParam | RationalLike) -> AlphaSeries:
    alpha = as_alpha(alpha)
    w = alpha.value
    coeffs = tuple(w * x + (1 - w) * y for x, y in zip(f.coeffs_a, f.coeffs_b))
    return AlphaSeries(alpha, alpha.center(f.interval), coeffs)


def evaluate(s: AlphaSeries, x):
    """Horner evaluation of the truncated series at ``x``.

    Exact when ``x`` and the coefficients are rational; a float ``x`` gives a
    float.
    """
    t = x - s.center
    acc = s.coeffs[-1]
    for c in reversed(s.coeffs[:-1]):
        acc = acc * t + c
    return acc


def evaluate_derivative(s: AlphaSeries, x):
    if s.order == 0:
        return Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
    t = x - s.center
    n = s.order
    acc = n * s.coeffs[n]
    for k in range(n - 1, 0, -1):
        acc = acc * t + k * s.coeffs[k]
    return acc


def endpoint_offset(alpha: AlphaParam | RationalLike, interval: Interval, endpoint: Endpoint) -> Fraction:
    """Signed distance from the expansion center to the given endpoint."""
    alpha = as_alpha(alpha)
    if endpoint == "left":
        return interval.a - alpha.center(interval)
    if endpoint == "right":
        return interval.b - alpha.center(interval)
    raise ValueError(f"endpoint must be 'left' or 'right', got {endpoint!r}")


def boundary_weights(
    alpha: AlphaParam | RationalLike,
    interval: Interval,
    order: int,
    endpoint: Endpoint,
    c1: RationalLike,
    c2: RationalLike,
) -> tuple[Fraction, ...]:
    """Weights w_k with  c1*y(e) + c2*y'(e) = sum_k w_k * D(y, alpha; k).

    w_k = c1 * t**k + c2 * k * t**(k-1), with t = e - x_alpha and the k = 0
    derivative term taken as zero.
    """
    t = endpoint_offset(alpha, interval, endpoint)
    c1, c2 = as_rational(c1), as_rational(c2)
    weights = [c1]
    for k in range(1, order + 1):
        weights.append(c1 * t**k + c2 * k * t ** (k - 1))
    return tuple(weights)
