"""Linear two-point boundary-value problems  y'' + p y' + q y = f(x).

The transformed equation gives the coefficient recurrence

    (k+1)(k+2) c[k+2] = F(k) - p (k+1) c[k+1] - q c[k]

where F is the blended transform of the polynomial forcing f.  The first two
coefficients A = c[0], B = c[1] are left free, so every c[k] is carried as the
linear form A*u[k] + B*v[k] + w[k].  The two boundary conditions then become a
2x2 rational system for (A, B).

With p = 0 and no forcing this is the y'' + mu^2 y = 0 example; first-derivative
terms and polynomial forcing are extensions on top of that case.  For interior
alpha a non-constant forcing is replaced by its blended approximation (e.g.
x**2 becomes x**2 + 1/4 on [0, 1] at alpha = 1/2), so the solver then answers a
shifted problem.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import SingularSystemError
from .transform import (
    AlphaParam,
    AlphaSeries,
    Endpoint,
    Interval,
    RationalLike,
    alpha_combine,
    as_alpha,
    as_rational,
    boundary_weights,
    evaluate,
    polynomial_jet,
)


@dataclass(frozen=True)
class LinearOde2:
    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)
    forcing: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "p", as_rational(self.p))
        object.__setattr__(self, "q", as_rational(self.q))
        object.__setattr__(self, "forcing", tuple(as_rational(c) for c in self.forcing))


@dataclass(frozen=True)
class BoundaryCondition:
    """``c1 * y(endpoint) + c2 * y'(endpoint) = rhs``."""

    endpoint: Endpoint
    c1: Fraction
    c2: Fraction = Fraction(0)
    rhs: Fraction = Fraction(0)

    def __post_init__(self):
        if self.endpoint not in ("left", "right"):
            raise ValueError(f"endpoint must be 'left' or 'right', got {self.endpoint!r}")
        for name in ("c1", "c2", "rhs"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.c1 == 0 and self.c2 == 0:
            raise ValueError("boundary condition has c1 = c2 = 0")

    def weights(self, alpha, interval: Interval, order: int) -> tuple[Fraction, ...]:
        return boundary_weights(alpha, interval, order, self.endpoint, self.c1, self.c2)


@dataclass(frozen=True)
class UnknownLinearSeq:
    """Coefficients c[k] = A*u[k] + B*v[k] + w[k]."""

    u: tuple[Fraction, ...]
    v: tuple[Fraction, ...]
    w: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.u) - 1

    def resolve(self, A: Fraction, B: Fraction) -> tuple[Fraction, ...]:
        return tuple(A * uk + B * vk + wk for uk, vk, wk in zip(self.u, self.v, self.w))


@dataclass(frozen=True)
class BvpSolution:
    series: AlphaSeries
    A: Fraction
    B: Fraction
    boundary_residuals: tuple[Fraction, Fraction]
    ode: LinearOde2
    bcs: tuple[BoundaryCondition, BoundaryCondition]
    interval: Interval
    order: int

    @property
    def alpha(self) -> AlphaParam:
        return self.series.alpha

    def __call__(self, x):
        return evaluate(self.series, x)


def forcing_transform(ode: LinearOde2, alpha, interval: Interval, order: int) -> tuple[Fraction, ...]:
    """Blended transform F(k) of the forcing polynomial, k = 0..order."""
    if not ode.forcing:
        return (Fraction(0),) * (order + 1)
    if len(ode.forcing) > order + 1:
        raise ValueError(
            f"forcing has degree {len(ode.forcing) - 1}, above truncation order {order}"
        )
    return alpha_combine(polynomial_jet(ode.forcing, interval, order), alpha).coeffs


def propagate_recurrence(ode: LinearOde2, alpha, interval: Interval, order: int) -> UnknownLinearSeq:
    if order < 1:
        raise ValueError(f"order must be at least 1 to hold both seeds, got {order}")
    F = forcing_transform(ode, alpha, interval, order)
    p, q = ode.p, ode.q
    u = [Fraction(1), Fraction(0)]
    v = [Fraction(0), Fraction(1)]
    w = [Fraction(0), Fraction(0)]
    for k in range(order - 1):
        d = (k + 1) * (k + 2)
        u.append((-p * (k + 1) * u[k + 1] - q * u[k]) / d)
        v.append((-p * (k + 1) * v[k + 1] - q * v[k]) / d)
        w.append((F[k] - p * (k + 1) * w[k + 1] - q * w[k]) / d)
    return UnknownLinearSeq(tuple(u), tuple(v), tuple(w))


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def assemble_system(
    seq: UnknownLinearSeq,
    bc1: BoundaryCondition,
    bc2: BoundaryCondition,
    alpha,
    interval: Interval,
):
    """Return ``(M, r)`` with M @ (A, B) = r encoding both boundary conditions."""
    M, r = [], []
    for bc in (bc1, bc2):
        wts = bc.weights(alpha, interval, seq.order)
        M.append((_dot(wts, seq.u), _dot(wts, seq.v)))
        r.append(bc.rhs - _dot(wts, seq.w))
    return (M[0], M[1]), (r[0], r[1])


def _solve2(M, r) -> tuple[Fraction, Fraction]:
    (m00, m01), (m10, m11) = M
    det = m00 * m11 - m01 * m10
    if det == 0:
        raise SingularSystemError(
            "boundary system is singular (parameter at an eigenvalue of the "
            "homogeneous problem, or a degenerate truncation)"
        )
    return (r[0] * m11 - m01 * r[1]) / det, (m00 * r[1] - m10 * r[0]) / det


def boundary_functional(bc: BoundaryCondition, series: AlphaSeries, interval: Interval):
    """``c1*y + c2*y'`` at the condition's endpoint, through the weights."""
    wts = bc.weights(series.alpha, interval, series.order)
    return sum((wk * ck for wk, ck in zip(wts, series.coeffs)), 0 * series.coeffs[0])


def solve_bvp(
    ode: LinearOde2,
    bc1: BoundaryCondition,
    bc2: BoundaryCondition,
    alpha: AlphaParam | RationalLike,
    interval: Interval,
    order: int,
) -> BvpSolution:
    alpha = as_alpha(alpha)
    seq = propagate_recurrence(ode, alpha, interval, order)
    M, r = assemble_system(seq, bc1, bc2, alpha, interval)
    A, B = _solve2(M, r)
    series = AlphaSeries(alpha, alpha.center(interval), seq.resolve(A, B))
    residuals = tuple(
        boundary_functional(bc, series, interval) - bc.rhs for bc in (bc1, bc2)
    )
    return BvpSolution(series, A, B, residuals, ode, (bc1, bc2), interval, order)


@dataclass
class ErrorReport:
    x: list[float]
    approx: list[float]
    exact: list[float]
    abs_err: list[float]
    sup_norm: float = field(init=False)

    def __post_init__(self):
        self.sup_norm = max(self.abs_err)


def sample_grid(interval: Interval, samples: int) -> list[Fraction]:
    """``samples`` equispaced rational points on [a, b], endpoints included."""
    if samples < 2:
        raise ValueError("need at least two samples")
    h = interval.length / (samples - 1)
    return [interval.a + i * h for i in range(samples)]


def error_report(sol: BvpSolution, oracle: Callable[[float], float], samples: int = 101) -> ErrorReport:
    # The series is evaluated exactly at rational grid points, then rounded once.
    xs = sample_grid(sol.interval, samples)
    approx = [float(sol(x)) for x in xs]
    xf = [float(x) for x in xs]
    exact = [float(oracle(x)) for x in xf]
    errs = [abs(y - e) for y, e in zip(approx, exact)]
    return ErrorReport(xf, approx, exact, errs)

