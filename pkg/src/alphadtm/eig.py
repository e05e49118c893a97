"""Sturm-Liouville problem  y'' + lam*y = 0  with separated two-point conditions

    A11 y(a) + A12 y'(a) = 0,    A21 y(b) + A22 y'(b) = 0.

The recurrence D(k+2) = -lam D(k) / ((k+1)(k+2)) splits the coefficients by
parity into multiples of the seeds A = D(0) and B = D(1).  Substituting into the
two boundary functionals gives a 2x2 matrix whose entries are polynomials in
lam once the series is cut at k <= N; its determinant is the truncated
characteristic polynomial.  Eigenvalue estimates are its real roots.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Optional, Sequence

from .errors import DegenerateRootError
from .poly import LambdaPoly
from .transform import (
    UNIT,
    AlphaParam,
    AlphaSeries,
    Interval,
    RationalLike,
    as_alpha,
    as_rational,
    boundary_weights,
)

DEFAULT_SCAN_STEPS = 10_000
DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class EigProblem:
    A11: Fraction
    A12: Fraction
    A21: Fraction
    A22: Fraction
    alpha: AlphaParam
    order: int
    interval: Interval = UNIT

    def __post_init__(self):
        for name in ("A11", "A12", "A21", "A22"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        object.__setattr__(self, "alpha", as_alpha(self.alpha))
        if self.A11 == 0 and self.A12 == 0:
            raise ValueError("left boundary row (A11, A12) is zero")
        if self.A21 == 0 and self.A22 == 0:
            raise ValueError("right boundary row (A21, A22) is zero")
        if self.order < 1:
            raise ValueError(f"order must be at least 1, got {self.order}")

    @property
    def matrix(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.A11, self.A12, self.A21, self.A22


@dataclass(frozen=True)
class Root:
    lo: float
    hi: float
    value: float
    residual: float
    lam: Optional[float] = None

    @property
    def negative(self) -> bool:
        return (self.lam if self.lam is not None else self.value) < 0


@dataclass(frozen=True)
class RootReport:
    roots: tuple[Root, ...]
    lo: float
    hi: float
    scan_steps: int
    tol: float

    @property
    def values(self) -> list[float]:
        return [r.value for r in self.roots]

    def __len__(self):
        return len(self.roots)


@dataclass(frozen=True)
class EigenPair:
    lambda_hat: float
    nullvector: tuple[float, float]
    eigenfunction: AlphaSeries
    root: Root

    @property
    def negative(self) -> bool:
        return self.lambda_hat < 0


def parity_sequences(alpha, order: int) -> tuple[list[LambdaPoly], list[LambdaPoly]]:
    """Multipliers u_k(lam), v_k(lam) of A and B in D(y, alpha; k).

    alpha does not enter the recurrence; it is accepted to keep the call
    shape uniform with the other builders.
    """
    as_alpha(alpha)
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    zero = LambdaPoly()
    u, v = [], []
    for k in range(order + 1):
        ell = k // 2
        term = LambdaPoly.monomial(ell, Fraction((-1) ** ell, factorial(k)))
        if k % 2 == 0:
            u.append(term)
            v.append(zero)
        else:
            u.append(zero)
            v.append(term)
    return u, v


def _weighted_sum(weights: Sequence[Fraction], seq: Sequence[LambdaPoly]) -> LambdaPoly:
    total = LambdaPoly()
    for w, p in zip(weights, seq):
        if w and not p.is_zero():
            total = total + w * p
    return total


def characteristic_entries(problem: EigProblem) -> tuple[LambdaPoly, LambdaPoly, LambdaPoly, LambdaPoly]:
    """(P11, P12, P21, P22), keeping every coefficient index k <= N."""
    N, alpha, iv = problem.order, problem.alpha, problem.interval
    u, v = parity_sequences(alpha, N)
    wl = boundary_weights(alpha, iv, N, "left", problem.A11, problem.A12)
    wr = boundary_weights(alpha, iv, N, "right", problem.A21, problem.A22)
    return (
        _weighted_sum(wl, u),
        _weighted_sum(wl, v),
        _weighted_sum(wr, u),
        _weighted_sum(wr, v),
    )


def characteristic_det(entries) -> LambdaPoly:
    P11, P12, P21, P22 = entries
    return P11 * P22 - P12 * P21


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def _bisect(f: Callable[[float], float], lo: float, hi: float, flo: float, tol: float) -> float:
    s_lo = _sign(flo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if _sign(fm) == s_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def scan_and_bisect(f: Callable[[float], float], lo: float, hi: float, scan_steps: int, tol: float) -> list[Root]:
    """Sign-change scan on a uniform grid, each bracket refined by bisection.

    A grid point where ``f`` is exactly zero counts as a root when its
    neighbours straddle it.  Roots of even multiplicity are not seen.
    """
    if not lo < hi:
        raise ValueError(f"scan needs lo < hi, got [{lo}, {hi}]")
    if scan_steps < 2:
        raise ValueError("scan_steps must be at least 2")
    if tol <= 0:
        raise ValueError("tol must be positive")
    xs = [lo + (hi - lo) * i / scan_steps for i in range(scan_steps + 1)]
    fs = [f(x) for x in xs]
    roots = []
    i = 0
    while i < scan_steps:
        x0, x1, f0, f1 = xs[i], xs[i + 1], fs[i], fs[i + 1]
        if f0 == 0:
            left = fs[i - 1] if i > 0 else None
            if left is None or _sign(left) != _sign(f1):
                roots.append(Root(xs[max(i - 1, 0)], x1, x0, 0.0))
                i += 1
                continue
        if f0 != 0 and f1 != 0 and _sign(f0) != _sign(f1):
            r = _bisect(f, x0, x1, f0, tol)
            roots.append(Root(x0, x1, r, abs(f(r))))
        i += 1
    if fs[-1] == 0 and _sign(fs[-2]) != 0:
        roots.append(Root(xs[-2], xs[-1], xs[-1], 0.0))
    return roots


def find_real_roots(
    p: LambdaPoly,
    lo: float,
    hi: float,
    scan_steps: int = DEFAULT_SCAN_STEPS,
    tol: float = DEFAULT_TOL,
) -> RootReport:
    lo, hi = float(lo), float(hi)
    if p.degree < 1:
        if not lo < hi:
            raise ValueError(f"scan needs lo < hi, got [{lo}, {hi}]")
        return RootReport((), lo, hi, scan_steps, tol)
    cs = p.to_floats()

    def f(x: float) -> float:
        acc = 0.0
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    roots = scan_and_bisect(f, lo, hi, scan_steps, tol)
    return RootReport(tuple(roots), lo, hi, scan_steps, tol)


def nullvector(row1: tuple[float, float], row2: tuple[float, float]) -> tuple[float, float]:
    """(A, B) annihilating the row of larger max-norm, scaled to |A|+|B| = 1."""
    n1 = max(abs(row1[0]), abs(row1[1]))
    n2 = max(abs(row2[0]), abs(row2[1]))
    p, q = row1 if n1 >= n2 else row2
    scale = abs(p) + abs(q)
    if scale == 0 or not math.isfinite(scale):
        raise DegenerateRootError("both rows of the characteristic matrix vanish")
    return q / scale, -p / scale


def eigenfunction_series(problem: EigProblem, lam: float, A: float, B: float) -> AlphaSeries:
    u, v = parity_sequences(problem.alpha, problem.order)
    coeffs = tuple(A * uk(lam) + B * vk(lam) for uk, vk in zip(u, v))
    return AlphaSeries(problem.alpha, problem.alpha.center(problem.interval), coeffs)


def solve_eig(
    problem: EigProblem,
    lambda_range: tuple[float, float],
    num_roots: Optional[int] = None,
    tol: float = DEFAULT_TOL,
    scan_steps: int = DEFAULT_SCAN_STEPS,
) -> list[EigenPair]:
    """Approximate eigenpairs for the roots found in ``lambda_range``.

    Roots come back in ascending order; negative ones are kept (see
    :attr:`EigenPair.negative`).  ``num_roots=None`` returns all of them.
    """
    entries = characteristic_entries(problem)
    det = characteristic_det(entries)
    report = find_real_roots(det, lambda_range[0], lambda_range[1], scan_steps, tol)
    roots = report.roots if num_roots is None else report.roots[:num_roots]
    P11, P12, P21, P22 = entries
    pairs = []
    for root in roots:
        lam = root.value
        A, B = nullvector((P11(lam), P12(lam)), (P21(lam), P22(lam)))
        pairs.append(EigenPair(lam, (A, B), eigenfunction_series(problem, lam, A, B), root))
    return pairs


def matrix_residual(entries, lam: float, vec: tuple[float, float]) -> float:
    """Max-norm of the characteristic matrix at ``lam`` applied to ``vec``."""
    P11, P12, P21, P22 = (p(float(lam)) for p in entries)
    A, B = vec
    return max(abs(P11 * A + P12 * B), abs(P21 * A + P22 * B))
