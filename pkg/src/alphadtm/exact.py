"""Closed-form reference solutions on [0, 1].

These are the independent checks for the series solvers and share no code
path with them: the transcendental characteristic function is written in its
sin/cos form (continuous everywhere, unlike tan mu = ...), and its roots are
refined with scipy's Brent solver.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .eig import Root, RootReport
from .errors import NotAnEigenvalueError, ResonanceError


def dirichlet_solution(mu: float, x: float) -> float:
    """sin(mu x) / sin(mu): solves y'' + mu^2 y = 0, y(0) = 0, y(1) = 1."""
    s = math.sin(mu)
    if abs(s) <= 1e-12:
        raise ResonanceError(f"sin({mu}) vanishes; mu^2 is a Dirichlet eigenvalue")
    return math.sin(mu * x) / s


@dataclass(frozen=True)
class ExactCharFn:
    A11: float
    A12: float
    A21: float
    A22: float

    def __post_init__(self):
        for name in ("A11", "A12", "A21", "A22"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if self.A11 == 0 and self.A12 == 0:
            raise ValueError("left boundary row (A11, A12) is zero")
        if self.A21 == 0 and self.A22 == 0:
            raise ValueError("right boundary row (A21, A22) is zero")

    def __call__(self, mu: float) -> float:
        return char_value(self, mu)


ROBIN = ExactCharFn(1, 1, 1, -1)
DIRICHLET = ExactCharFn(1, 0, 1, 0)


def char_value(f: ExactCharFn, mu: float) -> float:
    return (f.A11 * f.A21 + mu * mu * f.A12 * f.A22) * math.sin(mu) - mu * (
        f.A12 * f.A21 - f.A11 * f.A22
    ) * math.cos(mu)


def boundary_matrix(f: ExactCharFn, mu: float) -> np.ndarray:
    """Rows of the boundary conditions applied to C cos(mu x) + D sin(mu x)."""
    c, s = math.cos(mu), math.sin(mu)
    return np.array(
        [
            [f.A11, mu * f.A12],
            [f.A21 * c - mu * f.A22 * s, f.A21 * s + mu * f.A22 * c],
        ]
    )


def exact_eigenvalues(
    f: ExactCharFn,
    mu_lo: float,
    mu_hi: float,
    scan_steps: int = 10_000,
    tol: float = 1e-12,
) -> RootReport:
    """Positive roots mu_n of the characteristic function, with lam = mu_n^2."""
    if not 0 < mu_lo < mu_hi:
        raise ValueError(f"need 0 < mu_lo < mu_hi, got ({mu_lo}, {mu_hi})")
    grid = np.linspace(mu_lo, mu_hi, scan_steps + 1)
    vals = np.array([char_value(f, m) for m in grid])
    roots = []
    for i in range(scan_steps):
        f0, f1 = vals[i], vals[i + 1]
        if f0 == 0:
            mu = float(grid[i])
            roots.append(Root(float(grid[max(i - 1, 0)]), float(grid[i + 1]), mu, 0.0, mu * mu))
        elif f0 * f1 < 0:
            mu = brentq(f, grid[i], grid[i + 1], xtol=tol, rtol=4 * np.finfo(float).eps)
            roots.append(Root(float(grid[i]), float(grid[i + 1]), mu, abs(char_value(f, mu)), mu * mu))
    return RootReport(tuple(roots), float(mu_lo), float(mu_hi), scan_steps, tol)


def exact_eigenfunction(f: ExactCharFn, mu: float, x: float, tol: float = 1e-8) -> float:
    """C cos(mu x) + D sin(mu x) with (C, D) a unit nullvector of the boundary system."""
    scale = 1.0 + abs(mu) ** 2 * max(abs(f.A12), abs(f.A22), 1.0)
    if abs(char_value(f, mu)) > tol * scale:
        raise NotAnEigenvalueError(f"mu = {mu} is not a root of the characteristic function")
    C, D = _unit_nullvector(boundary_matrix(f, mu))
    return C * math.cos(mu * x) + D * math.sin(mu * x)


def _unit_nullvector(M: np.ndarray) -> tuple[float, float]:
    row = M[0] if np.max(np.abs(M[0])) >= np.max(np.abs(M[1])) else M[1]
    v = np.array([row[1], -row[0]])
    return tuple(v / np.linalg.norm(v))
