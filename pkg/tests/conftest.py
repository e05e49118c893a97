from fractions import Fraction
from math import factorial

import hypothesis
import pytest

hypothesis.settings.register_profile("fast", max_examples=20)
hypothesis.settings.register_profile("thorough", max_examples=500)

# First root of (1 - mu^2) sin mu - 2 mu cos mu, from a 40-digit mpmath solve.
ROBIN_MU1 = 2.33112237041442261
ROBIN_LAMBDA1 = 5.43413150584655655
ROBIN_LAMBDA2 = 35.4045544859867847

PAPER_POLY = (
    Fraction(-1),
    Fraction(-1, 6),
    Fraction(11, 120),
    Fraction(-89, 15360),
    Fraction(299, 2211840),
    Fraction(-11, 9830400),
)


def poly_derivative(coeffs):
    return [k * c for k, c in enumerate(coeffs)][1:]


def poly_value(coeffs, x):
    return sum((c * x**k for k, c in enumerate(coeffs)), Fraction(0))


def brute_taylor(coeffs, x0, order):
    """f^(k)(x0)/k! by repeated differentiation of a monomial-basis polynomial."""
    out = []
    cur = [Fraction(c) for c in coeffs]
    for k in range(order + 1):
        out.append(poly_value(cur, Fraction(x0)) / factorial(k) if cur else Fraction(0))
        cur = poly_derivative(cur)
    return tuple(out)


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    def report(name, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
