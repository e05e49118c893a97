from fractions import Fraction as F
from math import comb

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from alphadtm.errors import InsufficientOrderError, ShapeMismatchError
from alphadtm.transform import (
    UNIT,
    AlphaParam,
    AlphaSeries,
    EndpointJet,
    Interval,
    alpha_combine,
    as_rational,
    boundary_weights,
    constant_jet,
    evaluate,
    evaluate_derivative,
    jet_add,
    jet_differentiate,
    jet_multiply,
    jet_scale,
    monomial_jet,
    polynomial_jet,
    zero_jet,
)

from conftest import brute_taylor, poly_derivative, poly_value

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
alphas = st.fractions(min_value=0, max_value=1, max_denominator=16)
polys = st.lists(rationals, min_size=1, max_size=9)


@st.composite
def intervals(draw):
    a = draw(st.fractions(min_value=-3, max_value=3, max_denominator=8))
    width = draw(st.fractions(min_value=F(1, 8), max_value=4, max_denominator=8))
    return Interval(a, a + width)


def test_as_rational_forms():
    assert as_rational("0.5") == as_rational("1/2") == F(1, 2)
    assert as_rational(0.1) == F(1, 10)
    assert as_rational("1e-3") == F(1, 1000)
    with pytest.raises(ValueError):
        as_rational("nan")
    with pytest.raises(TypeError):
        as_rational(True)


def test_interval_and_alpha_validation():
    with pytest.raises(ValueError):
        Interval(1, 1)
    with pytest.raises(ValueError):
        AlphaParam(F(3, 2))
    assert AlphaParam("1/4").center(Interval(2, 6)) == F(1, 4) * 2 + F(3, 4) * 6


class TestMonomialJet:
    def test_square_on_unit(self):
        j = monomial_jet(2, UNIT, 3)
        assert j.coeffs_a == (0, 0, 1, 0)
        assert j.coeffs_b == (1, 2, 1, 0)

    def test_constant(self):
        j = monomial_jet(0, Interval(-2, 5), 2)
        assert j.coeffs_a == j.coeffs_b == (1, 0, 0)

    def test_linear_combined_at_half(self):
        s = alpha_combine(monomial_jet(1, UNIT, 1), F(1, 2))
        assert s.coeffs == (F(1, 2), 1)

    @given(st.integers(0, 10), intervals(), alphas, st.integers(0, 12))
    def test_matches_closed_form(self, m, iv, alpha, N):
        # C(m,k)(alpha a^(m-k) + (1-alpha) b^(m-k)) for k < m, 1 at k = m, 0 beyond
        s = alpha_combine(monomial_jet(m, iv, N), alpha)
        for k in range(N + 1):
            if k < m:
                want = comb(m, k) * (alpha * iv.a ** (m - k) + (1 - alpha) * iv.b ** (m - k))
                assert s.coeffs[k] == want
            elif k == m:
                assert s.coeffs[k] == 1
            else:
                assert s.coeffs[k] == 0


class TestArithmetic:
    def test_add(self):
        x, x2 = monomial_jet(1, UNIT, 2), monomial_jet(2, UNIT, 2)
        s = jet_add(x, x2)
        assert s.coeffs_a == (0, 1, 1)
        assert s.coeffs_b == (2, 3, 1)

    def test_add_zero_and_cancel(self):
        x2 = monomial_jet(2, UNIT, 2)
        assert jet_add(x2, zero_jet(UNIT, 2)) == x2
        assert jet_add(x2, jet_scale(-1, x2)) == zero_jet(UNIT, 2)

    def test_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            jet_add(monomial_jet(1, UNIT, 2), monomial_jet(1, UNIT, 3))
        with pytest.raises(ShapeMismatchError):
            jet_multiply(monomial_jet(1, UNIT, 2), monomial_jet(1, Interval(0, 2), 2))

    def test_scale(self):
        x = monomial_jet(1, UNIT, 1)
        assert jet_scale(0, x) == zero_jet(UNIT, 1)
        assert jet_scale(1, x) == x
        s = jet_scale(3, x)
        assert s.coeffs_a == (0, 3) and s.coeffs_b == (3, 3)

    def test_multiply(self):
        x = monomial_jet(1, UNIT, 2)
        sq = alpha_combine(jet_multiply(x, x), F(1, 2))
        assert sq.coeffs == (F(1, 2), 1, 1)
        assert sq.coeffs == alpha_combine(monomial_jet(2, UNIT, 2), F(1, 2)).coeffs
        assert jet_multiply(x, constant_jet(1, UNIT, 2)) == x
        cube = jet_multiply(x, monomial_jet(2, UNIT, 2))
        assert cube.coeffs_a == (0, 0, 0)
        assert cube.coeffs_b == (1, 3, 3)

    def test_differentiate(self):
        d = jet_differentiate(monomial_jet(2, UNIT, 2), 1)
        assert d.coeffs_a == (0, 2) and d.coeffs_b == (2, 2)
        d = jet_differentiate(monomial_jet(3, UNIT, 3), 2)
        assert d.coeffs_a == (0, 6) and d.coeffs_b == (6, 6)
        d = jet_differentiate(monomial_jet(4, Interval(1, 3), 4), 4)
        assert d.order == 0 and d.coeffs_a == d.coeffs_b == (24,)

    def test_differentiate_against_sympy(self):
        x = sp.symbols("x")
        d3 = sp.diff(x**3, x, 2)
        j = jet_differentiate(monomial_jet(3, UNIT, 3), 2)
        assert j.coeffs_a[0] == d3.subs(x, 0) and j.coeffs_b[0] == d3.subs(x, 1)
        assert j.coeffs_b[1] == sp.diff(d3, x).subs(x, 1)

    def test_differentiate_order_errors(self):
        with pytest.raises(InsufficientOrderError):
            jet_differentiate(monomial_jet(2, UNIT, 2), 3)
        with pytest.raises(ValueError):
            jet_differentiate(monomial_jet(2, UNIT, 2), 0)

    def test_jet_shape_validation(self):
        with pytest.raises(ShapeMismatchError):
            EndpointJet(UNIT, (1, 2), (1,))


class TestAlphaCombine:
    def test_endpoints(self):
        j = monomial_jet(2, Interval(-1, 2), 3)
        s1, s0 = alpha_combine(j, 1), alpha_combine(j, 0)
        assert s1.coeffs == j.coeffs_a and s1.center == -1
        assert s0.coeffs == j.coeffs_b and s0.center == 2

    def test_square_at_half(self):
        s = alpha_combine(monomial_jet(2, UNIT, 2), F(1, 2))
        assert s.coeffs == (F(1, 2), 1, 1)
        assert s.center == F(1, 2)


class TestEvaluate:
    def test_constant(self):
        s = AlphaSeries(AlphaParam(F(1, 3)), F(2, 3), (F(7), 0, 0))
        assert evaluate(s, F(-5)) == 7
        assert evaluate(s, 3.25) == 7.0

    def test_square_half_is_biased(self):
        s = alpha_combine(monomial_jet(2, UNIT, 2), F(1, 2))
        assert evaluate(s, F(1, 2)) == F(1, 2)

    def test_square_alpha_one(self):
        s = alpha_combine(monomial_jet(2, UNIT, 2), 1)
        assert evaluate(s, F(3, 4)) == F(9, 16)

    def test_derivative(self):
        const = AlphaSeries(AlphaParam(1), F(0), (F(4),))
        assert evaluate_derivative(const, F(3)) == 0
        s = alpha_combine(monomial_jet(2, UNIT, 2), 1)
        assert evaluate_derivative(s, F(1, 2)) == 1
        s = AlphaSeries(AlphaParam(F(1, 2)), F(1, 2), (F(0), F(1), F(1)))
        assert evaluate_derivative(s, F(0)) == 0

    def test_derivative_against_sympy(self):
        x = sp.symbols("x")
        coeffs = (F(3), F(-2), F(5, 7), F(1, 3))
        s = AlphaSeries(AlphaParam(F(1, 4)), F(3, 4), coeffs)
        expr = sum(sp.Rational(c.numerator, c.denominator) * (x - sp.Rational(3, 4)) ** k for k, c in enumerate(coeffs))
        at = sp.Rational(2, 5)
        want = sp.diff(expr, x).subs(x, at)
        assert evaluate_derivative(s, F(2, 5)) == F(int(want.p), int(want.q))


class TestBoundaryWeights:
    def test_left_value(self):
        assert boundary_weights(F(1, 2), UNIT, 2, "left", 1, 0) == (1, F(-1, 2), F(1, 4))

    def test_right_value(self):
        assert boundary_weights(F(1, 2), UNIT, 2, "right", 1, 0) == (1, F(1, 2), F(1, 4))

    def test_left_robin(self):
        assert boundary_weights(F(1, 2), UNIT, 2, "left", 1, 1) == (1, F(1, 2), F(-3, 4))

    def test_bad_endpoint(self):
        with pytest.raises(ValueError):
            boundary_weights(F(1, 2), UNIT, 2, "middle", 1, 0)

    @given(polys, intervals(), alphas, rationals, rationals, st.sampled_from(["left", "right"]))
    def test_weights_reproduce_functional(self, coeffs, iv, alpha, c1, c2, endpoint):
        # For alpha in {0, 1} the series is exact, so the weights must give c1 f + c2 f' at the endpoint.
        alpha = F(round(alpha))
        N = len(coeffs) - 1
        s = alpha_combine(polynomial_jet(coeffs, iv, N), alpha)
        w = boundary_weights(alpha, iv, N, endpoint, c1, c2)
        e = iv.a if endpoint == "left" else iv.b
        want = c1 * poly_value(coeffs, e) + c2 * poly_value(poly_derivative(coeffs), e)
        assert sum(wk * ck for wk, ck in zip(w, s.coeffs)) == want


# Invariants over random polynomial jets.


@given(polys, polys, intervals(), alphas, rationals)
def test_linearity(p, q, iv, alpha, c):
    N = 8
    f, g = polynomial_jet(p, iv, N), polynomial_jet(q, iv, N)
    lhs = alpha_combine(jet_add(f, g), alpha).coeffs
    rhs = tuple(x + y for x, y in zip(alpha_combine(f, alpha).coeffs, alpha_combine(g, alpha).coeffs))
    assert lhs == rhs
    assert alpha_combine(jet_scale(c, f), alpha).coeffs == tuple(c * x for x in alpha_combine(f, alpha).coeffs)


@given(polys, intervals())
def test_endpoint_reduction(p, iv):
    f = polynomial_jet(p, iv, 8)
    assert alpha_combine(f, 1).coeffs == f.coeffs_a
    assert alpha_combine(f, 0).coeffs == f.coeffs_b


@given(polys, intervals())
def test_polynomial_jet_matches_brute_force(p, iv):
    f = polynomial_jet(p, iv, 10)
    assert f.coeffs_a == brute_taylor(p, iv.a, 10)
    assert f.coeffs_b == brute_taylor(p, iv.b, 10)


@pytest.mark.parametrize("i", range(13))
def test_monomial_product_consistency(i):
    iv = Interval(F(-1, 3), F(5, 2))
    N = 12
    for j in range(13 - i):
        prod = jet_multiply(monomial_jet(i, iv, N), monomial_jet(j, iv, N))
        assert prod == monomial_jet(i + j, iv, N)


@given(polys, intervals(), st.integers(1, 8))
def test_derivative_shift(p, iv, m):
    N = 8
    d = jet_differentiate(polynomial_jet(p, iv, N), m)
    dp = list(p)
    for _ in range(m):
        dp = poly_derivative(dp)
    assert d == polynomial_jet(dp, iv, N - m) if dp else d == zero_jet(iv, N - m)


@given(rationals, intervals(), alphas, st.integers(0, 8), rationals)
def test_constant_reproduction(c, iv, alpha, N, x):
    assert evaluate(alpha_combine(constant_jet(c, iv, N), alpha), x) == c


@given(polys, intervals(), st.sampled_from([0, 1]), st.lists(rationals, min_size=20, max_size=20))
def test_evaluation_consistency(p, iv, alpha, xs):
    s = alpha_combine(polynomial_jet(p, iv, 8), alpha)
    for x in xs:
        assert evaluate(s, x) == poly_value(p, x)


@given(rationals)
def test_interior_alpha_bias(x):
    s = alpha_combine(monomial_jet(2, UNIT, 2), F(1, 2))
    assert evaluate(s, x) - x * x == F(1, 4)
