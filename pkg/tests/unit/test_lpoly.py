"""Tests for l-polynomials, fractional index, B polynomials and classical links."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from dtbesselumbral.exceptions import DivergenceError, DomainError, InputValidationError
from dtbesselumbral.lpoly import (
    HomogIndex,
    LPolySpec,
    b_poly,
    b_poly_nu,
    convergence_ratio,
    jacobi_poly,
    l_frac,
    l_homog,
    l_poly,
    l_poly_in_variable,
    l_poly_nu,
    l_table,
    laguerre2,
    laguerre_derivative,
    normalized_l_terms,
)
from dtbesselumbral.models import Provenance
from dtbesselumbral.scalarkit import elliptic_2f1_half


class TestLPolySpec:
    """Tests for the parameter records."""

    def test_length_mismatch_raises(self) -> None:
        """Orders and arguments must pair up."""
        with pytest.raises(DomainError):
            LPolySpec(orders=(0, 0), args=(1,))

    def test_empty_raises(self) -> None:
        """At least one factor is needed."""
        with pytest.raises(DomainError):
            LPolySpec(orders=(), args=())

    def test_plain_has_zero_orders(self) -> None:
        """LPolySpec.plain sets every order to zero."""
        spec = LPolySpec.plain([1, 2, 3])
        assert spec.orders == (Fraction(0),) * 3
        assert spec.args == (Fraction(1), Fraction(2), Fraction(3))

    def test_homog_index_raise(self) -> None:
        """raised(j) lifts one order by one."""
        idx = HomogIndex.uniform(0, 3).raised(1)
        assert idx.nu_vector == (Fraction(0), Fraction(1), Fraction(0))
        assert idx.k == 3

    def test_homog_index_raise_out_of_range(self) -> None:
        """Raising a missing factor is rejected."""
        with pytest.raises(InputValidationError):
            HomogIndex.uniform(0, 2).raised(2)

    def test_homog_spec_has_unit_args(self) -> None:
        """The homogeneous spec evaluates at unit arguments."""
        assert HomogIndex.uniform(Fraction(1, 2), 2).spec().args == (Fraction(1), Fraction(1))


class TestLPoly:
    """Tests for l_poly, l_poly_nu and l_homog."""

    def test_first_order_is_sum(self) -> None:
        """l_1(3, 1) = 3 + 1."""
        assert l_poly(1, (3, 1)).value == Fraction(4)

    @pytest.mark.parametrize(
        ("r", "args", "expected"),
        [
            (2, (4, 1), Fraction(33, 2)),
            (3, (1, 1), Fraction(10, 3)),
            (2, (1, 1, 1), Fraction(15, 2)),
            (0, (5, 7), Fraction(1)),
        ],
    )
    def test_known_values(self, r: int, args: tuple[int, ...], expected: Fraction) -> None:
        """Hand-expanded values of the plain l-polynomial."""
        value = l_poly(r, args).value
        assert value == expected
        assert isinstance(value, Fraction)

    def test_central_binomial(self) -> None:
        """l_r(1,1) = C(2r,r)/r!."""
        for r in range(12):
            assert l_poly(r, (1, 1)).value == Fraction(math.comb(2 * r, r), math.factorial(r))

    def test_methods_agree(self) -> None:
        """Closed form and variable peeling give identical rationals."""
        args = (Fraction(1, 2), Fraction(2), Fraction(3))
        for r in range(10):
            assert l_poly(r, args).value == l_poly(r, args, method="recursion").value

    def test_provenance(self) -> None:
        """The LValue records how it was computed."""
        assert l_poly(2, (1, 1)).provenance is Provenance.CLOSED_FORM
        assert l_poly(2, (1, 1), method="recursion").provenance is Provenance.RECURSION

    def test_unknown_method_raises(self) -> None:
        """Only the two methods are accepted."""
        with pytest.raises(InputValidationError):
            l_poly(2, (1, 1), method="series")

    def test_negative_index_raises(self) -> None:
        """r must be nonnegative."""
        with pytest.raises(InputValidationError):
            l_poly(-1, (1, 1))

    def test_nu_indexed(self) -> None:
        """l_1^(1,0)(1,1) = 1/2 + 1."""
        assert l_poly_nu(1, LPolySpec(orders=(1, 0), args=(1, 1))).value == Fraction(3, 2)

    def test_half_integer_order_is_float(self) -> None:
        """Non-integral orders fall back to floats."""
        value = l_poly_nu(1, LPolySpec(orders=(Fraction(1, 2),), args=(1,))).value
        assert isinstance(value, float)
        # 1 / Gamma(5/2)
        assert value == pytest.approx(4.0 / (3.0 * math.sqrt(math.pi)))

    @pytest.mark.parametrize(("k", "expected"), [(2, Fraction(3)), (3, Fraction(15, 2))])
    def test_homogeneous(self, k: int, expected: Fraction) -> None:
        """l_2^{0}(k) at k unit arguments."""
        assert l_homog(2, HomogIndex.uniform(0, k)).value == expected

    def test_table_matches_pointwise(self) -> None:
        """l_table returns l_0..l_r in order."""
        spec = LPolySpec.plain((2, 3))
        assert l_table(5, spec) == [l_poly(r, (2, 3)).value for r in range(6)]

    def test_homogeneity(self) -> None:
        """l_r(c x) = c^r l_r(x)."""
        args = (Fraction(1), Fraction(2))
        for r in range(7):
            assert l_poly(r, (3, 6)).value == 3**r * l_poly(r, args).value


class TestLaguerreLowering:
    """Tests for l_poly_in_variable and laguerre_derivative."""

    def test_polynomial_in_first_variable(self) -> None:
        """l_1(x, 3) = 3 + x."""
        assert l_poly_in_variable(1, (0, 3), 0) == [Fraction(3), Fraction(1)]

    def test_coefficients_reproduce_value(self) -> None:
        """Evaluating the coefficient list at the variable gives l_r."""
        coeffs = l_poly_in_variable(4, (Fraction(5), Fraction(2)), 0)
        value = sum(c * Fraction(5) ** j for j, c in enumerate(coeffs))
        assert value == l_poly(4, (5, 2)).value

    def test_lowers_index(self) -> None:
        """d/dx x d/dx l_2(x, 3) = 2 l_1(x, 3)."""
        lowered = laguerre_derivative(l_poly_in_variable(2, (0, 3), 0))
        assert lowered == [2 * c for c in l_poly_in_variable(1, (0, 3), 0)]

    def test_constant_maps_to_zero(self) -> None:
        """A constant is annihilated."""
        assert laguerre_derivative([Fraction(7)]) == [Fraction(0)]

    def test_single_variable(self) -> None:
        """l_r(x) alone is x^r / r!."""
        assert l_poly_in_variable(3, (0,), 0) == [0, 0, 0, Fraction(1, 6)]


class TestFractionalIndex:
    """Tests for normalized_l_terms, convergence_ratio and l_frac."""

    def test_terms_without_ratios(self) -> None:
        """No sub-dominant arguments: 1, 0, 0, ..."""
        terms = normalized_l_terms([])
        assert [next(terms) for _ in range(4)] == [1.0, 0.0, 0.0, 0.0]

    def test_terms_two_unit_ratios(self) -> None:
        """e_s(1, 1) = C(2s, s)."""
        terms = normalized_l_terms([1.0, 1.0])
        assert [next(terms) for _ in range(6)] == pytest.approx([1, 2, 6, 20, 70, 252])

    def test_convergence_ratio(self) -> None:
        """rho = (1 + 2)^2 / 9 for squared scales (1, 4, 9)."""
        assert convergence_ratio([1.0, 4.0, 9.0]) == pytest.approx(1.0)
        assert convergence_ratio([1.0, 1.0, 9.0]) == pytest.approx(4.0 / 9.0)

    def test_elliptic_form(self) -> None:
        """l_{-1/2}(1, 4) = 2F1(1/2,1/2;1;1/4) / (2 sqrt(pi))."""
        expected = elliptic_2f1_half(0.25) / (2.0 * math.sqrt(math.pi))
        assert l_frac(Fraction(-1, 2), (1, 4)).value == pytest.approx(expected, rel=1e-13)
        assert expected == pytest.approx(0.30274, rel=1e-4)

    def test_single_argument(self) -> None:
        """l_{-1/2}(x) = 1 / sqrt(pi x)."""
        assert l_frac(Fraction(-1, 2), (4,)).value == pytest.approx(1.0 / math.sqrt(4.0 * math.pi))

    def test_terminating_index(self) -> None:
        """A nonnegative integral index reproduces l_poly."""
        assert l_frac(3, (1, 2, 3)).value == pytest.approx(float(l_poly(3, (1, 2, 3)).value), rel=1e-12)

    def test_terminating_index_skips_ratio_check(self) -> None:
        """rho >= 1 is harmless when the series terminates."""
        assert l_frac(2, (4, 1)).value == pytest.approx(16.5, rel=1e-12)

    def test_divergent(self) -> None:
        """rho >= 1 is rejected with the ratio reported."""
        with pytest.raises(DivergenceError) as exc_info:
            l_frac(Fraction(-1, 2), (1, 4, 9))
        assert exc_info.value.rho == pytest.approx(1.0)

    def test_negative_integer_index_raises(self) -> None:
        """l_{-1} is undefined."""
        with pytest.raises(DomainError):
            l_frac(-1, (1, 4))

    def test_nonpositive_argument_raises(self) -> None:
        """Arguments must be positive."""
        with pytest.raises(InputValidationError):
            l_frac(Fraction(-1, 2), (0, 4))


class TestBPolynomials:
    """Tests for b_poly and b_poly_nu."""

    def test_central_binomial(self) -> None:
        """B_r(2) = C(2r, r)."""
        for r in range(21):
            assert b_poly(r, 2) == math.comb(2 * r, r)

    def test_small_values(self) -> None:
        """B_1(3) = 3, B_2(3) = 15, B_n(1) = 1, B_n(0) = delta."""
        assert b_poly(1, 3) == 3
        assert b_poly(2, 3) == 15
        assert all(b_poly(n, 1) == 1 for n in range(6))
        assert b_poly(0, 0) == 1 and b_poly(3, 0) == 0

    @pytest.mark.parametrize(("k", "expected"), [(2, 6), (3, 15)])
    def test_nu_zero(self, k: int, expected: int) -> None:
        """B_2^(0)(k) matches B_2(k)."""
        assert b_poly_nu(2, 0, k) == expected

    def test_nu_zero_agrees_with_b_poly(self) -> None:
        """B_r^(0)(k) = B_r(k) over a grid."""
        for k in range(1, 5):
            for r in range(9):
                assert b_poly_nu(r, 0, k) == b_poly(r, k)

    def test_order_at_or_below_minus_one_raises(self) -> None:
        """nu must exceed -1."""
        with pytest.raises(InputValidationError):
            b_poly_nu(2, -1, 2)


class TestClassicalPolynomials:
    """Tests for jacobi_poly and laguerre2."""

    def test_legendre(self) -> None:
        """P_2(1/2) = -1/8 and P_1(x) = x."""
        assert jacobi_poly(2, 0, 0, Fraction(1, 2)) == Fraction(-1, 8)
        assert jacobi_poly(1, 0, 0, Fraction(3, 7)) == Fraction(3, 7)

    def test_value_at_one(self) -> None:
        """P_n^(alpha,beta)(1) = C(n + alpha, n)."""
        assert jacobi_poly(3, 2, 5, 1) == 10

    def test_real_parameters(self) -> None:
        """Real alpha falls back to floats: P_1^(a,0)(1) = a + 1."""
        assert jacobi_poly(1, 0.5, 0, 1) == pytest.approx(1.5)

    def test_jacobi_link(self) -> None:
        """r! l_r((x-1)/2, (x+1)/2) = P_r(x)."""
        x = Fraction(2, 3)
        for r in range(8):
            args = ((x - 1) / 2, (x + 1) / 2)
            assert math.factorial(r) * l_poly(r, args).value == jacobi_poly(r, 0, 0, x)

    def test_laguerre2(self) -> None:
        """L_1(x, y) = y - x and L_2(1, 1) = -1/2."""
        assert laguerre2(1, Fraction(2), Fraction(5)) == 3
        assert laguerre2(2, 1, 1) == Fraction(-1, 2)
