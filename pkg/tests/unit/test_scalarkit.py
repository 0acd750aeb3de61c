"""Tests for the scalar kit: reciprocal gamma, binomials, AGM, acceleration, quadrature."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from scipy.special import ellipk, j0, rgamma

from dtbesselumbral.exceptions import DivergenceError, DomainError, NonConvergenceError
from dtbesselumbral.scalarkit import (
    agm,
    binomial,
    elliptic_2f1_half,
    elliptic_2f1_half_series,
    gamma_scalar,
    general_binomial,
    oscillatory_integral,
    recip_gamma,
    recip_gamma_scalar,
    wynn_epsilon,
)


class TestRecipGamma:
    """Tests for recip_gamma and its exact companion."""

    @pytest.mark.parametrize("n", [0, -1, -2, -7])
    def test_zero_at_poles(self, n: int) -> None:
        """1/Gamma vanishes exactly at the non-positive integers."""
        assert recip_gamma(n) == 0.0

    def test_integers_use_factorial(self) -> None:
        """recip_gamma(n + 1) * n! is one to rounding."""
        for n in range(20):
            assert recip_gamma(n + 1) * math.factorial(n) == pytest.approx(1.0, rel=1e-15)

    def test_half(self) -> None:
        """1/Gamma(1/2) = 1/sqrt(pi)."""
        assert recip_gamma(0.5) == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-14)

    @pytest.mark.parametrize("x", [-3.5, -1.25, -0.5, 0.1, 0.75, 1.5, 4.2, 17.3, 60.5])
    def test_matches_scipy(self, x: float) -> None:
        """Agrees with scipy.special.rgamma across the reflection boundary."""
        assert recip_gamma(x) == pytest.approx(rgamma(x), rel=1e-12)

    def test_large_argument_underflows_to_zero(self) -> None:
        """Beyond the float range 1/Gamma is reported as zero."""
        assert recip_gamma(200.5) == 0.0
        assert recip_gamma(150.5) == pytest.approx(rgamma(150.5), rel=1e-10)

    def test_non_finite_raises(self) -> None:
        """Infinite arguments are rejected."""
        with pytest.raises(DomainError):
            recip_gamma(math.inf)

    def test_scalar_exact_for_integers(self) -> None:
        """Integral rationals give exact Fractions."""
        assert recip_gamma_scalar(Fraction(5)) == Fraction(1, 24)
        assert recip_gamma_scalar(Fraction(-2)) == Fraction(0)

    def test_scalar_float_otherwise(self) -> None:
        """Non-integral rationals fall back to the float path."""
        value = recip_gamma_scalar(Fraction(1, 2))
        assert isinstance(value, float)
        assert value == pytest.approx(1.0 / math.sqrt(math.pi))

    @pytest.mark.parametrize("x", [0.49, 0.5, 0.51, 0.499999, 0.500001, -0.5, -1.5, -2.25, -7.9, 1e-8, -1e-8])
    def test_functional_equation_at_reflection_boundary(self, x: float) -> None:
        """1/Gamma(x) = x / Gamma(x + 1) on both sides of the reflection switch and at negative x."""
        assert recip_gamma(x) == pytest.approx(x * recip_gamma(x + 1.0), rel=1e-13, abs=0.0)

    def test_functional_equation_sweep(self) -> None:
        """1/Gamma(x) = x / Gamma(x + 1) across [-9.7, 30.3] in steps of 0.01."""
        worst = 0.0
        for k in range(4001):
            x = -9.7 + 0.01 * k
            lhs = recip_gamma(x)
            rhs = x * recip_gamma(x + 1.0)
            if lhs != 0.0:
                worst = max(worst, abs(lhs - rhs) / abs(lhs))
            else:
                assert rhs == 0.0
        assert worst <= 1e-13


class TestGammaScalar:
    """Tests for gamma_scalar."""

    def test_exact_factorial(self) -> None:
        """Gamma(5) = 24 exactly."""
        assert gamma_scalar(Fraction(5)) == Fraction(24)

    def test_float_argument(self) -> None:
        """Gamma(2.5) = 3 sqrt(pi) / 4."""
        assert gamma_scalar(2.5) == pytest.approx(0.75 * math.sqrt(math.pi), rel=1e-14)

    @pytest.mark.parametrize("x", [Fraction(0), Fraction(-3), -1.0])
    def test_poles_raise(self, x: Fraction | float) -> None:
        """Poles raise DomainError."""
        with pytest.raises(DomainError):
            gamma_scalar(x)


class TestBinomials:
    """Tests for binomial and general_binomial."""

    def test_binomial(self) -> None:
        """C(6,3) = 20."""
        assert binomial(6, 3) == Fraction(20)

    def test_binomial_k_above_n_raises(self) -> None:
        """k > n is outside the domain."""
        with pytest.raises(DomainError):
            binomial(2, 3)

    @pytest.mark.parametrize("r", range(31))
    def test_vandermonde_central_binomial(self, r: int) -> None:
        """sum_s C(r,s)^2 = C(2r,r), exactly."""
        assert sum(binomial(r, s) ** 2 for s in range(r + 1)) == binomial(2 * r, r)

    def test_general_binomial_rational_top(self) -> None:
        """C(1/2, 2) = (1/2)(-1/2)/2 = -1/8, exactly."""
        assert general_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)

    def test_general_binomial_matches_integer(self) -> None:
        """An integral top reproduces the ordinary binomial."""
        assert general_binomial(Fraction(7), 3) == Fraction(35)

    def test_general_binomial_float_top(self) -> None:
        """Real tops go through floats."""
        assert general_binomial(2.5, 2) == pytest.approx(2.5 * 1.5 / 2)


class TestEllipticForms:
    """Tests for agm and the 2F1(1/2,1/2;1;m) evaluators."""

    def test_agm_reference(self) -> None:
        """AGM(1, sqrt 2) = 1.19814023473559220744."""
        assert agm(1.0, math.sqrt(2.0)) == pytest.approx(1.1981402347355922, rel=1e-15)

    def test_agm_negative_raises(self) -> None:
        """Negative inputs are rejected."""
        with pytest.raises(DomainError):
            agm(-1.0, 1.0)

    def test_at_zero(self) -> None:
        """2F1(...;0) = 1."""
        assert elliptic_2f1_half(0.0) == 1.0

    @pytest.mark.parametrize("m", [0.1, 0.25, 0.5, 0.9])
    def test_matches_scipy_ellipk(self, m: float) -> None:
        """2F1(1/2,1/2;1;m) = 2 K(m) / pi."""
        assert elliptic_2f1_half(m) == pytest.approx(2.0 * ellipk(m) / math.pi, rel=1e-13)

    def test_quarter_reference(self) -> None:
        """2F1(1/2,1/2;1;1/4) = 1.07318..."""
        assert elliptic_2f1_half(0.25) == pytest.approx(1.07318, rel=1e-5)

    def test_series_matches_agm(self) -> None:
        """The defining series agrees with the AGM form at m = 1/2."""
        assert elliptic_2f1_half_series(0.5, 60) == pytest.approx(elliptic_2f1_half(0.5), rel=1e-13)

    def test_negative_m_raises(self) -> None:
        """m < 0 is a domain error."""
        with pytest.raises(DomainError):
            elliptic_2f1_half(-0.1)

    def test_m_one_diverges(self) -> None:
        """m >= 1 is divergent and reports rho."""
        with pytest.raises(DivergenceError) as exc_info:
            elliptic_2f1_half(1.0)
        assert exc_info.value.rho == 1.0


class TestWynnEpsilon:
    """Tests for wynn_epsilon."""

    def test_accelerates_alternating_series(self) -> None:
        """Fifteen partial sums of the alternating harmonic series give ln 2."""
        partial = 0.0
        sums = []
        for k in range(1, 16):
            partial += (-1) ** (k + 1) / k
            sums.append(partial)
        assert abs(sums[-1] - math.log(2.0)) > 1e-2
        assert wynn_epsilon(sums) == pytest.approx(math.log(2.0), abs=1e-8)

    def test_constant_sequence(self) -> None:
        """A settled sequence is returned as is."""
        assert wynn_epsilon([3.0, 3.0, 3.0]) == 3.0

    def test_single_element(self) -> None:
        """One element is its own limit."""
        assert wynn_epsilon([1.5]) == 1.5

    def test_empty_raises(self) -> None:
        """An empty sequence is rejected."""
        with pytest.raises(DomainError):
            wynn_epsilon([])


class TestOscillatoryIntegral:
    """Tests for oscillatory_integral."""

    def test_single_j0(self) -> None:
        """Integral of J_0 over the real line is 2."""
        result = oscillatory_integral(lambda x: float(j0(x)), 2.0 * math.pi, tol=1e-7)
        assert result.value == pytest.approx(2.0, abs=1e-6)
        assert result.intervals_used >= 8

    def test_two_factor_product(self) -> None:
        """Integral of J_0(x) J_0(x/2) is 2 * 2F1(1/2,1/2;1;1/4)."""
        result = oscillatory_integral(
            lambda x: float(j0(x) * j0(0.5 * x)), 2.0 * math.pi / 1.5, tol=1e-7
        )
        assert result.value == pytest.approx(2.0 * elliptic_2f1_half(0.25), abs=1e-6)

    def test_budget_exhausted_raises(self) -> None:
        """An unreachable tolerance raises NonConvergenceError with the best estimate."""
        with pytest.raises(NonConvergenceError) as exc_info:
            oscillatory_integral(lambda x: float(j0(x)), 2.0 * math.pi, tol=1e-300, interval_budget=8)
        assert exc_info.value.best_estimate == pytest.approx(2.0, abs=1e-2)

    def test_bad_period_raises(self) -> None:
        """A non-positive period hint is rejected."""
        with pytest.raises(DomainError):
            oscillatory_integral(math.cos, 0.0, tol=1e-6)
