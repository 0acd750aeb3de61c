"""Verification suite: direct-series Bessel family references."""

from __future__ import annotations

import math
from fractions import Fraction

from dtbesselumbral.besselfam import (
    bessel_j,
    bessel_wright,
    footnote_coefficients,
    hermite2,
    humbert,
    mod_i_tilde,
    tricomi_c,
)
from dtbesselumbral.scalarkit import gamma_scalar
from dtbesselumbral.suites.base import BaseSuite, SuiteBuilder

J0_FIRST_ZERO = 2.404825557695773
I0_AT_ONE = 1.2660658777520082
I0_AT_TWO = 2.2795853023360673
SERIES_TOL = 1e-13
CONTRACT_TOL = 1e-12
FD_STEP = 1e-3


def _humbert_slope(m1: int, m2: int, x: float) -> float:
    """Central difference with one Richardson step."""

    def central(h: float) -> float:
        return (humbert(m1, m2, x + h).value - humbert(m1, m2, x - h).value) / (2.0 * h)

    return (4.0 * central(FD_STEP / 2.0) - central(FD_STEP)) / 3.0


class BesselFamilySuite(BaseSuite):
    """Reference values, identities and the truncation contract of the series."""

    name = "besselfam"
    description = "J, normalised I, Tricomi C, Hermite, Humbert and Bessel-Wright series"

    def build(self, builder: SuiteBuilder) -> None:
        self._reference_values(builder)
        self._cross_identities(builder)
        self._hermite(builder)
        self._humbert_family(builder)
        self._footnote(builder)
        self._parity(builder)
        self._truncation_contract(builder)

    @staticmethod
    def _reference_values(builder: SuiteBuilder) -> None:
        builder.close("J_0(0) = 1", 1.0, bessel_j(0, 0).value, 1e-15)
        builder.close("J_0 first zero", 0.0, bessel_j(0, J0_FIRST_ZERO).value, 1e-9)
        builder.close("I~_0(1) = I_0(1)", I0_AT_ONE, mod_i_tilde(0, 1).value, SERIES_TOL)
        builder.close("I~_nu(0) = 1", 1.0, mod_i_tilde(Fraction(1, 2), 0).value, 1e-15)
        builder.close("C_0(1) = I_0(2)", I0_AT_TWO, tricomi_c(0, 1).value, SERIES_TOL)
        builder.close("C_nu(0) = 1/Gamma(nu+1)", 1.0 / math.gamma(2.5), tricomi_c(1.5, 0).value, 1e-15)

    @staticmethod
    def _cross_identities(builder: SuiteBuilder) -> None:
        for nu in (0, 1, 0.5, 2):
            for x in (0.5, 1.0, 3.0):
                builder.close(
                    f"J_{nu}({x}) = (x/2)^nu C_nu(-x^2/4)",
                    bessel_j(nu, x).value,
                    (x / 2.0) ** nu * tricomi_c(nu, -x * x / 4.0).value,
                    SERIES_TOL,
                )
                builder.close(
                    f"I~_{nu}({x}) = Gamma(nu+1) C_nu(x^2/4)",
                    mod_i_tilde(nu, x).value,
                    float(gamma_scalar(nu + 1)) * tricomi_c(nu, x * x / 4.0).value,
                    SERIES_TOL,
                )

    @staticmethod
    def _hermite(builder: SuiteBuilder) -> None:
        builder.exact("H_2(3,1) = 11", Fraction(11), hermite2(2, 3, 1))
        builder.exact("H_3(2,1) = 20", Fraction(20), hermite2(3, 2, 1))
        for x, y in ((Fraction(3), Fraction(1)), (Fraction(1, 2), Fraction(-2))):
            for n in range(1, 11):
                builder.exact(
                    f"H_{n + 1}({x},{y}) = x H_{n} + 2 y n H_{n - 1}",
                    x * hermite2(n, x, y) + 2 * y * n * hermite2(n - 1, x, y),
                    hermite2(n + 1, x, y),
                )

    @staticmethod
    def _humbert_family(builder: SuiteBuilder) -> None:
        builder.close("I_{0,0}(0) = 1", 1.0, humbert(0, 0, 0).value, 1e-15)
        builder.close("I_{1,2}(0) = 1/2", 0.5, humbert(1, 2, 0).value, 1e-15)
        for m1, m2 in ((0, 0), (1, 2), (2, 1)):
            builder.close(
                f"d/dx I_{{{m1},{m2}}}(1/2) = I_{{{m1 + 1},{m2 + 1}}}(1/2)",
                humbert(m1 + 1, m2 + 1, 0.5).value,
                _humbert_slope(m1, m2, 0.5),
                1e-6,
            )
        for x in (0.25, 0.7, 2.0):
            builder.close(
                f"I_{{0,0}}({x}|1) = I_{{0,0}}({x})",
                humbert(0, 0, x).value,
                bessel_wright(0, 0, x, 1).value,
                SERIES_TOL,
            )
        builder.close("I_{1,2}(0|3) = 1/2", 0.5, bessel_wright(1, 2, 0, 3).value, 1e-15)
        hand_terms = [0.25**m / (math.factorial(m) * math.factorial(2 * m) ** 2) for m in range(5)]
        builder.close(
            "I_{0,0}(1/4|2) from explicit terms",
            math.fsum(hand_terms),
            bessel_wright(0, 0, 0.25, 2).value,
            SERIES_TOL,
        )

    @staticmethod
    def _footnote(builder: SuiteBuilder) -> None:
        squared, scaled = footnote_coefficients(4)
        builder.exact("[J_0(x)]^2 u^2-coefficient", Fraction(3, 2), squared[2])
        builder.exact("J_0(sqrt2 x) u^2-coefficient", Fraction(1), scaled[2])
        builder.check(
            "[J_0(x)]^2 != J_0(sqrt2 x)",
            squared != scaled,
            expected="differ",
            got=squared[2] - scaled[2],
        )

    @staticmethod
    def _parity(builder: SuiteBuilder) -> None:
        for x in (0.3, 1.7, 5.0):
            builder.close(f"J_0(-{x}) = J_0({x})", bessel_j(0, x).value, bessel_j(0, -x).value, 1e-15)
            builder.close(f"J_1(-{x}) = -J_1({x})", -bessel_j(1, x).value, bessel_j(1, -x).value, 1e-15)
            builder.close(
                f"I~_1/2(-{x}) = I~_1/2({x})",
                mod_i_tilde(0.5, x).value,
                mod_i_tilde(0.5, -x).value,
                1e-15,
            )

    @staticmethod
    def _truncation_contract(builder: SuiteBuilder) -> None:
        for x in (1.0, 5.0, 10.0, 20.0):
            report = bessel_j(0, x, tol=CONTRACT_TOL)
            doubled = bessel_j(0, x, tol=CONTRACT_TOL, terms=2 * report.terms_used)
            builder.check(f"J_0({x}) converged", report.converged)
            builder.close(
                f"J_0({x}) stable under doubled terms",
                report.value,
                doubled.value,
                10.0 * CONTRACT_TOL,
            )
        for nu, x in ((0.5, 3.0), (2, 8.0)):
            report = mod_i_tilde(nu, x, tol=CONTRACT_TOL)
            doubled = mod_i_tilde(nu, x, tol=CONTRACT_TOL, terms=2 * report.terms_used)
            builder.close(
                f"I~_{nu}({x}) stable under doubled terms",
                report.value,
                doubled.value,
                10.0 * CONTRACT_TOL,
            )
