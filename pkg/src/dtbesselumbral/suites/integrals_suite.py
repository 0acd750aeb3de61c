"""Verification suite: real-line integrals, each against an independent oracle."""

from __future__ import annotations

import math
from fractions import Fraction

from dtbesselumbral.exceptions import DivergenceError
from dtbesselumbral.integrals import (
    elliptic_f3,
    humbert_gauss_transform,
    integral_n_bessel,
    integral_two_j0,
    n_bessel_pair,
    two_j0_pair,
)
from dtbesselumbral.lpoly import l_frac
from dtbesselumbral.scalarkit import elliptic_2f1_half, elliptic_2f1_half_series
from dtbesselumbral.suites.base import BaseSuite, SuiteBuilder

SQRT_PI = math.sqrt(math.pi)
TWO_FACTOR_GRID = ((1, 0), (1, Fraction(1, 2)), (2, 1), (3, 2))
QUADRATURE_TOL = 1e-7
AGREEMENT_TOL = 1e-5
SERIES_TOL = 1e-10


class IntegralsSuite(BaseSuite):
    """Closed forms, fractional l-series and quadrature for the integrals over the real line."""

    name = "integrals"
    description = "Two- and three-factor Bessel integrals, elliptic forms, Humbert transform"

    def build(self, builder: SuiteBuilder) -> None:
        self._elliptic(builder)
        self._two_factor(builder)
        self._three_factor(builder)
        self._elliptic_f3(builder)
        self._humbert_transform(builder)

    @staticmethod
    def _elliptic(builder: SuiteBuilder) -> None:
        builder.close("2F1(1/2,1/2;1;0) = 1", 1.0, elliptic_2f1_half(0.0), 1e-15)
        for m in (0.1, 0.25, 0.5):
            builder.close(
                f"2F1(1/2,1/2;1;{m}) AGM vs series",
                elliptic_2f1_half_series(m, 60),
                elliptic_2f1_half(m),
                1e-12,
            )

    @staticmethod
    def _two_factor(builder: SuiteBuilder) -> None:
        builder.close("int J_0(x) = 2", 2.0, integral_two_j0(1, 0), 1e-15)
        builder.close("int J_0(2x) = 1", 1.0, integral_two_j0(2, 0), 1e-15)
        builder.close(
            "int J_0(x) J_0(x/2) = 2 2F1(1/4)",
            2.0 * elliptic_2f1_half_series(0.25, 60),
            integral_two_j0(1, Fraction(1, 2)),
            1e-13,
        )
        for a, b in TWO_FACTOR_GRID:
            squares = (float(a) ** 2,) if b == 0 else (float(b) ** 2, float(a) ** 2)
            builder.close(
                f"int J_0({a}x) J_0({b}x): closed form vs 2 sqrt(pi) l_(-1/2)",
                integral_two_j0(a, b),
                2.0 * SQRT_PI * l_frac(Fraction(-1, 2), squares).value,
                SERIES_TOL,
            )
            with builder.guard(f"int J_0({a}x) J_0({b}x) quadrature"):
                pair = two_j0_pair(a, b, quadrature_tol=QUADRATURE_TOL)
                builder.close(
                    f"int J_0({a}x) J_0({b}x): closed form vs quadrature",
                    pair.closed_form,
                    pair.quadrature,
                    AGREEMENT_TOL,
                )
            scale = 2.5
            builder.close(
                f"int J_0({a}x) J_0({b}x): scaling by {scale}",
                integral_two_j0(a, b) / scale,
                integral_two_j0(scale * float(a), scale * float(b)),
                1e-12,
            )
        builder.raises("int J_0(x)^2 rejected as divergent", DivergenceError, integral_two_j0, 1, 1)

    @staticmethod
    def _three_factor(builder: SuiteBuilder) -> None:
        with builder.guard("int J_0(x)^2 J_0(3x) quadrature"):
            pair = n_bessel_pair((1, 1, 3), quadrature_tol=QUADRATURE_TOL)
            builder.close(
                "int J_0(x)^2 J_0(3x): series vs quadrature",
                pair.closed_form,
                pair.quadrature,
                AGREEMENT_TOL,
            )
        builder.close(
            "two-scale n-factor integral reduces to the two-factor form",
            integral_two_j0(2, 1),
            integral_n_bessel((1, 2)).value,
            SERIES_TOL,
        )
        builder.raises("scales (1,2,3) rejected as divergent", DivergenceError, integral_n_bessel, (1, 2, 3))

    @staticmethod
    def _elliptic_f3(builder: SuiteBuilder) -> None:
        builder.close("F(0,0,a3) = 1", 1.0, elliptic_f3(0, 0, 5).value, 1e-15)
        for a1, a3 in ((1, 4), (1, 2), (3, 10)):
            builder.close(
                f"F({a1},0,{a3}) = 2F1(1/2,1/2;1;{a1}/{a3})",
                elliptic_2f1_half(a1 / a3),
                elliptic_f3(a1, 0, a3).value,
                1e-12,
            )
        for args in ((1, 1, 9), (Fraction(1, 4), 1, 6)):
            a3 = float(args[2])
            builder.close(
                f"l_(-1/2){args} = F / sqrt(pi a3)",
                elliptic_f3(*args).value / math.sqrt(math.pi * a3),
                l_frac(Fraction(-1, 2), args).value,
                SERIES_TOL,
            )

    @staticmethod
    def _humbert_transform(builder: SuiteBuilder) -> None:
        for beta in (Fraction(1, 4), Fraction(1), Fraction(4)):
            with builder.guard(f"Humbert Gaussian transform beta={beta}"):
                lhs, rhs = humbert_gauss_transform(beta)
                builder.close(f"Humbert Gaussian transform beta={beta}", rhs, lhs, 1e-8)
