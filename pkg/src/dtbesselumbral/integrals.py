"""Integrals over the real line of Bessel products and of the Humbert function.

Each closed form (or fractional l-series) has an independent quadrature
counterpart; :class:`IntegralPair` bundles the two with their residual.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from scipy.integrate import quad
from scipy.special import j0

from dtbesselumbral.besselfam import bessel_wright, humbert
from dtbesselumbral.exceptions import DivergenceError, NonConvergenceError
from dtbesselumbral.lpoly import convergence_ratio, l_frac, normalized_l_terms
from dtbesselumbral.models import EvalReport, QuadratureResult, Scalar
from dtbesselumbral.products import ScaleSpec
from dtbesselumbral.scalarkit import DEFAULT_INTERVAL_BUDGET, elliptic_2f1_half, oscillatory_integral
from dtbesselumbral.series import DEFAULT_MAX_TERMS, DEFAULT_TOL, sum_series
from dtbesselumbral.validation import validate_real

logger = logging.getLogger(__name__)

SQRT_PI = math.sqrt(math.pi)
TWO_FACTOR_CONDITION = "|a| > |b|"
ORDERED_CONDITION = "|a_n| > ... > |a_2| > |a_1|"
RATIO_CONDITION = "(|a_1| + ... + |a_{n-1}|)^2 / a_n^2 < 1"
GAUSS_WINDOW = 60.0
DEFAULT_TRANSFORM_TOL = 1e-10


def _as_scale_spec(scales: ScaleSpec | Sequence[Scalar | int]) -> ScaleSpec:
    return scales if isinstance(scales, ScaleSpec) else ScaleSpec.from_scales(scales)


def integral_two_j0(a: Scalar | int, b: Scalar | int) -> float:
    """Integral of J_0(a x) J_0(b x) over the real line: (2/|a|) 2F1(1/2,1/2;1;b^2/a^2).

    Raises:
        DivergenceError: |a| <= |b|.
    """
    a_f = abs(validate_real(a, "a"))
    b_f = abs(validate_real(b, "b"))
    if a_f <= b_f:
        rho = (b_f / a_f) ** 2 if a_f else math.inf
        raise DivergenceError(
            f"two-factor integral needs {TWO_FACTOR_CONDITION} (got a={a_f:g}, b={b_f:g}, rho={rho:.6g})",
            rho=rho,
            condition=TWO_FACTOR_CONDITION,
            stated_condition=TWO_FACTOR_CONDITION,
        )
    return 2.0 / a_f * elliptic_2f1_half((b_f / a_f) ** 2)


def integral_n_bessel(
    scales: ScaleSpec | Sequence[Scalar | int],
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalReport:
    """Integral of prod_i J_0(a_i x) over the real line as 2 sqrt(pi) l_{-1/2}(a_1^2..a_n^2).

    Scales are sorted by magnitude so the largest is dominant.

    Raises:
        DivergenceError: rho >= 1; the message cites both the enforced ratio
            condition and the weaker ordering condition.
    """
    spec = _as_scale_spec(scales)
    squares = sorted(float(sq) for sq in spec.squares)
    rho = convergence_ratio(squares)
    if rho >= 1.0:
        condition = TWO_FACTOR_CONDITION if len(squares) == 2 else RATIO_CONDITION
        raise DivergenceError(
            f"product integral series diverges: rho={rho:.6g} >= 1 "
            f"(requires {condition}; usually stated as {ORDERED_CONDITION})",
            rho=rho,
            condition=condition,
            stated_condition=ORDERED_CONDITION,
        )
    report = l_frac(-0.5, squares, max_terms=max_terms, tol=tol)
    factor = 2.0 * SQRT_PI
    return EvalReport(
        value=factor * report.value,
        terms_used=report.terms_used,
        last_term=factor * report.last_term,
        converged=report.converged,
    )


def elliptic_f3(
    a1: Scalar | int,
    a2: Scalar | int,
    a3: Scalar | int,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> EvalReport:
    """F(a1,a2,a3) = sum_s [(2s)!/(4^s (s!)^2)]^2 s! l_s(a1,a2) / a3^s.

    Arguments are l-arguments (squared scales); l_{-1/2}(a1,a2,a3) equals
    F / sqrt(pi a3), and a2 = 0 reduces F to 2F1(1/2,1/2;1;a1/a3).

    Raises:
        DivergenceError: (sqrt(a1) + sqrt(a2))^2 / a3 >= 1.
        NonConvergenceError: ``max_terms`` exhausted.
    """
    x1 = validate_real(a1, "a1", minimum=0.0)
    x2 = validate_real(a2, "a2", minimum=0.0)
    x3 = validate_real(a3, "a3", minimum=0.0, exclusive_minimum=True)
    rho = convergence_ratio([x1, x2, x3])
    if rho >= 1.0:
        raise DivergenceError(
            f"F(a1,a2,a3) diverges: rho={rho:.6g} >= 1",
            rho=rho,
            condition="(sqrt(a1) + sqrt(a2))^2 / a3 < 1",
            stated_condition="a3 > a2 > a1",
        )

    def stream() -> Iterator[float]:
        central = 1.0
        for s, e_s in enumerate(normalized_l_terms([x1 / x3, x2 / x3])):
            yield central * central * e_s
            central *= (2 * s + 1) / (2 * s + 2)

    report = sum_series(stream(), tol=tol, max_terms=max_terms)
    if not report.converged:
        raise NonConvergenceError(
            f"F(a1,a2,a3) did not converge within {max_terms} terms (rho={rho:.6g})",
            best_estimate=report.value,
            terms_used=report.terms_used,
        )
    return report


def bessel_product_quadrature(
    scales: ScaleSpec | Sequence[Scalar | int],
    tol: float,
    interval_budget: int = DEFAULT_INTERVAL_BUDGET,
    interval_epsrel: float = 1e-12,
) -> QuadratureResult:
    """Quadrature of prod_i J_0(a_i x) over the real line (period hint 2 pi / sum |a_i|)."""
    magnitudes = _as_scale_spec(scales).magnitudes

    def integrand(x: float) -> float:
        value = 1.0
        for a in magnitudes:
            value *= float(j0(a * x))
        return value

    return oscillatory_integral(
        integrand,
        period_hint=2.0 * math.pi / math.fsum(magnitudes),
        tol=tol,
        interval_budget=interval_budget,
        interval_epsrel=interval_epsrel,
    )


def humbert_gauss_transform(beta: Scalar | int, tol: float = DEFAULT_TRANSFORM_TOL) -> tuple[float, float]:
    """Both sides of: integral of I_{0,0}(x) exp(-beta x^2) = sqrt(pi/beta) I_{0,0}(1/(4 beta) | 2).

    The left side is integrated with ``scipy.integrate.quad`` over
    |x| <= sqrt(60/beta), beyond which the Gaussian is negligible.

    Raises:
        NonConvergenceError: quad's error estimate exceeds ``tol`` relative.
    """
    beta_f = validate_real(beta, "beta", minimum=0.0, exclusive_minimum=True)
    tol = validate_real(tol, "tol", minimum=0.0, exclusive_minimum=True)
    rhs = math.sqrt(math.pi / beta_f) * bessel_wright(0, 0, 0.25 / beta_f, 2).value

    def integrand(x: float) -> float:
        return humbert(0, 0, x).value * math.exp(-beta_f * x * x)

    bound = math.sqrt(GAUSS_WINDOW / beta_f)
    left, left_err = quad(integrand, -bound, 0.0, epsabs=0.0, epsrel=1e-13, limit=200)
    right, right_err = quad(integrand, 0.0, bound, epsabs=0.0, epsrel=1e-13, limit=200)
    lhs = left + right
    if left_err + right_err > tol * max(1.0, abs(lhs)):
        raise NonConvergenceError(
            f"Gaussian transform quadrature error {left_err + right_err:.3e} exceeds tolerance",
            best_estimate=lhs,
        )
    logger.debug("Humbert transform beta=%g: lhs=%.17g rhs=%.17g", beta_f, lhs, rhs)
    return lhs, rhs


@dataclass(frozen=True)
class IntegralPair:
    """A closed-form (or series) integral value next to its quadrature oracle."""

    closed_form: float
    quadrature: float
    residual: float
    terms_used: int
    intervals_used: int
    quadrature_error: float


def _pair(closed_form: float, terms_used: int, oracle: QuadratureResult) -> IntegralPair:
    residual = abs(closed_form - oracle.value) / max(1.0, abs(closed_form))
    return IntegralPair(
        closed_form=closed_form,
        quadrature=oracle.value,
        residual=residual,
        terms_used=terms_used,
        intervals_used=oracle.intervals_used,
        quadrature_error=oracle.abs_error_estimate,
    )


def two_j0_pair(
    a: Scalar | int,
    b: Scalar | int,
    quadrature_tol: float,
    interval_budget: int = DEFAULT_INTERVAL_BUDGET,
    interval_epsrel: float = 1e-12,
) -> IntegralPair:
    """integral_two_j0 and its quadrature oracle."""
    closed = integral_two_j0(a, b)
    # J_0(0 x) = 1 drops out of the product
    factors = [s for s in (a, b) if s != 0]
    oracle = bessel_product_quadrature(
        factors, tol=quadrature_tol, interval_budget=interval_budget, interval_epsrel=interval_epsrel
    )
    return _pair(closed, 0, oracle)


def n_bessel_pair(
    scales: ScaleSpec | Sequence[Scalar | int],
    quadrature_tol: float,
    series_tol: float = DEFAULT_TOL,
    interval_budget: int = DEFAULT_INTERVAL_BUDGET,
    interval_epsrel: float = 1e-12,
) -> IntegralPair:
    """integral_n_bessel and its quadrature oracle."""
    spec = _as_scale_spec(scales)
    series = integral_n_bessel(spec, tol=series_tol)
    oracle = bessel_product_quadrature(
        spec, tol=quadrature_tol, interval_budget=interval_budget, interval_epsrel=interval_epsrel
    )
    return _pair(series.value, series.terms_used, oracle)
