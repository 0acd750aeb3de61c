"""Direct power-series references for the Bessel family.

Desk-scale only: every function here is a straight series with adaptive
truncation and no closed-form shortcuts, so the results can serve as oracles
for the l-polynomial expansions.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from fractions import Fraction

from dtbesselumbral.exceptions import DeskScaleError, DomainError
from dtbesselumbral.models import EvalReport, Scalar, as_scalar
from dtbesselumbral.scalarkit import recip_gamma, recip_gamma_scalar
from dtbesselumbral.series import DEFAULT_MAX_TERMS, DEFAULT_TOL, cauchy_product, sum_series
from dtbesselumbral.validation import validate_integer, validate_real

logger = logging.getLogger(__name__)

DESK_SCALE_BOUND = 30.0


def _check_order(nu: float) -> float:
    return validate_real(nu, "nu", minimum=-1.0, exclusive_minimum=True)


def bessel_j(
    nu: Scalar | int,
    x: Scalar | int,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
    terms: int | None = None,
) -> EvalReport:
    """J_nu(x) = sum_r (-1)^r (x/2)^(2r+nu) / (r! Gamma(nu+r+1)).

    Negative ``x`` is accepted for integral orders only (J_n(-x) = (-1)^n J_n(x)).

    Raises:
        DeskScaleError: |x| > 30, where the alternating series cancels badly.
        DomainError: nu <= -1, or negative x with a non-integral order.
    """
    nu_f = _check_order(float(nu))
    x_f = validate_real(x, "x")
    if abs(x_f) > DESK_SCALE_BOUND:
        raise DeskScaleError(
            f"bessel_j refuses |x| > {DESK_SCALE_BOUND:g}",
            details={"x": x_f, "bound": DESK_SCALE_BOUND},
        )
    sign = 1.0
    if x_f < 0.0:
        if not nu_f.is_integer():
            raise DomainError("J_nu(x) for x < 0 requires an integral order", details={"nu": nu_f})
        sign = -1.0 if int(nu_f) % 2 else 1.0
        x_f = -x_f
    if x_f == 0.0 and nu_f < 0.0:
        raise DomainError("J_nu(0) is singular for a negative order", details={"nu": nu_f})

    half = 0.5 * x_f
    u = half * half

    def stream() -> Iterator[float]:
        term = half**nu_f * recip_gamma(nu_f + 1.0)
        r = 0
        while True:
            yield term
            term *= -u / ((r + 1) * (nu_f + r + 1))
            r += 1

    report = sum_series(stream(), tol=tol, max_terms=max_terms, fixed_terms=terms)
    if sign < 0.0:
        return EvalReport(
            value=-report.value,
            terms_used=report.terms_used,
            last_term=-report.last_term,
            converged=report.converged,
            tol=report.tol,
        )
    return report


def mod_i_tilde(
    nu: Scalar | int,
    x: Scalar | int,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
    terms: int | None = None,
) -> EvalReport:
    """Normalised modified Bessel function sum_r Gamma(nu+1) (x/2)^(2r) / (r! Gamma(r+nu+1))."""
    nu_f = _check_order(float(nu))
    half = 0.5 * validate_real(x, "x")
    u = half * half

    def stream() -> Iterator[float]:
        term = 1.0
        r = 0
        while True:
            yield term
            term *= u / ((r + 1) * (nu_f + r + 1))
            r += 1

    return sum_series(stream(), tol=tol, max_terms=max_terms, fixed_terms=terms)


def tricomi_c(
    nu: Scalar | int,
    x: Scalar | int,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
    terms: int | None = None,
) -> EvalReport:
    """Tricomi function C_nu(x) = sum_r x^r / (r! Gamma(nu+r+1)).

    Any real order is accepted; at a negative integral order the leading
    terms vanish and summation starts at the first non-zero one.
    """
    nu_f = validate_real(nu, "nu")
    x_f = validate_real(x, "x")
    start = int(-nu_f) if nu_f.is_integer() and nu_f < 0 else 0

    def stream() -> Iterator[float]:
        power = 1.0  # x^r / r!
        for r in range(start):
            power *= x_f / (r + 1)
        r = start
        while True:
            yield power * recip_gamma(nu_f + r + 1.0)
            power *= x_f / (r + 1)
            r += 1

    return sum_series(stream(), tol=tol, max_terms=max_terms, fixed_terms=terms)


def hermite2(n: int, x: Scalar | int, y: Scalar | int) -> Scalar:
    """Two-variable Hermite H_n(x,y) = n! sum_r x^(n-2r) y^r / ((n-2r)! r!), exact for rationals."""
    n = validate_integer(n, "n", minimum=0)
    x, y = as_scalar(x, "x"), as_scalar(y, "y")
    total: Scalar = Fraction(0)
    for r in range(n // 2 + 1):
        total = total + x ** (n - 2 * r) * y**r / (math.factorial(n - 2 * r) * math.factorial(r))
    return math.factorial(n) * total


def humbert(
    m1: int,
    m2: int,
    x: Scalar | int,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
    terms: int | None = None,
) -> EvalReport:
    """Humbert function I_{m1,m2}(x) = sum_r x^r / (r! (m1+r)! (m2+r)!)."""
    m1 = validate_integer(m1, "m1", minimum=0)
    m2 = validate_integer(m2, "m2", minimum=0)
    x_f = validate_real(x, "x")

    def stream() -> Iterator[float]:
        term = 1.0 / (math.factorial(m1) * math.factorial(m2))
        r = 0
        while True:
            yield term
            term *= x_f / ((r + 1) * (m1 + r + 1) * (m2 + r + 1))
            r += 1

    return sum_series(stream(), tol=tol, max_terms=max_terms, fixed_terms=terms)


def bessel_wright(
    m1: int,
    m2: int,
    x: Scalar | int,
    k: Scalar | int,
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
    terms: int | None = None,
) -> EvalReport:
    """Bessel-Wright function I_{m1,m2}(x|k) = sum_r x^r / (r! Gamma(kr+1+m1) Gamma(kr+1+m2))."""
    m1 = validate_integer(m1, "m1", minimum=0)
    m2 = validate_integer(m2, "m2", minimum=0)
    x_f = validate_real(x, "x")
    k_f = validate_real(k, "k", minimum=0.0, exclusive_minimum=True)

    def stream() -> Iterator[float]:
        power = 1.0  # x^r / r!
        r = 0
        while True:
            yield power * recip_gamma(k_f * r + 1 + m1) * recip_gamma(k_f * r + 1 + m2)
            power *= x_f / (r + 1)
            r += 1

    return sum_series(stream(), tol=tol, max_terms=max_terms, fixed_terms=terms)


def bessel_j_coefficients(nu: Scalar | int, scale_square: Scalar | int, R: int) -> list[Scalar]:
    """Coefficients of J_nu(a x) / (a x/2)^nu in u = (x/2)^2, up to u^R.

    c_r = (-1)^r (a^2)^r / (r! Gamma(nu+r+1)); exact for a nonnegative
    integral order and a rational squared scale.
    """
    R = validate_integer(R, "R", minimum=0)
    nu = as_scalar(nu, "nu")
    _check_order(float(nu))
    a2 = as_scalar(scale_square, "scale_square")
    return [(-a2) ** r * recip_gamma_scalar(nu + r + 1) / math.factorial(r) for r in range(R + 1)]


def footnote_coefficients(R: int) -> tuple[list[Scalar], list[Scalar]]:
    """Exact u-coefficients of [J_0(x)]^2 and of J_0(sqrt(2) x), up to u^R.

    The two agree through u^1 and first differ at u^2 (3/2 against 1).
    """
    single = bessel_j_coefficients(Fraction(0), Fraction(1), R)
    squared = cauchy_product(single, single, R)
    scaled = bessel_j_coefficients(Fraction(0), Fraction(2), R)
    return squared, scaled
