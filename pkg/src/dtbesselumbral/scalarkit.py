"""Scalar foundation: reciprocal gamma, exact combinatorics, AGM, quadrature oracle.

``recip_gamma`` is the computational meaning of an umbral power acting on its
vacuum: every coefficient sequence in the package is built from it (or from
its exact counterpart ``recip_gamma_scalar`` on integral arguments).
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from fractions import Fraction

from scipy.integrate import quad

from dtbesselumbral.exceptions import DivergenceError, DomainError, NonConvergenceError
from dtbesselumbral.models import QuadratureResult, Scalar
from dtbesselumbral.validation import validate_integer

logger = logging.getLogger(__name__)

# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_MAX_EXP_ARG = 709.0
_MAX_FACTORIAL_ARG = 171

AGM_RTOL = 1e-15
AGM_MAX_ITERATIONS = 64

WYNN_WINDOW = 25
MIN_INTERVALS = 8
DEFAULT_INTERVAL_BUDGET = 200


def _lanczos_log_gamma(x: float) -> float:
    """log Γ(x) for x >= 0.5."""
    z = x - 1.0
    series = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        series += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(series)


def _lanczos_gamma(x: float) -> float:
    """Γ(x) for 0.5 <= x <= 140."""
    z = x - 1.0
    series = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        series += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * series


def recip_gamma(x: float) -> float:
    """Reciprocal gamma 1/Γ(x), an entire function.

    Exactly 0 at the non-positive integers. Positive integers go through the
    factorial so that ``recip_gamma(n + 1) * n!`` is 1 to rounding.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("recip_gamma requires a finite argument", details={"x": x})

    if x.is_integer():
        if x <= 0.0:
            return 0.0
        if x > _MAX_FACTORIAL_ARG:
            return 0.0
        return 1.0 / math.factorial(int(x) - 1)

    if x < 0.5:
        # reflection: 1/Γ(x) = sin(πx) Γ(1-x) / π
        sine = math.sin(math.pi * math.fmod(x, 2.0))
        if 1.0 - x > 140.0:
            log_g = _lanczos_log_gamma(1.0 - x)
            if log_g > _MAX_EXP_ARG:
                return math.copysign(math.inf, sine)
            return sine * math.exp(log_g) / math.pi
        return sine * _lanczos_gamma(1.0 - x) / math.pi

    if x > 140.0:
        log_g = _lanczos_log_gamma(x)
        return math.exp(-log_g) if log_g < _MAX_EXP_ARG else 0.0
    return 1.0 / _lanczos_gamma(x)


def recip_gamma_scalar(x: Scalar) -> Scalar:
    """1/Γ(x), exact for integral rationals and float otherwise."""
    if isinstance(x, Fraction) and x.denominator == 1:
        n = x.numerator
        if n <= 0:
            return Fraction(0)
        return Fraction(1, math.factorial(n - 1))
    return recip_gamma(float(x))


def gamma_scalar(x: Scalar) -> Scalar:
    """Γ(x), exact for positive integral rationals and float otherwise.

    Raises:
        DomainError: At the poles (non-positive integers).
    """
    if isinstance(x, Fraction) and x.denominator == 1:
        if x <= 0:
            raise DomainError("Γ has a pole at non-positive integers", details={"x": str(x)})
        return Fraction(math.factorial(x.numerator - 1))
    rg = recip_gamma(float(x))
    if rg == 0.0:
        raise DomainError("Γ has a pole at non-positive integers", details={"x": float(x)})
    return 1.0 / rg


def binomial(n: int, k: int) -> Fraction:
    """Exact n!/(k!(n-k)!).

    Raises:
        DomainError: When k > n.
    """
    n = validate_integer(n, "n", minimum=0)
    k = validate_integer(k, "k", minimum=0)
    if k > n:
        raise DomainError("binomial requires k <= n", details={"n": n, "k": k})
    return Fraction(math.comb(n, k))


def general_binomial(top: Scalar, k: int) -> Scalar:
    """Binomial coefficient with a rational or real upper argument.

    Computed as the falling factorial top(top-1)...(top-k+1)/k!, which is
    exact whenever ``top`` is a Fraction.
    """
    k = validate_integer(k, "k", minimum=0)
    acc: Scalar = Fraction(1) if isinstance(top, Fraction) else 1.0
    for i in range(k):
        acc = acc * (top - i)
    return acc / math.factorial(k)


def agm(a: float, g: float) -> float:
    """Arithmetic-geometric mean of two nonnegative numbers."""
    if a < 0.0 or g < 0.0:
        raise DomainError("agm requires nonnegative arguments", details={"a": a, "g": g})
    for _ in range(AGM_MAX_ITERATIONS):
        if abs(a - g) <= AGM_RTOL * max(a, g):
            break
        a, g = 0.5 * (a + g), math.sqrt(a * g)
    return 0.5 * (a + g)


def elliptic_2f1_half(m: float) -> float:
    """2F1(1/2, 1/2; 1; m), the normalised complete elliptic integral.

    Computed as 1/AGM(1, sqrt(1-m)); ``m`` plays the role of k².

    Raises:
        DomainError: m < 0.
        DivergenceError: m >= 1.
    """
    m = float(m)
    if m < 0.0:
        raise DomainError("elliptic_2f1_half requires m >= 0", details={"m": m})
    if m >= 1.0:
        raise DivergenceError(
            "2F1(1/2,1/2;1;m) diverges for m >= 1", rho=m, condition="0 <= m < 1"
        )
    return 1.0 / agm(1.0, math.sqrt(1.0 - m))


def elliptic_2f1_half_series(m: float, terms: int = 60) -> float:
    """Defining series sum [(2s)!/(4^s (s!)^2)]^2 m^s, truncated to ``terms``."""
    coeff = 1.0
    power = 1.0
    parts = []
    for s in range(terms):
        parts.append(coeff * coeff * power)
        coeff *= (2 * s + 1) / (2 * s + 2)
        power *= m
    return math.fsum(parts)


def wynn_epsilon(sequence: Sequence[float]) -> float:
    """Extrapolate the limit of a sequence with Wynn's epsilon algorithm.

    Returns the deepest even-column entry that could be formed; a vanishing
    difference ends the table early (the sequence has settled).
    """
    if not sequence:
        raise DomainError("wynn_epsilon needs at least one element")
    previous = [0.0] * (len(sequence) + 1)
    current = [float(v) for v in sequence]
    best = current[-1]
    for column in range(1, len(sequence)):
        following = []
        for i in range(len(current) - 1):
            diff = current[i + 1] - current[i]
            if diff == 0.0 or not math.isfinite(diff):
                return best
            following.append(previous[i + 1] + 1.0 / diff)
        previous, current = current, following
        if column % 2 == 0:
            if not math.isfinite(current[-1]):
                return best
            best = current[-1]
    return best


def oscillatory_integral(
    f: Callable[[float], float],
    period_hint: float,
    tol: float,
    interval_budget: int = DEFAULT_INTERVAL_BUDGET,
    interval_epsrel: float = 1e-12,
) -> QuadratureResult:
    """Integrate an even function over the real line as 2∫₀^∞ f.

    The half-line is cut at multiples of half the period hint, each piece is
    integrated with ``scipy.integrate.quad`` and the partial sums are
    extrapolated with the epsilon algorithm.

    Raises:
        NonConvergenceError: If the extrapolated values do not settle within
            ``interval_budget`` pieces; carries the best estimate.
    """
    if period_hint <= 0.0 or not math.isfinite(period_hint):
        raise DomainError("period_hint must be positive", details={"period_hint": period_hint})
    if tol <= 0.0:
        raise DomainError("tol must be positive", details={"tol": tol})

    step = 0.5 * period_hint
    partial = 0.0
    partials: list[float] = []
    estimates: list[float] = []

    for k in range(1, interval_budget + 1):
        piece, _ = quad(f, (k - 1) * step, k * step, epsabs=0.0, epsrel=interval_epsrel, limit=100)
        partial += piece
        partials.append(partial)
        estimates.append(2.0 * wynn_epsilon(partials[-WYNN_WINDOW:]))
        if k < max(MIN_INTERVALS, 3):
            continue
        error = abs(estimates[-1] - estimates[-2]) + abs(estimates[-1] - estimates[-3])
        if error <= tol:
            logger.debug("Quadrature settled after %d intervals (error %.3e)", k, error)
            return QuadratureResult(value=estimates[-1], abs_error_estimate=error, intervals_used=k)

    logger.warning("Quadrature did not settle within %d intervals", interval_budget)
    raise NonConvergenceError(
        f"oscillatory quadrature did not reach tol={tol} within {interval_budget} intervals",
        best_estimate=estimates[-1] if estimates else None,
        terms_used=interval_budget,
    )
