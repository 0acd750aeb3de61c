"""Expansion engine for products and powers of Bessel functions.

A product prod_i J_{nu_i}(a_i x) is carried as a :class:`TruncatedSeries` in
u = (x/2)^2 with the prefactor (x/2)^(sum nu_i) * prod a_i^nu_i split off:

    c_r = (-1)^r / r! * l_r^{(nu)}(a_1^2, ..., a_n^2)

:func:`oracle_cauchy_product` builds the same coefficients by brute-force
multiplication of the individual factor series; exact agreement of the two is
what pins the normalisation.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from dtbesselumbral.besselfam import bessel_j, bessel_j_coefficients, tricomi_c
from dtbesselumbral.exceptions import DomainError, NonConvergenceError
from dtbesselumbral.lpoly import HomogIndex, LPolySpec, l_table
from dtbesselumbral.models import EvalReport, Scalar, as_scalar, is_exact, is_nonneg_integral
from dtbesselumbral.scalarkit import gamma_scalar
from dtbesselumbral.series import cauchy_product
from dtbesselumbral.validation import validate_enum, validate_integer, validate_real

logger = logging.getLogger(__name__)

DEFAULT_EVAL_TOL = 1e-12
DEFAULT_DERIVATIVE_TRUNCATION = 30
DEFAULT_FD_STEP = Fraction(1, 1000)
DIRECT_FD_STEP = 0.02


# --------------------------------------------------------------------------- #
# Parameter records
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class OrderSpec:
    """Bessel orders, one per factor; each must exceed -1."""

    orders: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if not self.orders:
            raise DomainError("OrderSpec needs at least one order")
        orders = tuple(as_scalar(v, "orders") for v in self.orders)
        for nu in orders:
            validate_real(nu, "orders", minimum=-1.0, exclusive_minimum=True)
        object.__setattr__(self, "orders", orders)

    @classmethod
    def zeros(cls, n: int) -> OrderSpec:
        """n factors of order zero."""
        return cls(orders=tuple(Fraction(0) for _ in range(n)))

    def __len__(self) -> int:
        return len(self.orders)

    @property
    def total(self) -> Scalar:
        """Sum of the orders: the power of x/2 in front of the series."""
        return sum(self.orders, Fraction(0))

    @property
    def all_nonneg_integral(self) -> bool:
        return all(is_nonneg_integral(nu) for nu in self.orders)


def _exact_sqrt(value: Scalar) -> Scalar:
    """Square root, exact when ``value`` is the square of a rational."""
    if isinstance(value, Fraction):
        num_root = math.isqrt(value.numerator)
        den_root = math.isqrt(value.denominator)
        if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
            return Fraction(num_root, den_root)
    return math.sqrt(value)


@dataclass(frozen=True)
class ScaleSpec:
    """Nonzero scales a_i, stored as exact squares plus signs.

    Keeping a_i^2 primary lets irrational scales such as sqrt(2) stay exact
    inside the l-polynomials.
    """

    squares: tuple[Scalar, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.squares:
            raise DomainError("ScaleSpec needs at least one scale")
        if len(self.signs) != len(self.squares):
            raise DomainError("ScaleSpec signs and squares differ in length")
        squares = tuple(as_scalar(v, "scales") for v in self.squares)
        for sq in squares:
            if sq <= 0:
                raise DomainError("scales must be nonzero", details={"square": str(sq)})
        for sign in self.signs:
            if sign not in (1, -1):
                raise DomainError("scale signs must be +1 or -1", details={"sign": sign})
        object.__setattr__(self, "squares", squares)

    @classmethod
    def from_scales(cls, scales: Sequence[Scalar | int]) -> ScaleSpec:
        """Build from the scales themselves."""
        values = [as_scalar(a, "scales") for a in scales]
        for a in values:
            if a == 0:
                raise DomainError("scales must be nonzero")
        return cls(squares=tuple(a * a for a in values), signs=tuple(1 if a > 0 else -1 for a in values))

    @classmethod
    def from_squares(cls, squares: Sequence[Scalar | int], signs: Sequence[int] | None = None) -> ScaleSpec:
        """Build from squared scales (positive roots unless ``signs`` says otherwise)."""
        signs = tuple(signs) if signs is not None else tuple(1 for _ in squares)
        return cls(squares=tuple(squares), signs=signs)

    def __len__(self) -> int:
        return len(self.squares)

    @property
    def scales(self) -> tuple[Scalar, ...]:
        """Signed scales; exact where the square is a rational square."""
        return tuple(sign * _exact_sqrt(sq) for sq, sign in zip(self.squares, self.signs))

    @property
    def magnitudes(self) -> tuple[float, ...]:
        return tuple(math.sqrt(sq) for sq in self.squares)

    def scalar_for(self, orders: OrderSpec) -> Scalar:
        """prod_i a_i^nu_i.

        Raises:
            DomainError: A negative scale meets a non-integral order.
        """
        if len(orders) != len(self):
            raise DomainError(
                "orders and scales must have the same length",
                details={"orders": len(orders), "scales": len(self)},
            )
        product: Scalar = Fraction(1)
        for nu, sq, sign in zip(orders.orders, self.squares, self.signs):
            if isinstance(nu, Fraction) and nu.denominator == 1 and nu >= 0:
                n = nu.numerator
                factor: Scalar = sq ** (n // 2)
                if n % 2:
                    factor = factor * sign * _exact_sqrt(sq)
            else:
                if sign < 0:
                    raise DomainError(
                        "a negative scale needs an integral order",
                        details={"nu": float(nu)},
                    )
                factor = float(sq) ** (0.5 * float(nu))
            product = product * factor
        return product


@dataclass(frozen=True)
class TruncatedSeries:
    """scalar * (x/2)^prefactor_exponent * sum_r coeffs[r] u^r with u = (x/2)^2."""

    coeffs: tuple[Scalar, ...]
    prefactor_exponent: Scalar = Fraction(0)
    scalar: Scalar = Fraction(1)

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise DomainError("TruncatedSeries needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def R(self) -> int:
        """Truncation order."""
        return len(self.coeffs) - 1

    @property
    def exact(self) -> bool:
        return (
            all(is_exact(c) for c in self.coeffs)
            and is_exact(self.scalar)
            and is_nonneg_integral(self.prefactor_exponent)
        )

    def _prefactor(self, half: Scalar) -> Scalar:
        mu = self.prefactor_exponent
        if mu == 0:
            return Fraction(1)
        if half == 0:
            if mu > 0:
                return Fraction(0)
            raise DomainError("series prefactor is singular at x = 0", details={"mu": float(mu)})
        if isinstance(mu, Fraction) and mu.denominator == 1:
            return half**mu.numerator
        if half < 0:
            raise DomainError("fractional prefactor needs x > 0", details={"mu": float(mu)})
        return float(half) ** float(mu)

    def terms(self, x: Scalar) -> list[Scalar]:
        """Scaled terms scalar * (x/2)^mu * c_r u^r."""
        half = x / 2
        u = half * half
        lead = self.scalar * self._prefactor(half)
        return [lead * c * u**r for r, c in enumerate(self.coeffs)]

    def evaluate_exact(self, x: Scalar | int) -> Fraction:
        """Exact value at a rational point.

        Raises:
            DomainError: The series is not exact or ``x`` is not rational.
        """
        x = as_scalar(x, "x")
        if not self.exact or not isinstance(x, Fraction):
            raise DomainError("exact evaluation needs exact coefficients and a rational x")
        return sum((Fraction(t) for t in self.terms(x)), Fraction(0))


# --------------------------------------------------------------------------- #
# Expansions
# --------------------------------------------------------------------------- #


def _check_lengths(orders: OrderSpec, scales: ScaleSpec) -> None:
    if len(orders) != len(scales):
        raise DomainError(
            "orders and scales must have the same length",
            details={"orders": len(orders), "scales": len(scales)},
        )


def product_expansion(orders: OrderSpec, scales: ScaleSpec, R: int) -> TruncatedSeries:
    """Closed-form expansion of prod_i J_{nu_i}(a_i x) through u^R."""
    R = validate_integer(R, "R", minimum=0)
    _check_lengths(orders, scales)
    values = l_table(R, LPolySpec(orders=orders.orders, args=scales.squares))
    coeffs = tuple((-1) ** r * v / math.factorial(r) for r, v in enumerate(values))
    return TruncatedSeries(coeffs=coeffs, prefactor_exponent=orders.total, scalar=scales.scalar_for(orders))


def oracle_cauchy_product(orders: OrderSpec, scales: ScaleSpec, R: int) -> TruncatedSeries:
    """Same expansion by multiplying the single-factor series term by term."""
    R = validate_integer(R, "R", minimum=0)
    _check_lengths(orders, scales)
    coeffs: list[Scalar] = [Fraction(1)]
    for nu, sq in zip(orders.orders, scales.squares):
        coeffs = cauchy_product(coeffs, bessel_j_coefficients(nu, sq, R), R)
    return TruncatedSeries(
        coeffs=tuple(coeffs), prefactor_exponent=orders.total, scalar=scales.scalar_for(orders)
    )


def eval_product(series: TruncatedSeries, x: Scalar | int, tol: float = DEFAULT_EVAL_TOL) -> EvalReport:
    """Evaluate a truncated series; the last retained term is the tail estimate."""
    x = as_scalar(x, "x")
    tol = validate_real(tol, "tol", minimum=0.0, exclusive_minimum=True)
    terms = [float(t) for t in series.terms(x)]
    value = math.fsum(terms)
    last = terms[-1]
    converged = abs(last) <= tol * max(1.0, abs(value))
    if not converged:
        logger.debug("Truncated series at R=%d not settled at x=%s (last %.3e)", series.R, x, last)
    return EvalReport(value=value, terms_used=len(terms), last_term=last, converged=converged, tol=tol)


def power_mod_i(nu: Scalar | int, k: int, R: int) -> TruncatedSeries:
    """k-th power of the normalised modified Bessel function, through u^R.

    c_r = Gamma(nu+1)^k l_r^{{nu}}(k) / r!, all positive.
    """
    k = validate_integer(k, "k", minimum=1)
    R = validate_integer(R, "R", minimum=0)
    nu = as_scalar(nu, "nu")
    validate_real(nu, "nu", minimum=-1.0, exclusive_minimum=True)
    weight = gamma_scalar(nu + 1) ** k
    values = l_table(R, HomogIndex.uniform(nu, k).spec())
    return TruncatedSeries(coeffs=tuple(weight * v / math.factorial(r) for r, v in enumerate(values)))


def _two_scales(scales: ScaleSpec) -> None:
    if len(scales) != 2:
        raise DomainError("this operation takes exactly two scales", details={"scales": len(scales)})


def shifted_f(s: int, scales: ScaleSpec, R: int) -> TruncatedSeries:
    """Shifted two-factor series _s f(x;a,b): c_r = (-1)^r l_{r+s}(a^2, b^2) / r!."""
    s = validate_integer(s, "s", minimum=0)
    R = validate_integer(R, "R", minimum=0)
    _two_scales(scales)
    values = l_table(R + s, LPolySpec.plain(scales.squares))
    return TruncatedSeries(coeffs=tuple((-1) ** r * values[r + s] / math.factorial(r) for r in range(R + 1)))


def _hermite_weight(n: int, r: int) -> Fraction:
    """(-1)^n n!/2^n * (-1)^r / (r! (n-2r)!)."""
    return Fraction((-1) ** (n + r) * math.factorial(n), 2**n * math.factorial(r) * math.factorial(n - 2 * r))


def derivative_product(
    n: int,
    scales: ScaleSpec,
    x: Scalar | int,
    R: int = DEFAULT_DERIVATIVE_TRUNCATION,
    tol: float = DEFAULT_EVAL_TOL,
) -> float:
    """n-th derivative of J_0(a x) J_0(b x) through the Hermite-structured sum.

    D^n f = (-1)^n n!/2^n sum_{r<=n/2} (-1)^r x^(n-2r) / (r! (n-2r)!) * _{n-r}f(x).

    Raises:
        NonConvergenceError: A shifted series has not settled at this R.
    """
    n = validate_integer(n, "n", minimum=0)
    x = as_scalar(x, "x")
    parts = []
    for r in range(n // 2 + 1):
        report = eval_product(shifted_f(n - r, scales, R), x, tol=tol)
        if not report.converged:
            raise NonConvergenceError(
                f"shifted series _{n - r}f not settled at R={R}",
                best_estimate=report.value,
                terms_used=report.terms_used,
            )
        parts.append(float(_hermite_weight(n, r)) * float(x) ** (n - 2 * r) * report.value)
    return math.fsum(parts)


def derivative_coefficients(n: int, scales: ScaleSpec, R: int, method: str = "termwise") -> list[Scalar]:
    """Polynomial coefficients (in x) of the n-th derivative of the truncated f.

    ``termwise`` differentiates the degree-2R polynomial directly; ``hermite``
    assembles the same polynomial from the shifted series, each truncated so
    that only l-values up to index R appear. Both have degree 2R - n.
    """
    n = validate_integer(n, "n", minimum=0)
    R = validate_integer(R, "R", minimum=0)
    method = validate_enum(method, "method", ["termwise", "hermite"], case_sensitive=True)
    degree = 2 * R - n
    if degree < 0:
        return [Fraction(0)]

    if method == "termwise":
        base = product_expansion(OrderSpec.zeros(2), scales, R).coeffs
        poly: list[Scalar] = [Fraction(0)] * (2 * R + 1)
        for r, c in enumerate(base):
            poly[2 * r] = c / 4**r
        return [
            poly[j + n] * Fraction(math.factorial(j + n), math.factorial(j)) for j in range(degree + 1)
        ]

    out: list[Scalar] = [Fraction(0)] * (degree + 1)
    for r in range(n // 2 + 1):
        shift = n - r
        if R - shift < 0:
            continue
        weight = _hermite_weight(n, r)
        for m, c in enumerate(shifted_f(shift, scales, R - shift).coeffs):
            out[n - 2 * r + 2 * m] = out[n - 2 * r + 2 * m] + weight * c / 4**m
    return out


def finite_difference_derivative(
    series: TruncatedSeries,
    n: int,
    x: Scalar | int,
    step: Fraction = DEFAULT_FD_STEP,
) -> Fraction:
    """n-th central difference of an exact series, with one Richardson step.

    Runs in exact arithmetic so that small steps do not drown in rounding.
    Floats for ``x`` are read through their decimal representation.
    """
    n = validate_integer(n, "n", minimum=0)
    if isinstance(x, float):
        x = Fraction(repr(x))
    x = as_scalar(x, "x")
    step = Fraction(step)
    if step <= 0:
        raise DomainError("finite-difference step must be positive")

    def central(h: Fraction) -> Fraction:
        total = Fraction(0)
        for j in range(n + 1):
            total += (-1) ** j * math.comb(n, j) * series.evaluate_exact(x + (Fraction(n, 2) - j) * h)
        return total / h**n

    if n == 0:
        return series.evaluate_exact(x)
    return (4 * central(step / 2) - central(step)) / 3


def direct_product_derivative(
    n: int,
    orders: OrderSpec,
    scales: ScaleSpec,
    x: Scalar | int,
    step: float = DIRECT_FD_STEP,
) -> float:
    """n-th derivative of prod_i J_{nu_i}(a_i x) by finite differences of the direct product.

    Each factor comes from its own Bessel series, so this is independent of
    the product expansion. Central differences with one Richardson step;
    float rounding limits it to small n.
    """
    n = validate_integer(n, "n", minimum=0)
    _check_lengths(orders, scales)
    x_f = validate_real(x, "x")
    step = validate_real(step, "step", minimum=0.0, exclusive_minimum=True)
    factors = list(zip(orders.orders, scales.scales))

    def f(t: float) -> float:
        return math.prod(bessel_j(nu, float(a) * t).value for nu, a in factors)

    def central(h: float) -> float:
        total = math.fsum((-1) ** j * math.comb(n, j) * f(x_f + (n / 2 - j) * h) for j in range(n + 1))
        return total / h**n

    if n == 0:
        return f(x_f)
    return (4.0 * central(step / 2) - central(step)) / 3.0


def generating_check(
    orders: OrderSpec,
    args: Sequence[Scalar | int],
    t: Scalar | int,
    R: int,
) -> float:
    """|sum_{r<=R} t^r/r! l_r^{(nu)}(x) - prod_j C_{nu_j}(t x_j)|."""
    R = validate_integer(R, "R", minimum=0)
    if len(args) != len(orders):
        raise DomainError("orders and args must have the same length")
    t_f = validate_real(t, "t")
    values = l_table(R, LPolySpec(orders=orders.orders, args=tuple(args)))
    lhs = math.fsum(t_f**r * float(v) / math.factorial(r) for r, v in enumerate(values))
    rhs = 1.0
    for nu, x in zip(orders.orders, args):
        rhs *= tricomi_c(nu, t_f * float(x)).value
    return abs(lhs - rhs)
