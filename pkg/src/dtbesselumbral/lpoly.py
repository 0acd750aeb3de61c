"""The l-polynomial family, the B polynomials and their classical relatives.

Canonical normalisation used throughout:

    l_r(x)         = r! * sum_{|k|=r} prod x_i^k_i / (k_i!)^2
    l_r^(nu)(x)    = r! * sum_{|k|=r} prod x_i^k_i / (k_i! * Gamma(nu_i + k_i + 1))

Values are exact ``Fraction``s whenever every order is a nonnegative integer
and every argument is rational; otherwise they are floats.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from dtbesselumbral.exceptions import DivergenceError, DomainError, NonConvergenceError
from dtbesselumbral.models import (
    EvalReport,
    LValue,
    Provenance,
    Scalar,
    as_scalar,
    is_nonneg_integral,
)
from dtbesselumbral.scalarkit import (
    gamma_scalar,
    general_binomial,
    recip_gamma,
    recip_gamma_scalar,
)
from dtbesselumbral.series import DEFAULT_MAX_TERMS, DEFAULT_TOL, sum_series
from dtbesselumbral.validation import validate_enum, validate_integer, validate_real

logger = logging.getLogger(__name__)

METHODS = [Provenance.CLOSED_FORM.value, Provenance.RECURSION.value]


# --------------------------------------------------------------------------- #
# Parameter records
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class LPolySpec:
    """Orders and arguments of a nu-indexed l-polynomial, one pair per factor."""

    orders: tuple[Scalar, ...]
    args: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.orders) != len(self.args):
            raise DomainError(
                "orders and args must have the same length",
                details={"orders": len(self.orders), "args": len(self.args)},
            )
        if not self.args:
            raise DomainError("an l-polynomial needs at least one argument")
        object.__setattr__(self, "orders", tuple(as_scalar(v, "orders") for v in self.orders))
        object.__setattr__(self, "args", tuple(as_scalar(v, "args") for v in self.args))

    @classmethod
    def plain(cls, args: Sequence[Scalar | int]) -> LPolySpec:
        """All orders zero: the LPolySpec of the plain ``l_r``."""
        return cls(orders=tuple(Fraction(0) for _ in args), args=tuple(args))


@dataclass(frozen=True)
class HomogIndex:
    """Order vector of l_r^{nu}(k): k unit arguments, possibly mixed orders."""

    nu_vector: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if not self.nu_vector:
            raise DomainError("HomogIndex needs at least one factor")
        object.__setattr__(self, "nu_vector", tuple(as_scalar(v, "nu") for v in self.nu_vector))

    @property
    def k(self) -> int:
        """Number of factors."""
        return len(self.nu_vector)

    @classmethod
    def uniform(cls, nu: Scalar | int, k: int) -> HomogIndex:
        """The index {nu} repeated over k factors."""
        k = validate_integer(k, "k", minimum=1)
        return cls(nu_vector=(as_scalar(nu, "nu"),) * k)

    def raised(self, j: int) -> HomogIndex:
        """Index with the j-th order (0-based) raised by one."""
        j = validate_integer(j, "j", minimum=0, maximum=self.k - 1)
        vector = list(self.nu_vector)
        vector[j] = vector[j] + 1
        return HomogIndex(nu_vector=tuple(vector))

    def spec(self) -> LPolySpec:
        """The equivalent LPolySpec with every argument equal to 1."""
        return LPolySpec(orders=self.nu_vector, args=tuple(Fraction(1) for _ in self.nu_vector))


# --------------------------------------------------------------------------- #
# l_r^(nu) kernels
# --------------------------------------------------------------------------- #


def _compositions(r: int, n: int) -> Iterator[tuple[int, ...]]:
    """All k with k_1 + ... + k_n = r, k_i >= 0 (stars and bars)."""
    for bars in combinations(range(r + n - 1), n - 1):
        parts = []
        previous = -1
        for bar in bars:
            parts.append(bar - previous - 1)
            previous = bar
        parts.append(r + n - 1 - previous - 1)
        yield tuple(parts)


def _factor_weight(x: Scalar, nu: Scalar, k: int) -> Scalar:
    """x^k / (k! * Gamma(nu + k + 1))."""
    return x**k * recip_gamma_scalar(nu + k + 1) / math.factorial(k)


def _closed_form(r: int, spec: LPolySpec) -> Scalar:
    total: Scalar = Fraction(0)
    for ks in _compositions(r, len(spec.args)):
        term: Scalar = Fraction(1)
        for x, nu, k in zip(spec.args, spec.orders, ks):
            term = term * _factor_weight(x, nu, k)
        total = total + term
    return math.factorial(r) * total


def l_table(r_max: int, spec: LPolySpec) -> list[Scalar]:
    """l_0 .. l_{r_max} of ``spec`` by peeling one variable at a time.

    Folds in the factors left to right using

        l_t(x_1..x_m) = t! * sum_s x_m^(t-s) / ((t-s)! Gamma(nu_m+t-s+1)) * l_s(x_1..x_{m-1}) / s!
    """
    r_max = validate_integer(r_max, "r_max", minimum=0)
    first_x, first_nu = spec.args[0], spec.orders[0]
    # reduced values l_s / s!
    reduced = [_factor_weight(first_x, first_nu, s) for s in range(r_max + 1)]
    for x, nu in zip(spec.args[1:], spec.orders[1:]):
        weights = [_factor_weight(x, nu, j) for j in range(r_max + 1)]
        reduced = [
            sum((weights[t - s] * reduced[s] for s in range(t + 1)), Fraction(0))
            for t in range(r_max + 1)
        ]
    return [math.factorial(t) * value for t, value in enumerate(reduced)]


def l_poly_nu(r: int, spec: LPolySpec, method: str = "closed-form") -> LValue:
    """Evaluate l_r^{(nu_1..nu_n)}(x_1..x_n).

    Args:
        r: Nonnegative index.
        spec: Orders and arguments.
        method: ``closed-form`` (sum over compositions) or ``recursion``
            (variable peeling).

    Returns:
        LValue, exact when all orders are nonnegative integers and all
        arguments rational.
    """
    r = validate_integer(r, "r", minimum=0)
    method = validate_enum(method, "method", METHODS, case_sensitive=True)
    if method == Provenance.RECURSION.value:
        value = l_table(r, spec)[r]
    else:
        value = _closed_form(r, spec)
    return LValue(value=value, index=Fraction(r), provenance=Provenance(method))


def l_poly(r: int, args: Sequence[Scalar | int], method: str = "closed-form") -> LValue:
    """Evaluate the plain l-polynomial l_r(x_1..x_n)."""
    return l_poly_nu(r, LPolySpec.plain(args), method=method)


def l_homog(r: int, idx: HomogIndex, method: str = "closed-form") -> LValue:
    """l_r^{{nu}}(k): the nu-indexed polynomial at k unit arguments."""
    return l_poly_nu(r, idx.spec(), method=method)


def l_poly_in_variable(r: int, args: Sequence[Scalar | int], index: int) -> list[Scalar]:
    """Coefficients of l_r viewed as a polynomial in ``args[index]``.

    The entry at ``args[index]`` is ignored. Coefficient j is
    r!/(j!)^2 * l_{r-j}(others)/(r-j)!.
    """
    r = validate_integer(r, "r", minimum=0)
    index = validate_integer(index, "index", minimum=0, maximum=len(args) - 1)
    others = [a for i, a in enumerate(args) if i != index]
    if others:
        rest = l_table(r, LPolySpec.plain(others))
    else:
        rest = [Fraction(1)] + [Fraction(0)] * r
    return [
        Fraction(math.factorial(r), math.factorial(j) ** 2) * rest[r - j] / math.factorial(r - j)
        for j in range(r + 1)
    ]


def laguerre_derivative(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Apply d/dx x d/dx to a polynomial given by exact coefficients.

    c_k x^k maps to c_k k^2 x^(k-1); a constant maps to the zero polynomial.
    """
    if len(coeffs) <= 1:
        return [Fraction(0)]
    return [Fraction(c) * k * k for k, c in enumerate(coeffs) if k > 0]


# --------------------------------------------------------------------------- #
# Fractional index
# --------------------------------------------------------------------------- #


def normalized_l_terms(ratios: Sequence[float]) -> Iterator[float]:
    """Yield e_s = (s!)^2 * sum_{|k|=s} prod y_i^k_i / (k_i!)^2 for s = 0, 1, ...

    ``ratios`` are the arguments divided by the dominant one; with no ratios
    the sequence is 1, 0, 0, ...
    """
    if not ratios:
        yield 1.0
        while True:
            yield 0.0

    # levels[m][s] = e_s over the first m + 1 ratios
    levels: list[list[float]] = [[] for _ in ratios]
    s = 0
    while True:
        row = [1.0]
        for j in range(1, s + 1):
            row.append(row[-1] * (s - j + 1) / j)
        levels[0].append(ratios[0] ** s)
        for m in range(1, len(ratios)):
            y = ratios[m]
            previous = levels[m - 1]
            levels[m].append(
                math.fsum(row[j] * row[j] * previous[j] * y ** (s - j) for j in range(s + 1))
            )
        yield levels[-1][s]
        s += 1


def convergence_ratio(args: Sequence[float]) -> float:
    """rho = (sum_{i<n} sqrt(x_i))^2 / x_n for the fractional-index series."""
    head = math.fsum(math.sqrt(x) for x in args[:-1])
    return head * head / args[-1]


def l_frac(
    nu: Scalar | int,
    args: Sequence[float | Fraction | int],
    max_terms: int = DEFAULT_MAX_TERMS,
    tol: float = DEFAULT_TOL,
) -> EvalReport:
    """l_nu(x_1..x_n) for real index nu, the last argument being dominant.

    Sums Gamma(nu+1) * sum_s x_n^(nu-s) l_s(x_1..x_{n-1}) / (s! Gamma(nu+1-s)^2).
    A nonnegative integral ``nu`` terminates the series and reproduces
    :func:`l_poly`, so no ratio condition is applied then.

    Raises:
        InputValidationError: Non-positive arguments.
        DomainError: A negative integral index.
        DivergenceError: rho >= 1 (see :func:`convergence_ratio`).
        NonConvergenceError: ``max_terms`` exhausted; carries the partial sum.
    """
    nu = as_scalar(nu, "nu")
    tol = validate_real(tol, "tol", minimum=0.0, exclusive_minimum=True)
    max_terms = validate_integer(max_terms, "max_terms", minimum=1)
    if not args:
        raise DomainError("l_frac needs at least one argument")
    xs = [validate_real(x, "args", minimum=0.0, exclusive_minimum=True) for x in args]

    nu_f = float(nu)
    terminating = nu_f.is_integer() and nu_f >= 0
    if nu_f.is_integer() and nu_f < 0:
        raise DomainError("l_frac is undefined at negative integral index", details={"nu": nu_f})

    rho = convergence_ratio(xs)
    if not terminating and rho >= 1.0:
        raise DivergenceError(
            f"fractional l-series diverges: rho={rho:.6g} >= 1",
            rho=rho,
            condition="(sum_{i<n} sqrt(x_i))^2 / x_n < 1",
            stated_condition="x_n > x_{n-1} > ... > x_1",
        )

    dominant = xs[-1]
    lead = dominant**nu_f * recip_gamma(nu_f + 1.0)

    def terms() -> Iterator[float]:
        weight = 1.0
        for s, e_s in enumerate(normalized_l_terms([x / dominant for x in xs[:-1]])):
            yield lead * e_s * weight
            weight *= ((nu_f - s) / (s + 1)) ** 2

    report = sum_series(terms(), tol=tol, max_terms=max_terms)
    if not report.converged:
        logger.warning("l_frac(%s) did not converge within %d terms", nu_f, max_terms)
        raise NonConvergenceError(
            f"fractional l-series did not converge within {max_terms} terms (rho={rho:.6g})",
            best_estimate=report.value,
            terms_used=report.terms_used,
        )
    logger.debug("l_frac(%s) converged in %d terms (rho=%.4g)", nu_f, report.terms_used, rho)
    return report


# --------------------------------------------------------------------------- #
# B polynomials
# --------------------------------------------------------------------------- #


@lru_cache(maxsize=4096)
def _b_poly_cached(n: int, m: int) -> int:
    if m == 0:
        return 1 if n == 0 else 0
    return sum(math.comb(n, s) ** 2 * _b_poly_cached(s, m - 1) for s in range(n + 1))


def b_poly(n: int, m: int) -> Fraction:
    """B_n(m) with B_n(0) = delta_{n,0} and B_n(m) = sum_s C(n,s)^2 B_s(m-1)."""
    n = validate_integer(n, "n", minimum=0)
    m = validate_integer(m, "m", minimum=0)
    return Fraction(_b_poly_cached(n, m))


def b_poly_nu(r: int, nu: Scalar | int, k: int) -> Scalar:
    """B_r^{(nu)}(k) = Gamma(nu+1)^(k-1) Gamma(r+nu+1) l_r^{{nu}}(k)."""
    r = validate_integer(r, "r", minimum=0)
    k = validate_integer(k, "k", minimum=1)
    nu = as_scalar(nu, "nu")
    validate_real(nu, "nu", minimum=-1.0, exclusive_minimum=True)
    lvalue = l_homog(r, HomogIndex.uniform(nu, k)).value
    return gamma_scalar(nu + 1) ** (k - 1) * gamma_scalar(nu + r + 1) * lvalue


# --------------------------------------------------------------------------- #
# Classical polynomials
# --------------------------------------------------------------------------- #


def jacobi_poly(n: int, alpha: Scalar | int, beta: Scalar | int, x: Scalar | int) -> Scalar:
    """P_n^{(alpha,beta)}(x) = sum_s C(n+alpha,s) C(n+beta,n-s) ((x-1)/2)^(n-s) ((x+1)/2)^s."""
    n = validate_integer(n, "n", minimum=0)
    alpha, beta, x = as_scalar(alpha, "alpha"), as_scalar(beta, "beta"), as_scalar(x, "x")
    lower = (x - 1) / 2
    upper = (x + 1) / 2
    total: Scalar = Fraction(0)
    for s in range(n + 1):
        total = total + (
            general_binomial(n + alpha, s)
            * general_binomial(n + beta, n - s)
            * lower ** (n - s)
            * upper**s
        )
    return total


def laguerre2(n: int, x: Scalar | int, y: Scalar | int) -> Scalar:
    """Two-variable Laguerre L_n(x,y) = n! sum_s (-x)^s y^(n-s) / ((s!)^2 (n-s)!)."""
    n = validate_integer(n, "n", minimum=0)
    x, y = as_scalar(x, "x"), as_scalar(y, "y")
    total: Scalar = Fraction(0)
    for s in range(n + 1):
        total = total + (-x) ** s * y ** (n - s) / (math.factorial(s) ** 2 * math.factorial(n - s))
    return math.factorial(n) * total
