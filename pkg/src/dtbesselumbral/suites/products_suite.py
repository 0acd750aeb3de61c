"""Verification suite: product expansions against the Cauchy-product oracle."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement

from dtbesselumbral.besselfam import bessel_j, mod_i_tilde
from dtbesselumbral.products import (
    OrderSpec,
    ScaleSpec,
    derivative_coefficients,
    derivative_product,
    direct_product_derivative,
    eval_product,
    finite_difference_derivative,
    generating_check,
    oracle_cauchy_product,
    power_mod_i,
    product_expansion,
)
from dtbesselumbral.suites.base import BaseSuite, SuiteBuilder

ORACLE_ORDERS = (Fraction(0), Fraction(1), Fraction(2))
ORACLE_SQUARES = (Fraction(1), Fraction(2), Fraction(4), Fraction(9))
ORACLE_TRUNCATION = 10
POINTWISE_TRUNCATION = 40
DERIVATIVE_SCALES = ((Fraction(1), Fraction(1, 2)), (Fraction(3, 2), Fraction(1)))
GENERATING_ORDERS = (
    (Fraction(0), Fraction(0)),
    (Fraction(1), Fraction(0)),
    (Fraction(1, 2), Fraction(1, 2)),
)
GENERATING_ARGS = ((1.0, 1.0), (0.5, 2.0), (2.0, 1.5))
GENERATING_T = (0.25, 0.5, 1.0)


class ProductsSuite(BaseSuite):
    """Oracle equivalence, pointwise values, powers, derivatives and generating function."""

    name = "products"
    description = "Bessel product expansions, powers, shifted series and derivatives"

    def build(self, builder: SuiteBuilder) -> None:
        self._oracle_equivalence(builder)
        self._worked_examples(builder)
        self._pointwise(builder)
        self._powers(builder)
        self._derivatives(builder)
        self._generating_function(builder)

    @staticmethod
    def _oracle_equivalence(builder: SuiteBuilder) -> None:
        pool = [(nu, sq) for nu in ORACLE_ORDERS for sq in ORACLE_SQUARES]
        for n in range(1, 5):
            with builder.guard(f"oracle equivalence n={n}"):
                checked = 0
                mismatched: list[str] = []
                for combo in combinations_with_replacement(pool, n):
                    orders = OrderSpec(orders=tuple(nu for nu, _ in combo))
                    scales = ScaleSpec.from_squares([sq for _, sq in combo])
                    closed = product_expansion(orders, scales, ORACLE_TRUNCATION)
                    oracle = oracle_cauchy_product(orders, scales, ORACLE_TRUNCATION)
                    checked += 1
                    if closed != oracle:
                        mismatched.append(str(combo))
                builder.check(
                    f"product_expansion == oracle_cauchy_product, n={n}, r<={ORACLE_TRUNCATION}",
                    not mismatched,
                    expected=f"{checked} identical series",
                    got=f"{checked - len(mismatched)} identical series",
                )

    @staticmethod
    def _worked_examples(builder: SuiteBuilder) -> None:
        two = product_expansion(OrderSpec.zeros(2), ScaleSpec.from_scales([1, 1]), 2)
        builder.exact("J_0(x)^2 through u^2", [Fraction(1), Fraction(-2), Fraction(3, 2)], list(two.coeffs))
        three = oracle_cauchy_product(OrderSpec.zeros(3), ScaleSpec.from_scales([1, 1, 1]), 2)
        builder.exact("J_0(x)^3 u^2-coefficient", Fraction(15, 4), three.coeffs[2])
        skew = product_expansion(OrderSpec.zeros(2), ScaleSpec.from_scales([2, 1]), 1)
        builder.exact("J_0(2x) J_0(x) through u^1", [Fraction(1), Fraction(-5)], list(skew.coeffs))
        single = product_expansion(OrderSpec.zeros(1), ScaleSpec.from_scales([1]), 6)
        builder.exact(
            "single factor reproduces J_0",
            [Fraction((-1) ** r, math.factorial(r) ** 2) for r in range(7)],
            list(single.coeffs),
        )

    @staticmethod
    def _pointwise(builder: SuiteBuilder) -> None:
        cases = (
            ((0, 0), (1, 1)),
            ((1, 0), (2, Fraction(1, 2))),
            ((Fraction(1, 2), 2), (1, 3)),
            ((0, 1, 2), (1, -2, Fraction(3, 2))),
        )
        for orders_raw, scales_raw in cases:
            orders = OrderSpec(orders=tuple(orders_raw))
            scales = ScaleSpec.from_scales(list(scales_raw))
            series = product_expansion(orders, scales, POINTWISE_TRUNCATION)
            for x in (0.3, 0.7, 1.5):
                direct = 1.0
                for nu, a in zip(orders.orders, scales.scales):
                    direct *= bessel_j(nu, float(a) * x).value
                builder.close(
                    f"series of {orders_raw} x {scales_raw} at x={x}",
                    direct,
                    eval_product(series, x).value,
                    1e-12,
                )
        square = product_expansion(OrderSpec.zeros(2), ScaleSpec.from_scales([1, 1]), 30)
        builder.close("J_0(1)^2", bessel_j(0, 1).value ** 2, eval_product(square, 1).value, 1e-13)
        builder.close("J_0(0)^2", 1.0, eval_product(square, 0).value, 1e-15)

    @staticmethod
    def _powers(builder: SuiteBuilder) -> None:
        builder.exact("I~_0^2 u^2-coefficient", Fraction(3, 2), power_mod_i(0, 2, 2).coeffs[2])
        for nu in (Fraction(0), Fraction(1, 2), Fraction(1)):
            for k in range(1, 4):
                series = power_mod_i(nu, k, 40)
                for x in (0.5, 1.0, 2.0):
                    builder.close(
                        f"I~_{nu}({x})^{k}",
                        mod_i_tilde(nu, x).value ** k,
                        eval_product(series, x).value,
                        1e-10,
                    )

    @staticmethod
    def _derivatives(builder: SuiteBuilder) -> None:
        for a, b in DERIVATIVE_SCALES:
            scales = ScaleSpec.from_scales([a, b])
            builder.close(
                f"f''(0;{a},{b}) = -(a^2+b^2)/2",
                -(a * a + b * b) / 2,
                derivative_product(2, scales, 0),
                1e-14,
            )
            series = product_expansion(OrderSpec.zeros(2), scales, 30)
            for n in range(5):
                for x in (Fraction(0), Fraction(7, 10)):
                    with builder.guard(f"D^{n} f({x};{a},{b})"):
                        builder.close(
                            f"D^{n} f({x};{a},{b}) Hermite sum vs finite differences",
                            finite_difference_derivative(series, n, x),
                            derivative_product(n, scales, x),
                            1e-5,
                        )
                    with builder.guard(f"D^{n} f({x};{a},{b}) direct product"):
                        builder.close(
                            f"D^{n} f({x};{a},{b}) Hermite sum vs differences of J_0({a}x) J_0({b}x)",
                            direct_product_derivative(n, OrderSpec.zeros(2), scales, x),
                            derivative_product(n, scales, x),
                            1e-5,
                        )
            for n in range(7):
                builder.exact(
                    f"D^{n} f(x;{a},{b}) termwise == Hermite route, R=8",
                    derivative_coefficients(n, scales, 8, method="termwise"),
                    derivative_coefficients(n, scales, 8, method="hermite"),
                )

    @staticmethod
    def _generating_function(builder: SuiteBuilder) -> None:
        for orders_raw in GENERATING_ORDERS:
            orders = OrderSpec(orders=orders_raw)
            label = tuple(str(v) for v in orders_raw)
            builder.exact(
                f"generating function nu={label} t=0",
                0.0,
                generating_check(orders, (1.0, 2.0), 0, 5),
            )
            for args in GENERATING_ARGS:
                for t in GENERATING_T:
                    builder.close(
                        f"generating function nu={label} x={args} t={t}",
                        0.0,
                        generating_check(orders, args, t, 25),
                        1e-12,
                    )
