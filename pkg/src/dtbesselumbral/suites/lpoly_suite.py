"""Verification suite: l-polynomials, B polynomials and their classical links."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from dtbesselumbral.lpoly import (
    HomogIndex,
    LPolySpec,
    b_poly,
    b_poly_nu,
    jacobi_poly,
    l_frac,
    l_homog,
    l_poly,
    l_poly_in_variable,
    l_poly_nu,
    laguerre_derivative,
)
from dtbesselumbral.scalarkit import elliptic_2f1_half, recip_gamma_scalar
from dtbesselumbral.suites.base import BaseSuite, SuiteBuilder

ARG_POOL = (Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2))
NU_POOL = (Fraction(0), Fraction(1, 2), Fraction(1))
JACOBI_POINTS = (
    Fraction(0),
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(1),
    Fraction(-1),
    Fraction(2),
)
RECURSION_TOL = 1e-12


class LPolySuite(BaseSuite):
    """Method agreement, symmetries and recursions of the l-polynomial family."""

    name = "lpoly"
    description = "l-polynomials, B polynomials, Jacobi and Laguerre links"

    def build(self, builder: SuiteBuilder) -> None:
        self._method_agreement(builder)
        self._symmetry_and_homogeneity(builder)
        self._laguerre_lowering(builder)
        self._homogeneous_recursions(builder)
        self._b_polynomials(builder)
        self._jacobi_link(builder)
        self._fractional_index(builder)

    @staticmethod
    def _method_agreement(builder: SuiteBuilder) -> None:
        for n in range(1, 5):
            for args in combinations_with_replacement(ARG_POOL, n):
                label = ",".join(str(a) for a in args)
                with builder.guard(f"l_poly closed-form == recursion ({label})"):
                    closed = [l_poly(r, args).value for r in range(13)]
                    recursive = [l_poly(r, args, method="recursion").value for r in range(13)]
                    builder.exact(f"l_poly closed-form == recursion ({label}), r<=12", closed, recursive)

        builder.exact("l_1(3,1) = 4", Fraction(4), l_poly(1, (3, 1)).value)
        builder.exact("l_2(4,1) = 33/2", Fraction(33, 2), l_poly(2, (4, 1)).value)
        builder.exact("l_3(1,1) = 10/3", Fraction(10, 3), l_poly(3, (1, 1)).value)
        builder.exact("l_2(1,1,1) = 15/2", Fraction(15, 2), l_poly(2, (1, 1, 1)).value)
        builder.exact(
            "l_1^(1,0)(1,1) = 3/2",
            Fraction(3, 2),
            l_poly_nu(1, LPolySpec(orders=(1, 0), args=(1, 1))).value,
        )

    @staticmethod
    def _symmetry_and_homogeneity(builder: SuiteBuilder) -> None:
        args = (Fraction(1, 2), Fraction(2), Fraction(3))
        reference = l_poly(6, args).value
        matches = all(l_poly(6, perm).value == reference for perm in permutations(args))
        builder.check("l_6 invariant under permutations of (1/2,2,3)", matches)

        orders = (Fraction(0), Fraction(1), Fraction(2))
        reference = l_poly_nu(5, LPolySpec(orders=orders, args=args)).value
        joint = all(
            l_poly_nu(5, LPolySpec(orders=tuple(o for o, _ in pairs), args=tuple(a for _, a in pairs))).value
            == reference
            for pairs in permutations(zip(orders, args))
        )
        builder.check("l_5^(0,1,2) invariant under joint permutations", joint)

        scale = Fraction(3, 2)
        for r in range(9):
            builder.exact(
                f"l_{r}(3/2 x) = (3/2)^{r} l_{r}(x)",
                scale**r * l_poly(r, args).value,
                l_poly(r, tuple(scale * a for a in args)).value,
            )

    @staticmethod
    def _laguerre_lowering(builder: SuiteBuilder) -> None:
        cases = (
            ((Fraction(0), Fraction(3)), 0),
            ((Fraction(2), Fraction(0)), 1),
            ((Fraction(0), Fraction(1, 2), Fraction(2)), 0),
            ((Fraction(1), Fraction(3), Fraction(0)), 2),
        )
        for args, index in cases:
            for r in range(1, 11):
                lowered = laguerre_derivative(l_poly_in_variable(r, args, index))
                expected = [r * c for c in l_poly_in_variable(r - 1, args, index)]
                label = f"d x d l_{r} = {r} l_{r - 1} in x_{index + 1} (n={len(args)})"
                builder.exact(label, expected, lowered)

    @staticmethod
    def _homogeneous_recursions(builder: SuiteBuilder) -> None:
        for nu in NU_POOL:
            for k in range(1, 5):
                idx = HomogIndex.uniform(nu, k)
                for r in range(11):
                    raised = sum(
                        (l_homog(r, idx.raised(j)).value for j in range(k)), Fraction(0)
                    )
                    builder.close(
                        f"index raise l_{r + 1}^{{{nu}}}({k})",
                        l_homog(r + 1, idx).value,
                        raised,
                        RECURSION_TOL,
                    )

                    split = sum(
                        (
                            math.comb(r, j) * l_homog(j, idx).value * recip_gamma_scalar(r - j + nu + 1)
                            for j in range(r + 1)
                        ),
                        Fraction(0),
                    )
                    builder.close(
                        f"split l_{r}^{{{nu}}}({k + 1})",
                        l_homog(r, HomogIndex.uniform(nu, k + 1)).value,
                        split,
                        RECURSION_TOL,
                    )

                    for s in (1, 2):
                        other = HomogIndex.uniform(nu, s)
                        convolution = sum(
                            (
                                math.comb(r, j) * l_homog(r - j, other).value * l_homog(j, idx).value
                                for j in range(r + 1)
                            ),
                            Fraction(0),
                        )
                        builder.close(
                            f"convolution l_{r}^{{{nu}}}({k}+{s})",
                            l_homog(r, HomogIndex.uniform(nu, k + s)).value,
                            convolution,
                            RECURSION_TOL,
                        )

    @staticmethod
    def _b_polynomials(builder: SuiteBuilder) -> None:
        for r in range(21):
            builder.exact(f"B_{r}(2) = binom({2 * r},{r})", Fraction(math.comb(2 * r, r)), b_poly(r, 2))
        for n in range(6):
            builder.exact(f"B_{n}(1) = 1", Fraction(1), b_poly(n, 1))
        builder.exact("B_1(3) = 3", Fraction(3), b_poly(1, 3))
        builder.exact("B_2(3) = 15", Fraction(15), b_poly(2, 3))
        for k in range(1, 5):
            for r in range(11):
                builder.close(
                    f"B_{r}^(0)({k}) = B_{r}({k})",
                    b_poly(r, k),
                    b_poly_nu(r, 0, k),
                    RECURSION_TOL,
                )

    @staticmethod
    def _jacobi_link(builder: SuiteBuilder) -> None:
        for x in JACOBI_POINTS:
            for r in range(11):
                builder.exact(
                    f"r! l_{r}((x-1)/2,(x+1)/2) = P_{r}(x) at x={x}",
                    jacobi_poly(r, 0, 0, x),
                    math.factorial(r) * l_poly(r, ((x - 1) / 2, (x + 1) / 2)).value,
                )
        builder.exact("P_2(1/2) = -1/8", Fraction(-1, 8), jacobi_poly(2, 0, 0, Fraction(1, 2)))

    @staticmethod
    def _fractional_index(builder: SuiteBuilder) -> None:
        with builder.guard("l_frac terminating series"):
            builder.close(
                "l_frac(3; 1,2,3) = l_3(1,2,3)",
                l_poly(3, (1, 2, 3)).value,
                l_frac(3, (1, 2, 3)).value,
                RECURSION_TOL,
            )
        with builder.guard("l_frac two-variable elliptic form"):
            builder.close(
                "l_{-1/2}(1,4) = 2F1(1/2,1/2;1;1/4) / (2 sqrt(pi))",
                elliptic_2f1_half(0.25) / (2.0 * math.sqrt(math.pi)),
                l_frac(Fraction(-1, 2), (1, 4)).value,
                1e-13,
            )
            builder.close(
                "l_{-1/2}(4) = 1/sqrt(4 pi)",
                1.0 / math.sqrt(4.0 * math.pi),
                l_frac(Fraction(-1, 2), (4,)).value,
                1e-15,
            )
