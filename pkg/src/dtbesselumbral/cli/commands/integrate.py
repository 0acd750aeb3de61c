"""Command: integrate.

Integral over the real line of J_0(a x) J_0(b x), or of a three-factor J_0
product, in closed form (or fractional l-series) beside quadrature.
"""

from __future__ import annotations

from typing import Any

from dtbesselumbral.cli.base import EXIT_FAILURE, EXIT_OK, BaseCommand, CommandResult
from dtbesselumbral.exceptions import InputValidationError
from dtbesselumbral.integrals import n_bessel_pair, two_j0_pair

CSV_HEADER = [
    "method",
    "closed_form",
    "quadrature",
    "residual",
    "quadrature_error",
    "intervals_used",
    "terms_used",
]


class IntegrateCommand(BaseCommand):
    """Closed-form/series integral with its quadrature oracle."""

    name = "integrate"
    description = "Integrate a product of two or three J_0 factors over the real line"

    def execute(self, params: dict[str, Any]) -> CommandResult:
        scales = self.parse_scales(params, min_length=2, max_length=3, allow_zero=True)
        if all(a == 0 for a in scales):
            raise InputValidationError(
                message="Parameter 'scales' needs at least one nonzero entry",
                field="scales",
                reason="zero_scale",
            )
        tol = self.config.numerics.tol
        quadrature = self.config.quadrature
        quadrature_tol = tol * quadrature.tol_ratio

        ordered = sorted(scales, key=abs, reverse=True)
        if len(ordered) == 2:
            method = "elliptic"
            pair = two_j0_pair(
                ordered[0],
                ordered[1],
                quadrature_tol=quadrature_tol,
                interval_budget=quadrature.interval_budget,
                interval_epsrel=quadrature.interval_epsrel,
            )
        else:
            method = "fractional-l"
            pair = n_bessel_pair(
                [a for a in ordered if a != 0],
                quadrature_tol=quadrature_tol,
                series_tol=self.config.numerics.series_tol,
                interval_budget=quadrature.interval_budget,
                interval_epsrel=quadrature.interval_epsrel,
            )

        data: dict[str, Any] = {
            "command": self.name,
            "scales": [str(v) for v in scales],
            "method": method,
            "closed_form": self.real(pair.closed_form),
            "quadrature": self.real(pair.quadrature),
            "residual": self.real(pair.residual),
            "tolerance": self.real(tol),
            "quadrature_error": self.real(pair.quadrature_error),
            "intervals_used": pair.intervals_used,
            "terms_used": pair.terms_used,
        }
        rows = [
            CSV_HEADER,
            [
                method,
                data["closed_form"],
                data["quadrature"],
                data["residual"],
                data["quadrature_error"],
                str(pair.intervals_used),
                str(pair.terms_used),
            ],
        ]
        passed = pair.residual <= tol
        return CommandResult.ok(
            data,
            rows=rows,
            exit_code=EXIT_OK if passed else EXIT_FAILURE,
            summary=(
                f"integrate: {data['closed_form']} vs quadrature {data['quadrature']}, "
                f"residual {pair.residual:.3e}"
            ),
        )
