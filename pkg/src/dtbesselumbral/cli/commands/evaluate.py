"""Command: eval.

Evaluates the truncated product series at a point and sets it beside the
direct product of single-factor Bessel series.
"""

from __future__ import annotations

import logging
import math
from typing import Any

from dtbesselumbral.besselfam import bessel_j
from dtbesselumbral.cli.base import EXIT_FAILURE, EXIT_OK, BaseCommand, CommandResult
from dtbesselumbral.products import OrderSpec, ScaleSpec, eval_product, product_expansion

logger = logging.getLogger(__name__)

CSV_HEADER = ["x", "value", "direct", "residual", "last_term", "terms_used", "converged"]


class EvaluateCommand(BaseCommand):
    """Pointwise value of prod_i J_{nu_i}(a_i x) from its truncated series."""

    name = "eval"
    description = "Evaluate a Bessel product series at x and compare with the direct product"

    def execute(self, params: dict[str, Any]) -> CommandResult:
        scales = self.parse_scales(params)
        orders = self.parse_orders(params, len(scales))
        x = self.parse_point(params)
        numerics = self.config.numerics

        self.check_desk_scale(x, scales)

        series = product_expansion(
            OrderSpec(orders=orders), ScaleSpec.from_scales(list(scales)), numerics.trunc
        )
        report = eval_product(series, float(x), tol=numerics.tol)

        direct = math.prod(
            bessel_j(nu, a * x, tol=numerics.series_tol, max_terms=numerics.max_terms).value
            for nu, a in zip(orders, scales)
        )
        residual = abs(report.value - direct) / max(1.0, abs(direct))
        logger.debug("eval at x=%s: series %.17g, direct %.17g", x, report.value, direct)

        data: dict[str, Any] = {
            "command": self.name,
            "orders": [str(v) for v in orders],
            "scales": [str(v) for v in scales],
            "x": str(x),
            "R": series.R,
            "value": self.real(report.value),
            "direct": self.real(direct),
            "residual": self.real(residual),
            "last_term": self.real(report.last_term),
            "terms_used": report.terms_used,
            "converged": report.converged,
        }
        rows = [
            CSV_HEADER,
            [
                data["x"],
                data["value"],
                data["direct"],
                data["residual"],
                data["last_term"],
                str(report.terms_used),
                "true" if report.converged else "false",
            ],
        ]
        exit_code = EXIT_OK if report.converged else EXIT_FAILURE
        summary = f"eval: value={data['value']} converged={str(report.converged).lower()}"
        if not report.converged:
            summary += f" (last term {data['last_term']} above tol; raise --trunc)"
        return CommandResult.ok(data, rows=rows, exit_code=exit_code, summary=summary)
