"""Adaptive summation of term streams and truncated power-series products.

Every direct-series special function in the package funnels through
:func:`sum_series`, which stops after ``CONSECUTIVE_SMALL_TERMS`` terms in a
row fall below ``tol`` relative to the running sum.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from fractions import Fraction

from dtbesselumbral.models import EvalReport, Scalar

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-15
DEFAULT_MAX_TERMS = 400
CONSECUTIVE_SMALL_TERMS = 3


def sum_series(
    terms: Iterable[float],
    tol: float = DEFAULT_TOL,
    max_terms: int = DEFAULT_MAX_TERMS,
    fixed_terms: int | None = None,
) -> EvalReport:
    """Sum a stream of terms with adaptive truncation.

    Args:
        terms: Term stream; consumed lazily.
        tol: Relative smallness threshold, measured against max(1, |sum|).
        max_terms: Budget for the adaptive mode.
        fixed_terms: When given, sum exactly this many terms and only report
            whether the last one is small.

    Returns:
        EvalReport; ``converged`` is False when the budget ran out first.
    """
    limit = fixed_terms if fixed_terms is not None else max_terms
    kept: list[float] = []
    running = 0.0
    small = 0
    last = 0.0

    stream_ended = True
    for term in terms:
        if len(kept) >= limit:
            stream_ended = False
            break
        kept.append(term)
        running += term
        last = term
        if fixed_terms is not None:
            continue
        if abs(term) <= tol * max(1.0, abs(running)):
            small += 1
            if small >= CONSECUTIVE_SMALL_TERMS:
                value = math.fsum(kept)
                return EvalReport(value=value, terms_used=len(kept), last_term=last, converged=True)
        else:
            small = 0

    value = math.fsum(kept)
    if stream_ended:
        # a finite stream summed completely is exact up to rounding
        return EvalReport(value=value, terms_used=len(kept), last_term=last, converged=True)
    if fixed_terms is not None:
        converged = abs(last) <= tol * max(1.0, abs(value))
        return EvalReport(value=value, terms_used=len(kept), last_term=last, converged=converged, tol=tol)
    logger.debug("Series budget of %d terms exhausted (last term %.3e)", limit, last)
    return EvalReport(value=value, terms_used=len(kept), last_term=last, converged=False)


def cauchy_product(left: Sequence[Scalar], right: Sequence[Scalar], degree: int) -> list[Scalar]:
    """Coefficients 0..degree of the product of two truncated power series.

    Missing coefficients count as zero; arithmetic stays exact for Fractions.
    """
    out: list[Scalar] = []
    for r in range(degree + 1):
        acc: Scalar = Fraction(0)
        for s in range(r + 1):
            if s < len(left) and r - s < len(right):
                acc = acc + left[s] * right[r - s]
        out.append(acc)
    return out
