"""Stateless input validation functions for numerical parameters.

All validators raise InputValidationError with field name and reason
populated, enabling structured error responses and exit code 2.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from dtbesselumbral.exceptions import DeskScaleError, InputValidationError


def validate_required(params: dict[str, Any], *field_names: str) -> None:
    """Validate that all specified fields are present and non-empty.

    Args:
        params: Dictionary of command parameters.
        *field_names: Names of required fields.

    Raises:
        InputValidationError: If any required field is missing or empty.
    """
    for name in field_names:
        value = params.get(name)
        if value is None:
            raise InputValidationError(
                message=f"Missing required parameter: {name}",
                field=name,
                reason="required",
            )
        if isinstance(value, str) and not value.strip():
            raise InputValidationError(
                message=f"Parameter '{name}' must not be empty",
                field=name,
                reason="empty",
            )


def validate_integer(
    value: Any,
    field_name: str,
    minimum: int | None = None,
    maximum: int | None = None,
) -> int:
    """Validate and return an integer parameter.

    Args:
        value: The value to validate (int, integral Fraction or numeric string).
        field_name: Name of the parameter (for error messages).
        minimum: Optional minimum value (inclusive).
        maximum: Optional maximum value (inclusive).

    Returns:
        The validated integer value.

    Raises:
        InputValidationError: If validation fails.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be an integer",
            field=field_name,
            reason="invalid_type",
        )
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise InputValidationError(
                message=f"Parameter '{field_name}' must be an integer",
                field=field_name,
                reason="invalid_type",
            )
        value = value.numerator
    try:
        int_value = int(value)
    except (TypeError, ValueError):
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be an integer",
            field=field_name,
            reason="invalid_type",
        )

    if minimum is not None and int_value < minimum:
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be at least {minimum}",
            field=field_name,
            reason="below_minimum",
        )

    if maximum is not None and int_value > maximum:
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be at most {maximum}",
            field=field_name,
            reason="above_maximum",
        )

    return int_value


def validate_real(
    value: Any,
    field_name: str,
    minimum: float | None = None,
    maximum: float | None = None,
    exclusive_minimum: bool = False,
) -> float:
    """Validate and return a finite real parameter.

    Args:
        value: The value to validate (number or numeric string).
        field_name: Name of the parameter (for error messages).
        minimum: Optional lower bound.
        maximum: Optional upper bound (inclusive).
        exclusive_minimum: Whether the lower bound itself is rejected.

    Returns:
        The validated float value.

    Raises:
        InputValidationError: If validation fails.
    """
    if isinstance(value, bool):
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be a real number",
            field=field_name,
            reason="invalid_type",
        )
    try:
        real_value = float(Fraction(value)) if isinstance(value, str) else float(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be a real number",
            field=field_name,
            reason="invalid_type",
        )

    if not math.isfinite(real_value):
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be finite",
            field=field_name,
            reason="not_finite",
        )

    if minimum is not None:
        if exclusive_minimum and real_value <= minimum:
            raise InputValidationError(
                message=f"Parameter '{field_name}' must be greater than {minimum}",
                field=field_name,
                reason="below_minimum",
            )
        if not exclusive_minimum and real_value < minimum:
            raise InputValidationError(
                message=f"Parameter '{field_name}' must be at least {minimum}",
                field=field_name,
                reason="below_minimum",
            )

    if maximum is not None and real_value > maximum:
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be at most {maximum}",
            field=field_name,
            reason="above_maximum",
        )

    return real_value


def validate_enum(
    value: Any,
    field_name: str,
    valid_values: list[str],
    case_sensitive: bool = False,
) -> str:
    """Validate a value against a known set of options.

    Args:
        value: The value to validate.
        field_name: Name of the parameter (for error messages).
        valid_values: List of acceptable values.
        case_sensitive: Whether comparison is case-sensitive.

    Returns:
        The matched value (preserving case of valid_values if case-insensitive).

    Raises:
        InputValidationError: If value is not in valid_values.
    """
    if not isinstance(value, str):
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be a string",
            field=field_name,
            reason="invalid_type",
        )

    value = value.strip()

    if case_sensitive:
        if value in valid_values:
            return value
    else:
        value_lower = value.lower()
        for valid in valid_values:
            if valid.lower() == value_lower:
                return valid

    raise InputValidationError(
        message=f"Parameter '{field_name}' must be one of {valid_values} (got '{value}')",
        field=field_name,
        reason="invalid_value",
    )


def validate_rational_list(
    value: Any,
    field_name: str,
    min_length: int = 1,
    max_length: int | None = None,
) -> tuple[Fraction, ...]:
    """Parse a comma-separated list (or sequence) of rationals.

    Tokens such as ``"3"``, ``"-1/2"`` and ``"0.25"`` are all read exactly,
    so decimal input keeps the exact arithmetic path available.

    Raises:
        InputValidationError: If a token is not a finite rational or the
            length is out of range.
    """
    if isinstance(value, str):
        tokens: Sequence[Any] = [t for t in (p.strip() for p in value.split(",")) if t]
    elif isinstance(value, Sequence):
        tokens = value
    else:
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be a comma-separated list",
            field=field_name,
            reason="invalid_type",
        )

    parsed: list[Fraction] = []
    for token in tokens:
        if isinstance(token, bool):
            raise InputValidationError(
                message=f"Parameter '{field_name}' contains a non-numeric entry",
                field=field_name,
                reason="invalid_type",
            )
        try:
            parsed.append(Fraction(token))
        except (TypeError, ValueError, ZeroDivisionError, OverflowError):
            raise InputValidationError(
                message=f"Parameter '{field_name}' contains a non-numeric entry: {token!r}",
                field=field_name,
                reason="invalid_type",
            )

    if len(parsed) < min_length:
        raise InputValidationError(
            message=f"Parameter '{field_name}' needs at least {min_length} entries",
            field=field_name,
            reason="too_short",
        )
    if max_length is not None and len(parsed) > max_length:
        raise InputValidationError(
            message=f"Parameter '{field_name}' allows at most {max_length} entries",
            field=field_name,
            reason="too_long",
        )
    return tuple(parsed)


def validate_orders(values: Sequence[Any], field_name: str = "orders") -> None:
    """Bessel orders must be real and greater than -1.

    Raises:
        InputValidationError: If an order is not finite or is <= -1.
    """
    for nu in values:
        validate_real(nu, field_name, minimum=-1.0, exclusive_minimum=True)


def validate_scales(values: Sequence[Any], field_name: str = "scales") -> None:
    """Scales must be finite and nonzero.

    Raises:
        InputValidationError: If a scale is zero or not finite.
    """
    for a in values:
        if validate_real(a, field_name) == 0.0:
            raise InputValidationError(
                message=f"Parameter '{field_name}' entries must be nonzero",
                field=field_name,
                reason="zero_scale",
            )


def validate_desk_scale(x: Any, scales: Sequence[Any], bound: float) -> float:
    """Reach |x| * max|a| must stay within ``bound``.

    Returns:
        The reach.

    Raises:
        DeskScaleError: If the reach exceeds the bound.
    """
    reach = abs(validate_real(x, "x")) * max(abs(validate_real(a, "scales")) for a in scales)
    if reach > bound:
        raise DeskScaleError(
            f"|x| * max|a| = {reach:g} exceeds the desk-scale bound {bound:g}",
            details={"reach": reach, "bound": bound},
        )
    return reach
