"""Input validation utilities for dtBesselUmbral."""

from .validators import (
    validate_desk_scale,
    validate_enum,
    validate_integer,
    validate_orders,
    validate_rational_list,
    validate_real,
    validate_required,
    validate_scales,
)

__all__ = [
    "validate_desk_scale",
    "validate_enum",
    "validate_integer",
    "validate_orders",
    "validate_rational_list",
    "validate_real",
    "validate_required",
    "validate_scales",
]
