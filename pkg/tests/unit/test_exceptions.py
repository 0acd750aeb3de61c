"""Tests for the exception hierarchy and its structured details."""

from __future__ import annotations

from dtbesselumbral.exceptions import (
    BesselUmbralError,
    CommandNotFoundError,
    ConfigurationError,
    DeskScaleError,
    DivergenceError,
    DomainError,
    InputValidationError,
    NonConvergenceError,
    NumericalError,
    SuiteNotFoundError,
)


class TestHierarchy:
    """Tests for the exception class tree."""

    def test_everything_derives_from_base(self) -> None:
        """All project exceptions share one base."""
        for exc_type in (
            ConfigurationError,
            InputValidationError,
            SuiteNotFoundError,
            CommandNotFoundError,
            NumericalError,
        ):
            assert issubclass(exc_type, BesselUmbralError)

    def test_numerical_family(self) -> None:
        """Domain, divergence and non-convergence are numerical errors."""
        assert issubclass(DomainError, NumericalError)
        assert issubclass(DivergenceError, NumericalError)
        assert issubclass(NonConvergenceError, NumericalError)

    def test_desk_scale_is_domain_error(self) -> None:
        """DeskScaleError is caught as a DomainError."""
        assert issubclass(DeskScaleError, DomainError)


class TestInputValidationError:
    """Tests for InputValidationError."""

    def test_carries_field_and_reason(self) -> None:
        """Field and reason are stored."""
        exc = InputValidationError("bad", field="scales", reason="zero_scale")
        assert str(exc) == "bad"
        assert exc.field == "scales"
        assert exc.reason == "zero_scale"

    def test_defaults_none(self) -> None:
        """Field and reason are optional."""
        exc = InputValidationError("bad")
        assert exc.field is None
        assert exc.reason is None


class TestNumericalErrors:
    """Tests for the categories and details of numerical errors."""

    def test_domain_error_category(self) -> None:
        """DomainError defaults to DOMAIN_ERROR."""
        exc = DomainError("outside", details={"x": 1})
        assert exc.category == "DOMAIN_ERROR"
        assert exc.message == "outside"
        assert exc.details == {"x": 1}

    def test_desk_scale_category(self) -> None:
        """DeskScaleError has its own category."""
        assert DeskScaleError("too far").category == "DESK_SCALE"

    def test_divergence_details(self) -> None:
        """rho and both conditions end up in details."""
        exc = DivergenceError("diverges", rho=1.0, condition="|a| > |b|", stated_condition="a > b")
        assert exc.category == "DIVERGENT"
        assert exc.rho == 1.0
        assert exc.details == {"rho": 1.0, "condition": "|a| > |b|", "stated_condition": "a > b"}

    def test_divergence_without_details(self) -> None:
        """No rho and no condition leave details empty."""
        assert DivergenceError("diverges").details is None

    def test_non_convergence_best_estimate(self) -> None:
        """The best estimate and budget consumed are kept."""
        exc = NonConvergenceError("stuck", best_estimate=0.5, terms_used=400)
        assert exc.category == "NON_CONVERGENCE"
        assert exc.best_estimate == 0.5
        assert exc.details == {"best_estimate": 0.5, "terms_used": 400}
