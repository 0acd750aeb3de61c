"""Verification suites: self-checking grids over every numerical module."""

from .base import BaseSuite, CaseResult, SuiteBuilder, VerifyReport

__all__ = ["BaseSuite", "CaseResult", "SuiteBuilder", "VerifyReport"]
