"""Suite registry with auto-discovery of verification suites.

Scans configured modules for BaseSuite subclasses, registers them by name and
runs one or all of them, optionally on a thread pool. Reports always come
back in registration order, whatever order the threads finish in.
"""

from __future__ import annotations

import importlib
import inspect
import logging
from concurrent.futures import ThreadPoolExecutor

from dtbesselumbral.exceptions import SuiteNotFoundError
from dtbesselumbral.suites.base import BaseSuite, VerifyReport

logger = logging.getLogger(__name__)

ALL_SUITES = "all"

# Modules to scan for suite classes, in reporting order.
SUITE_PACKAGES = [
    "dtbesselumbral.suites.lpoly_suite",
    "dtbesselumbral.suites.besselfam_suite",
    "dtbesselumbral.suites.products_suite",
    "dtbesselumbral.suites.integrals_suite",
]


class SuiteRegistry:
    """Registry for auto-discovering and running verification suites."""

    def __init__(self) -> None:
        self._suites: dict[str, BaseSuite] = {}

    def discover_and_register(self) -> None:
        """Scan SUITE_PACKAGES for BaseSuite subclasses and register them."""
        for package_name in SUITE_PACKAGES:
            try:
                package = importlib.import_module(package_name)
            except ImportError:
                logger.debug("Suite module %s not found, skipping", package_name)
                continue

            for _, attr in inspect.getmembers(package, inspect.isclass):
                if (
                    issubclass(attr, BaseSuite)
                    and attr is not BaseSuite
                    and attr.__module__ == package.__name__
                    and isinstance(getattr(attr, "name", None), str)
                ):
                    self.register(attr())

    def register(self, suite: BaseSuite) -> None:
        """Register a suite instance under its name."""
        if suite.name in self._suites:
            logger.warning("Duplicate suite name '%s', overwriting", suite.name)
        self._suites[suite.name] = suite
        logger.debug("Registered suite: %s", suite.name)

    @property
    def names(self) -> list[str]:
        """Registered suite names in registration order."""
        return list(self._suites)

    def get_suite(self, name: str) -> BaseSuite | None:
        return self._suites.get(name)

    def run(self, name: str = ALL_SUITES, workers: int = 1) -> list[VerifyReport]:
        """Run one suite, or every suite for ``all``.

        Raises:
            SuiteNotFoundError: If ``name`` is neither ``all`` nor registered.
        """
        if name == ALL_SUITES:
            selected = list(self._suites.values())
        else:
            suite = self._suites.get(name)
            if suite is None:
                raise SuiteNotFoundError(
                    f"Suite '{name}' not found (available: {', '.join(self.names)})"
                )
            selected = [suite]

        if workers <= 1 or len(selected) == 1:
            return [suite.run() for suite in selected]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda s: s.run(), selected))

    @property
    def suite_count(self) -> int:
        return len(self._suites)
