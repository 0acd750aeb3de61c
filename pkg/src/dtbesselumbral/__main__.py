"""Entry point for running dtBesselUmbral as a module.

Usage:
    python -m dtbesselumbral verify --suite all
"""

import sys

from dtbesselumbral.app import BesselUmbralApp


def main() -> None:
    """Main entry point for the application."""
    app = BesselUmbralApp()
    app.run()
    sys.exit(app.exit_code)


if __name__ == "__main__":
    main()
