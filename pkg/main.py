"""Main entrypoint for NameChar."""

import sys

from cli import app


def main():
    """Main entry point for the application."""
    sys.exit(app.run(sys.argv[1:]))


if __name__ == "__main__":
    main()
