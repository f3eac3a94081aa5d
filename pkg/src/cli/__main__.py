"""Entry point for python -m cli."""

import sys

from cli.handler import main

if __name__ == "__main__":
    sys.exit(main())
