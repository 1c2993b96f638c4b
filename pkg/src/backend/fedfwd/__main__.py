import sys

from src.backend.fedfwd.expcli.cli import main

if __name__ == "__main__":
    sys.exit(main())
