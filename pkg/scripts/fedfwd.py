#!/usr/bin/env python
"""命令行入口，可在仓库根目录直接运行: python scripts/fedfwd.py run --config exp.json"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.backend.fedfwd.expcli.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
