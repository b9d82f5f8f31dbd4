#!/usr/bin/env python3
"""Run the complete verification sweep (the acceptance run) from a checkout."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fussforest.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main(["verify", "--suite", "all", *sys.argv[1:]]))
