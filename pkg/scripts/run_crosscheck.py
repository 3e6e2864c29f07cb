#!/usr/bin/env python3
"""Exhaustive + sampled run of the paired-property harness.

Thin wrapper over the CLI verb so the harness can be thrown at bigger
random samples overnight:

    python scripts/run_crosscheck.py --max-n 6 --samples 50 --seed 7
"""

import sys

from equilab.cli import main

if __name__ == "__main__":
    sys.exit(main(["crosscheck", "--text"] + sys.argv[1:]))
