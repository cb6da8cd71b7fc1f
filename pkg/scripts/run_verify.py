#!/usr/bin/env python3
"""Run the built-in verification sweep and exit with its status.

Equivalent to `skewhom verify`; extra CLI flags are passed through, e.g.

    python scripts/run_verify.py --theta 0,2/3 --samples 200 --format json
"""

import sys

from skewhom.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", *sys.argv[1:]]))
