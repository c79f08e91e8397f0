#!/usr/bin/env python3
"""Run the full verification suite and print one line per check.

Exit status is 0 iff every check passes (informational notes allowed).

Usage:
    python3 scripts/run_replay.py [--json]
"""

import sys

from coxgrowth.cli import main

if __name__ == "__main__":
    sys.exit(main(["replay", *sys.argv[1:]]))
