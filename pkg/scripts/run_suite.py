#!/usr/bin/env python3
"""Run the full verification suite and write reports plus CSV samples.

Usage:
    python scripts/run_suite.py [--out reports] [--seed 0] [--angles 512]
"""

import argparse
import sys

from besselsub.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="reports")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--angles", type=int, default=512)
    args = parser.parse_args()
    return cli_main([
        "suite", "--all",
        "--out", args.out,
        "--csv-out", args.out,
        "--seed", str(args.seed),
        "--angles", str(args.angles),
    ])


if __name__ == "__main__":
    sys.exit(main())
