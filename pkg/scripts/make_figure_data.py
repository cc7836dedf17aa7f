#!/usr/bin/env python3
"""Regenerate the five curve-family CSVs (degrees 1..5, weight 3).

Writes plot_data_n1.csv .. plot_data_n5.csv using the packaged defaults
(orders 1/2, 7/10, 9/10, 1; 201 samples on [0, 1]), so the output matches
the golden copies under tests/golden byte for byte.
"""
import argparse
import sys
from pathlib import Path

from congeg.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("figure_data"),
                        help="directory for the CSV files (default: figure_data)")
    parser.add_argument("--signed-domain", action="store_true",
                        help="sample x in [-1, 1] instead of [0, 1]")
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for n in range(1, 6):
        target = args.out_dir / f"plot_data_n{n}.csv"
        argv = ["plot-data", "--n", str(n), "--out", str(target)]
        if args.signed_domain:
            argv.append("--signed-domain")
        code = cli_main(argv)
        if code != 0:
            return code
    print(f"wrote 5 files to {args.out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
