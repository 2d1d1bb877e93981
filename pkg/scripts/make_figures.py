#!/usr/bin/env python3
"""Regenerate the data files behind all eight built-in figures.

Writes figure01.csv ... figure08.csv into the output directory using the same
code path as `equibasis figure`, so the files are byte-identical to CLI output.
"""

import argparse
import pathlib
import sys

from equibasis import cli


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--outdir", default="figure_data", help="directory for the CSV files"
    )
    args = parser.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for figure_id in range(1, 9):
        target = outdir / f"figure{figure_id:02d}.csv"
        code = cli.main(["figure", "--id", str(figure_id), "--out", str(target)])
        if code != 0:
            print(f"figure {figure_id} failed with exit code {code}", file=sys.stderr)
            return code
        print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
