"""Write one CSV per figure preset into an output directory.

    python scripts/reproduce_figures.py out/ [--only fig3a fig4b]
"""

import argparse
import pathlib
import sys

from atompolarizer.cli import main
from atompolarizer.sweep import FIGURES


def parse_args():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", type=pathlib.Path)
    ap.add_argument("--only", nargs="+", choices=FIGURES, default=list(FIGURES))
    ap.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    return ap.parse_args()


if __name__ == "__main__":
    args = parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    status = 0
    for name in args.only:
        path = args.outdir / f"{name}.{args.format}"
        rc = main(["figure", name, "--format", args.format, "--output", str(path)])
        print(f"{name}: {path} (exit {rc})")
        status = status or rc
    sys.exit(status)
