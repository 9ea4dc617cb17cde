#!/usr/bin/env python3
"""Round-trip and size report for a large corpus (e.g. Silesia).

Slow in pure Python/numpy: budget roughly one second per megabyte each way.
"""
import argparse
import os
import sys
from pathlib import Path

from vrle import bench


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", type=Path, default=os.environ.get("SILESIA_DIR"))
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args(argv)
    if args.corpus is None:
        ap.error("pass --corpus or set SILESIA_DIR")
    records = bench.run_bench(bench.BenchConfig(corpus=args.corpus, jobs=args.jobs))
    print(bench.to_markdown(records), end="")
    return 0 if all(r.verified for r in records) else 4


if __name__ == "__main__":
    sys.exit(main())
