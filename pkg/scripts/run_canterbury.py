#!/usr/bin/env python3
"""Reproduce the Canterbury comparison table (baseline RLE vs. the full pipeline)."""
import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from vrle import bench

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class Config:
    corpus: Path = Path(os.environ.get("CANTERBURY_DIR", ROOT / "corpora" / "canterbury"))
    files: tuple = field(default=bench.CANTERBURY_FILES)
    jobs: int = 1
    fmt: str = "md"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", type=Path, default=Config.corpus)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--format", dest="fmt", choices=("md", "csv"), default="md")
    ap.add_argument("--all", action="store_true", help="bench every file in the directory")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    cfg = Config(corpus=args.corpus, jobs=args.jobs, fmt=args.fmt)

    names = None
    if not args.all:
        names = tuple(f for f in cfg.files if (cfg.corpus / f).is_file())
        missing = sorted(set(cfg.files) - set(names))
        if missing:
            logging.warning("missing from %s: %s", cfg.corpus, ", ".join(missing))
        if not names:
            return 2
    records = bench.run_bench(bench.BenchConfig(corpus=cfg.corpus, files=names, jobs=cfg.jobs))
    print(bench.to_markdown(records) if cfg.fmt == "md" else bench.to_csv(records), end="")
    proposed = bench.summarize(records, "proposed")
    baseline = bench.summarize(records, "baseline")
    logging.info("improvement (total size): %.2f%%",
                 bench.improvement_pct(proposed.compressed_bytes, baseline.compressed_bytes))
    return 0 if all(r.verified for r in records) else 4


if __name__ == "__main__":
    sys.exit(main())
