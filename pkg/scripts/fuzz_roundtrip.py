#!/usr/bin/env python3
"""Randomised round-trip check over log-uniform input lengths."""
import argparse
import sys
import time
from dataclasses import dataclass

import numpy as np

from vrle import compress, decompress


@dataclass
class FuzzConfig:
    count: int = 1000
    max_len: int = 100_000
    seed: int = 0
    alphabet: int = 256


def random_input(rng, cfg: FuzzConfig) -> bytes:
    n = int(np.expm1(rng.uniform(0, np.log1p(cfg.max_len))))
    size = int(rng.integers(1, cfg.alphabet + 1))
    return rng.integers(0, size, n, dtype=np.uint8).tobytes()


def run(cfg: FuzzConfig) -> int:
    rng = np.random.default_rng(cfg.seed)
    start, failures, total = time.perf_counter(), 0, 0
    for i in range(cfg.count):
        data = random_input(rng, cfg)
        total += len(data)
        if decompress(compress(data)) != data:
            failures += 1
            print(f"case {i}: mismatch (length {len(data)})", file=sys.stderr)
    print(f"{cfg.count} cases, {total} bytes, {failures} failures, "
          f"{time.perf_counter() - start:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=FuzzConfig.count)
    ap.add_argument("--max-len", type=int, default=FuzzConfig.max_len)
    ap.add_argument("--seed", type=int, default=FuzzConfig.seed)
    a = ap.parse_args()
    sys.exit(run(FuzzConfig(count=a.count, max_len=a.max_len, seed=a.seed)))
