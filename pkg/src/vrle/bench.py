"""Corpus benchmark: per-file compressed sizes for the proposed codec and the
plain 8-bit binary RLE baseline.

Every row is produced only after the compressed blob has been decoded and
compared with the original bytes.
"""
from __future__ import annotations

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from statistics import fmean

from . import container, rle

log = logging.getLogger(__name__)

CODECS = {
    "proposed": (container.compress, container.decompress),
    "baseline": (rle.baseline_rle_compress, rle.baseline_rle_decompress),
}

# The eleven files of the Canterbury corpus, in table order.
CANTERBURY_FILES = (
    "alice29.txt", "asyoulik.txt", "cp.html", "fields.c", "grammar.lsp", "kennedy.xls",
    "lcet10.txt", "plrabn12.txt", "ptt5", "sum", "xargs.1",
)


@dataclass(frozen=True)
class BenchmarkRecord:
    file: str
    codec: str
    original_bytes: int
    compressed_bytes: int
    verified: bool = True

    @property
    def relative_pct(self) -> float:
        return 100.0 * self.compressed_bytes / self.original_bytes

    @property
    def bps(self) -> float:
        return 8.0 * self.compressed_bytes / self.original_bytes


@dataclass(frozen=True)
class Summary:
    codec: str
    files: int
    original_bytes: int
    compressed_bytes: int
    mean_relative_pct: float
    mean_bps: float

    @property
    def total_relative_pct(self) -> float:
        return 100.0 * self.compressed_bytes / self.original_bytes

    @property
    def total_bps(self) -> float:
        return 8.0 * self.compressed_bytes / self.original_bytes


@dataclass
class BenchConfig:
    corpus: Path
    codecs: tuple[str, ...] = ("proposed", "baseline")
    jobs: int = 1
    files: tuple[str, ...] | None = None
    pattern: str = "*"

    def paths(self) -> list[Path]:
        root = Path(self.corpus)
        if not root.is_dir():
            raise FileNotFoundError(f"corpus directory {root} does not exist")
        if self.files is not None:
            candidates = [root / name for name in self.files]
            missing = [p.name for p in candidates if not p.is_file()]
            if missing:
                raise FileNotFoundError(f"missing corpus files in {root}: {', '.join(missing)}")
        else:
            candidates = sorted(p for p in root.glob(self.pattern) if p.is_file())
        out = []
        for p in candidates:
            if p.stat().st_size == 0:
                log.warning("skipping empty file %s", p)
                continue
            out.append(p)
        return sorted(out, key=lambda p: p.name)


def measure_bytes(name: str, data: bytes, codec: str) -> BenchmarkRecord:
    if not data:
        raise ValueError(f"{name}: cannot measure an empty file")
    encode, decode = CODECS[codec]
    blob = encode(data)
    verified = decode(blob) == data
    if not verified:
        log.error("%s: %s round trip mismatch", name, codec)
    return BenchmarkRecord(name, codec, len(data), len(blob), verified)


def measure_file(path, codec: str = "proposed") -> BenchmarkRecord:
    path = Path(path)
    return measure_bytes(path.name, path.read_bytes(), codec)


def _measure_job(args):
    return measure_file(*args)


def run_bench(config: BenchConfig) -> list[BenchmarkRecord]:
    jobs = [(p, c) for p in config.paths() for c in config.codecs]
    if config.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(_measure_job, jobs))
    else:
        records = [measure_file(p, c) for p, c in jobs]
    order = {c: i for i, c in enumerate(config.codecs)}
    return sorted(records, key=lambda r: (r.file, order[r.codec]))


def summarize(records: list[BenchmarkRecord], codec: str) -> Summary:
    rows = [r for r in records if r.codec == codec]
    if not rows:
        raise ValueError(f"no records for codec {codec!r}")
    return Summary(
        codec=codec,
        files=len(rows),
        original_bytes=sum(r.original_bytes for r in rows),
        compressed_bytes=sum(r.compressed_bytes for r in rows),
        mean_relative_pct=fmean(r.relative_pct for r in rows),
        mean_bps=fmean(r.bps for r in rows),
    )


def improvement_pct(proposed: int, baseline: int) -> float:
    """``1 - proposed/baseline`` in percent."""
    return 100.0 * (1.0 - proposed / baseline)


def per_file_improvements(records: list[BenchmarkRecord]) -> dict[str, float]:
    sizes: dict[str, dict[str, int]] = {}
    for r in records:
        sizes.setdefault(r.file, {})[r.codec] = r.compressed_bytes
    return {f: improvement_pct(s["proposed"], s["baseline"])
            for f, s in sizes.items() if {"proposed", "baseline"} <= s.keys()}


CSV_COLUMNS = ("file", "codec", "original_bytes", "compressed_bytes", "relative_pct", "bps")


def to_csv(records: list[BenchmarkRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([r.file, r.codec, r.original_bytes, r.compressed_bytes,
                         f"{r.relative_pct:.2f}", f"{r.bps:.2f}"])
    return buf.getvalue()


_LABELS = {"baseline": "RLE", "proposed": "proposed"}


def to_markdown(records: list[BenchmarkRecord]) -> str:
    """One block of size / relative size / bps per codec, an improvement
    column when both codecs ran, then total and per-file average rows."""
    codecs = [c for c in ("baseline", "proposed") if any(r.codec == c for r in records)]
    both = len(codecs) == 2
    head = ["file", "original [kB]"]
    for c in codecs:
        head += [f"{_LABELS[c]} s. [kB]", f"{_LABELS[c]} r.s. [%]", f"{_LABELS[c]} [bps]"]
    if both:
        head.append("impr. [%]")
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]

    by_file: dict[str, dict[str, BenchmarkRecord]] = {}
    for r in records:
        by_file.setdefault(r.file, {})[r.codec] = r
    improvements = per_file_improvements(records) if both else {}
    for name in sorted(by_file):
        row = by_file[name]
        first = next(iter(row.values()))
        cells = [name + ("" if all(r.verified for r in row.values()) else " (FAILED)"),
                 f"{first.original_bytes / 1000:.1f}"]
        for c in codecs:
            r = row.get(c)
            cells += ([f"{r.compressed_bytes / 1000:.1f}", f"{r.relative_pct:.2f}", f"{r.bps:.2f}"]
                      if r else ["-", "-", "-"])
        if both:
            cells.append(f"{improvements[name]:.2f}" if name in improvements else "-")
        lines.append("| " + " | ".join(cells) + " |")

    sums = {c: summarize(records, c) for c in codecs}
    total = ["**all files**", f"{next(iter(sums.values())).original_bytes / 1000:.1f}"]
    mean = ["**average per file**", "-"]
    for c in codecs:
        s = sums[c]
        total += [f"{s.compressed_bytes / 1000:.1f}", f"{s.total_relative_pct:.2f}", f"{s.total_bps:.2f}"]
        mean += ["-", f"{s.mean_relative_pct:.2f}", f"{s.mean_bps:.2f}"]
    if both:
        total.append(f"{improvement_pct(sums['proposed'].compressed_bytes, sums['baseline'].compressed_bytes):.2f}")
        mean.append(f"{fmean(improvements.values()):.2f}" if improvements else "-")
    lines.append("| " + " | ".join(total) + " |")
    lines.append("| " + " | ".join(mean) + " |")
    return "\n".join(lines) + "\n"
