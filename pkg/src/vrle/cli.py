"""Command-line interface.

Exit codes: 0 success, 1 usage, 2 I/O, 3 format/corruption, 4 round-trip
integrity failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bench, container
from .errors import IntegrityError, VRLEError

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_CORRUPT, EXIT_INTEGRITY = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vrle", description="Vertical-RLE compressor.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compress", help="compress a file into a .vrle container")
    p.add_argument("input", type=Path)
    p.add_argument("output", type=Path)

    p = sub.add_parser("decompress", help="restore a file from a .vrle container")
    p.add_argument("input", type=Path)
    p.add_argument("output", type=Path)

    p = sub.add_parser("inspect", help="describe the sections of a container")
    p.add_argument("input", type=Path)
    p.add_argument("--json", action="store_true", help="print the report as JSON")

    p = sub.add_parser("bench", help="measure every file of a corpus directory")
    p.add_argument("--corpus", type=Path, required=True)
    p.add_argument("--codec", choices=("proposed", "baseline", "both"), default="both")
    p.add_argument("--format", choices=("csv", "md"), default="md")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", type=Path, help="write the table here instead of stdout")
    return parser


def _compress(args) -> int:
    args.output.write_bytes(container.compress(args.input.read_bytes()))
    return EXIT_OK


def _decompress(args) -> int:
    args.output.write_bytes(container.decompress(args.input.read_bytes()))
    return EXIT_OK


def _inspect(args) -> int:
    report = container.inspect(args.input.read_bytes())
    if args.json:
        print(json.dumps(report.as_dict(), indent=2))
        return EXIT_OK
    print(f"original bytes     {report.n}")
    print(f"byte map entries   {report.k}")
    print(f"code table entries {report.table_entries} ({report.table_bytes} bytes)")
    print(f"runs               {report.run_count}")
    print(f"payload bits       {report.payload_bits}")
    print(f"container bytes    {report.compressed_bytes}")
    if report.n:
        print(f"relative size      {report.relative_size:.2f} %")
        print(f"bps                {report.bps:.2f}")
    return EXIT_OK


def _bench(args) -> int:
    codecs = ("proposed", "baseline") if args.codec == "both" else (args.codec,)
    config = bench.BenchConfig(corpus=args.corpus, codecs=codecs, jobs=max(1, args.jobs))
    records = bench.run_bench(config)
    if not records:
        print(f"vrle: no files in {args.corpus}", file=sys.stderr)
        return EXIT_IO
    text = bench.to_csv(records) if args.format == "csv" else bench.to_markdown(records)
    if args.output:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    failed = [f"{r.file} ({r.codec})" for r in records if not r.verified]
    if failed:
        raise IntegrityError("round trip failed for " + ", ".join(failed))
    return EXIT_OK


_COMMANDS = {"compress": _compress, "decompress": _decompress, "inspect": _inspect, "bench": _bench}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except IntegrityError as exc:
        print(f"vrle: integrity failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except VRLEError as exc:
        print(f"vrle: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except OSError as exc:
        print(f"vrle: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
