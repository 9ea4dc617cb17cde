"""The ``.vrle`` container and the end-to-end pipeline.

Encoder: BWST -> byte remap -> vertical reading -> binary RLE -> Huffman.

Layout (all integers big-endian)::

    b"VRLE"  u8 version  u64 original length n
    byte map     u16 k, k bytes
    code table   see :mod:`vrle.huffman`
    payload      Huffman-coded runs, zero-padded to a whole byte

The decoder reads codewords until the runs cover exactly ``8 * n`` bits, so
neither the run count nor the payload bit length is stored.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .bitio import BitString, packed_size
from .bwst import bwst_forward, bwst_inverse
from .errors import CorruptStreamError, FormatError
from .huffman import (CodeTable, build_code_table, decode_runs_budget, deserialize_table,
                      encode_runs, run_histogram, serialize_table)
from .remap import ByteMap, apply_map, build_byte_map, build_histogram, invert_map
from .rle import decode_to_array, rle_encode
from .vertical import inverse_transpose, transpose

MAGIC = b"VRLE"
VERSION = 1
HEADER = struct.Struct(">4sBQ")
EXTENSION = ".vrle"


@dataclass(frozen=True)
class Stages:
    """Intermediate values of one encoder run, mostly for tests and tooling."""

    byte_map: ByteMap
    transformed: bytes
    remapped: bytes
    vertical: BitString
    runs: np.ndarray
    table: CodeTable
    payload: BitString


def encode_stages(data: bytes) -> Stages:
    data = bytes(data)
    byte_map = build_byte_map(build_histogram(data))
    transformed = bwst_forward(data)
    remapped = apply_map(byte_map, transformed)
    vertical = transpose(remapped)
    runs = rle_encode(vertical)
    if runs.size:
        table = build_code_table(run_histogram(runs))
        payload = encode_runs(runs, table)
    else:
        table, payload = CodeTable(), BitString()
    return Stages(byte_map, transformed, remapped, vertical, runs, table, payload)


def compress(data: bytes) -> bytes:
    data = bytes(data)
    st = encode_stages(data)
    return b"".join([
        HEADER.pack(MAGIC, VERSION, len(data)),
        st.byte_map.serialize(),
        serialize_table(st.table),
        st.payload.to_bytes(),
    ])


@dataclass(frozen=True)
class Parsed:
    n: int
    byte_map: ByteMap
    table: CodeTable
    table_bytes: int
    payload_offset: int


def _parse_sections(blob: bytes) -> Parsed:
    if len(blob) < len(MAGIC) or blob[:len(MAGIC)] != MAGIC:
        raise FormatError("not a VRLE container (bad magic)")
    if len(blob) < HEADER.size:
        raise CorruptStreamError("truncated container header")
    _, version, n = HEADER.unpack_from(blob)
    if version != VERSION:
        raise FormatError(f"unsupported container version {version}")
    byte_map, pos = ByteMap.deserialize(blob, HEADER.size)
    table, end = deserialize_table(blob, pos)
    if n and not byte_map.k:
        raise CorruptStreamError("non-empty container without a byte map")
    return Parsed(n, byte_map, table, end - pos, end)


def _decode_payload(blob: bytes, parsed: Parsed) -> tuple[np.ndarray, int]:
    payload = np.unpackbits(np.frombuffer(blob, dtype=np.uint8, offset=parsed.payload_offset))
    runs, used = decode_runs_budget(payload, parsed.table, 8 * parsed.n)
    if len(blob) - parsed.payload_offset != packed_size(used):
        raise CorruptStreamError("payload length does not match the decoded runs")
    return runs, used


def decompress(blob: bytes) -> bytes:
    blob = bytes(blob)
    parsed = _parse_sections(blob)
    if parsed.n == 0:
        if parsed.byte_map.k or len(parsed.table) or len(blob) != parsed.payload_offset:
            raise CorruptStreamError("empty container carries data")
        return b""
    runs, _ = _decode_payload(blob, parsed)
    bits = decode_to_array(runs)
    remapped = inverse_transpose(bits, parsed.n)
    return bwst_inverse(invert_map(parsed.byte_map, remapped))


@dataclass(frozen=True)
class Report:
    n: int
    k: int
    table_entries: int
    table_bytes: int
    run_count: int
    payload_bits: int
    compressed_bytes: int

    @property
    def relative_size(self) -> float:
        """Compressed size as a percentage of the original size."""
        return 100.0 * self.compressed_bytes / self.n if self.n else float("nan")

    @property
    def bps(self) -> float:
        return 8.0 * self.compressed_bytes / self.n if self.n else float("nan")

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["relative_size"] = self.relative_size
        d["bps"] = self.bps
        return d


def inspect(blob: bytes) -> Report:
    """Parse a container and describe its sections without rebuilding the input."""
    blob = bytes(blob)
    parsed = _parse_sections(blob)
    if parsed.n:
        runs, used = _decode_payload(blob, parsed)
        run_count = int(runs.size)
    else:
        run_count = used = 0
    return Report(
        n=parsed.n,
        k=parsed.byte_map.k,
        table_entries=len(parsed.table),
        table_bytes=parsed.table_bytes,
        run_count=run_count,
        payload_bits=used,
        compressed_bytes=len(blob),
    )
