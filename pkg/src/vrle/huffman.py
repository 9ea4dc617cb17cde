"""Canonical Huffman coding of run lengths (symbols 0..255).

Tree construction is deterministic: nodes are ordered by (weight, smallest
symbol they contain) and the smaller of the two merged nodes becomes the
0-branch. Only the resulting code lengths are kept; codewords are then
assigned canonically (shorter lengths first, ascending symbol within a
length). A lone symbol gets the 1-bit codeword ``0``.

Serialised table layout::

    u16 entry count (big-endian)
    per entry, ascending symbol: u8 symbol, u8 code length,
                                 codeword bits MSB-first padded to whole bytes
"""
from __future__ import annotations

import heapq
import struct
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .bitio import BitString, packed_size
from .errors import CorruptStreamError, EmptyInputError, EndOfStreamError, TableError

NUM_SYMBOLS = 256
# widest codeword the vectorised decoder handles with uint64 windows
_FAST_DECODE_MAX = 57
# longest codeword decoded through a dense 2**width lookup table
_DENSE_MAX = 20
_DECODE_CHUNK = 1 << 21
_ENCODE_CHUNK = 1 << 18


def run_histogram(runs) -> np.ndarray:
    runs = np.asarray(runs, dtype=np.int64)
    return np.bincount(runs, minlength=NUM_SYMBOLS).astype(np.int64)


def _is_prefix_free(entries: Mapping[int, tuple[int, int]]) -> bool:
    words = sorted(format(code, f"0{length}b") for length, code in entries.values())
    return all(not b.startswith(a) for a, b in zip(words, words[1:]))


@dataclass(frozen=True)
class CodeTable:
    """Run length -> ``(code length, codeword as int)``."""

    entries: Mapping[int, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        entries = {int(s): (int(n), int(c)) for s, (n, c) in self.entries.items()}
        for sym, (length, code) in entries.items():
            if not 0 <= sym < NUM_SYMBOLS:
                raise ValueError(f"symbol {sym} outside 0..255")
            if not 1 <= length <= 255 or not 0 <= code < (1 << length):
                raise ValueError(f"bad codeword for symbol {sym}: length {length}, code {code}")
        if not _is_prefix_free(entries):
            raise ValueError("codewords are not prefix-free")
        object.__setattr__(self, "entries", dict(sorted(entries.items())))

    @classmethod
    def from_codewords(cls, codewords: Mapping[int, str]) -> "CodeTable":
        """Build from ``{symbol: "0101"}`` style codewords."""
        return cls({s: (len(w), int(w, 2)) for s, w in codewords.items()})

    @classmethod
    def from_lengths(cls, lengths: Mapping[int, int]) -> "CodeTable":
        """Canonical codewords for the given code lengths."""
        entries = {}
        code = prev = 0
        for sym, length in sorted(lengths.items(), key=lambda kv: (kv[1], kv[0])):
            code <<= length - prev
            entries[sym] = (length, code)
            code += 1
            prev = length
        return cls(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, sym) -> bool:
        return sym in self.entries

    @property
    def lengths(self) -> dict[int, int]:
        return {s: n for s, (n, _) in self.entries.items()}

    @property
    def max_length(self) -> int:
        return max((n for n, _ in self.entries.values()), default=0)

    def codeword(self, sym: int) -> str:
        length, code = self.entries[sym]
        return format(code, f"0{length}b")

    def kraft_sum(self) -> float:
        return sum(2.0 ** -n for n, _ in self.entries.values())

    def cost(self, hist) -> int:
        """Encoded size in bits of a run histogram under this table."""
        hist = np.asarray(hist)
        return int(sum(int(hist[s]) * n for s, (n, _) in self.entries.items()))


def huffman_code_lengths(hist) -> dict[int, int]:
    counts = np.asarray(hist, dtype=np.int64)
    symbols = [int(s) for s in np.flatnonzero(counts)]
    if not symbols:
        raise EmptyInputError("cannot build a code table from an empty histogram")
    if len(symbols) == 1:
        return {symbols[0]: 1}
    depth = dict.fromkeys(symbols, 0)
    heap = [(int(counts[s]), s, [s]) for s in symbols]
    heapq.heapify(heap)
    while len(heap) > 1:
        w0, m0, zero = heapq.heappop(heap)
        w1, m1, one = heapq.heappop(heap)
        for s in zero:
            depth[s] += 1
        for s in one:
            depth[s] += 1
        heapq.heappush(heap, (w0 + w1, min(m0, m1), zero + one))
    return depth


def build_code_table(hist) -> CodeTable:
    return CodeTable.from_lengths(huffman_code_lengths(hist))


def _symbol_arrays(table: CodeTable) -> tuple[np.ndarray, np.ndarray]:
    """Per-symbol bit matrix (left aligned) and code lengths."""
    width = max(table.max_length, 1)
    matrix = np.zeros((NUM_SYMBOLS, width), dtype=np.uint8)
    lengths = np.zeros(NUM_SYMBOLS, dtype=np.int64)
    for sym, (length, code) in table.entries.items():
        lengths[sym] = length
        matrix[sym, :length] = [int(b) for b in format(code, f"0{length}b")]
    return matrix, lengths


def encode_runs(runs, table: CodeTable) -> BitString:
    runs = np.asarray(runs, dtype=np.int64).ravel()
    if runs.size == 0:
        return BitString()
    matrix, lengths = _symbol_arrays(table)
    if runs.min() < 0 or runs.max() >= NUM_SYMBOLS or (lengths[runs] == 0).any():
        bad = [int(r) for r in np.unique(runs) if not 0 <= r < NUM_SYMBOLS or lengths[r] == 0]
        raise TableError(f"no codeword for run values {bad[:8]}")
    mask = np.arange(matrix.shape[1]) < lengths[:, None]
    pieces = []
    for lo in range(0, runs.size, _ENCODE_CHUNK):
        chunk = runs[lo:lo + _ENCODE_CHUNK]
        pieces.append(matrix[chunk][mask[chunk]])
    return BitString(np.concatenate(pieces))


def _windows(bits: np.ndarray, lo: int, hi: int, width: int) -> np.ndarray:
    """The ``width`` bits starting at each position in [lo, hi) as integers."""
    byte_lo = lo // 8
    seg = bits[8 * byte_lo:hi + width]
    packed = np.zeros(packed_size(seg.size) + 8, dtype=np.uint8)
    packed[:packed_size(seg.size)] = np.packbits(seg)
    # big-endian 64-bit word starting at every byte offset
    words = np.zeros(packed.size - 7, dtype=np.uint64)
    for j in range(8):
        words |= packed[j:j + words.size].astype(np.uint64) << np.uint64(56 - 8 * j)
    pos = np.arange(lo, hi, dtype=np.int64)
    shift = (pos & 7).astype(np.uint64)
    return (words[(pos >> 3) - byte_lo] << shift) >> np.uint64(64 - width)


class _Matcher:
    """Finds the codeword starting at every position of a bit array."""

    def __init__(self, table: CodeTable):
        self.width = table.max_length
        if self.width <= _DENSE_MAX:
            size = 1 << self.width
            self.dense_sym = np.zeros(size, dtype=np.int64)
            self.dense_len = np.zeros(size, dtype=np.int64)
            for sym, (length, code) in table.entries.items():
                lo = code << (self.width - length)
                hi = (code + 1) << (self.width - length)
                self.dense_sym[lo:hi] = sym
                self.dense_len[lo:hi] = length
        else:
            self.dense_sym = None
            groups: dict[int, list] = {}
            for sym, (length, code) in table.entries.items():
                groups.setdefault(length, []).append((code, sym))
            self.by_length = {
                n: (np.array([c for c, _ in sorted(v)], dtype=np.uint64),
                    np.array([s for _, s in sorted(v)], dtype=np.int64))
                for n, v in groups.items()
            }

    def match(self, bits: np.ndarray, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
        """Symbol and codeword length at each position in [lo, hi); length 0 = no match."""
        window = _windows(bits, lo, hi, self.width)
        if self.dense_sym is not None:
            return self.dense_sym[window], self.dense_len[window]
        syms = np.zeros(hi - lo, dtype=np.int64)
        lens = np.zeros(hi - lo, dtype=np.int64)
        for length, (codes, symbols) in self.by_length.items():
            prefix = window >> np.uint64(self.width - length)
            idx = np.searchsorted(codes, prefix)
            idx[idx == codes.size] = 0
            hit = codes[idx] == prefix
            syms[hit] = symbols[idx[hit]]
            lens[hit] = length
        return syms, lens


def _decode_fast(bits: np.ndarray, table: CodeTable, run_count: int | None,
                 budget: int | None) -> tuple[list[int], int]:
    matcher = _Matcher(table)
    total = bits.size
    remaining = run_count if run_count is not None else -1
    budget = budget if budget is not None else -1
    out: list[int] = []
    append = out.append
    pos = decoded = 0
    while remaining and decoded != budget:
        if decoded > budget >= 0:
            break
        if pos >= total:
            raise EndOfStreamError("payload exhausted before decoding finished")
        hi = min(pos + _DECODE_CHUNK, total)
        syms, lens = matcher.match(bits, pos, hi)
        syms, lens = syms.tolist(), lens.tolist()
        base, off, limit = pos, 0, hi - pos
        while off < limit and remaining and decoded != budget:
            step = lens[off]
            if not step:
                raise CorruptStreamError(f"no codeword matches at bit {base + off}")
            sym = syms[off]
            append(sym)
            decoded += sym
            remaining -= 1
            off += step
            if decoded > budget >= 0:
                break
        pos = base + off
    if pos > total:
        raise EndOfStreamError("payload ends inside a codeword")
    return out, pos


def _decode_slow(bits: np.ndarray, table: CodeTable, run_count: int | None,
                 budget: int | None) -> tuple[list[int], int]:
    lookup = {(n, c): s for s, (n, c) in table.entries.items()}
    width = table.max_length
    data = bits.tolist()
    out: list[int] = []
    pos = decoded = 0
    while not ((run_count is not None and len(out) >= run_count)
               or (budget is not None and decoded >= budget)):
        code = length = 0
        while True:
            if pos >= len(data):
                raise EndOfStreamError("payload exhausted before decoding finished")
            code = (code << 1) | data[pos]
            pos += 1
            length += 1
            if (length, code) in lookup:
                sym = lookup[(length, code)]
                break
            if length >= width:
                raise CorruptStreamError(f"no codeword matches at bit {pos - length}")
        out.append(sym)
        decoded += sym
    return out, pos


def _decode(bits, table: CodeTable, run_count=None, budget=None):
    arr = bits.array if isinstance(bits, BitString) else np.asarray(bits, dtype=np.uint8)
    if (run_count == 0) or (budget == 0):
        return [], 0
    if not table.entries:
        raise CorruptStreamError("cannot decode runs without a code table")
    if table.max_length <= _FAST_DECODE_MAX:
        return _decode_fast(arr, table, run_count, budget)
    return _decode_slow(arr, table, run_count, budget)


def decode_runs(bits, table: CodeTable, run_count: int) -> np.ndarray:
    """Decode exactly ``run_count`` runs from the start of ``bits``."""
    runs, _ = _decode(bits, table, run_count=run_count)
    return np.asarray(runs, dtype=np.uint8)


def decode_runs_budget(bits, table: CodeTable, total_bits: int) -> tuple[np.ndarray, int]:
    """Decode runs until they cover ``total_bits`` bits.

    Returns the runs and the number of payload bits consumed. Overshooting the
    budget is a corrupt stream.
    """
    runs, used = _decode(bits, table, budget=total_bits)
    runs = np.asarray(runs, dtype=np.uint8)
    covered = int(runs.sum(dtype=np.int64))
    if covered != total_bits:
        raise CorruptStreamError(f"runs cover {covered} bits, expected {total_bits}")
    return runs, used


def serialize_table(table: CodeTable) -> bytes:
    out = bytearray(struct.pack(">H", len(table)))
    for sym, (length, code) in table.entries.items():
        nbytes = packed_size(length)
        out += bytes((sym, length))
        out += (code << (8 * nbytes - length)).to_bytes(nbytes, "big")
    return bytes(out)


def deserialize_table(blob: bytes, offset: int = 0) -> tuple[CodeTable, int]:
    """Parse a table at ``offset``; returns the table and the offset after it."""
    blob = bytes(blob)
    if len(blob) < offset + 2:
        raise CorruptStreamError("truncated code table header")
    (count,) = struct.unpack_from(">H", blob, offset)
    if count > NUM_SYMBOLS:
        raise CorruptStreamError(f"code table claims {count} entries")
    pos = offset + 2
    entries = {}
    for _ in range(count):
        if len(blob) < pos + 2:
            raise CorruptStreamError("truncated code table entry")
        sym, length = blob[pos], blob[pos + 1]
        pos += 2
        if length == 0:
            raise CorruptStreamError(f"zero-length codeword for symbol {sym}")
        nbytes = packed_size(length)
        if len(blob) < pos + nbytes:
            raise CorruptStreamError("truncated codeword")
        raw = int.from_bytes(blob[pos:pos + nbytes], "big")
        pos += nbytes
        pad = 8 * nbytes - length
        if raw & ((1 << pad) - 1):
            raise CorruptStreamError(f"nonzero padding in codeword for symbol {sym}")
        if sym in entries:
            raise CorruptStreamError(f"duplicate code table entry for symbol {sym}")
        entries[sym] = (length, raw >> pad)
    try:
        return CodeTable(entries), pos
    except ValueError as exc:
        raise CorruptStreamError(str(exc)) from None
