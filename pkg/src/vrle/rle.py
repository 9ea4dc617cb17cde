"""Binary run-length coding with 8-bit runs.

Runs alternate between 0-bits and 1-bits, starting with 0-bits. A run of
length 0 emits nothing and only flips the current bit value. It is used in two
places: at the very start when the stream begins with a 1-bit, and after a
255 run to continue a run longer than 255 (``300 zeros -> 255, 0, 45``).

Run sequences are ``uint8`` numpy arrays.

The baseline codec (``baseline_rle_*``) stores each run in one byte after an
8-byte big-endian length header. It is the plain RLE the benchmark compares
against.
"""
from __future__ import annotations

import struct

import numpy as np

from .bitio import BitString
from .errors import CorruptStreamError

MAX_RUN = 255
BASELINE_HEADER = struct.Struct(">Q")


def _bit_array(bits) -> np.ndarray:
    if isinstance(bits, BitString):
        return bits.array
    return BitString(bits).array


def maximal_runs(bits) -> np.ndarray:
    """Lengths of the maximal blocks of equal bits (no length limit)."""
    arr = _bit_array(bits)
    if arr.size == 0:
        return np.zeros(0, dtype=np.int64)
    change = np.flatnonzero(arr[1:] != arr[:-1]) + 1
    bounds = np.concatenate(([0], change, [arr.size]))
    return np.diff(bounds)


def rle_encode(bits) -> np.ndarray:
    arr = _bit_array(bits)
    if arr.size == 0:
        return np.zeros(0, dtype=np.uint8)
    lengths = maximal_runs(arr)
    # a run of L bits becomes (255, 0) * m followed by the remainder in 1..255
    cont = (lengths - 1) // MAX_RUN
    rest = lengths - MAX_RUN * cont
    sizes = 2 * cont + 1
    starts = np.cumsum(sizes) - sizes
    offsets = np.arange(int(sizes.sum())) - np.repeat(starts, sizes)
    runs = np.where(offsets % 2 == 0, MAX_RUN, 0).astype(np.uint8)
    runs[starts + 2 * cont] = rest
    if arr[0] == 1:
        runs = np.concatenate(([0], runs)).astype(np.uint8)
    return runs


def validate_runs(runs) -> np.ndarray:
    """Check the run-sequence invariants; returns the runs as ``int64``."""
    runs = np.asarray(runs, dtype=np.int64).ravel()
    if runs.size and (runs.min() < 0 or runs.max() > MAX_RUN):
        raise CorruptStreamError("run length outside 0..255")
    zeros = np.flatnonzero(runs == 0)
    zeros = zeros[zeros > 0]
    if zeros.size and (runs[zeros - 1] != MAX_RUN).any():
        pos = int(zeros[np.argmax(runs[zeros - 1] != MAX_RUN)])
        raise CorruptStreamError(f"zero-length run at position {pos} does not follow a 255 run")
    return runs


def rle_decode(runs) -> BitString:
    return BitString(decode_to_array(runs))


def decode_to_array(runs) -> np.ndarray:
    """Like :func:`rle_decode` but returns the raw ``uint8`` bit array."""
    runs = validate_runs(runs)
    values = (np.arange(runs.size) & 1).astype(np.uint8)
    return np.repeat(values, runs)


def baseline_rle_compress(data: bytes) -> bytes:
    data = bytes(data)
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
    return BASELINE_HEADER.pack(len(data)) + rle_encode(bits).tobytes()


def baseline_rle_decompress(blob: bytes) -> bytes:
    blob = bytes(blob)
    if len(blob) < BASELINE_HEADER.size:
        raise CorruptStreamError("truncated baseline header")
    (n,) = BASELINE_HEADER.unpack_from(blob)
    runs = np.frombuffer(blob, dtype=np.uint8, offset=BASELINE_HEADER.size)
    bits = decode_to_array(runs)
    if bits.size != 8 * n:
        raise CorruptStreamError(f"runs cover {bits.size} bits, header says {8 * n}")
    return np.packbits(bits).tobytes()
