"""Frequency-ranked byte remapping.

The most frequent byte value becomes 0, the next one 1, and so on; equal
counts are ordered by ascending original byte value. One map covers the
whole input.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .errors import CorruptStreamError, MappingError


def build_histogram(data: bytes) -> np.ndarray:
    """Occurrence count of every byte value, shape ``(256,)``."""
    return np.bincount(np.frombuffer(bytes(data), dtype=np.uint8), minlength=256).astype(np.int64)


@dataclass(frozen=True)
class ByteMap:
    """``forward[i]`` is the original byte value that is remapped to ``i``."""

    forward: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.forward)) != len(self.forward):
            raise ValueError("byte map entries must be distinct")
        if any(not 0 <= b <= 255 for b in self.forward):
            raise ValueError("byte map entries must be byte values")

    @property
    def k(self) -> int:
        return len(self.forward)

    def lookup_table(self) -> np.ndarray:
        """Original byte -> remapped value; unmapped bytes hold -1."""
        table = np.full(256, -1, dtype=np.int16)
        table[list(self.forward)] = np.arange(self.k, dtype=np.int16)
        return table

    def serialize(self) -> bytes:
        return struct.pack(">H", self.k) + bytes(self.forward)

    @classmethod
    def deserialize(cls, blob: bytes, offset: int = 0) -> tuple["ByteMap", int]:
        """Parse a map at ``offset``; returns the map and the offset after it."""
        if len(blob) < offset + 2:
            raise CorruptStreamError("truncated byte map header")
        (k,) = struct.unpack_from(">H", blob, offset)
        if k > 256:
            raise CorruptStreamError(f"byte map claims {k} entries")
        start = offset + 2
        body = blob[start:start + k]
        if len(body) != k:
            raise CorruptStreamError("truncated byte map")
        try:
            return cls(tuple(body)), start + k
        except ValueError as exc:
            raise CorruptStreamError(str(exc)) from None


def build_byte_map(hist) -> ByteMap:
    counts = np.asarray(hist, dtype=np.int64)
    present = np.flatnonzero(counts)
    # lexsort: last key is primary -> descending count, then ascending byte
    order = np.lexsort((present, -counts[present]))
    return ByteMap(tuple(int(b) for b in present[order]))


def apply_map(byte_map: ByteMap, data: bytes) -> bytes:
    values = np.frombuffer(bytes(data), dtype=np.uint8)
    remapped = byte_map.lookup_table()[values]
    if values.size and remapped.min() < 0:
        missing = int(values[np.argmin(remapped)])
        raise MappingError(f"byte 0x{missing:02x} is not in the byte map")
    return remapped.astype(np.uint8).tobytes()


def invert_map(byte_map: ByteMap, remapped: bytes) -> bytes:
    values = np.frombuffer(bytes(remapped), dtype=np.uint8)
    if values.size and int(values.max()) >= byte_map.k:
        raise CorruptStreamError(
            f"remapped value {int(values.max())} outside map of size {byte_map.k}")
    table = np.asarray(byte_map.forward, dtype=np.uint8)
    return table[values].tobytes()
