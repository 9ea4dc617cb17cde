"""MSB-first bit strings over byte buffers.

A :class:`BitString` keeps one bit per ``uint8`` element so every codec stage
can work on it with vectorised numpy operations. Serialisation packs bits
most-significant-first and zero-pads the final byte on the right.
"""
from __future__ import annotations

from typing import Iterable, Union

import numpy as np

from .errors import EndOfStreamError

BitsLike = Union["BitString", str, bytes, Iterable[int], np.ndarray]


def _as_bit_array(bits) -> np.ndarray:
    if isinstance(bits, BitString):
        return bits.array
    if isinstance(bits, str):
        bits = bits.replace(" ", "")
        if bits.strip("01"):
            raise ValueError(f"not a bit string: {bits!r}")
        return np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
    arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
    if arr.size == 0:
        return np.zeros(0, dtype=np.uint8)
    if arr.ndim != 1 or ((arr != 0) & (arr != 1)).any():
        raise ValueError("bits must be a flat sequence of 0/1 values")
    return arr.astype(np.uint8)


class BitString:
    """An immutable sequence of bits.

    Accepts ``"0110"`` style strings (spaces ignored), iterables of 0/1 ints
    or a numpy array of 0/1 values.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: BitsLike = ()):
        arr = _as_bit_array(bits)
        if arr.flags.writeable:
            arr = arr.copy()
            arr.flags.writeable = False
        self._bits = arr

    @classmethod
    def from_bytes(cls, data: bytes, length: int | None = None) -> "BitString":
        """Unpack ``data`` MSB-first, keeping the first ``length`` bits."""
        arr = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))
        if length is not None:
            if length < 0 or length > arr.size:
                raise EndOfStreamError(
                    f"{length} bits requested from a {len(data)}-byte buffer")
            arr = arr[:length]
        return cls(arr)

    def to_bytes(self) -> bytes:
        return np.packbits(self._bits).tobytes()

    @property
    def array(self) -> np.ndarray:
        """Read-only ``uint8`` view, one element per bit."""
        return self._bits

    def __len__(self) -> int:
        return int(self._bits.size)

    def __getitem__(self, position: int) -> int:
        return read_bit(self, position)

    def __iter__(self):
        return iter(self._bits.tolist())

    def __add__(self, other: "BitString") -> "BitString":
        return append_bits(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return np.array_equal(self._bits, other._bits)

    def __hash__(self) -> int:
        return hash((len(self), self.to_bytes()))

    def __str__(self) -> str:
        return (self._bits + ord("0")).tobytes().decode("ascii")

    def __repr__(self) -> str:
        text = str(self)
        if len(text) > 64:
            text = text[:61] + "..."
        return f"BitString({text!r}, length={len(self)})"

    def popcount(self) -> int:
        return int(np.count_nonzero(self._bits))


def append_bits(dest: BitString, bits: BitString) -> BitString:
    """Return ``dest`` followed by ``bits``."""
    return BitString(np.concatenate([dest.array, bits.array]))


def read_bit(src: BitString, position: int) -> int:
    if not 0 <= position < len(src):
        raise EndOfStreamError(f"bit {position} out of range for length {len(src)}")
    return int(src.array[position])


def packed_size(nbits: int) -> int:
    """Bytes needed to serialise ``nbits`` bits."""
    return (nbits + 7) // 8
