"""Vertical (bit-plane) reading of a byte string.

Plane ``B7`` collects the most significant bit of every byte in order, then
``B6`` and so on down to ``B0``. The planes are concatenated without any
separator, so runs may cross plane boundaries.
"""
from __future__ import annotations

import numpy as np

from .bitio import BitString
from .errors import CorruptStreamError

PLANES = 8


def bit_planes(data: bytes) -> list[BitString]:
    """The planes ``[B7, B6, ..., B0]`` of ``data``."""
    matrix = _plane_matrix(data)
    return [BitString(row) for row in matrix]


def _plane_matrix(data: bytes) -> np.ndarray:
    values = np.frombuffer(bytes(data), dtype=np.uint8)
    # unpackbits gives MSB first along axis 1, so row j of the transpose is B(7-j)
    return np.unpackbits(values[:, None], axis=1).T


def transpose(data: bytes) -> BitString:
    return BitString(np.ascontiguousarray(_plane_matrix(data)).ravel())


def inverse_transpose(bits: BitString, n: int) -> bytes:
    arr = bits.array if isinstance(bits, BitString) else np.asarray(bits, dtype=np.uint8)
    if arr.size != PLANES * n:
        raise CorruptStreamError(f"expected {PLANES * n} bits for {n} bytes, got {arr.size}")
    return np.packbits(arr.reshape(PLANES, n).T, axis=1).ravel().tobytes()
